#pragma once

#include <string>

#include <json.hpp>

#include "deko/convergence.hpp"
#include "deko/distribution.hpp"
#include "deko/graph.hpp"
#include "deko/graphon.hpp"
#include "deko/partition.hpp"
#include "deko/sampling.hpp"
#include "deko/space.hpp"
#include "deko/test_function.hpp"

namespace deko {

// Insertion-ordered JSON so emitted documents have a fixed field layout.
using Json = nlohmann::ordered_json;

// Serialization of every file format. Decorations are written as integers
// on finite-type spaces and as doubles on interval spaces; node and step
// indices are 0-based; matrices and cell arrays are row-major upper
// triangles including the diagonal (see docs/file_formats.md).

Json space_to_json(const DecorationSpace& space);
DecorationSpace space_from_json(const Json& j);

Json function_to_json(const TestFunction& f);
TestFunction function_from_json(const Json& j, const DecorationSpace& space);

Json family_to_json(const TestFamily& family);
TestFamily family_from_json(const Json& j);

Json distribution_to_json(const KDistribution& mu);
KDistribution distribution_from_json(const Json& j, const DecorationSpace& space);

Json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const Json& j);

Json pattern_to_json(const PatternGraph& pattern);
PatternGraph pattern_from_json(const Json& j);

Json kernel_to_json(const KernelMatrix& x);
KernelMatrix kernel_from_json(const Json& j);

Json graphon_to_json(const StepGraphon& w);
StepGraphon graphon_from_json(const Json& j);

Json moments_to_json(const MomentFunctionSequence& s);
MomentFunctionSequence moments_from_json(const Json& j);

Json sample_distribution_to_json(const SampleDistribution& dist);
SampleDistribution sample_distribution_from_json(const Json& j);

Json partition_to_json(const StepPartition& p);
StepPartition partition_from_json(const Json& j);

// Serializer used for all outputs: doubles are rendered with 17 significant
// digits (%.17g), which round-trips IEEE-754 exactly and is byte-stable
// across runs. indent = 0 emits one line.
std::string dump_json(const Json& j, int indent = 2);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, int indent = 2);

}  // namespace deko
