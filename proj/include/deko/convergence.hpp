#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deko/graphon.hpp"
#include "deko/regularity.hpp"

namespace deko {

// Deterministic enumeration of all patterns with at most k_max nodes and at
// most edge_budget edges decorated by family members, one representative
// per isomorphism class, in canonical order (node count, edge count,
// canonical edge list).
std::vector<PatternGraph> pattern_catalog(const TestFamily& family, std::size_t k_max,
                                          std::size_t edge_budget,
                                          double guard = 1e6);

struct TraceOptions {
  HomOptions hom;
  // When > 0, entries whose exact enumeration trips the guard fall back to
  // a Monte Carlo estimate with this many maps, seeded per entry.
  std::uint64_t estimate_reps = 0;
  std::uint64_t seed = 0;
};

// values[p][i] = t(catalog[p], sequence[i]).
struct DensityTrace {
  std::vector<std::vector<double>> values;
};

DensityTrace density_trace(std::span<const DecoratedGraph> sequence,
                           std::span<const PatternGraph> catalog,
                           const TraceOptions& options = {});
DensityTrace density_trace(std::span<const StepGraphon> sequence,
                           std::span<const PatternGraph> catalog,
                           const TraceOptions& options = {});

// Finite-sequence convergence heuristic: per pattern, the largest step
// |t(F,G_{n+1}) - t(F,G_n)| over the last `window` steps, compared to tol.
// A verdict, not a proof.
struct CauchyReport {
  std::vector<double> max_step;
  std::vector<bool> within_tol;
  bool all_within_tol = false;
  std::size_t window = 0;
  double tol = 0.0;
};

CauchyReport cauchy_report(const DensityTrace& trace, std::size_t window, double tol);

// Exact without-replacement expectation of the evaluation functional
// against the exact density, with the replacement-gap bound
// C(k,2) * max_weight * k^2 / n.
struct ReplacementGap {
  double expectation_without = 0.0;  // E(L(sample)) under the exact law
  double density = 0.0;              // t(F,G)
  double gap = 0.0;                  // |difference|
  double bound = 0.0;
};

ReplacementGap replacement_gap(const PatternGraph& pattern, const DecoratedGraph& g,
                               const HomOptions& options = {},
                               double sample_guard = 1e7);

// Empirical operationalization of sampling convergence: total variation
// between successive empirical sample laws, plus the per-pattern comparison
// of the empirical E(L(sample)) against t(F,G_i) with the replacement-gap
// bound and a Monte Carlo slack of 4 * max_weight / sqrt(reps).
struct SamplingConsistencyReport {
  std::size_t k = 0;
  double tol = 0.0;
  std::vector<double> tv_successive;
  bool tv_within_tol = false;
  std::vector<std::vector<double>> functional_expectation;  // [pattern][graph]
  std::vector<std::vector<double>> densities;               // [pattern][graph]
  std::vector<std::vector<double>> gap_bound;               // bound + slack
  bool gaps_within_bound = false;
};

SamplingConsistencyReport sampling_consistency(std::span<const DecoratedGraph> sequence,
                                               std::span<const PatternGraph> catalog,
                                               std::size_t k, std::uint64_t reps,
                                               std::uint64_t seed, double tol,
                                               const HomOptions& options = {});

// W-random graph: latent positions x_i uniform on [0,1], edge decorations
// drawn independently from the cell distributions. The diagonal gets the
// space's zero element unless an explicit value is supplied.
DecoratedGraph wrandom(const StepGraphon& w, std::size_t n, std::uint64_t seed,
                       std::optional<double> diagonal = std::nullopt);

// One finite stage of the simultaneous-regularity limit construction: per
// graphon, the stepped moment components on its regularity partition, with
// steps rearranged so partition groups become contiguous blocks, ordered by
// a canonical group signature (per-function diagonal block values, then
// sorted off-diagonal profiles; ties by smallest step index).
struct RefinementStageResult {
  std::vector<MomentFunctionSequence> stepped;
  std::vector<StepPartition> partitions;
  std::vector<std::vector<std::size_t>> step_order;  // new position -> old step
  std::vector<std::vector<double>> achieved;         // per graphon, per function
  bool certified = false;
};

RefinementStageResult refinement_stage(std::span<const StepGraphon> sequence,
                                       const TestFamily& family, double eps,
                                       const RegularityOptions& options = {});

// Both sides of the density counting bound: lhs = |t(F,u)-t(F,w)|,
// rhs = 4 * sum over edges of (product of the other edges' sup norms)
// times the cut-norm distance of the edge's components.
struct CountingLemmaBound {
  double lhs = 0.0;
  double rhs = 0.0;
};

CountingLemmaBound counting_lemma_bound(const PatternGraph& pattern,
                                        const MomentFunctionSequence& u,
                                        const MomentFunctionSequence& w,
                                        const HomOptions& options = {},
                                        const CutNormOptions& cutnorm = {});

}  // namespace deko
