#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "deko/graph.hpp"
#include "deko/sampling.hpp"

namespace deko {

struct HomOptions {
  // hom/density refuse to enumerate once n^k * max(1, #edges) exceeds this.
  double guard = 1e8;
  unsigned threads = 0;  // 0 = default_threads()
};

// Weight of one map [k] -> V(G): the product of edge-function values at the
// decorations joining the images.
double map_weight(const PatternGraph& pattern, const DecoratedGraph& g,
                  std::span<const std::size_t> assignment);

// Exact homomorphism number: the sum of map_weight over all n^k maps.
// Full enumeration (prefix products down an odometer, compensated block
// summation), deterministically chunked so the result is independent of the
// worker count.
double hom(const PatternGraph& pattern, const DecoratedGraph& g,
           const HomOptions& options = {});

// hom / n^k: the expected weight of a uniform random map.
double density(const PatternGraph& pattern, const DecoratedGraph& g,
               const HomOptions& options = {});

struct DensityEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::uint64_t reps = 0;
};

// Monte Carlo mean of map_weight over uniform random maps (with
// replacement), with the sample standard error.
DensityEstimate density_estimate(const PatternGraph& pattern, const DecoratedGraph& g,
                                 std::uint64_t reps, std::uint64_t seed);

// The product test function L on off-diagonal decoration tuples whose
// expectation under with-replacement sampling equals t(F,G). Under the
// without-replacement sampling process the gap is at most
// C(k,2) * max_weight * k^2 / n; see replacement_gap() in convergence.hpp
// for the exact comparison.
class EvaluationFunctional {
 public:
  explicit EvaluationFunctional(const PatternGraph& pattern);

  std::size_t k() const { return k_; }
  double max_weight() const { return max_weight_; }

  // Applies L to a tuple in pair_rank order for k() nodes.
  double operator()(std::span<const double> tuple) const;

  // Expectation under a tabulated sampling law with sample size >= k();
  // extra sample coordinates are ignored.
  double expectation(const SampleDistribution& dist) const;

 private:
  std::size_t k_ = 0;
  double max_weight_ = 1.0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, TestFunction>> factors_;
};

namespace detail {

// One decorated pair constraint inside an assignment enumeration: the
// factor matrix[a_u * m + a_v] multiplies the weight of every assignment.
struct EdgeRef {
  std::size_t u = 0, v = 0;  // u < v < k
  const double* matrix = nullptr;  // m x m, row-major
};

// Sum over all m^k assignments of the product of edge factors. The chunk
// structure (one chunk per value of the first digit) and the block
// summation order are fixed, so results do not depend on the thread count.
double assignment_sum(std::size_t k, std::size_t m, std::span<const EdgeRef> edges,
                      unsigned threads);

}  // namespace detail

}  // namespace deko
