#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "deko/graph.hpp"
#include "deko/rng.hpp"

namespace deko {

// Tabulated distribution of decoration tuples produced by k-node sampling.
// Keys are the off-diagonal upper-triangle tuples (length k(k-1)/2) with
// decorations as exact integers; only finite-type spaces are tabulated.
struct SampleDistribution {
  DecorationSpace space = DecorationSpace::binary();
  std::size_t k = 0;
  std::uint64_t total = 0;
  std::map<std::vector<std::int64_t>, std::uint64_t> counts;
};

// One k-node sample: picks an ordered k-subset of distinct nodes uniformly
// and reads off the decorations G(v_i, v_j) for i < j in pair_rank order.
// Works on every space kind; deterministic given the seed.
std::vector<double> sample(const DecoratedGraph& g, std::size_t k, std::uint64_t seed);
std::vector<double> sample_with(const DecoratedGraph& g, std::size_t k, Rng& rng);

// Tabulates `reps` independent samples (finite-type spaces only; interval
// spaces are served by moment summaries instead).
SampleDistribution empirical_distribution(const DecoratedGraph& g, std::size_t k,
                                          std::uint64_t reps, std::uint64_t seed);

// Exact law of the sampling process, by enumerating all ordered k-tuples of
// distinct nodes. total = n(n-1)...(n-k+1), guarded.
SampleDistribution exact_sample_distribution(const DecoratedGraph& g, std::size_t k,
                                             double guard = 1e7);

// Total variation distance between the normalized count tables, in [0,1].
double total_variation(const SampleDistribution& a, const SampleDistribution& b);

// Pools two tabulations of the same (space, k); associative and commutative.
SampleDistribution merge(const SampleDistribution& a, const SampleDistribution& b);

}  // namespace deko
