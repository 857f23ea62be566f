#include "deko/sampling.hpp"

#include <cmath>
#include <string>

#include "deko/errors.hpp"

namespace deko {

namespace {

void require_finite_type(const DecoratedGraph& g, const char* what) {
  if (!g.space().is_finite_type())
    throw UnsupportedError(std::string(what) +
                           ": interval spaces are not tabulated; use moment "
                           "summaries instead");
}

std::vector<std::int64_t> tuple_key(const DecoratedGraph& g,
                                    const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  std::vector<std::int64_t> key;
  key.reserve(pair_count(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      key.push_back(static_cast<std::int64_t>(g(nodes[i], nodes[j])));
  return key;
}

}  // namespace

std::vector<double> sample_with(const DecoratedGraph& g, std::size_t k, Rng& rng) {
  if (k > g.size())
    throw ValidationError("sample size k exceeds the number of nodes");
  if (k == 0) throw ValidationError("sample size k must be positive");
  const auto nodes = rng.ordered_subset(g.size(), k);
  std::vector<double> tuple;
  tuple.reserve(pair_count(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) tuple.push_back(g(nodes[i], nodes[j]));
  return tuple;
}

std::vector<double> sample(const DecoratedGraph& g, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return sample_with(g, k, rng);
}

SampleDistribution empirical_distribution(const DecoratedGraph& g, std::size_t k,
                                          std::uint64_t reps, std::uint64_t seed) {
  require_finite_type(g, "empirical_distribution");
  if (reps == 0) throw ValidationError("reps must be >= 1");
  if (k > g.size() || k == 0)
    throw ValidationError("sample size k must be in [1, n]");
  SampleDistribution dist;
  dist.space = g.space();
  dist.k = k;
  dist.total = reps;
  Rng rng(seed);
  std::vector<std::size_t> nodes;
  for (std::uint64_t r = 0; r < reps; ++r) {
    nodes = rng.ordered_subset(g.size(), k);
    ++dist.counts[tuple_key(g, nodes)];
  }
  return dist;
}

SampleDistribution exact_sample_distribution(const DecoratedGraph& g, std::size_t k,
                                             double guard) {
  require_finite_type(g, "exact_sample_distribution");
  const std::size_t n = g.size();
  if (k > n || k == 0) throw ValidationError("sample size k must be in [1, n]");
  double tuples = 1.0;
  for (std::size_t i = 0; i < k; ++i) tuples *= static_cast<double>(n - i);
  if (tuples > guard)
    throw ResourceError("exact sampling law: " + std::to_string(tuples) +
                        " ordered tuples exceed the guard of " + std::to_string(guard));

  SampleDistribution dist;
  dist.space = g.space();
  dist.k = k;
  std::vector<std::size_t> nodes(k);
  std::vector<bool> used(n, false);
  // odometer over ordered tuples of distinct nodes
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      ++dist.counts[tuple_key(g, nodes)];
      ++dist.total;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      nodes[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  recurse(recurse, 0);
  return dist;
}

double total_variation(const SampleDistribution& a, const SampleDistribution& b) {
  if (a.space != b.space || a.k != b.k)
    throw ValidationError("total_variation: distributions must share space and k");
  if (a.total == 0 || b.total == 0)
    throw ValidationError("total_variation: empty distribution");
  double sum = 0.0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  const double na = static_cast<double>(a.total);
  const double nb = static_cast<double>(b.total);
  while (ia != a.counts.end() || ib != b.counts.end()) {
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      sum += static_cast<double>(ia->second) / na;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      sum += static_cast<double>(ib->second) / nb;
      ++ib;
    } else {
      sum += std::abs(static_cast<double>(ia->second) / na -
                      static_cast<double>(ib->second) / nb);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * sum;
}

SampleDistribution merge(const SampleDistribution& a, const SampleDistribution& b) {
  if (a.space != b.space || a.k != b.k)
    throw ValidationError("merge: distributions must share space and k");
  SampleDistribution out = a;
  out.total += b.total;
  for (const auto& [key, count] : b.counts) out.counts[key] += count;
  return out;
}

}  // namespace deko
