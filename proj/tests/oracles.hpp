#pragma once

// Independent brute-force oracles for the test suites. Everything here
// recomputes values from first principles and must stay independent of the
// implementation paths it checks.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "deko/graph.hpp"
#include "deko/graphon.hpp"

namespace oracles {

// Multigraph homomorphism count: maps [k]->[n] weighted by
// prod multiplicities(f(i),f(j))^{pattern multiplicity (i,j)}.
inline std::int64_t multigraph_hom(const std::vector<std::vector<int>>& pattern,
                                   const std::vector<std::vector<int>>& target) {
  const std::size_t k = pattern.size();
  const std::size_t n = target.size();
  std::vector<std::size_t> map(k, 0);
  std::int64_t total = 0;
  for (;;) {
    std::int64_t weight = 1;
    for (std::size_t i = 0; i < k && weight != 0; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        std::int64_t p = 1;
        for (int t = 0; t < pattern[i][j]; ++t)
          p *= static_cast<std::int64_t>(target[map[i]][map[j]]);
        weight *= p;
        if (weight == 0) break;
      }
    total += weight;
    std::size_t pos = 0;
    while (pos < k && ++map[pos] == n) map[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

// hom(F,G) by direct evaluation of every map, no shared code with the
// library enumeration.
inline double brute_hom(const deko::PatternGraph& pattern,
                        const deko::DecoratedGraph& g) {
  const std::size_t k = pattern.k();
  const std::size_t n = g.size();
  std::vector<std::size_t> map(k, 0);
  double total = 0.0;
  for (;;) {
    double w = 1.0;
    for (const auto& e : pattern.edges()) w *= e.fn(g(map[e.i], map[e.j]));
    total += w;
    std::size_t pos = 0;
    while (pos < k && ++map[pos] == n) map[pos++] = 0;
    if (pos == k) break;
  }
  return total;
}

// Cut norm by enumerating BOTH index sets (4^m rectangles); feasible for
// m <= 12 or so, independent of the greedy-column argument.
inline double brute_cut_norm(const deko::KernelMatrix& x) {
  const std::size_t m = x.m();
  double best = 0.0;
  for (std::uint32_t s = 0; s < (1u << m); ++s)
    for (std::uint32_t t = 0; t < (1u << m); ++t) {
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if ((s >> i) & 1u)
          for (std::size_t j = 0; j < m; ++j)
            if ((t >> j) & 1u) sum += x(i, j);
      best = std::max(best, std::abs(sum));
    }
  return best / (static_cast<double>(m) * static_cast<double>(m));
}

// t(F,W) for a step graphon by direct nested summation over cells.
inline double brute_graphon_density(const deko::PatternGraph& pattern,
                                    const deko::StepGraphon& w) {
  const std::size_t k = pattern.k();
  const std::size_t m = w.m();
  std::vector<std::size_t> cell(k, 0);
  double total = 0.0;
  for (;;) {
    double prod = 1.0;
    for (const auto& e : pattern.edges())
      prod *= w.cell(cell[e.i], cell[e.j]).integrate(e.fn);
    total += prod;
    std::size_t pos = 0;
    while (pos < k && ++cell[pos] == m) cell[pos++] = 0;
    if (pos == k) break;
  }
  double scale = 1.0;
  for (std::size_t i = 0; i < k; ++i) scale *= static_cast<double>(m);
  return total / scale;
}

}  // namespace oracles
