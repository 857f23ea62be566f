#include "deko/homomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deko/errors.hpp"
#include "deko/parallel.hpp"
#include "deko/summation.hpp"

namespace deko {

namespace detail {

namespace {

double power(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Row-sum specializations for the innermost digit. Four independent lanes
// folded in a fixed order; the order is part of the algorithm, so results
// never depend on scheduling.
double row_sum_1(const double* a, std::size_t m) {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  std::size_t z = 0;
  for (; z + 4 <= m; z += 4) {
    l0 += a[z];
    l1 += a[z + 1];
    l2 += a[z + 2];
    l3 += a[z + 3];
  }
  for (; z < m; ++z) l0 += a[z];
  return (l0 + l1) + (l2 + l3);
}

double row_sum_2(const double* a, const double* b, std::size_t m) {
  double l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  std::size_t z = 0;
  for (; z + 4 <= m; z += 4) {
    l0 += a[z] * b[z];
    l1 += a[z + 1] * b[z + 1];
    l2 += a[z + 2] * b[z + 2];
    l3 += a[z + 3] * b[z + 3];
  }
  for (; z < m; ++z) l0 += a[z] * b[z];
  return (l0 + l1) + (l2 + l3);
}

double row_sum_general(const std::vector<const double*>& rows, std::size_t m) {
  double l0 = 0;
  for (std::size_t z = 0; z < m; ++z) {
    double t = rows[0][z];
    for (std::size_t r = 1; r < rows.size(); ++r) t *= rows[r][z];
    l0 += t;
  }
  return l0;
}

struct LevelEdges {
  // edges (u, level) for u < level, as (u, matrix)
  std::vector<std::pair<std::size_t, const double*>> incoming;
};

// Sum over assignments with digit 0 pinned to `first`.
double chunk_sum(std::size_t k, std::size_t m, std::size_t first,
                 const std::vector<LevelEdges>& levels) {
  std::vector<std::size_t> digit(k, 0);
  std::vector<double> prefix(k, 1.0);
  digit[0] = first;
  KahanSum acc;

  std::vector<const double*> rows;  // scratch for the general row case
  const auto& last = levels[k - 1].incoming;

  auto row_sum = [&](double scale) {
    double s;
    if (last.size() == 1) {
      s = row_sum_1(last[0].second + digit[last[0].first] * m, m);
    } else if (last.size() == 2) {
      s = row_sum_2(last[0].second + digit[last[0].first] * m,
                    last[1].second + digit[last[1].first] * m, m);
    } else {
      rows.clear();
      for (const auto& [u, mat] : last) rows.push_back(mat + digit[u] * m);
      s = row_sum_general(rows, m);
    }
    acc.add(scale * s);
  };

  if (k == 2) {
    row_sum(1.0);
    return acc.value();
  }

  auto walk = [&](auto&& self, std::size_t level) -> void {
    if (level == k - 1) {
      row_sum(prefix[level - 1]);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      digit[level] = v;
      double f = 1.0;
      for (const auto& [u, mat] : levels[level].incoming)
        f *= mat[digit[u] * m + v];
      if (f == 0.0) continue;  // exact zero: the whole subtree contributes 0
      prefix[level] = prefix[level - 1] * f;
      self(self, level + 1);
    }
  };
  walk(walk, 1);
  return acc.value();
}

}  // namespace

double assignment_sum(std::size_t k, std::size_t m, std::span<const EdgeRef> edges,
                      unsigned threads) {
  if (k == 0 || m == 0) throw ValidationError("assignment_sum: empty problem");
  if (edges.empty()) return power(static_cast<double>(m), k);

  // drop nodes with no incident edge: each contributes an exact factor m
  std::vector<std::size_t> remap(k, static_cast<std::size_t>(-1));
  std::size_t used = 0;
  for (const auto& e : edges) {
    if (remap[e.u] == static_cast<std::size_t>(-1)) remap[e.u] = 0;
    if (remap[e.v] == static_cast<std::size_t>(-1)) remap[e.v] = 0;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (remap[i] != static_cast<std::size_t>(-1)) remap[i] = used++;

  std::vector<LevelEdges> levels(used);
  for (const auto& e : edges) {
    const std::size_t u = remap[e.u], v = remap[e.v];
    levels[v].incoming.emplace_back(u, e.matrix);
  }

  const double isolated_factor = power(static_cast<double>(m), k - used);

  if (used == 1) {
    // a single decorated node cannot occur (edges need two endpoints)
    return isolated_factor * static_cast<double>(m);
  }

  std::vector<double> chunk(m, 0.0);
  parallel_for(
      m, [&](std::size_t c) { chunk[c] = chunk_sum(used, m, c, levels); }, threads);
  KahanSum total;
  for (std::size_t c = 0; c < m; ++c) total.add(chunk[c]);
  return isolated_factor * total.value();
}

}  // namespace detail

namespace {

void require_same_space(const PatternGraph& pattern, const DecoratedGraph& g) {
  if (pattern.space() != g.space())
    throw ValidationError("pattern and graph live on different spaces");
}

// n^{k_eff} * max(1, edges) where k_eff drops isolated pattern nodes.
double enumeration_cost(const PatternGraph& pattern, std::size_t n) {
  std::vector<bool> touched(pattern.k(), false);
  for (const auto& e : pattern.edges()) touched[e.i] = touched[e.j] = true;
  std::size_t k_eff = 0;
  for (bool t : touched) k_eff += t ? 1 : 0;
  double cost = 1.0;
  for (std::size_t i = 0; i < k_eff; ++i) cost *= static_cast<double>(n);
  return cost * static_cast<double>(std::max<std::size_t>(1, pattern.edges().size()));
}

std::vector<std::vector<double>> edge_value_matrices(const PatternGraph& pattern,
                                                     const DecoratedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> mats;
  mats.reserve(pattern.edges().size());
  for (const auto& e : pattern.edges()) {
    std::vector<double> mat(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        const double v = e.fn(g(a, b));
        mat[a * n + b] = v;
        mat[b * n + a] = v;
      }
    mats.push_back(std::move(mat));
  }
  return mats;
}

}  // namespace

double map_weight(const PatternGraph& pattern, const DecoratedGraph& g,
                  std::span<const std::size_t> assignment) {
  require_same_space(pattern, g);
  if (assignment.size() != pattern.k())
    throw ValidationError("assignment must map every pattern node");
  for (std::size_t v : assignment)
    if (v >= g.size()) throw ValidationError("assignment target out of range");
  double w = 1.0;
  for (const auto& e : pattern.edges())
    w *= e.fn(g(assignment[e.i], assignment[e.j]));
  return w;
}

double hom(const PatternGraph& pattern, const DecoratedGraph& g,
           const HomOptions& options) {
  require_same_space(pattern, g);
  const double cost = enumeration_cost(pattern, g.size());
  if (cost > options.guard)
    throw ResourceError(
        "hom enumeration cost " + std::to_string(cost) + " exceeds the guard of " +
        std::to_string(options.guard) +
        "; raise HomOptions.guard or use density_estimate");

  const auto mats = edge_value_matrices(pattern, g);
  std::vector<detail::EdgeRef> edges;
  edges.reserve(mats.size());
  for (std::size_t e = 0; e < mats.size(); ++e)
    edges.push_back({pattern.edges()[e].i, pattern.edges()[e].j, mats[e].data()});
  return detail::assignment_sum(pattern.k(), g.size(), edges, options.threads);
}

double density(const PatternGraph& pattern, const DecoratedGraph& g,
               const HomOptions& options) {
  double scale = 1.0;
  for (std::size_t i = 0; i < pattern.k(); ++i)
    scale *= static_cast<double>(g.size());
  return hom(pattern, g, options) / scale;
}

DensityEstimate density_estimate(const PatternGraph& pattern, const DecoratedGraph& g,
                                 std::uint64_t reps, std::uint64_t seed) {
  require_same_space(pattern, g);
  if (reps < 2) throw ValidationError("density_estimate needs reps >= 2");
  Rng rng(seed);
  const std::size_t k = pattern.k();
  const std::size_t n = g.size();
  std::vector<std::size_t> assignment(k);
  // Welford's running mean/variance
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    for (std::size_t i = 0; i < k; ++i)
      assignment[i] = static_cast<std::size_t>(rng.below(n));
    double w = 1.0;
    for (const auto& e : pattern.edges())
      w *= e.fn(g(assignment[e.i], assignment[e.j]));
    const double delta = w - mean;
    mean += delta / static_cast<double>(r + 1);
    m2 += delta * (w - mean);
  }
  DensityEstimate est;
  est.value = mean;
  est.reps = reps;
  const double variance = m2 / static_cast<double>(reps - 1);
  est.stderr_ = std::sqrt(std::max(0.0, variance) / static_cast<double>(reps));
  return est;
}

EvaluationFunctional::EvaluationFunctional(const PatternGraph& pattern)
    : k_(pattern.k()), max_weight_(pattern.max_weight()) {
  for (const auto& e : pattern.edges())
    factors_.push_back({{e.i, e.j}, e.fn});
}

double EvaluationFunctional::operator()(std::span<const double> tuple) const {
  if (tuple.size() != pair_count(k_))
    throw ValidationError("tuple length must be k(k-1)/2");
  double w = 1.0;
  for (const auto& [pair, fn] : factors_)
    w *= fn(tuple[pair_rank(pair.first, pair.second, k_)]);
  return w;
}

double EvaluationFunctional::expectation(const SampleDistribution& dist) const {
  if (dist.k < k_)
    throw ValidationError("sample size smaller than the pattern");
  if (dist.total == 0) throw ValidationError("empty sample distribution");
  KahanSum acc;
  for (const auto& [key, count] : dist.counts) {
    double w = 1.0;
    for (const auto& [pair, fn] : factors_)
      w *= fn(static_cast<double>(key[pair_rank(pair.first, pair.second, dist.k)]));
    acc.add(w * static_cast<double>(count));
  }
  return acc.value() / static_cast<double>(dist.total);
}

}  // namespace deko
