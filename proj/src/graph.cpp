#include "deko/graph.hpp"

#include <algorithm>
#include <string>

#include "deko/errors.hpp"

namespace deko {

DecoratedGraph::DecoratedGraph(DecorationSpace space, std::size_t n,
                               std::vector<double> entries)
    : space_(std::move(space)), n_(n), a_(std::move(entries)) {
  if (n_ == 0) throw ValidationError("graph needs at least one node");
  if (a_.size() != n_ * n_)
    throw ValidationError("entry matrix must be n x n");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      if (a_[i * n_ + j] != a_[j * n_ + i])
        throw ValidationError("graph matrix must be symmetric (entries " +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      space_.require(a_[i * n_ + j]);
    }
}

DecoratedGraph DecoratedGraph::from_upper(DecorationSpace space, std::size_t n,
                                          std::span<const double> upper) {
  if (upper.size() != n * (n + 1) / 2)
    throw ValidationError("upper triangle must have n(n+1)/2 entries");
  std::vector<double> full(n * n);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      full[i * n + j] = upper[pos];
      full[j * n + i] = upper[pos];
      ++pos;
    }
  return DecoratedGraph(std::move(space), n, std::move(full));
}

std::vector<double> DecoratedGraph::upper_triangle() const {
  std::vector<double> upper;
  upper.reserve(n_ * (n_ + 1) / 2);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) upper.push_back(a_[i * n_ + j]);
  return upper;
}

DecoratedGraph DecoratedGraph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw ValidationError("permutation size mismatch");
  std::vector<double> full(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      full[i * n_ + j] = a_[perm[i] * n_ + perm[j]];
  return DecoratedGraph(space_, n_, std::move(full));
}

DecoratedGraph from_simple_graph(const std::vector<std::vector<int>>& adjacency,
                                 bool loopless) {
  const std::size_t n = adjacency.size();
  if (n == 0) throw ValidationError("adjacency matrix is empty");
  std::vector<double> full(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n)
      throw ValidationError("adjacency matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = adjacency[i][j];
      if (v != 0 && v != 1) throw ValidationError("adjacency entries must be 0/1");
      if (adjacency[j][i] != v)
        throw ValidationError("adjacency matrix must be symmetric");
      if (loopless && i == j && v != 0)
        throw ValidationError("loopless graph has a nonzero diagonal entry");
      full[i * n + j] = static_cast<double>(v);
    }
  }
  return DecoratedGraph(DecorationSpace::binary(), n, std::move(full));
}

DecoratedGraph from_multigraph(const std::vector<std::vector<int>>& multiplicities,
                               int d) {
  const std::size_t n = multiplicities.size();
  if (n == 0) throw ValidationError("multiplicity matrix is empty");
  std::vector<double> full(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (multiplicities[i].size() != n)
      throw ValidationError("multiplicity matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const int v = multiplicities[i][j];
      if (v < 0 || v > d)
        throw ValidationError("multiplicity " + std::to_string(v) +
                              " outside [0," + std::to_string(d) + "]");
      if (multiplicities[j][i] != v)
        throw ValidationError("multiplicity matrix must be symmetric");
      full[i * n + j] = static_cast<double>(v);
    }
  }
  return DecoratedGraph(DecorationSpace::multiplicities(d), n, std::move(full));
}

PatternGraph::PatternGraph(DecorationSpace space, std::size_t k,
                           std::vector<PatternEdge> edges)
    : space_(std::move(space)), k_(k), edges_(std::move(edges)) {
  if (k_ == 0) throw ValidationError("pattern needs at least one node");
  std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.i >= edge.j || edge.j >= k_)
      throw ValidationError("pattern edge must satisfy i < j < k");
    if (e > 0 && edges_[e - 1].i == edge.i && edges_[e - 1].j == edge.j)
      throw ValidationError("pattern has duplicate edge");
    if (edge.fn.space() != space_)
      throw ValidationError("pattern edge function lives on a different space");
  }
}

double PatternGraph::max_weight() const {
  double w = 1.0;
  for (const auto& edge : edges_) w *= edge.fn.sup_bound();
  return w;
}

PatternGraph PatternGraph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != k_) throw ValidationError("permutation size mismatch");
  std::vector<PatternEdge> edges;
  edges.reserve(edges_.size());
  for (const auto& edge : edges_) {
    std::size_t a = perm[edge.i], b = perm[edge.j];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b, edge.fn});
  }
  return PatternGraph(space_, k_, std::move(edges));
}

PatternGraph multigraph_pattern(const std::vector<std::vector<int>>& multiplicities,
                                int d, const DecorationSpace& space) {
  const std::size_t k = multiplicities.size();
  if (k == 0) throw ValidationError("multiplicity matrix is empty");
  const bool interval = space.kind() == SpaceKind::Interval;
  if (!interval) {
    if (space.kind() != SpaceKind::Finite ||
        space.cardinality() != static_cast<std::size_t>(d) + 1)
      throw ValidationError(
          "multigraph pattern needs an interval space or a finite space with d+1 elements");
  }
  std::vector<PatternEdge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    if (multiplicities[i].size() != k)
      throw ValidationError("multiplicity matrix must be square");
    for (std::size_t j = i + 1; j < k; ++j) {
      const int m = multiplicities[i][j];
      if (m < 0 || m > d)
        throw ValidationError("multiplicity outside [0,d]");
      if (multiplicities[j][i] != m)
        throw ValidationError("multiplicity matrix must be symmetric");
      if (m == 0) continue;
      if (interval) {
        edges.push_back({i, j, TestFunction::monomial(space, m)});
      } else {
        // table c -> c^m over the multiplicity labels
        std::vector<double> values(static_cast<std::size_t>(d) + 1);
        for (int c = 0; c <= d; ++c) {
          double p = 1.0;
          for (int t = 0; t < m; ++t) p *= static_cast<double>(c);
          values[static_cast<std::size_t>(c)] = p;
        }
        edges.push_back({i, j, TestFunction::table(space, std::move(values))});
      }
    }
  }
  return PatternGraph(space, k, std::move(edges));
}

}  // namespace deko
