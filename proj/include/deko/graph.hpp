#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "deko/space.hpp"
#include "deko/test_function.hpp"

namespace deko {

// Index of the pair (i,j), i<j, in the row-major upper-triangle order
// (0,1),(0,2),...,(0,k-1),(1,2),...  Used for sample tuples and pattern
// evaluation alike.
inline std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t k) {
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

inline std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }

// A finite graph whose edges (including loops) carry elements of a
// decoration space; equivalently a symmetric n x n matrix over the space.
class DecoratedGraph {
 public:
  // Full matrix, row-major; must be symmetric with every entry in the space.
  DecoratedGraph(DecorationSpace space, std::size_t n, std::vector<double> entries);

  // Upper triangle including the diagonal, row-major.
  static DecoratedGraph from_upper(DecorationSpace space, std::size_t n,
                                   std::span<const double> upper);

  std::size_t size() const { return n_; }
  const DecorationSpace& space() const { return space_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& entries() const { return a_; }
  std::vector<double> upper_triangle() const;

  // Node-relabelled copy: entry (i,j) of the result is (perm[i], perm[j]).
  DecoratedGraph permuted(std::span<const std::size_t> perm) const;

 private:
  DecorationSpace space_;
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Simple graph as a {0,1}-decorated graph; rejects asymmetric input and,
// when loopless, any nonzero diagonal.
DecoratedGraph from_simple_graph(const std::vector<std::vector<int>>& adjacency,
                                 bool loopless = true);

// Multigraph with multiplicities at most d as a {0..d}-decorated graph.
DecoratedGraph from_multigraph(const std::vector<std::vector<int>>& multiplicities,
                               int d);

struct PatternEdge {
  std::size_t i = 0, j = 0;  // i < j
  TestFunction fn;
};

// A small graph whose edges carry test functions. Pairs without an edge
// contribute no factor to homomorphism weights (same as a constant-1
// decoration). Patterns have no loops.
class PatternGraph {
 public:
  PatternGraph(DecorationSpace space, std::size_t k, std::vector<PatternEdge> edges);

  std::size_t k() const { return k_; }
  const DecorationSpace& space() const { return space_; }
  const std::vector<PatternEdge>& edges() const { return edges_; }

  // Product over edges of sup|fn|; bounds every homomorphism weight.
  double max_weight() const;

  PatternGraph relabeled(std::span<const std::size_t> perm) const;

 private:
  DecorationSpace space_;
  std::size_t k_ = 0;
  std::vector<PatternEdge> edges_;  // sorted by (i,j), one per pair
};

// Pattern whose homomorphism numbers into {0..d}- or interval-decorated
// graphs count multigraph homomorphisms: the (i,j) edge carries x^m(i,j)
// (as a monomial on interval spaces, as the table c -> c^m on finite ones).
// Pairs with multiplicity zero carry no edge.
PatternGraph multigraph_pattern(const std::vector<std::vector<int>>& multiplicities,
                                int d, const DecorationSpace& space);

}  // namespace deko
