#include <doctest.h>

#include <numeric>

#include "deko/errors.hpp"
#include "deko/graph.hpp"

using namespace deko;

TEST_SUITE_BEGIN("graph");

TEST_CASE("simple graph encoding") {
  auto k3 = from_simple_graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(k3.size() == 3);
  CHECK(k3(0, 1) == 1.0);
  CHECK(k3(2, 2) == 0.0);

  auto empty2 = from_simple_graph({{0, 0}, {0, 0}});
  CHECK(empty2(0, 1) == 0.0);

  CHECK_THROWS_AS(from_simple_graph({{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(from_simple_graph({{1, 0}, {0, 0}}), ValidationError);  // loop
  CHECK(from_simple_graph({{1, 0}, {0, 0}}, false)(0, 0) == 1.0);
}

TEST_CASE("multigraph encoding round-trips") {
  auto g = from_multigraph({{0, 2}, {2, 0}}, 2);
  CHECK(g(0, 1) == 2.0);
  CHECK(g.space().cardinality() == 3);

  auto simple = from_multigraph({{0, 1}, {1, 0}}, 1);
  CHECK(simple(0, 1) == 1.0);
  CHECK(simple.space().cardinality() == 2);

  CHECK_THROWS_AS(from_multigraph({{0, 3}, {3, 0}}, 2), ValidationError);

  const std::vector<std::vector<int>> m = {{0, 1, 3}, {1, 0, 0}, {3, 0, 0}};
  auto h = from_multigraph(m, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(h(i, j) == static_cast<double>(m[i][j]));
}

TEST_CASE("pattern validation") {
  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  CHECK_THROWS_AS(PatternGraph(bin, 2, {{1, 0, f1}}), ValidationError);   // i >= j
  CHECK_THROWS_AS(PatternGraph(bin, 2, {{0, 2, f1}}), ValidationError);   // j >= k
  CHECK_THROWS_AS(PatternGraph(bin, 3, {{0, 1, f1}, {0, 1, f1}}), ValidationError);

  auto iv = DecorationSpace::interval(0.0, 1.0);
  CHECK_THROWS_AS(PatternGraph(bin, 2, {{0, 1, TestFunction::monomial(iv, 1)}}),
                  ValidationError);
}

TEST_CASE("multigraph pattern forms") {
  auto iv = DecorationSpace::interval(0.0, 3.0);
  auto p = multigraph_pattern({{0, 2}, {2, 0}}, 3, iv);
  REQUIRE(p.edges().size() == 1);
  CHECK(p.edges()[0].fn.degree() == 2);

  auto space = DecorationSpace::multiplicities(3);
  auto q = multigraph_pattern({{0, 2}, {2, 0}}, 3, space);
  REQUIRE(q.edges().size() == 1);
  CHECK(q.edges()[0].fn.table_values() == std::vector<double>{0.0, 1.0, 4.0, 9.0});

  auto none = multigraph_pattern({{0, 0}, {0, 0}}, 3, space);
  CHECK(none.edges().empty());

  // d=1 multigraphs live on the binary space
  auto edge = multigraph_pattern({{0, 1}, {1, 0}}, 1, DecorationSpace::binary());
  CHECK(edge.edges().size() == 1);
  // but the finite space must have exactly d+1 elements
  CHECK_THROWS_AS(multigraph_pattern({{0, 1}, {1, 0}}, 2, DecorationSpace::binary()),
                  ValidationError);
}

TEST_CASE("graph permutation keeps entries") {
  auto g = from_multigraph({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}, 3);
  std::vector<std::size_t> perm = {2, 0, 1};
  auto h = g.permuted(perm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(h(i, j) == g(perm[i], perm[j]));
}

TEST_SUITE_END();
