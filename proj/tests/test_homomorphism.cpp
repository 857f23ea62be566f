#include <doctest.h>

#include <cmath>

#include "deko/errors.hpp"
#include "deko/homomorphism.hpp"
#include "deko/rng.hpp"
#include "oracles.hpp"

using namespace deko;

namespace {

PatternGraph triangle_f1() {
  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  return PatternGraph(bin, 3, {{0, 1, f1}, {0, 2, f1}, {1, 2, f1}});
}

PatternGraph edge_f1() {
  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  return PatternGraph(bin, 2, {{0, 1, f1}});
}

DecoratedGraph k3() { return from_simple_graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }

DecoratedGraph random_multigraph(std::size_t n, int d, Rng& rng) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m[i][j] = m[j][i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
  return from_multigraph(m, d);
}

}  // namespace

TEST_SUITE_BEGIN("homomorphism");

TEST_CASE("map weights") {
  auto tri = triangle_f1();
  auto g = k3();
  std::vector<std::size_t> a = {0, 1, 2};
  CHECK(map_weight(tri, g, a) == 1.0);
  std::vector<std::size_t> repeated = {0, 0, 1};
  CHECK(map_weight(tri, g, repeated) == 0.0);  // loopless diagonal kills f1

  auto bin = DecorationSpace::binary();
  PatternGraph empty(bin, 3, {});
  CHECK(map_weight(empty, g, a) == 1.0);
}

TEST_CASE("hom and density on K3") {
  auto g = k3();
  CHECK(hom(triangle_f1(), g) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(hom(edge_f1(), g) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(density(triangle_f1(), g) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(density(edge_f1(), g) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  // all-constant-1 pattern: every map has weight one
  auto bin = DecorationSpace::binary();
  auto one = TestFunction::constant(bin, 1.0);
  PatternGraph ones(bin, 3, {{0, 1, one}, {0, 2, one}, {1, 2, one}});
  CHECK(hom(ones, g) == 27.0);
  CHECK(density(ones, g) == 1.0);
}

TEST_CASE("hom agrees with the brute-force oracle on random decorated graphs") {
  Rng rng(41);
  auto bin = DecorationSpace::binary();
  auto fam = default_family(bin);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    auto g = random_multigraph(n, 1, rng);
    // random pattern with up to 3 nodes over the indicator family
    const std::size_t k = 2 + rng.below(2);
    std::vector<PatternEdge> edges;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (rng.below(2) == 0)
          edges.push_back({i, j, fam.at(rng.below(fam.size()))});
    PatternGraph pattern(DecorationSpace::multiplicities(1), k, edges);
    // rebuild graph and pattern over the same space
    PatternGraph p2(g.space(), k, pattern.edges());
    CHECK(hom(p2, g) == doctest::Approx(oracles::brute_hom(p2, g)).epsilon(1e-12));
  }
}

TEST_CASE("multigraph homomorphism semantics against the naive counter") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const std::size_t kf = 2 + rng.below(3);  // up to 4 nodes
    const std::size_t n = 1 + rng.below(4);
    std::vector<std::vector<int>> fm(kf, std::vector<int>(kf, 0));
    for (std::size_t i = 0; i < kf; ++i)
      for (std::size_t j = i + 1; j < kf; ++j)
        fm[i][j] = fm[j][i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
    std::vector<std::vector<int>> gm(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        gm[i][j] = gm[j][i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));

    auto g = from_multigraph(gm, d);
    auto pattern = multigraph_pattern(fm, d, g.space());
    const double value = hom(pattern, g);
    const auto expected = oracles::multigraph_hom(fm, gm);
    CHECK(std::llround(value) == expected);

    // interval-space monomial route gives the same number
    auto iv_space = DecorationSpace::interval(0.0, static_cast<double>(d));
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        entries[i * n + j] = static_cast<double>(gm[i][j]);
    DecoratedGraph g_iv(iv_space, n, entries);
    auto pattern_iv = multigraph_pattern(fm, d, iv_space);
    CHECK(std::llround(hom(pattern_iv, g_iv)) == expected);
  }
}

TEST_CASE("triangle multiplicities 1 count simple triangles") {
  auto g = from_multigraph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 2);
  auto tri = multigraph_pattern({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 2, g.space());
  CHECK(std::llround(hom(tri, g)) ==
        oracles::multigraph_hom({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
                                {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK(std::llround(hom(tri, g)) == 6);
}

TEST_CASE("hom is multiplicative over disjoint unions") {
  Rng rng(99);
  auto g = random_multigraph(5, 2, rng);
  auto space = g.space();
  auto x1 = TestFunction::table(space, {0.0, 1.0, 2.0});
  auto x2 = TestFunction::table(space, {0.0, 1.0, 4.0});

  PatternGraph f1(space, 2, {{0, 1, x1}});
  PatternGraph f2(space, 3, {{0, 1, x2}, {1, 2, x1}});
  // disjoint union on 5 nodes: f1 on {0,1}, f2 on {2,3,4}
  PatternGraph both(space, 5, {{0, 1, x1}, {2, 3, x2}, {3, 4, x1}});
  const double lhs = hom(both, g);
  const double rhs = hom(f1, g) * hom(f2, g);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("density invariant under pattern relabeling") {
  Rng rng(3);
  auto g = random_multigraph(4, 2, rng);
  auto space = g.space();
  auto x1 = TestFunction::table(space, {0.0, 1.0, 2.0});
  PatternGraph p(space, 3, {{0, 1, x1}, {1, 2, TestFunction::table(space, {1.0, 0.5, 0.25})}});
  std::vector<std::size_t> perm = {2, 0, 1};
  auto q = p.relabeled(perm);
  CHECK(density(p, g) == doctest::Approx(density(q, g)).epsilon(1e-14));
}

TEST_CASE("density bounded by the product of sup bounds") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_multigraph(4, 3, rng);
    auto space = g.space();
    std::vector<PatternEdge> edges;
    auto fa = TestFunction::table(space, {0.3, -1.2, 0.8, 2.0});
    auto fb = TestFunction::table(space, {1.0, 0.0, -0.5, 0.25});
    edges.push_back({0, 1, fa});
    edges.push_back({1, 2, fb});
    PatternGraph p(space, 3, edges);
    CHECK(std::abs(density(p, g)) <= p.max_weight() + 1e-12);
  }
}

TEST_CASE("enumeration guard") {
  auto g = k3();
  HomOptions tight;
  tight.guard = 10.0;
  CHECK_THROWS_AS(hom(triangle_f1(), g, tight), ResourceError);
  // isolated pattern nodes do not count toward the enumeration cost
  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  PatternGraph padded(bin, 4, {{0, 1, f1}});
  HomOptions medium;
  medium.guard = 10.0;  // 3^2 * 1 = 9 fits, 3^4 would not
  CHECK(density(padded, g, medium) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("density estimate converges and reports zero spread on constants") {
  auto bin = DecorationSpace::binary();
  auto one = TestFunction::constant(bin, 1.0);
  PatternGraph ones(bin, 2, {{0, 1, one}});
  auto g = k3();
  auto est = density_estimate(ones, g, 100, 5);
  CHECK(est.value == 1.0);
  CHECK(est.stderr_ == 0.0);

  auto empty = from_simple_graph({{0, 0}, {0, 0}});
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  PatternGraph e(bin, 2, {{0, 1, f1}});
  CHECK(density_estimate(e, empty, 100, 5).value == 0.0);
}

TEST_CASE("Monte Carlo estimate within four standard errors on most seeds") {
  auto tri = triangle_f1();
  auto g = k3();
  const double exact = density(tri, g);
  int hits = 0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    auto est = density_estimate(tri, g, 20000, static_cast<std::uint64_t>(s));
    if (std::abs(est.value - exact) <= 4.0 * est.stderr_) ++hits;
  }
  // nominal coverage is ~99.99%; requiring 97
  CHECK(hits >= 97);
}

TEST_CASE("evaluation functional") {
  auto tri = triangle_f1();
  EvaluationFunctional L(tri);
  std::vector<double> full = {1.0, 1.0, 1.0};
  CHECK(L(full) == 1.0);
  std::vector<double> miss = {1.0, 0.0, 1.0};
  CHECK(L(miss) == 0.0);

  auto bin = DecorationSpace::binary();
  PatternGraph empty(bin, 2, {});
  EvaluationFunctional L0(empty);
  std::vector<double> t = {0.0};
  CHECK(L0(t) == 1.0);

  PatternGraph e(bin, 2, {{0, 1, TestFunction::table(bin, {0.0, 1.0})}});
  EvaluationFunctional Le(e);
  std::vector<double> one_edge = {1.0};
  CHECK(Le(one_edge) == 1.0);
}

TEST_SUITE_END();
