#include <doctest.h>

#include "deko/distribution.hpp"
#include "deko/errors.hpp"
#include "deko/space.hpp"
#include "deko/test_function.hpp"

using namespace deko;

TEST_SUITE_BEGIN("space");

TEST_CASE("space construction and validation") {
  auto bin = DecorationSpace::binary();
  CHECK(bin.kind() == SpaceKind::Finite);
  CHECK(bin.cardinality() == 2);
  CHECK(bin.zero_element() == 0.0);
  CHECK(bin.contains(1.0));
  CHECK_FALSE(bin.contains(2.0));
  CHECK_FALSE(bin.contains(0.5));

  CHECK_THROWS_AS(DecorationSpace::finite({}), ValidationError);
  CHECK_THROWS_AS(DecorationSpace::finite({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(DecorationSpace::interval(1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(DecorationSpace::interval(2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(DecorationSpace::product(0), ValidationError);
  CHECK_THROWS_AS(DecorationSpace::product(25), ValidationError);

  auto iv = DecorationSpace::interval(0.0, 2.0);
  CHECK(iv.contains(2.0));
  CHECK_FALSE(iv.contains(2.0000001));

  auto prod = DecorationSpace::product(3);
  CHECK(prod.cardinality() == 8);
  CHECK(prod.zero_element() == 0.0);
  CHECK(prod.contains(7.0));
  CHECK_FALSE(prod.contains(8.0));
}

TEST_CASE("eval examples") {
  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  CHECK(f1(1.0) == 1.0);
  CHECK(f1(0.0) == 0.0);

  auto one = TestFunction::constant(bin, 1.0);
  CHECK(one(0.0) == 1.0);
  CHECK(one(1.0) == 1.0);

  auto iv = DecorationSpace::interval(0.0, 2.0);
  auto cube = TestFunction::monomial(iv, 3);
  CHECK(cube(0.5) == 0.125);
  CHECK(cube.sup_bound() == 8.0);

  CHECK_THROWS_AS(f1(2.0), ValidationError);      // element outside the space
  CHECK_THROWS_AS(cube(-0.1), ValidationError);
}

TEST_CASE("eval bound holds") {
  auto iv = DecorationSpace::interval(-2.0, 1.0);
  auto sq = TestFunction::monomial(iv, 2);
  CHECK(sq.sup_bound() == 4.0);
  for (double c : {-2.0, -1.0, 0.0, 0.5, 1.0}) CHECK(std::abs(sq(c)) <= sq.sup_bound());

  auto combo = TestFunction::linear_combination(
      {{2.0, sq}, {-1.0, TestFunction::monomial(iv, 1)}});
  for (double c : {-2.0, -1.3, 0.0, 0.7, 1.0})
    CHECK(std::abs(combo(c)) <= combo.sup_bound());
}

TEST_CASE("product indicator semantics, exhaustive for small bit counts") {
  for (int bits = 1; bits <= 8; ++bits) {
    auto space = DecorationSpace::product(bits);
    for (std::uint32_t support = 0; support < (1u << bits); ++support) {
      auto f = TestFunction::product_indicator(space, support);
      for (std::uint32_t c = 0; c < (1u << bits); ++c) {
        const bool expected = (c & support) == support;
        CHECK(f(static_cast<double>(c)) == (expected ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("integrate examples") {
  auto colors = DecorationSpace::finite({"r", "g", "b"});
  auto ind2 = TestFunction::table(colors, {0.0, 0.0, 1.0});
  auto uniform = KDistribution::uniform(colors);
  CHECK(integrate(ind2, uniform) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  auto iv = DecorationSpace::interval(0.0, 1.0);
  auto x1 = TestFunction::monomial(iv, 1);
  auto point = KDistribution::dirac(iv, 0.7);
  CHECK(integrate(x1, point) == 0.7);

  auto bin = DecorationSpace::binary();
  auto f1 = TestFunction::table(bin, {0.0, 1.0});
  auto bern = KDistribution::from_weights(bin, {0.25, 0.75});
  CHECK(integrate(f1, bern) == 0.75);

  CHECK_THROWS_AS(integrate(x1, bern), ValidationError);  // space mismatch
}

TEST_CASE("distribution invariants") {
  auto bin = DecorationSpace::binary();
  CHECK_THROWS_AS(KDistribution::from_weights(bin, {0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(KDistribution::from_weights(bin, {-0.1, 1.1}), ValidationError);
  CHECK_THROWS_AS(KDistribution::dirac(bin, 3.0), ValidationError);

  // indicator masses sum to 1 for any distribution on a finite space
  auto colors = DecorationSpace::finite({"a", "b", "c", "d"});
  auto family = default_family(colors);
  auto mu = KDistribution::from_weights(colors, {0.1, 0.2, 0.3, 0.4});
  double total = 0.0;
  for (const auto& f : family.functions()) total += integrate(f, mu);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("integrate is linear") {
  auto iv = DecorationSpace::interval(0.0, 1.0);
  auto f = TestFunction::monomial(iv, 1);
  auto g = TestFunction::monomial(iv, 2);
  auto mu = KDistribution::from_support(iv, {{0.1, 0.5}, {0.6, 0.25}, {0.9, 0.25}});
  const double a = 2.5, b = -1.25;
  auto combo = TestFunction::linear_combination({{a, f}, {b, g}});
  CHECK(integrate(combo, mu) ==
        doctest::Approx(a * integrate(f, mu) + b * integrate(g, mu)).epsilon(1e-12));
}

TEST_CASE("default families") {
  auto bin = DecorationSpace::binary();
  auto fam = default_family(bin);
  REQUIRE(fam.size() == 2);
  CHECK(fam.at(0).table_values() == std::vector<double>{1.0, 0.0});
  CHECK(fam.at(1).table_values() == std::vector<double>{0.0, 1.0});
  CHECK(fam.is_finite_indicator_basis());

  auto iv = DecorationSpace::interval(0.0, 1.0);
  auto mono = default_family(iv, {.max_degree = 2});
  REQUIRE(mono.size() == 3);
  CHECK(mono.at(0).degree() == 0);
  CHECK(mono.at(2).degree() == 2);
  CHECK(mono.at(1)(0.5) == 0.5);

  auto prod = default_family(DecorationSpace::product(2), {.max_support_bits = 2});
  CHECK(prod.size() == 4);  // every mask over two coordinates

  auto prod3 = default_family(DecorationSpace::product(3), {.max_support_bits = 1});
  CHECK(prod3.size() == 4);  // empty mask plus three singletons
}

TEST_CASE("family lookup by structural equality") {
  auto iv = DecorationSpace::interval(0.0, 1.0);
  auto fam = default_family(iv, {.max_degree = 3});
  CHECK(fam.index_of(TestFunction::monomial(iv, 2)) == 2);
  CHECK(fam.index_of(TestFunction::monomial(iv, 9)) == TestFamily::npos);
  auto other = DecorationSpace::interval(0.0, 2.0);
  CHECK(fam.index_of(TestFunction::monomial(other, 2)) == TestFamily::npos);
}

TEST_SUITE_END();
