#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deko/space.hpp"

namespace deko {

// A bounded real test function on a decoration space. The supported forms
// cover the generating families of the three space kinds plus constants and
// finite linear combinations. A sup-norm bound is computed at construction
// (exact for atomic forms and for finite-type spaces, a triangle-inequality
// bound for combinations on intervals).
class TestFunction {
 public:
  enum class Form { Table, Monomial, ProductIndicator, Constant, LinearCombination };

  // One value per element of a finite space.
  static TestFunction table(const DecorationSpace& space, std::vector<double> values);
  // x -> x^degree on an interval space.
  static TestFunction monomial(const DecorationSpace& space, int degree);
  // c -> 1 iff every bit set in `support` is set in c (product spaces).
  static TestFunction product_indicator(const DecorationSpace& space,
                                        std::uint32_t support);
  static TestFunction constant(const DecorationSpace& space, double c);
  static TestFunction linear_combination(
      std::vector<std::pair<double, TestFunction>> terms);

  // Evaluates at an element of the space; throws ValidationError when the
  // element does not belong to it.
  double operator()(double c) const;

  // Stored bound with |f| <= sup_bound() everywhere on the space.
  double sup_bound() const { return bound_; }

  const DecorationSpace& space() const { return space_; }
  Form form() const { return form_; }

  const std::vector<double>& table_values() const;
  int degree() const;
  std::uint32_t support() const;
  double constant_value() const;
  const std::vector<std::pair<double, TestFunction>>& terms() const;

  // Display name, e.g. "1{blue}", "x^2", "ind{101}".
  std::string name() const;

  // Structural equality (same space, form and parameters).
  bool operator==(const TestFunction& o) const;
  bool operator!=(const TestFunction& o) const { return !(*this == o); }

 private:
  explicit TestFunction(DecorationSpace space) : space_(std::move(space)) {}

  double eval_unchecked(double c) const;

  DecorationSpace space_;
  Form form_ = Form::Constant;
  std::vector<double> table_;
  int degree_ = 0;
  std::uint32_t support_ = 0;
  double constant_ = 0.0;
  std::vector<std::pair<double, TestFunction>> terms_;
  double bound_ = 0.0;
};

// Evaluation entry point mirroring integrate(); identical to f(c).
inline double eval(const TestFunction& f, double c) { return f(c); }

struct FamilyParams {
  int max_degree = 3;       // Interval: monomials x^0..x^D
  int max_support_bits = 2; // FiniteProduct: indicators with <= B set bits
};

// An ordered family of test functions on one space. Built-in families are
// generating for their space; the element order is the canonical order used
// by file formats and moment vectors.
class TestFamily {
 public:
  TestFamily(DecorationSpace space, std::vector<TestFunction> functions);

  const DecorationSpace& space() const { return space_; }
  const std::vector<TestFunction>& functions() const { return functions_; }
  std::size_t size() const { return functions_.size(); }
  const TestFunction& at(std::size_t i) const { return functions_.at(i); }

  // Index of a structurally equal member, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const TestFunction& f) const;

  // True when this is the indicator basis of a finite space.
  bool is_finite_indicator_basis() const;

 private:
  DecorationSpace space_;
  std::vector<TestFunction> functions_;
};

// The canonical generating family of a space:
//   Finite        -> one indicator per element, in element order;
//   Interval      -> monomials x^0,...,x^D;
//   FiniteProduct -> product indicators for every support mask with at most
//                    B set bits, in ascending mask order.
TestFamily default_family(const DecorationSpace& space, const FamilyParams& params = {});

}  // namespace deko
