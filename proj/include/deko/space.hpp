#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deko {

enum class SpaceKind { Finite, Interval, FiniteProduct };

// A compact decoration space: the label set for graph edges.
//
// Three kinds are supported. Elements are carried as doubles throughout the
// library: the element index for Finite spaces, the real value for Interval
// spaces, and the bit mask (an exact small integer, coordinate i = bit i)
// for FiniteProduct spaces. All integers involved are far below 2^53, so
// the encoding is exact.
class DecorationSpace {
 public:
  static constexpr int kMaxProductBits = 24;

  // Finite label set; the element value is the index into `labels`.
  static DecorationSpace finite(std::vector<std::string> labels,
                                std::optional<std::size_t> zero_index = std::nullopt);
  // Closed real interval [lo, hi].
  static DecorationSpace interval(double lo, double hi,
                                  std::optional<double> zero = std::nullopt);
  // {0,1}^bits with the product structure; the all-zero mask is the zero
  // element. When modelling an infinite product, `bits` is the truncation
  // level.
  static DecorationSpace product(int bits);

  // {"0","1"} with 0 designated as the missing edge.
  static DecorationSpace binary();
  // {"0",...,"d"}: multiplicities up to d, 0 = missing edge.
  static DecorationSpace multiplicities(int d);

  SpaceKind kind() const { return kind_; }
  bool is_finite_type() const { return kind_ != SpaceKind::Interval; }

  // Number of elements; Finite and FiniteProduct only.
  std::size_t cardinality() const;

  bool contains(double c) const;
  // Throws ValidationError when c is not an element of the space.
  void require(double c) const;

  std::optional<double> zero_element() const { return zero_; }

  double lo() const;
  double hi() const;
  int bits() const;
  const std::vector<std::string>& labels() const;

  std::string describe() const;
  std::string describe_element(double c) const;

  bool operator==(const DecorationSpace& o) const;
  bool operator!=(const DecorationSpace& o) const { return !(*this == o); }

 private:
  DecorationSpace() = default;

  SpaceKind kind_ = SpaceKind::Finite;
  std::vector<std::string> labels_;  // Finite
  double lo_ = 0.0, hi_ = 1.0;       // Interval
  int bits_ = 0;                     // FiniteProduct
  std::optional<double> zero_;
};

// True when `c` is an exactly-representable nonnegative integer below
// `limit`; used to validate finite-type elements.
bool is_exact_index(double c, std::size_t limit);

}  // namespace deko
