#include "deko/space.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "deko/errors.hpp"

namespace deko {

bool is_exact_index(double c, std::size_t limit) {
  if (!(c >= 0.0) || c != std::floor(c)) return false;
  return c < static_cast<double>(limit);
}

DecorationSpace DecorationSpace::finite(std::vector<std::string> labels,
                                        std::optional<std::size_t> zero_index) {
  if (labels.empty()) throw ValidationError("finite space needs at least one label");
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size())
    throw ValidationError("finite space labels must be distinct");
  if (zero_index && *zero_index >= labels.size())
    throw ValidationError("zero element index out of range");
  DecorationSpace s;
  s.kind_ = SpaceKind::Finite;
  s.labels_ = std::move(labels);
  if (zero_index) s.zero_ = static_cast<double>(*zero_index);
  return s;
}

DecorationSpace DecorationSpace::interval(double lo, double hi,
                                          std::optional<double> zero) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw ValidationError("interval space needs finite lo < hi");
  if (zero && !(*zero >= lo && *zero <= hi))
    throw ValidationError("zero element outside interval");
  DecorationSpace s;
  s.kind_ = SpaceKind::Interval;
  s.lo_ = lo;
  s.hi_ = hi;
  s.zero_ = zero;
  return s;
}

DecorationSpace DecorationSpace::product(int bits) {
  if (bits < 1 || bits > kMaxProductBits)
    throw ValidationError("product space bits must be in [1, 24]");
  DecorationSpace s;
  s.kind_ = SpaceKind::FiniteProduct;
  s.bits_ = bits;
  s.zero_ = 0.0;
  return s;
}

DecorationSpace DecorationSpace::binary() { return finite({"0", "1"}, 0); }

DecorationSpace DecorationSpace::multiplicities(int d) {
  if (d < 1) throw ValidationError("max multiplicity must be >= 1");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) labels.push_back(std::to_string(i));
  return finite(std::move(labels), 0);
}

std::size_t DecorationSpace::cardinality() const {
  switch (kind_) {
    case SpaceKind::Finite:
      return labels_.size();
    case SpaceKind::FiniteProduct:
      return std::size_t{1} << bits_;
    case SpaceKind::Interval:
      throw UnsupportedError("interval space has no finite cardinality");
  }
  return 0;
}

bool DecorationSpace::contains(double c) const {
  switch (kind_) {
    case SpaceKind::Finite:
      return is_exact_index(c, labels_.size());
    case SpaceKind::Interval:
      return std::isfinite(c) && c >= lo_ && c <= hi_;
    case SpaceKind::FiniteProduct:
      return is_exact_index(c, std::size_t{1} << bits_);
  }
  return false;
}

void DecorationSpace::require(double c) const {
  if (!contains(c))
    throw ValidationError("element " + std::to_string(c) + " not in space " + describe());
}

double DecorationSpace::lo() const {
  if (kind_ != SpaceKind::Interval) throw UnsupportedError("lo(): not an interval space");
  return lo_;
}

double DecorationSpace::hi() const {
  if (kind_ != SpaceKind::Interval) throw UnsupportedError("hi(): not an interval space");
  return hi_;
}

int DecorationSpace::bits() const {
  if (kind_ != SpaceKind::FiniteProduct)
    throw UnsupportedError("bits(): not a product space");
  return bits_;
}

const std::vector<std::string>& DecorationSpace::labels() const {
  if (kind_ != SpaceKind::Finite) throw UnsupportedError("labels(): not a finite space");
  return labels_;
}

std::string DecorationSpace::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case SpaceKind::Finite:
      out << "finite{" << labels_.size() << "}";
      break;
    case SpaceKind::Interval:
      out << "interval[" << lo_ << "," << hi_ << "]";
      break;
    case SpaceKind::FiniteProduct:
      out << "product{0,1}^" << bits_;
      break;
  }
  return out.str();
}

std::string DecorationSpace::describe_element(double c) const {
  switch (kind_) {
    case SpaceKind::Finite: {
      if (is_exact_index(c, labels_.size()))
        return labels_[static_cast<std::size_t>(c)];
      break;
    }
    case SpaceKind::Interval:
      return std::to_string(c);
    case SpaceKind::FiniteProduct: {
      if (is_exact_index(c, std::size_t{1} << bits_)) {
        const auto mask = static_cast<std::uint32_t>(c);
        std::string s(static_cast<std::size_t>(bits_), '0');
        for (int i = 0; i < bits_; ++i)
          if (mask & (1u << i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
      }
      break;
    }
  }
  return "<invalid:" + std::to_string(c) + ">";
}

bool DecorationSpace::operator==(const DecorationSpace& o) const {
  if (kind_ != o.kind_ || zero_ != o.zero_) return false;
  switch (kind_) {
    case SpaceKind::Finite:
      return labels_ == o.labels_;
    case SpaceKind::Interval:
      return lo_ == o.lo_ && hi_ == o.hi_;
    case SpaceKind::FiniteProduct:
      return bits_ == o.bits_;
  }
  return false;
}

}  // namespace deko
