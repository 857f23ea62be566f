#include "deko/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "deko/errors.hpp"

namespace deko {

namespace {

constexpr double kWeightTol = 1e-12;
// Interval support points closer than this are merged.
constexpr double kMergeTol = 1e-14;

bool same_point(const DecorationSpace& space, double a, double b) {
  if (space.kind() == SpaceKind::Interval) return std::abs(a - b) <= kMergeTol;
  return a == b;
}

}  // namespace

KDistribution KDistribution::dirac(const DecorationSpace& space, double element) {
  space.require(element);
  KDistribution mu(space);
  mu.support_ = {{element, 1.0}};
  return mu;
}

KDistribution KDistribution::from_support(const DecorationSpace& space,
                                          Support support) {
  if (support.empty()) throw ValidationError("distribution needs support points");
  double total = 0.0;
  for (const auto& [element, weight] : support) {
    space.require(element);
    if (!(weight >= 0.0))
      throw ValidationError("distribution weights must be nonnegative");
    total += weight;
  }
  if (std::abs(total - 1.0) > kWeightTol)
    throw ValidationError("distribution weights must sum to 1 (got " +
                          std::to_string(total) + ")");

  std::stable_sort(support.begin(), support.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  KDistribution mu(space);
  for (const auto& [element, weight] : support) {
    if (!mu.support_.empty() && same_point(space, mu.support_.back().first, element))
      mu.support_.back().second += weight;
    else
      mu.support_.emplace_back(element, weight);
  }
  // drop zero-weight points (keeps the representation canonical)
  std::erase_if(mu.support_, [](const auto& p) { return p.second == 0.0; });
  if (mu.support_.empty()) mu.support_ = {{support.front().first, 0.0}};
  return mu;
}

KDistribution KDistribution::from_weights(const DecorationSpace& space,
                                          const std::vector<double>& weights) {
  if (!space.is_finite_type())
    throw UnsupportedError("dense weights need a finite-type space");
  if (weights.size() != space.cardinality())
    throw ValidationError("weight vector size must match the space cardinality");
  Support support;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0.0) support.emplace_back(static_cast<double>(i), weights[i]);
  if (support.empty())
    throw ValidationError("distribution weights must sum to 1 (got 0)");
  return from_support(space, std::move(support));
}

KDistribution KDistribution::uniform(const DecorationSpace& space) {
  if (!space.is_finite_type())
    throw UnsupportedError("uniform distribution needs a finite-type space");
  const std::size_t n = space.cardinality();
  Support support;
  support.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    support.emplace_back(static_cast<double>(i), 1.0 / static_cast<double>(n));
  return from_support(space, std::move(support));
}

KDistribution KDistribution::mixture(const std::vector<const KDistribution*>& parts,
                                     const std::vector<double>& weights) {
  if (parts.empty() || parts.size() != weights.size())
    throw ValidationError("mixture needs matching parts and weights");
  const DecorationSpace& space = parts.front()->space();
  Support support;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i]->space() != space)
      throw ValidationError("mixture parts must share one space");
    for (const auto& [element, weight] : parts[i]->support())
      support.emplace_back(element, weights[i] * weight);
  }
  return from_support(space, std::move(support));
}

double KDistribution::integrate(const TestFunction& f) const {
  if (f.space() != space_)
    throw ValidationError("integrate: function and distribution spaces differ");
  double r = 0.0;
  for (const auto& [element, weight] : support_) r += weight * f(element);
  return r;
}

double KDistribution::sample(Rng& rng) const {
  const double u = rng.uniform01();
  double cum = 0.0;
  for (const auto& [element, weight] : support_) {
    cum += weight;
    if (u < cum) return element;
  }
  return support_.back().first;
}

}  // namespace deko
