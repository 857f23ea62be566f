#pragma once

#include <utility>
#include <vector>

#include "deko/rng.hpp"
#include "deko/space.hpp"
#include "deko/test_function.hpp"

namespace deko {

// A finite-support probability distribution on a decoration space. Support
// points are kept sorted by element with duplicates merged (interval points
// closer than 1e-14 count as equal), weights are nonnegative and sum to 1
// within 1e-12.
class KDistribution {
 public:
  using Support = std::vector<std::pair<double, double>>;  // (element, weight)

  static KDistribution dirac(const DecorationSpace& space, double element);
  static KDistribution from_support(const DecorationSpace& space, Support support);
  // Dense weights, one per element of a finite-type space.
  static KDistribution from_weights(const DecorationSpace& space,
                                    const std::vector<double>& weights);
  static KDistribution uniform(const DecorationSpace& space);
  // Convex mixture; weights must be nonnegative and sum to 1 within 1e-12.
  static KDistribution mixture(const std::vector<const KDistribution*>& parts,
                               const std::vector<double>& weights);

  const DecorationSpace& space() const { return space_; }
  const Support& support() const { return support_; }

  // Expectation of f; integrate(f, mu) below is the free-function spelling.
  double integrate(const TestFunction& f) const;

  // One draw, consuming exactly one uniform01() from the generator.
  double sample(Rng& rng) const;

  bool operator==(const KDistribution& o) const {
    return space_ == o.space_ && support_ == o.support_;
  }

 private:
  explicit KDistribution(DecorationSpace space) : space_(std::move(space)) {}

  DecorationSpace space_;
  Support support_;
};

inline double integrate(const TestFunction& f, const KDistribution& mu) {
  return mu.integrate(f);
}

}  // namespace deko
