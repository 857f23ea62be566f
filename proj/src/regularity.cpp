#include "deko/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "deko/errors.hpp"

namespace deko {

namespace {

std::size_t round_cap(double eps) {
  return static_cast<std::size_t>(std::ceil(1.0 / (eps * eps)));
}

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw ValidationError("eps must lie in (0,1)");
}

CutNormResult residual_norm(const KernelMatrix& x, const StepPartition& p,
                            const RegularityOptions& options, std::uint64_t round) {
  const KernelMatrix residual = x - step_average(x, p);
  if (x.m() <= options.cutnorm.exact_guard)
    return cut_norm_exact(residual, options.cutnorm);
  return cut_norm_heuristic(residual, options.heuristic_restarts,
                            Rng::stream(options.seed, round).next(), options.cutnorm);
}

// Frieze-Kannan energy increment: refining by the witness rectangle grows
// the stepped L2 energy by at least the squared witness value.
void check_energy_increment(const KernelMatrix& x, const StepPartition& before,
                            const StepPartition& after, double witness_value) {
  const double e_before = step_average(x, before).l2_norm_sq();
  const double e_after = step_average(x, after).l2_norm_sq();
  if (e_after + 1e-10 < e_before + witness_value * witness_value)
    throw ValidationError("energy increment violated: " + std::to_string(e_before) +
                          " -> " + std::to_string(e_after) + " with witness " +
                          std::to_string(witness_value));
}

// All divisors of g, descending.
std::vector<std::size_t> divisors_descending(std::size_t g) {
  std::vector<std::size_t> divs;
  for (std::size_t d = 1; d <= g; ++d)
    if (g % d == 0) divs.push_back(d);
  std::reverse(divs.begin(), divs.end());
  return divs;
}

}  // namespace

WeakRegularityResult weak_regularity(const KernelMatrix& x, double eps,
                                     const RegularityOptions& options) {
  require_eps(eps);
  const double target = eps * x.sup_bound();
  StepPartition partition = StepPartition::trivial(x.m());

  if (x.sup_bound() == 0.0)
    return {partition, step_average(x, partition), 0.0, true, 0};

  const std::size_t cap = round_cap(eps);
  std::size_t rounds = 0;
  for (;;) {
    const CutNormResult cut = residual_norm(x, partition, options, rounds);
    if (cut.value <= target || rounds >= cap) {
      return {partition, step_average(x, partition), cut.value, cut.certified,
              rounds};
    }
    StepPartition refined = partition.split_by(cut.rows).split_by(cut.cols);
    check_energy_increment(x, partition, refined, cut.value);
    partition = std::move(refined);
    ++rounds;
  }
}

SimultaneousRegularityResult simultaneous_regularity(
    std::span<const KernelMatrix> kernels, double eps, const StepPartition& base,
    const RegularityOptions& options) {
  require_eps(eps);
  if (kernels.empty()) throw ValidationError("no kernels given");
  const std::size_t m = kernels.front().m();
  for (const auto& k : kernels)
    if (k.m() != m) throw ValidationError("kernels must share the step count");
  if (base.m() != m) throw ValidationError("base partition does not match");
  if (!base.equal_measure())
    throw ValidationError("base partition must have equal-measure groups");

  std::vector<double> targets;
  targets.reserve(kernels.size());
  for (const auto& k : kernels) targets.push_back(eps * k.sup_bound());

  StepPartition partition = base;
  const std::size_t cap = round_cap(eps);
  std::size_t rounds = 0;

  // refinement loop: per round, refine by the worst-offending kernel
  for (;;) {
    double worst_ratio = 0.0;
    std::size_t worst = 0;
    CutNormResult worst_cut;
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      const CutNormResult cut = residual_norm(kernels[i], partition, options, rounds);
      const double ratio = targets[i] > 0.0
                               ? cut.value / targets[i]
                               : (cut.value > 0.0 ? std::numeric_limits<double>::infinity()
                                                  : 0.0);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = i;
        worst_cut = cut;
      }
    }
    if (worst_ratio <= 1.0 || rounds >= cap) break;
    StepPartition refined = partition.split_by(worst_cut.rows).split_by(worst_cut.cols);
    check_energy_increment(kernels[worst], partition, refined, worst_cut.value);
    partition = std::move(refined);
    ++rounds;
  }

  // equal-measure restoration: split every group to a common size, then
  // re-verify; shrink the size until every kernel passes (size 1 leaves a
  // zero residual, so this terminates)
  std::size_t gcd_size = 0;
  for (const auto& group : partition.groups())
    gcd_size = std::gcd(gcd_size, group.size());

  SimultaneousRegularityResult result{StepPartition::singletons(m), {}, true, rounds};
  for (std::size_t size : divisors_descending(gcd_size)) {
    StepPartition candidate = partition.split_to_size(size);
    std::vector<double> achieved;
    bool all_ok = true;
    bool all_certified = true;
    achieved.reserve(kernels.size());
    for (std::size_t i = 0; i < kernels.size(); ++i) {
      const CutNormResult cut = residual_norm(kernels[i], candidate, options, rounds);
      achieved.push_back(cut.value);
      all_certified = all_certified && cut.certified;
      if (cut.value > targets[i]) all_ok = false;
    }
    if (all_ok || size == 1) {
      result.partition = std::move(candidate);
      result.achieved = std::move(achieved);
      result.certified = all_certified;
      break;
    }
  }
  return result;
}

GraphonRegularityResult regularize_graphon(const StepGraphon& w,
                                           const TestFamily& family, double eps,
                                           const RegularityOptions& options) {
  if (family.space() != w.space())
    throw ValidationError("family and graphon live on different spaces");
  const MomentFunctionSequence components = moment_sequence(w, family);
  SimultaneousRegularityResult sim = simultaneous_regularity(
      components.components(), eps, StepPartition::trivial(w.m()), options);
  StepGraphon stepped = step_average(w, sim.partition);
  return {std::move(sim.partition), std::move(stepped), std::move(sim.achieved),
          sim.certified, sim.rounds};
}

}  // namespace deko
