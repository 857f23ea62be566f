#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "deko/cutnorm.hpp"
#include "deko/graphon.hpp"
#include "deko/partition.hpp"

namespace deko {

struct RegularityOptions {
  CutNormOptions cutnorm;    // exact below the guard, heuristic beyond
  std::uint64_t heuristic_restarts = 32;
  std::uint64_t seed = 0;    // drives the heuristic witness search only
};

struct WeakRegularityResult {
  StepPartition partition;
  KernelMatrix approx;     // step_average of the input on `partition`
  double achieved = 0.0;   // final ||X - approx||_cut (exact or lower bound)
  bool certified = false;  // true when `achieved` is an exact cut norm
  std::size_t rounds = 0;
};

// Iterative weak regularity for one kernel: refine by the witness rectangle
// of the residual until ||X - X_P||_cut <= eps * sup_bound. The energy
// increment guarantees at most ceil(1/eps^2) rounds; each round's increment
// is re-checked numerically.
WeakRegularityResult weak_regularity(const KernelMatrix& x, double eps,
                                     const RegularityOptions& options = {});

struct SimultaneousRegularityResult {
  StepPartition partition;        // equal-measure, refines the base
  std::vector<double> achieved;   // per kernel, on the final partition
  bool certified = false;
  std::size_t rounds = 0;
};

// Weak regularity for a family on a common equal-measure refining
// partition: refine by the worst-offending kernel per round, then split
// groups to a common size (group sizes are multiples of the atom measure,
// so an equal-size refinement always exists; splitting continues until
// every kernel passes re-verification, reaching singleton atoms in the
// worst case, where the residual vanishes).
SimultaneousRegularityResult simultaneous_regularity(
    std::span<const KernelMatrix> kernels, double eps, const StepPartition& base,
    const RegularityOptions& options = {});

struct GraphonRegularityResult {
  StepPartition partition;
  StepGraphon stepped;            // step_average of the graphon
  std::vector<double> achieved;   // per family function
  bool certified = false;
  std::size_t rounds = 0;
};

// Simultaneous regularity applied to all moment components of a graphon;
// the moment components of the stepped graphon equal the stepped moment
// components (linearity of the cellwise integral).
GraphonRegularityResult regularize_graphon(const StepGraphon& w,
                                           const TestFamily& family, double eps,
                                           const RegularityOptions& options = {});

}  // namespace deko
