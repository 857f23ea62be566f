#pragma once

#include <optional>
#include <span>
#include <vector>

#include "deko/distribution.hpp"
#include "deko/graph.hpp"
#include "deko/homomorphism.hpp"
#include "deko/partition.hpp"

namespace deko {

// A real symmetric step function on [0,1]^2 over an equal-measure m-grid.
// Carrier of the cut-norm and regularity machinery; also the moment
// components of step graphons.
class KernelMatrix {
 public:
  // Full matrix, row-major; symmetry must be exact.
  KernelMatrix(std::size_t m, std::vector<double> values,
               std::optional<double> sup_bound = std::nullopt);

  static KernelMatrix from_upper(std::size_t m, std::span<const double> upper,
                                 std::optional<double> sup_bound = std::nullopt);
  static KernelMatrix constant(std::size_t m, double value);

  std::size_t m() const { return m_; }
  double operator()(std::size_t a, std::size_t b) const { return v_[a * m_ + b]; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double> upper_triangle() const;

  // Declared bound with |values| <= sup_bound everywhere.
  double sup_bound() const { return sup_bound_; }
  double max_abs() const;

  // Squared L2 norm of the step function: mean of squared entries.
  double l2_norm_sq() const;

  KernelMatrix operator-(const KernelMatrix& o) const;
  KernelMatrix operator+(const KernelMatrix& o) const;
  KernelMatrix scaled(double c) const;

 private:
  std::size_t m_ = 0;
  std::vector<double> v_;
  double sup_bound_ = 0.0;
};

// An equal-measure step K-graphon: a symmetric m x m array of cell
// distributions, representing the map constant on each (1/m)-grid cell.
class StepGraphon {
 public:
  StepGraphon(DecorationSpace space, std::size_t m, std::vector<KDistribution> cells);

  static StepGraphon from_upper(DecorationSpace space, std::size_t m,
                                std::vector<KDistribution> upper);
  static StepGraphon constant(const DecorationSpace& space, std::size_t m,
                              const KDistribution& cell);

  std::size_t m() const { return m_; }
  const DecorationSpace& space() const { return space_; }
  const KDistribution& cell(std::size_t a, std::size_t b) const {
    return cells_[a * m_ + b];
  }
  std::vector<KDistribution> upper_triangle() const;

 private:
  DecorationSpace space_;
  std::size_t m_ = 0;
  std::vector<KDistribution> cells_;
};

// One moment component per family function, all on a common step count.
// For an indicator basis on a finite space the components are cellwise
// nonnegative with sum 1 (checked at 1e-9).
class MomentFunctionSequence {
 public:
  MomentFunctionSequence(TestFamily family, std::vector<KernelMatrix> components);

  const TestFamily& family() const { return family_; }
  const std::vector<KernelMatrix>& components() const { return components_; }
  const KernelMatrix& component(std::size_t i) const { return components_.at(i); }
  std::size_t m() const { return components_.front().m(); }

  // Component for a pattern-edge function; throws when the function is not
  // a family member.
  const KernelMatrix& component_for(const TestFunction& fn) const;

 private:
  TestFamily family_;
  std::vector<KernelMatrix> components_;
};

// The n-step graphon of a decorated graph: cell (a,b) is the point mass at
// G(a,b).
StepGraphon embed_graph(const DecoratedGraph& g);

// W_f: cellwise integral of f against the cell distributions.
KernelMatrix moment_component(const StepGraphon& w, const TestFunction& f);

// All components of a family, in family order.
MomentFunctionSequence moment_sequence(const StepGraphon& w, const TestFamily& family);

// t(F,W): exact stepfunction integral, m^k-assignment enumeration over the
// moment components of the edge functions.
double density_graphon(const PatternGraph& pattern, const StepGraphon& w,
                       const HomOptions& options = {});

// t(F,s) for a pattern whose edges carry family members.
double density_sequence(const PatternGraph& pattern, const MomentFunctionSequence& s,
                        const HomOptions& options = {});

// Inverts moment components back to a step graphon. Implemented for the
// indicator basis of a finite space, where the problem is linear; cells
// violating nonnegativity or normalization beyond 1e-9 raise
// MomentInfeasibleError naming the worst cell.
StepGraphon reconstruct(const MomentFunctionSequence& s);

// Stepping operator: averages over the cells of a group partition, keeping
// the m-step grid (the result is constant on group pairs).
KernelMatrix step_average(const KernelMatrix& x, const StepPartition& p);

// Same for graphons: cellwise mixture of the constituent distributions.
// Unequal group sizes are refused unless explicitly allowed, since they
// weight cells unevenly.
StepGraphon step_average(const StepGraphon& w, const StepPartition& p,
                         bool allow_unequal = false);

}  // namespace deko
