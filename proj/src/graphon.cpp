#include "deko/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "deko/errors.hpp"

namespace deko {

KernelMatrix::KernelMatrix(std::size_t m, std::vector<double> values,
                           std::optional<double> sup_bound)
    : m_(m), v_(std::move(values)) {
  if (m_ == 0) throw ValidationError("kernel matrix needs at least one step");
  if (v_.size() != m_ * m_) throw ValidationError("kernel matrix must be m x m");
  for (double x : v_)
    if (!std::isfinite(x)) throw ValidationError("kernel entries must be finite");
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a + 1; b < m_; ++b)
      if (v_[a * m_ + b] != v_[b * m_ + a])
        throw ValidationError("kernel matrix must be exactly symmetric");
  const double mx = max_abs();
  sup_bound_ = sup_bound.value_or(mx);
  if (sup_bound_ < mx)
    throw ValidationError("sup_bound smaller than max |entry|");
}

KernelMatrix KernelMatrix::from_upper(std::size_t m, std::span<const double> upper,
                                      std::optional<double> sup_bound) {
  if (upper.size() != m * (m + 1) / 2)
    throw ValidationError("upper triangle must have m(m+1)/2 entries");
  std::vector<double> full(m * m);
  std::size_t pos = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      full[a * m + b] = upper[pos];
      full[b * m + a] = upper[pos];
      ++pos;
    }
  return KernelMatrix(m, std::move(full), sup_bound);
}

KernelMatrix KernelMatrix::constant(std::size_t m, double value) {
  return KernelMatrix(m, std::vector<double>(m * m, value));
}

std::vector<double> KernelMatrix::upper_triangle() const {
  std::vector<double> upper;
  upper.reserve(m_ * (m_ + 1) / 2);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a; b < m_; ++b) upper.push_back(v_[a * m_ + b]);
  return upper;
}

double KernelMatrix::max_abs() const {
  double mx = 0.0;
  for (double x : v_) mx = std::max(mx, std::abs(x));
  return mx;
}

double KernelMatrix::l2_norm_sq() const {
  double sum = 0.0;
  for (double x : v_) sum += x * x;
  return sum / (static_cast<double>(m_) * static_cast<double>(m_));
}

KernelMatrix KernelMatrix::operator-(const KernelMatrix& o) const {
  if (o.m_ != m_) throw ValidationError("kernel step counts differ");
  std::vector<double> out(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) out[i] = v_[i] - o.v_[i];
  return KernelMatrix(m_, std::move(out));
}

KernelMatrix KernelMatrix::operator+(const KernelMatrix& o) const {
  if (o.m_ != m_) throw ValidationError("kernel step counts differ");
  std::vector<double> out(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) out[i] = v_[i] + o.v_[i];
  return KernelMatrix(m_, std::move(out));
}

KernelMatrix KernelMatrix::scaled(double c) const {
  std::vector<double> out(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) out[i] = c * v_[i];
  return KernelMatrix(m_, std::move(out));
}

StepGraphon::StepGraphon(DecorationSpace space, std::size_t m,
                         std::vector<KDistribution> cells)
    : space_(std::move(space)), m_(m), cells_(std::move(cells)) {
  if (m_ == 0) throw ValidationError("graphon needs at least one step");
  if (cells_.size() != m_ * m_) throw ValidationError("cell array must be m x m");
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a; b < m_; ++b) {
      if (!(cells_[a * m_ + b] == cells_[b * m_ + a]))
        throw ValidationError("graphon cells must be symmetric");
      if (cells_[a * m_ + b].space() != space_)
        throw ValidationError("graphon cell on a different space");
    }
}

StepGraphon StepGraphon::from_upper(DecorationSpace space, std::size_t m,
                                    std::vector<KDistribution> upper) {
  if (upper.size() != m * (m + 1) / 2)
    throw ValidationError("upper triangle must have m(m+1)/2 cells");
  std::vector<KDistribution> full;
  full.reserve(m * m);
  // fill row-major from the upper triangle
  std::size_t pos = 0;
  std::vector<const KDistribution*> grid(m * m, nullptr);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      grid[a * m + b] = &upper[pos];
      grid[b * m + a] = &upper[pos];
      ++pos;
    }
  for (std::size_t i = 0; i < m * m; ++i) full.push_back(*grid[i]);
  return StepGraphon(std::move(space), m, std::move(full));
}

StepGraphon StepGraphon::constant(const DecorationSpace& space, std::size_t m,
                                  const KDistribution& cell) {
  return StepGraphon(space, m, std::vector<KDistribution>(m * m, cell));
}

std::vector<KDistribution> StepGraphon::upper_triangle() const {
  std::vector<KDistribution> upper;
  upper.reserve(m_ * (m_ + 1) / 2);
  for (std::size_t a = 0; a < m_; ++a)
    for (std::size_t b = a; b < m_; ++b) upper.push_back(cells_[a * m_ + b]);
  return upper;
}

MomentFunctionSequence::MomentFunctionSequence(TestFamily family,
                                               std::vector<KernelMatrix> components)
    : family_(std::move(family)), components_(std::move(components)) {
  if (components_.size() != family_.size())
    throw ValidationError("one component per family function required");
  for (const auto& comp : components_)
    if (comp.m() != components_.front().m())
      throw ValidationError("components must share the step count");
  if (family_.is_finite_indicator_basis()) {
    const std::size_t m = components_.front().m();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        double sum = 0.0;
        for (const auto& comp : components_) {
          const double v = comp(a, b);
          if (v < -1e-9)
            throw MomentInfeasibleError(
                "negative indicator moment at cell (" + std::to_string(a) + "," +
                std::to_string(b) + "): " + std::to_string(v));
          sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
          throw MomentInfeasibleError(
              "indicator moments at cell (" + std::to_string(a) + "," +
              std::to_string(b) + ") sum to " + std::to_string(sum));
      }
  }
}

const KernelMatrix& MomentFunctionSequence::component_for(const TestFunction& fn) const {
  const std::size_t idx = family_.index_of(fn);
  if (idx == TestFamily::npos)
    throw ValidationError("edge function " + fn.name() + " is not a family member");
  return components_[idx];
}

StepGraphon embed_graph(const DecoratedGraph& g) {
  const std::size_t n = g.size();
  std::vector<KDistribution> cells;
  cells.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cells.push_back(KDistribution::dirac(g.space(), g(a, b)));
  return StepGraphon(g.space(), n, std::move(cells));
}

KernelMatrix moment_component(const StepGraphon& w, const TestFunction& f) {
  if (f.space() != w.space())
    throw ValidationError("moment_component: function on a different space");
  const std::size_t m = w.m();
  std::vector<double> values(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const double v = w.cell(a, b).integrate(f);
      values[a * m + b] = v;
      values[b * m + a] = v;
    }
  return KernelMatrix(m, std::move(values), f.sup_bound());
}

MomentFunctionSequence moment_sequence(const StepGraphon& w, const TestFamily& family) {
  std::vector<KernelMatrix> components;
  components.reserve(family.size());
  for (const auto& f : family.functions())
    components.push_back(moment_component(w, f));
  return MomentFunctionSequence(family, std::move(components));
}

namespace {

double density_from_matrices(const PatternGraph& pattern, std::size_t m,
                             const std::vector<const KernelMatrix*>& mats,
                             const HomOptions& options) {
  double cost = 1.0;
  std::vector<bool> touched(pattern.k(), false);
  for (const auto& e : pattern.edges()) touched[e.i] = touched[e.j] = true;
  for (bool t : touched)
    if (t) cost *= static_cast<double>(m);
  cost *= static_cast<double>(std::max<std::size_t>(1, pattern.edges().size()));
  if (cost > options.guard)
    throw ResourceError("graphon density cost " + std::to_string(cost) +
                        " exceeds the guard of " + std::to_string(options.guard));

  std::vector<detail::EdgeRef> edges;
  edges.reserve(pattern.edges().size());
  for (std::size_t e = 0; e < pattern.edges().size(); ++e)
    edges.push_back(
        {pattern.edges()[e].i, pattern.edges()[e].j, mats[e]->values().data()});
  const double sum = detail::assignment_sum(pattern.k(), m, edges, options.threads);
  double scale = 1.0;
  for (std::size_t i = 0; i < pattern.k(); ++i) scale *= static_cast<double>(m);
  return sum / scale;
}

}  // namespace

double density_graphon(const PatternGraph& pattern, const StepGraphon& w,
                       const HomOptions& options) {
  if (pattern.space() != w.space())
    throw ValidationError("pattern and graphon live on different spaces");
  std::vector<KernelMatrix> owned;
  owned.reserve(pattern.edges().size());
  for (const auto& e : pattern.edges()) owned.push_back(moment_component(w, e.fn));
  std::vector<const KernelMatrix*> mats;
  for (const auto& mat : owned) mats.push_back(&mat);
  return density_from_matrices(pattern, w.m(), mats, options);
}

double density_sequence(const PatternGraph& pattern, const MomentFunctionSequence& s,
                        const HomOptions& options) {
  std::vector<const KernelMatrix*> mats;
  mats.reserve(pattern.edges().size());
  for (const auto& e : pattern.edges()) mats.push_back(&s.component_for(e.fn));
  return density_from_matrices(pattern, s.m(), mats, options);
}

StepGraphon reconstruct(const MomentFunctionSequence& s) {
  const auto& family = s.family();
  if (!family.is_finite_indicator_basis())
    throw UnsupportedError(
        "reconstruct is implemented for indicator bases of finite spaces; general "
        "moment inversion is out of scope");
  const DecorationSpace& space = family.space();
  const std::size_t m = s.m();
  const std::size_t colors = space.cardinality();

  // find the worst violation before building anything
  double worst = 0.0;
  std::size_t worst_a = 0, worst_b = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      double sum = 0.0, neg = 0.0;
      for (std::size_t c = 0; c < colors; ++c) {
        const double v = s.component(c)(a, b);
        sum += v;
        neg = std::min(neg, v);
      }
      const double violation = std::max(std::abs(sum - 1.0), -neg);
      if (violation > worst) {
        worst = violation;
        worst_a = a;
        worst_b = b;
      }
    }
  if (worst > 1e-9)
    throw MomentInfeasibleError(
        "cell (" + std::to_string(worst_a) + "," + std::to_string(worst_b) +
        ") violates realizability by " + std::to_string(worst));

  std::vector<KDistribution> cells;
  cells.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<double> weights(colors);
      double sum = 0.0;
      for (std::size_t c = 0; c < colors; ++c) {
        weights[c] = std::max(0.0, s.component(c)(a, b));
        sum += weights[c];
      }
      for (double& w : weights) w /= sum;
      cells.push_back(KDistribution::from_weights(space, weights));
    }
  return StepGraphon(space, m, std::move(cells));
}

KernelMatrix step_average(const KernelMatrix& x, const StepPartition& p) {
  if (p.m() != x.m()) throw ValidationError("partition does not match the kernel");
  const std::size_t m = x.m();
  const auto& groups = p.groups();
  std::vector<double> out(m * m);
  for (std::size_t ga = 0; ga < groups.size(); ++ga)
    for (std::size_t gb = ga; gb < groups.size(); ++gb) {
      double sum = 0.0;
      for (std::size_t a : groups[ga])
        for (std::size_t b : groups[gb]) sum += x(a, b);
      const double avg =
          sum / (static_cast<double>(groups[ga].size()) *
                 static_cast<double>(groups[gb].size()));
      for (std::size_t a : groups[ga])
        for (std::size_t b : groups[gb]) {
          out[a * m + b] = avg;
          out[b * m + a] = avg;
        }
    }
  return KernelMatrix(m, std::move(out), x.sup_bound());
}

StepGraphon step_average(const StepGraphon& w, const StepPartition& p,
                         bool allow_unequal) {
  if (p.m() != w.m()) throw ValidationError("partition does not match the graphon");
  if (!allow_unequal && !p.equal_measure())
    throw ValidationError(
        "step_average on a graphon needs equal-measure groups (or the explicit "
        "unequal-measure request)");
  const std::size_t m = w.m();
  const auto& groups = p.groups();
  std::vector<KDistribution> cells(m * m, w.cell(0, 0));
  for (std::size_t ga = 0; ga < groups.size(); ++ga)
    for (std::size_t gb = ga; gb < groups.size(); ++gb) {
      std::vector<const KDistribution*> parts;
      parts.reserve(groups[ga].size() * groups[gb].size());
      for (std::size_t a : groups[ga])
        for (std::size_t b : groups[gb]) parts.push_back(&w.cell(a, b));
      const double wgt = 1.0 / static_cast<double>(parts.size());
      const KDistribution mixed =
          KDistribution::mixture(parts, std::vector<double>(parts.size(), wgt));
      for (std::size_t a : groups[ga])
        for (std::size_t b : groups[gb]) {
          cells[a * m + b] = mixed;
          cells[b * m + a] = mixed;
        }
    }
  return StepGraphon(w.space(), m, std::move(cells));
}

}  // namespace deko
