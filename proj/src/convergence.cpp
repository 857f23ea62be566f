#include "deko/convergence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "deko/errors.hpp"
#include "deko/sampling.hpp"

namespace deko {

namespace {

// Canonical form of an edge list under node relabeling: the lexicographically
// smallest sorted list of (i, j, function index) over all k! permutations.
using EdgeKey = std::vector<std::array<std::size_t, 3>>;

EdgeKey canonical_edge_key(std::size_t k, const EdgeKey& edges) {
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  EdgeKey best;
  bool first = true;
  do {
    EdgeKey relabeled;
    relabeled.reserve(edges.size());
    for (const auto& e : edges) {
      std::size_t a = perm[e[0]], b = perm[e[1]];
      if (a > b) std::swap(a, b);
      relabeled.push_back({a, b, e[2]});
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double binomial(std::size_t n, std::size_t r) {
  double v = 1.0;
  for (std::size_t i = 0; i < r; ++i)
    v = v * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return v;
}

}  // namespace

std::vector<PatternGraph> pattern_catalog(const TestFamily& family, std::size_t k_max,
                                          std::size_t edge_budget, double guard) {
  const std::size_t nf = family.size();
  // guard against combinatorial blowup before enumerating
  double raw = 0.0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t pairs = pair_count(k);
    for (std::size_t e = 0; e <= std::min(edge_budget, pairs); ++e) {
      double combos = binomial(pairs, e);
      for (std::size_t t = 0; t < e; ++t) combos *= static_cast<double>(nf);
      raw += combos;
    }
  }
  if (raw > guard)
    throw ResourceError("pattern catalog would enumerate " + std::to_string(raw) +
                        " decorated graphs, beyond the guard of " +
                        std::to_string(guard));

  std::vector<PatternGraph> catalog;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t pairs = pair_count(k);
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) pair_list.emplace_back(i, j);

    const std::size_t max_edges = std::min(edge_budget, pairs);
    std::map<std::size_t, std::vector<EdgeKey>> by_edge_count;
    for (std::size_t e = 0; e <= max_edges; ++e) {
      // choose e pairs ...
      std::vector<std::size_t> choice(e);
      std::iota(choice.begin(), choice.end(), std::size_t{0});
      std::vector<EdgeKey> keys;
      auto emit_assignments = [&]() {
        // ... and every assignment of family functions to them
        std::vector<std::size_t> fidx(e, 0);
        for (;;) {
          EdgeKey edges;
          edges.reserve(e);
          for (std::size_t t = 0; t < e; ++t)
            edges.push_back(
                {pair_list[choice[t]].first, pair_list[choice[t]].second, fidx[t]});
          keys.push_back(canonical_edge_key(k, edges));
          std::size_t pos = 0;
          while (pos < e && ++fidx[pos] == nf) fidx[pos++] = 0;
          if (pos == e) break;
        }
      };
      if (e == 0) {
        keys.push_back({});
      } else {
        for (;;) {
          emit_assignments();
          // next combination
          std::size_t pos = e;
          while (pos > 0 && choice[pos - 1] == pairs - e + pos - 1) --pos;
          if (pos == 0) break;
          ++choice[pos - 1];
          for (std::size_t t = pos; t < e; ++t) choice[t] = choice[t - 1] + 1;
        }
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      by_edge_count[e] = std::move(keys);
    }

    for (const auto& [e, keys] : by_edge_count) {
      for (const auto& key : keys) {
        std::vector<PatternEdge> edges;
        edges.reserve(key.size());
        for (const auto& entry : key)
          edges.push_back({entry[0], entry[1], family.at(entry[2])});
        catalog.emplace_back(family.space(), k, std::move(edges));
      }
    }
  }
  return catalog;
}

namespace {

template <typename Object, typename Fn>
DensityTrace trace_impl(std::span<const Object> sequence,
                        std::span<const PatternGraph> catalog, Fn&& entry) {
  DensityTrace trace;
  trace.values.assign(catalog.size(), std::vector<double>(sequence.size(), 0.0));
  for (std::size_t p = 0; p < catalog.size(); ++p)
    for (std::size_t i = 0; i < sequence.size(); ++i)
      trace.values[p][i] = entry(catalog[p], sequence[i], p, i);
  return trace;
}

}  // namespace

DensityTrace density_trace(std::span<const DecoratedGraph> sequence,
                           std::span<const PatternGraph> catalog,
                           const TraceOptions& options) {
  return trace_impl<DecoratedGraph>(
      sequence, catalog,
      [&](const PatternGraph& f, const DecoratedGraph& g, std::size_t p,
          std::size_t i) {
        try {
          return density(f, g, options.hom);
        } catch (const ResourceError&) {
          if (options.estimate_reps == 0) throw;
          const std::uint64_t entry_seed =
              Rng::stream(options.seed, p * sequence.size() + i).next();
          return density_estimate(f, g, options.estimate_reps, entry_seed).value;
        }
      });
}

DensityTrace density_trace(std::span<const StepGraphon> sequence,
                           std::span<const PatternGraph> catalog,
                           const TraceOptions& options) {
  return trace_impl<StepGraphon>(
      sequence, catalog,
      [&](const PatternGraph& f, const StepGraphon& w, std::size_t, std::size_t) {
        return density_graphon(f, w, options.hom);
      });
}

CauchyReport cauchy_report(const DensityTrace& trace, std::size_t window, double tol) {
  if (trace.values.empty()) throw ValidationError("empty trace");
  const std::size_t len = trace.values.front().size();
  if (window == 0) throw ValidationError("window must be >= 1");
  if (len <= window)
    throw ValidationError("sequence length must exceed the window");
  CauchyReport report;
  report.window = window;
  report.tol = tol;
  report.all_within_tol = true;
  for (const auto& row : trace.values) {
    double worst = 0.0;
    for (std::size_t n = len - window - 1; n + 1 < len; ++n)
      worst = std::max(worst, std::abs(row[n + 1] - row[n]));
    report.max_step.push_back(worst);
    report.within_tol.push_back(worst <= tol);
    report.all_within_tol = report.all_within_tol && worst <= tol;
  }
  return report;
}

ReplacementGap replacement_gap(const PatternGraph& pattern, const DecoratedGraph& g,
                               const HomOptions& options, double sample_guard) {
  const EvaluationFunctional functional(pattern);
  const SampleDistribution law =
      exact_sample_distribution(g, pattern.k(), sample_guard);
  ReplacementGap result;
  result.expectation_without = functional.expectation(law);
  result.density = density(pattern, g, options);
  result.gap = std::abs(result.expectation_without - result.density);
  const double k = static_cast<double>(pattern.k());
  result.bound = binomial(pattern.k(), 2) * functional.max_weight() * k * k /
                 static_cast<double>(g.size());
  return result;
}

SamplingConsistencyReport sampling_consistency(std::span<const DecoratedGraph> sequence,
                                               std::span<const PatternGraph> catalog,
                                               std::size_t k, std::uint64_t reps,
                                               std::uint64_t seed, double tol,
                                               const HomOptions& options) {
  if (sequence.empty()) throw ValidationError("empty sequence");
  for (const auto& g : sequence)
    if (!g.space().is_finite_type())
      throw UnsupportedError("sampling consistency needs finite-type spaces");
  for (const auto& f : catalog)
    if (f.k() > k)
      throw ValidationError("catalog pattern larger than the sample size");

  SamplingConsistencyReport report;
  report.k = k;
  report.tol = tol;

  std::vector<SampleDistribution> laws;
  laws.reserve(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i)
    laws.push_back(
        empirical_distribution(sequence[i], k, reps, Rng::stream(seed, i).next()));

  report.tv_within_tol = true;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    const double tv = total_variation(laws[i], laws[i + 1]);
    report.tv_successive.push_back(tv);
    report.tv_within_tol = report.tv_within_tol && tv <= tol;
  }

  report.gaps_within_bound = true;
  report.functional_expectation.assign(catalog.size(), {});
  report.densities.assign(catalog.size(), {});
  report.gap_bound.assign(catalog.size(), {});
  for (std::size_t p = 0; p < catalog.size(); ++p) {
    const EvaluationFunctional functional(catalog[p]);
    const double kf = static_cast<double>(catalog[p].k());
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const double e_l = functional.expectation(laws[i]);
      const double t = density(catalog[p], sequence[i], options);
      const double bound = binomial(catalog[p].k(), 2) * functional.max_weight() *
                               kf * kf / static_cast<double>(sequence[i].size()) +
                           4.0 * functional.max_weight() /
                               std::sqrt(static_cast<double>(reps));
      report.functional_expectation[p].push_back(e_l);
      report.densities[p].push_back(t);
      report.gap_bound[p].push_back(bound);
      if (std::abs(e_l - t) > bound) report.gaps_within_bound = false;
    }
  }
  return report;
}

DecoratedGraph wrandom(const StepGraphon& w, std::size_t n, std::uint64_t seed,
                       std::optional<double> diagonal) {
  if (n == 0) throw ValidationError("wrandom needs n >= 1");
  double diag;
  if (diagonal) {
    diag = *diagonal;
  } else if (w.space().zero_element()) {
    diag = *w.space().zero_element();
  } else {
    throw ValidationError(
        "the space has no zero element: supply an explicit diagonal decoration");
  }
  w.space().require(diag);

  Rng rng(seed);
  const std::size_t m = w.m();
  std::vector<std::size_t> step(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform01();
    step[i] = std::min(static_cast<std::size_t>(x * static_cast<double>(m)), m - 1);
  }
  std::vector<double> entries(n * n, diag);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = w.cell(step[i], step[j]).sample(rng);
      entries[i * n + j] = c;
      entries[j * n + i] = c;
    }
  return DecoratedGraph(w.space(), n, std::move(entries));
}

RefinementStageResult refinement_stage(std::span<const StepGraphon> sequence,
                                       const TestFamily& family, double eps,
                                       const RegularityOptions& options) {
  if (sequence.empty()) throw ValidationError("empty sequence");
  RefinementStageResult result;
  result.certified = true;
  for (const auto& w : sequence) {
    if (w.space() != family.space())
      throw ValidationError("sequence and family spaces differ");
    GraphonRegularityResult reg = regularize_graphon(w, family, eps, options);
    const std::size_t m = w.m();
    const MomentFunctionSequence stepped = moment_sequence(reg.stepped, family);

    // canonical group signature: per-function diagonal block value, then the
    // per-function sorted off-diagonal profile; ties by smallest step index
    const auto& groups = reg.partition.groups();
    std::vector<std::vector<double>> signature(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const std::size_t rep = groups[gi].front();
      for (std::size_t f = 0; f < stepped.components().size(); ++f)
        signature[gi].push_back(stepped.component(f)(rep, rep));
      for (std::size_t f = 0; f < stepped.components().size(); ++f) {
        std::vector<double> profile;
        for (std::size_t gj = 0; gj < groups.size(); ++gj)
          if (gj != gi)
            profile.push_back(stepped.component(f)(rep, groups[gj].front()));
        std::sort(profile.begin(), profile.end());
        signature[gi].insert(signature[gi].end(), profile.begin(), profile.end());
      }
    }
    std::vector<std::size_t> group_order(groups.size());
    std::iota(group_order.begin(), group_order.end(), std::size_t{0});
    std::sort(group_order.begin(), group_order.end(),
              [&](std::size_t a, std::size_t b) {
                if (signature[a] != signature[b]) return signature[a] < signature[b];
                return groups[a].front() < groups[b].front();
              });

    std::vector<std::size_t> order;  // new position -> old step
    order.reserve(m);
    for (std::size_t gi : group_order)
      for (std::size_t s : groups[gi]) order.push_back(s);

    std::vector<KernelMatrix> rearranged;
    rearranged.reserve(stepped.components().size());
    for (const auto& comp : stepped.components()) {
      std::vector<double> v(m * m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          v[a * m + b] = comp(order[a], order[b]);
      rearranged.emplace_back(m, std::move(v), comp.sup_bound());
    }

    result.stepped.emplace_back(family, std::move(rearranged));
    result.partitions.push_back(std::move(reg.partition));
    result.step_order.push_back(std::move(order));
    result.achieved.push_back(std::move(reg.achieved));
    result.certified = result.certified && reg.certified;
  }
  return result;
}

CountingLemmaBound counting_lemma_bound(const PatternGraph& pattern,
                                        const MomentFunctionSequence& u,
                                        const MomentFunctionSequence& w,
                                        const HomOptions& options,
                                        const CutNormOptions& cutnorm) {
  if (u.m() != w.m())
    throw ValidationError("sequences must share the step count");
  CountingLemmaBound result;
  result.lhs =
      std::abs(density_sequence(pattern, u, options) - density_sequence(pattern, w, options));

  const auto& edges = pattern.edges();
  std::vector<double> d(edges.size());
  std::vector<double> cut(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const KernelMatrix& ue = u.component_for(edges[e].fn);
    const KernelMatrix& we = w.component_for(edges[e].fn);
    d[e] = std::max(ue.max_abs(), we.max_abs());
    cut[e] = cut_norm_exact(ue - we, cutnorm).value;
  }
  double rhs = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double others = 1.0;
    for (std::size_t o = 0; o < edges.size(); ++o)
      if (o != e) others *= d[o];
    rhs += others * cut[e];
  }
  result.rhs = 4.0 * rhs;
  return result;
}

}  // namespace deko
