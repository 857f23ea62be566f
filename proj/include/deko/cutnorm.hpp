#pragma once

#include <cstdint>
#include <vector>

#include "deko/graphon.hpp"

namespace deko {

struct CutNormResult {
  double value = 0.0;
  std::vector<std::size_t> rows;  // witness S (step indices)
  std::vector<std::size_t> cols;  // witness T
  bool certified = false;         // true: exact norm; false: lower bound
};

struct CutNormOptions {
  // cut_norm_exact / bilinear_pm1_norm refuse beyond this many steps
  std::size_t exact_guard = 26;
  unsigned threads = 0;
};

// Exact rectangle (cut) norm of a step kernel:
//   max over S, T of |sum_{i in S, j in T} X(i,j)| / m^2.
// Enumerates S (Gray code over 2^m subsets, deterministically chunked);
// for fixed S the optimal T is the set of columns whose S-partial sum is
// positive, or of those negative, whichever wins. Bilinearity makes the
// extreme 0/1 vectors optimal, so this attains the supremum over
// measurable rectangles.
CutNormResult cut_norm_exact(const KernelMatrix& x, const CutNormOptions& options = {});

// Alternating maximization (fix S, choose the greedy T; fix T, choose the
// greedy S) from random starts. Always a valid rectangle value, hence a
// lower bound for the exact norm; no approximation guarantee.
CutNormResult cut_norm_heuristic(const KernelMatrix& x, std::uint64_t restarts,
                                 std::uint64_t seed, const CutNormOptions& options = {});

// sup over |f|,|g| <= 1 of |iint X f g|: the L_inf -> L_1 operator norm.
// For step kernels the optimum has f = +-1 on steps and g_j = sign of the
// weighted column sum, so the value is
//   max over s in {-1,+1}^m of sum_j |sum_i s_i X(i,j)| / m^2.
// Sandwiched between the cut norm and 4x the cut norm.
double bilinear_pm1_norm(const KernelMatrix& x, const CutNormOptions& options = {});

}  // namespace deko
