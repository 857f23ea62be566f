#include "deko/cutnorm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "deko/errors.hpp"
#include "deko/parallel.hpp"
#include "deko/rng.hpp"

namespace deko {

namespace {

std::vector<std::size_t> mask_to_indices(std::uint32_t mask, std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

// Unnormalized rectangle sum over S x T, in fixed index order.
double rectangle_sum(const KernelMatrix& x, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  double sum = 0.0;
  for (std::size_t i : rows)
    for (std::size_t j : cols) sum += x(i, j);
  return sum;
}

// Greedy column choice for fixed row sums: T = {j : colsum_j > 0} or the
// negative counterpart, whichever has the larger absolute total. Exact-zero
// sums are excluded (they never change the value).
struct GreedyCols {
  double best;          // unnormalized |sum|
  bool positive;        // which sign branch won
};

GreedyCols greedy_cols(const std::vector<double>& colsum) {
  double pos = 0.0, neg = 0.0;
  for (double s : colsum) {
    if (s > 0.0)
      pos += s;
    else
      neg -= s;
  }
  return {std::max(pos, neg), pos >= neg};
}

struct ChunkBest {
  double value = -1.0;
  std::uint32_t mask = 0;
};

// Enumerates all S with the given high bits via a Gray walk over the low
// bits, returning the best |rectangle| value and its S-mask.
ChunkBest scan_chunk(const KernelMatrix& x, std::size_t m, std::uint32_t high_mask,
                     std::size_t low_bits) {
  std::vector<double> colsum(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if ((high_mask >> i) & 1u)
      for (std::size_t j = 0; j < m; ++j) colsum[j] += x(i, j);

  ChunkBest best;
  std::uint32_t mask = high_mask;
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t it = 0;; ++it) {
    const double value = greedy_cols(colsum).best;
    if (value > best.value) {
      best.value = value;
      best.mask = mask;
    }
    if (it + 1 >= steps) break;
    const unsigned flip = static_cast<unsigned>(std::countr_zero(it + 1));
    mask ^= (std::uint32_t{1} << flip);
    const double sign = ((mask >> flip) & 1u) ? 1.0 : -1.0;
    for (std::size_t j = 0; j < m; ++j) colsum[j] += sign * x(flip, j);
  }
  return best;
}

void require_exact_feasible(std::size_t m, const CutNormOptions& options,
                            const char* what) {
  if (m > options.exact_guard || m >= 31)
    throw ResourceError(std::string(what) + ": " + std::to_string(m) +
                        " steps exceed the exact enumeration guard of " +
                        std::to_string(options.exact_guard) +
                        "; use cut_norm_heuristic");
}

}  // namespace

CutNormResult cut_norm_exact(const KernelMatrix& x, const CutNormOptions& options) {
  const std::size_t m = x.m();
  require_exact_feasible(m, options, "cut_norm_exact");

  const std::size_t low_bits = std::min<std::size_t>(m, 16);
  const std::size_t high_bits = m - low_bits;
  const std::size_t chunks = std::size_t{1} << high_bits;

  std::vector<ChunkBest> best(chunks);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        best[c] = scan_chunk(x, m, static_cast<std::uint32_t>(c) << low_bits, low_bits);
      },
      options.threads);

  ChunkBest overall;
  for (const auto& b : best)
    if (b.value > overall.value) overall = b;

  // rebuild the witness from the winning mask and report the from-scratch
  // rectangle value (independent of the Gray-walk rounding)
  CutNormResult result;
  result.rows = mask_to_indices(overall.mask, m);
  std::vector<double> colsum(m, 0.0);
  for (std::size_t i : result.rows)
    for (std::size_t j = 0; j < m; ++j) colsum[j] += x(i, j);
  const GreedyCols cols = greedy_cols(colsum);
  for (std::size_t j = 0; j < m; ++j) {
    if (cols.positive ? colsum[j] > 0.0 : colsum[j] < 0.0) result.cols.push_back(j);
  }
  result.value = std::abs(rectangle_sum(x, result.rows, result.cols)) /
                 (static_cast<double>(m) * static_cast<double>(m));
  result.certified = true;
  return result;
}

CutNormResult cut_norm_heuristic(const KernelMatrix& x, std::uint64_t restarts,
                                 std::uint64_t seed, const CutNormOptions&) {
  if (restarts == 0) throw ValidationError("cut_norm_heuristic needs restarts >= 1");
  const std::size_t m = x.m();
  const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));

  CutNormResult best;
  best.value = -1.0;
  for (std::uint64_t r = 0; r < restarts; ++r) {
    Rng rng = Rng::stream(seed, r);
    std::vector<bool> in_rows(m);
    for (std::size_t i = 0; i < m; ++i) in_rows[i] = (rng.next() & 1u) != 0;

    std::vector<bool> in_cols(m, false);
    double current = -1.0;
    for (int iter = 0; iter < 64; ++iter) {  // fixpoint comes long before this
      // greedy T given S
      std::vector<double> colsum(m, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        if (in_rows[i])
          for (std::size_t j = 0; j < m; ++j) colsum[j] += x(i, j);
      const GreedyCols cols = greedy_cols(colsum);
      for (std::size_t j = 0; j < m; ++j)
        in_cols[j] = cols.positive ? colsum[j] > 0.0 : colsum[j] < 0.0;
      // greedy S given T
      std::vector<double> rowsum(m, 0.0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (in_cols[j]) rowsum[i] += x(i, j);
      const GreedyCols rows = greedy_cols(rowsum);
      for (std::size_t i = 0; i < m; ++i)
        in_rows[i] = rows.positive ? rowsum[i] > 0.0 : rowsum[i] < 0.0;
      if (rows.best <= current) break;
      current = rows.best;
    }

    std::vector<std::size_t> row_idx, col_idx;
    for (std::size_t i = 0; i < m; ++i)
      if (in_rows[i]) row_idx.push_back(i);
    for (std::size_t j = 0; j < m; ++j)
      if (in_cols[j]) col_idx.push_back(j);
    const double value = std::abs(rectangle_sum(x, row_idx, col_idx));
    if (value > best.value) {
      best.value = value;
      best.rows = std::move(row_idx);
      best.cols = std::move(col_idx);
    }
  }
  best.value = std::max(0.0, best.value) * scale;
  best.certified = false;
  return best;
}

double bilinear_pm1_norm(const KernelMatrix& x, const CutNormOptions& options) {
  const std::size_t m = x.m();
  require_exact_feasible(m, options, "bilinear_pm1_norm");
  const double scale = 1.0 / (static_cast<double>(m) * static_cast<double>(m));

  // s and -s give the same value: pin the last sign to +1 and walk the rest
  const std::size_t free_bits = m - 1;
  const std::size_t low_bits = std::min<std::size_t>(free_bits, 16);
  const std::size_t chunks = std::size_t{1} << (free_bits - low_bits);

  std::vector<double> best(chunks, -1.0);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        // bit i set <=> s_i = -1, s_{m-1} fixed at +1
        const std::uint32_t high_mask = static_cast<std::uint32_t>(c) << low_bits;
        std::vector<double> colsum(m, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
          double s = 0.0;
          for (std::size_t i = 0; i < m; ++i)
            s += (i < free_bits && ((high_mask >> i) & 1u)) ? -x(i, j) : x(i, j);
          colsum[j] = s;
        }
        std::uint32_t mask = high_mask;
        double chunk_best = -1.0;
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t it = 0;; ++it) {
          double value = 0.0;
          for (std::size_t j = 0; j < m; ++j) value += std::abs(colsum[j]);
          chunk_best = std::max(chunk_best, value);
          if (it + 1 >= steps) break;
          const unsigned flip = static_cast<unsigned>(std::countr_zero(it + 1));
          mask ^= (std::uint32_t{1} << flip);
          const double delta = ((mask >> flip) & 1u) ? -2.0 : 2.0;
          for (std::size_t j = 0; j < m; ++j) colsum[j] += delta * x(flip, j);
        }
        best[c] = chunk_best;
      },
      options.threads);

  double overall = -1.0;
  for (double b : best) overall = std::max(overall, b);
  return overall * scale;
}

}  // namespace deko
