#pragma once

namespace deko {

// Kahan compensated accumulator. Used wherever many small terms are folded
// into one value and the result feeds a tight (1e-10 scale) comparison.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

}  // namespace deko
