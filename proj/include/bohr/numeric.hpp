#pragma once

namespace bohr {

/// x^n for integer n >= 0 by binary exponentiation. Underflow to 0 is fine
/// (large m makes the r^m terms vanish, matching the analytic limit).
inline double ipow(double x, int n) {
  double acc = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace bohr
