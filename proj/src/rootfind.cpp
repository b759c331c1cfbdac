#include "bohr/rootfind.hpp"

#include <cmath>

namespace bohr {

RootEnclosure find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be > 0");

  int evals = 0;
  auto eval = [&](double x) {
    const double v = f(x);
    ++evals;
    if (!std::isfinite(v)) throw NumericalError("find_root: non-finite evaluation inside the probed range");
    return v;
  };
  auto exact = [&](double x) {
    RootEnclosure e;
    e.lo = e.hi = x;
    e.evaluations = evals;
    e.tol = tol;
    e.exact_hit = true;
    return e;
  };

  double a = lo + 1e-9 * (hi - lo);
  double b = hi - 1e-9 * (hi - lo);
  double fa = eval(a);
  if (fa == 0.0) return exact(a);
  double fb = eval(b);
  if (fb == 0.0) return exact(b);

  for (int tries = 0; std::signbit(fa) == std::signbit(fb) && tries < 60; ++tries) {
    b = hi - (hi - b) / 2.0;
    if (!(b > a && b < hi)) break;
    fb = eval(b);
    if (fb == 0.0) return exact(b);
  }
  if (std::signbit(fa) == std::signbit(fb))
    throw NoRootError("find_root: no sign change detected on the probed interval");

  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) break;  // hit the floating-point floor
    const double fm = eval(mid);
    if (fm == 0.0) return exact(mid);
    if (std::signbit(fm) == std::signbit(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }

  RootEnclosure e;
  e.lo = a;
  e.hi = b;
  e.evaluations = evals;
  e.tol = tol;
  e.f_lo = fa;
  e.f_hi = fb;
  return e;
}

MonotoneReport verify_monotone(const std::function<double(double)>& f, double lo, double hi,
                               int samples) {
  if (samples < 2) throw std::invalid_argument("verify_monotone: samples must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("verify_monotone: requires lo < hi");

  MonotoneReport rep;
  double prev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * (i + 1) / static_cast<double>(samples + 1);
    const double v = f(x);
    if (!std::isfinite(v)) throw NumericalError("verify_monotone: non-finite sample");
    if (i > 0) {
      const int dir = v > prev ? 1 : (v < prev ? -1 : 0);
      if (dir == 0) return {false, 0};
      if (rep.direction == 0) rep.direction = dir;
      if (dir != rep.direction) return {false, 0};
    }
    prev = v;
  }
  rep.monotone = true;
  return rep;
}

}  // namespace bohr
