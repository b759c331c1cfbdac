#pragma once

#include <functional>
#include <stdexcept>

namespace bohr {

/// No sign change found after endpoint probing.
struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A probed evaluation returned a non-finite value.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Certified interval around the unique sign change of a monotone function.
/// f_lo and f_hi record the bracketing values at certification time; they
/// have opposite signs unless an evaluation hit 0 exactly (exact_hit, in
/// which case lo == hi).
struct RootEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  int evaluations = 0;
  double tol = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
  bool exact_hit = false;

  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

/// Bracketing bisection on the open interval (lo, hi) for a strictly
/// monotone f with a verified sign change. Either orientation is accepted.
/// The initial bracket sits 1e-9*(hi-lo) inside the endpoints; if no sign
/// change is seen there the upper probe is pushed geometrically toward hi
/// (these functions typically diverge at hi) up to 60 times before NoRoot.
RootEnclosure find_root(const std::function<double(double)>& f, double lo, double hi,
                        double tol = 1e-12);

/// Strict one-signedness of finite differences over an equispaced interior
/// grid. direction is +1/-1 for increasing/decreasing when monotone.
struct MonotoneReport {
  bool monotone = false;
  int direction = 0;
};

MonotoneReport verify_monotone(const std::function<double(double)>& f, double lo, double hi,
                               int samples);

}  // namespace bohr
