#pragma once

#include "bohr/power_series.hpp"

namespace bohr {

/// Catalog of the subordination targets used by the radius theorems and the
/// classical fixtures:
///   Convex            c(z)   = z / (1 - z)
///   DiskAutomorphism  f_a(z) = (a - z) / (1 - a z),        0 <= a < 1
///   ConcavePole       k_p(z) = p z / ((p - z)(1 - p z)),   0 < p < 1
///   ConcaveAngle      f_A(z) = (((1+z)/(1-z))^A - 1) / 2A, 1 <= A <= 2
/// Instances are immutable after construction (the Taylor series is built
/// eagerly), so concurrent reads are safe.
class ReferenceFunction {
 public:
  enum class Kind { Convex, DiskAutomorphism, ConcavePole, ConcaveAngle };

  static constexpr int kSeriesOrder = 64;

  static ReferenceFunction convex();
  static ReferenceFunction disk_automorphism(double a);
  static ReferenceFunction concave_pole(double p);
  static ReferenceFunction concave_angle(double alpha);

  Kind kind() const { return kind_; }
  /// a, p, or alpha depending on kind; 0 for Convex.
  double parameter() const { return param_; }

  /// Closed-form value. Requires |z| < 1, and z != p for ConcavePole.
  cplx eval(cplx z) const;
  /// Closed-form value at a real point below the singularity radius.
  double eval_real(double r) const;
  /// Closed-form derivative (complex argument, |z| < 1, z != p for the pole).
  cplx eval_derivative(cplx z) const;
  /// Closed-form derivative at a real point in [0, singularity radius).
  double derivative_eval(double r) const;

  /// Exact Taylor coefficient. Convex: 1 for n >= 1; DiskAutomorphism:
  /// a at n=0 and -(1-a^2) a^(n-1) after; ConcavePole:
  /// (1 - p^(2n)) / ((1-p^2) p^(n-1)); ConcaveAngle: from the cached series.
  cplx coefficient(int n) const;

  /// Distance from the image of 0 to the image boundary:
  /// 1/2, 1-a, p/(1+p)^2, 1/(2 alpha).
  double boundary_distance() const;

  /// Radius of the nearest singularity: 1, 1/a, p, 1.
  double singularity_radius() const;

  /// Cached Taylor series with certified tail metadata; rebuilt on demand
  /// for a non-default order.
  PowerSeries series(int order = kSeriesOrder) const;

 private:
  ReferenceFunction(Kind kind, double param);

  Kind kind_;
  double param_;
  PowerSeries series_;
};

}  // namespace bohr
