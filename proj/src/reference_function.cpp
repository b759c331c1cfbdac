#include "bohr/reference_function.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohr/numeric.hpp"

namespace bohr {

namespace {

// Majorant of the angle-family coefficients: A_n <= n <= 4 * 1.1^n.
constexpr double kAngleTailRatio = 1.1;
constexpr double kAngleTailScale = 4.0;

PowerSeries build_series(ReferenceFunction::Kind kind, double q, int order) {
  using Kind = ReferenceFunction::Kind;
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  switch (kind) {
    case Kind::Convex: {
      for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = 1.0;
      return PowerSeries(std::move(c), GeometricTail{1.0, 1.0});
    }
    case Kind::DiskAutomorphism: {
      c[0] = q;
      for (int n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = -(1.0 - q * q) * ipow(q, n - 1);
      if (q == 0.0) return PowerSeries(std::move(c), GeometricTail{0.0, 0.0});
      return PowerSeries(std::move(c), GeometricTail{q, (1.0 - q * q) / q});
    }
    case Kind::ConcavePole: {
      for (int n = 1; n <= order; ++n) {
        const double v = (1.0 - ipow(q, 2 * n)) / ((1.0 - q * q) * ipow(q, n - 1));
        if (!std::isfinite(v))
          throw std::domain_error("ReferenceFunction: pole parameter too small for a series of this order");
        c[static_cast<size_t>(n)] = v;
      }
      return PowerSeries(std::move(c), GeometricTail{1.0 / q, q / (1.0 - q * q)});
    }
    case Kind::ConcaveAngle: {
      // ((1+z)/(1-z))^alpha expanded from the exact base 1 + 2z + 2z^2 + ...
      std::vector<cplx> base(static_cast<size_t>(order) + 1, cplx(2.0, 0.0));
      base[0] = 1.0;
      PowerSeries pow_series = real_power(PowerSeries(std::move(base)), q);
      for (int n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = pow_series.coeff(n) / (2.0 * q);
      return PowerSeries(std::move(c), GeometricTail{kAngleTailRatio, kAngleTailScale});
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ReferenceFunction::ReferenceFunction(Kind kind, double param)
    : kind_(kind), param_(param), series_(build_series(kind, param, kSeriesOrder)) {}

ReferenceFunction ReferenceFunction::convex() { return ReferenceFunction(Kind::Convex, 0.0); }

ReferenceFunction ReferenceFunction::disk_automorphism(double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw std::domain_error("disk_automorphism: a must lie in [0, 1)");
  return ReferenceFunction(Kind::DiskAutomorphism, a);
}

ReferenceFunction ReferenceFunction::concave_pole(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("concave_pole: p must lie in (0, 1)");
  return ReferenceFunction(Kind::ConcavePole, p);
}

ReferenceFunction ReferenceFunction::concave_angle(double alpha) {
  if (!(alpha >= 1.0 && alpha <= 2.0))
    throw std::domain_error("concave_angle: alpha must lie in [1, 2]");
  return ReferenceFunction(Kind::ConcaveAngle, alpha);
}

cplx ReferenceFunction::eval(cplx z) const {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("ReferenceFunction::eval: |z| must be < 1");
  switch (kind_) {
    case Kind::Convex:
      return z / (1.0 - z);
    case Kind::DiskAutomorphism:
      return (param_ - z) / (1.0 - param_ * z);
    case Kind::ConcavePole: {
      if (z == cplx(param_, 0.0))
        throw std::domain_error("ReferenceFunction::eval: z coincides with the pole");
      return param_ * z / ((param_ - z) * (1.0 - param_ * z));
    }
    case Kind::ConcaveAngle: {
      const cplx w = std::pow((1.0 + z) / (1.0 - z), param_);
      return (w - 1.0) / (2.0 * param_);
    }
  }
  throw std::logic_error("unreachable");
}

double ReferenceFunction::eval_real(double r) const {
  switch (kind_) {
    case Kind::Convex:
      if (!(r < 1.0)) throw std::domain_error("eval_real: r must be < 1");
      return r / (1.0 - r);
    case Kind::DiskAutomorphism:
      if (!(std::abs(r) < 1.0)) throw std::domain_error("eval_real: |r| must be < 1");
      return (param_ - r) / (1.0 - param_ * r);
    case Kind::ConcavePole:
      if (!(r < param_)) throw std::domain_error("eval_real: r must be < p");
      return param_ * r / ((param_ - r) * (1.0 - param_ * r));
    case Kind::ConcaveAngle:
      if (!(r < 1.0)) throw std::domain_error("eval_real: r must be < 1");
      return (std::pow((1.0 + r) / (1.0 - r), param_) - 1.0) / (2.0 * param_);
  }
  throw std::logic_error("unreachable");
}

cplx ReferenceFunction::eval_derivative(cplx z) const {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("ReferenceFunction::eval_derivative: |z| must be < 1");
  switch (kind_) {
    case Kind::Convex: {
      const cplx d = 1.0 - z;
      return 1.0 / (d * d);
    }
    case Kind::DiskAutomorphism: {
      const cplx d = 1.0 - param_ * z;
      return (param_ * param_ - 1.0) / (d * d);
    }
    case Kind::ConcavePole: {
      if (z == cplx(param_, 0.0))
        throw std::domain_error("ReferenceFunction::eval_derivative: z coincides with the pole");
      const cplx d = (param_ - z) * (1.0 - param_ * z);
      return param_ * param_ * (1.0 - z * z) / (d * d);
    }
    case Kind::ConcaveAngle:
      return std::pow(1.0 + z, param_ - 1.0) / std::pow(1.0 - z, param_ + 1.0);
  }
  throw std::logic_error("unreachable");
}

double ReferenceFunction::derivative_eval(double r) const {
  if (!(r >= 0.0 && r < singularity_radius()))
    throw std::domain_error("derivative_eval: r must lie in [0, singularity radius)");
  switch (kind_) {
    case Kind::Convex:
      return 1.0 / ((1.0 - r) * (1.0 - r));
    case Kind::DiskAutomorphism: {
      const double d = 1.0 - param_ * r;
      return (param_ * param_ - 1.0) / (d * d);
    }
    case Kind::ConcavePole: {
      const double d = (param_ - r) * (1.0 - param_ * r);
      return param_ * param_ * (1.0 - r * r) / (d * d);
    }
    case Kind::ConcaveAngle:
      return std::pow(1.0 + r, param_ - 1.0) / std::pow(1.0 - r, param_ + 1.0);
  }
  throw std::logic_error("unreachable");
}

cplx ReferenceFunction::coefficient(int n) const {
  if (n < 0) throw std::invalid_argument("coefficient: n must be >= 0");
  switch (kind_) {
    case Kind::Convex:
      return n == 0 ? 0.0 : 1.0;
    case Kind::DiskAutomorphism:
      if (n == 0) return param_;
      return -(1.0 - param_ * param_) * ipow(param_, n - 1);
    case Kind::ConcavePole:
      if (n == 0) return 0.0;
      return (1.0 - ipow(param_, 2 * n)) / ((1.0 - param_ * param_) * ipow(param_, n - 1));
    case Kind::ConcaveAngle:
      if (n <= series_.order()) return series_.coeff(n);
      return build_series(kind_, param_, n).coeff(n);
  }
  throw std::logic_error("unreachable");
}

double ReferenceFunction::boundary_distance() const {
  switch (kind_) {
    case Kind::Convex:
      return 0.5;
    case Kind::DiskAutomorphism:
      return 1.0 - param_;
    case Kind::ConcavePole:
      return param_ / ((1.0 + param_) * (1.0 + param_));
    case Kind::ConcaveAngle:
      return 1.0 / (2.0 * param_);
  }
  throw std::logic_error("unreachable");
}

double ReferenceFunction::singularity_radius() const {
  switch (kind_) {
    case Kind::Convex:
    case Kind::ConcaveAngle:
      return 1.0;
    case Kind::DiskAutomorphism:
      return param_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / param_;
    case Kind::ConcavePole:
      return param_;
  }
  throw std::logic_error("unreachable");
}

PowerSeries ReferenceFunction::series(int order) const {
  if (order < 0) throw std::invalid_argument("series: order must be >= 0");
  if (order == series_.order()) return series_;
  return build_series(kind_, param_, order);
}

}  // namespace bohr
