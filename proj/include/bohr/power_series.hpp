#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace bohr {

using cplx = std::complex<double>;

/// Coefficient bound |c_n| <= scale * ratio^n for every index n beyond the
/// stored order. ratio may equal or exceed 1 (bounded-coefficient and
/// pole-type series); sums built from the bound converge where ratio*r < 1.
struct GeometricTail {
  double ratio = 0.0;
  double scale = 0.0;
};

/// Value of sum_{n>=from} |c_n| r^n. When certified, the dropped tail is
/// covered by the geometric bound and value is an upper bound on the full
/// sum; otherwise value is the stored partial sum only (a lower bound).
struct MajorantSum {
  double value = 0.0;
  bool certified = false;
};

/// Truncated Taylor series about the origin with complex coefficients,
/// exact through degree order(). Immutable; all operations return new values.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<cplx> coeffs,
                       std::optional<GeometricTail> tail = std::nullopt);

  static PowerSeries zero(int order);
  static PowerSeries constant(cplx value, int order);
  static PowerSeries identity(int order);   // z
  static PowerSeries geometric(int order);  // 1/(1-z)

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^n; 0 beyond the truncation order.
  cplx coeff(int n) const;
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  PowerSeries with_tail(GeometricTail t) const;
  PowerSeries truncated(int new_order) const;
  /// Coefficient-wise scaling; the tail scale is multiplied by |factor|.
  PowerSeries scaled(cplx factor) const;

 private:
  std::vector<cplx> coeffs_;
  std::optional<GeometricTail> tail_;
};

/// Cauchy product, exact through min(a.order, b.order). The convolution is
/// accumulated over symmetric index pairs so the result is bit-identical
/// under argument swap.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b);

/// Taylor coefficients of outer(inner(z)) through min of the orders.
/// inner must vanish at 0.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// base(z)^alpha for real alpha via the power-series ODE recurrence.
/// base must have constant term exactly 1.
PowerSeries real_power(const PowerSeries& base, double alpha);

PowerSeries differentiate(const PowerSeries& s);
PowerSeries antiderivative(const PowerSeries& s);

/// Horner evaluation of the stored polynomial part.
cplx evaluate(const PowerSeries& s, cplx z);

/// sum_{n>=from_index} |c_n| r^n, truncated at the stored order with the
/// certified geometric remainder added when tail metadata is present.
/// Requires 0 <= r < 1 and, with a tail, ratio*r < 1 (the series'
/// singularity radius); without a tail, from_index must not exceed order.
MajorantSum majorant_sum(const PowerSeries& s, double r, int from_index = 0);

/// Upper bound on sum over n >= max(from_index, order+1) of |c_n| r^n from
/// the geometric tail; 0 when no tail metadata is attached.
double certified_tail(const PowerSeries& s, double r, int from_index = 0);

/// Upper bound on sum over n >= order+1 of n |c_n| r^(n-1); 0 without tail.
double certified_derivative_tail(const PowerSeries& s, double r);

}  // namespace bohr
