#include "bohr/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohr {

PowerSeries::PowerSeries(std::vector<cplx> coeffs, std::optional<GeometricTail> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
  if (tail_ && !(tail_->ratio >= 0.0 && tail_->scale >= 0.0))
    throw std::invalid_argument("PowerSeries: tail ratio and scale must be nonnegative");
}

PowerSeries PowerSeries::zero(int order) {
  return constant(cplx(0.0, 0.0), order);
}

PowerSeries PowerSeries::constant(cplx value, int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: order must be >= 0");
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  c[0] = value;
  return PowerSeries(std::move(c), GeometricTail{0.0, 0.0});
}

PowerSeries PowerSeries::identity(int order) {
  if (order < 1) throw std::invalid_argument("PowerSeries::identity: order must be >= 1");
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  c[1] = cplx(1.0, 0.0);
  return PowerSeries(std::move(c), GeometricTail{0.0, 0.0});
}

PowerSeries PowerSeries::geometric(int order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: order must be >= 0");
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(1.0, 0.0));
  return PowerSeries(std::move(c), GeometricTail{1.0, 1.0});
}

cplx PowerSeries::coeff(int n) const {
  if (n < 0) throw std::out_of_range("PowerSeries::coeff: negative index");
  if (n > order()) return cplx(0.0, 0.0);
  return coeffs_[static_cast<size_t>(n)];
}

PowerSeries PowerSeries::with_tail(GeometricTail t) const {
  return PowerSeries(coeffs_, t);
}

PowerSeries PowerSeries::truncated(int new_order) const {
  if (new_order < 0) throw std::invalid_argument("PowerSeries::truncated: order must be >= 0");
  std::vector<cplx> c(coeffs_.begin(),
                      coeffs_.begin() + std::min<size_t>(coeffs_.size(), static_cast<size_t>(new_order) + 1));
  c.resize(static_cast<size_t>(new_order) + 1, cplx(0.0, 0.0));
  // Dropping stored coefficients invalidates tail metadata.
  return PowerSeries(std::move(c), new_order >= order() ? tail_ : std::nullopt);
}

PowerSeries PowerSeries::scaled(cplx factor) const {
  std::vector<cplx> c(coeffs_);
  for (auto& x : c) x *= factor;
  std::optional<GeometricTail> t = tail_;
  if (t) t->scale *= std::abs(factor);
  return PowerSeries(std::move(c), t);
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
  for (int d = 0; d <= n; ++d) {
    cplx acc(0.0, 0.0);
    for (int k = 0; 2 * k < d; ++k)
      acc += a.coeff(k) * b.coeff(d - k) + a.coeff(d - k) * b.coeff(k);
    if (d % 2 == 0) acc += a.coeff(d / 2) * b.coeff(d / 2);
    c[static_cast<size_t>(d)] = acc;
  }
  return PowerSeries(std::move(c));
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner.coeff(0) != cplx(0.0, 0.0))
    throw std::domain_error("compose: inner series must vanish at 0");
  const int n = std::min(outer.order(), inner.order());
  const PowerSeries w = inner.truncated(n);
  PowerSeries acc = PowerSeries::constant(outer.coeff(n), n);
  for (int j = n - 1; j >= 0; --j) {
    PowerSeries prod = multiply(acc, w);
    std::vector<cplx> c = prod.coeffs();
    c[0] += outer.coeff(j);
    acc = PowerSeries(std::move(c));
  }
  return acc;
}

PowerSeries real_power(const PowerSeries& base, double alpha) {
  if (base.coeff(0) != cplx(1.0, 0.0))
    throw std::domain_error("real_power: base must have constant term 1");
  const int n = base.order();
  std::vector<cplx> p(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
  p[0] = cplx(1.0, 0.0);
  // p' * base = alpha * base' * p
  for (int j = 1; j <= n; ++j) {
    cplx acc(0.0, 0.0);
    for (int k = 1; k <= j; ++k)
      acc += (alpha * k - static_cast<double>(j - k)) * base.coeff(k) * p[static_cast<size_t>(j - k)];
    p[static_cast<size_t>(j)] = acc / static_cast<double>(j);
  }
  return PowerSeries(std::move(p));
}

PowerSeries differentiate(const PowerSeries& s) {
  if (s.order() == 0) return PowerSeries::zero(0);
  std::vector<cplx> c(static_cast<size_t>(s.order()), cplx(0.0, 0.0));
  for (int j = 1; j <= s.order(); ++j)
    c[static_cast<size_t>(j - 1)] = static_cast<double>(j) * s.coeff(j);
  return PowerSeries(std::move(c));
}

PowerSeries antiderivative(const PowerSeries& s) {
  std::vector<cplx> c(static_cast<size_t>(s.order()) + 2, cplx(0.0, 0.0));
  for (int j = 0; j <= s.order(); ++j)
    c[static_cast<size_t>(j + 1)] = s.coeff(j) / static_cast<double>(j + 1);
  return PowerSeries(std::move(c));
}

cplx evaluate(const PowerSeries& s, cplx z) {
  cplx acc = s.coeff(s.order());
  for (int j = s.order() - 1; j >= 0; --j) acc = acc * z + s.coeff(j);
  return acc;
}

double certified_tail(const PowerSeries& s, double r, int from_index) {
  if (!s.tail()) return 0.0;
  const double x = s.tail()->ratio * r;
  if (s.tail()->scale == 0.0) return 0.0;
  if (!(x < 1.0)) throw std::domain_error("certified_tail: radius at or beyond the series' singularity");
  const int start = std::max(from_index, s.order() + 1);
  return s.tail()->scale * std::pow(x, start) / (1.0 - x);
}

double certified_derivative_tail(const PowerSeries& s, double r) {
  if (!s.tail() || s.tail()->scale == 0.0) return 0.0;
  const double x = s.tail()->ratio * r;
  if (!(x < 1.0)) throw std::domain_error("certified_derivative_tail: radius at or beyond the series' singularity");
  const int m = s.order() + 1;
  // sum_{n>=m} n x^(n-1) = x^(m-1) (m - (m-1) x) / (1-x)^2, scaled by ratio
  // to account for the r^(n-1) vs x^(n-1) mismatch.
  const double sum = std::pow(x, m - 1) * (m - (m - 1) * x) / ((1.0 - x) * (1.0 - x));
  return s.tail()->scale * s.tail()->ratio * sum;
}

MajorantSum majorant_sum(const PowerSeries& s, double r, int from_index) {
  if (from_index < 0) throw std::invalid_argument("majorant_sum: from_index must be >= 0");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("majorant_sum: radius must lie in [0, 1)");
  const bool has_meta = s.tail().has_value();
  if (has_meta && s.tail()->scale > 0.0 && !(s.tail()->ratio * r < 1.0))
    throw std::domain_error("majorant_sum: radius at or beyond the series' singularity");
  if (!has_meta && from_index > s.order())
    throw std::domain_error("majorant_sum: from_index exceeds the truncation order of an unbounded-tail series");
  double value = 0.0;
  double rn = 1.0;
  for (int n = 0; n <= s.order(); ++n) {
    if (n >= from_index) value += std::abs(s.coeff(n)) * rn;
    rn *= r;
  }
  MajorantSum out;
  out.certified = has_meta;
  out.value = has_meta ? value + certified_tail(s, r, from_index) : value;
  return out;
}

}  // namespace bohr
