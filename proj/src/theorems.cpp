#include "bohr/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohr/numeric.hpp"

namespace bohr {

InequalityShape shape_of(Family f) {
  switch (f) {
    case Family::ConvexCombination:
    case Family::PoleCombination:
    case Family::AngleCombination:
      return InequalityShape::Combination;
    case Family::ConvexWeighted:
    case Family::PoleWeighted:
    case Family::AngleWeighted:
      return InequalityShape::Weighted;
    case Family::ConvexDerivative:
    case Family::AngleDerivative:
      return InequalityShape::WeightedDerivative;
    case Family::Univalent:
      break;
  }
  throw std::invalid_argument("shape_of: no inequality shape for this family");
}

ReferenceFunction target_function(Family f, const Params& prm) {
  switch (f) {
    case Family::ConvexCombination:
    case Family::ConvexWeighted:
    case Family::ConvexDerivative:
      return ReferenceFunction::convex();
    case Family::PoleCombination:
    case Family::PoleWeighted:
      return ReferenceFunction::concave_pole(prm.p);
    case Family::AngleCombination:
    case Family::AngleWeighted:
    case Family::AngleDerivative:
      return ReferenceFunction::concave_angle(prm.alpha);
    case Family::Univalent:
      break;
  }
  throw std::invalid_argument("target_function: no subordination target for this family");
}

Theorem::Theorem(Family f, Params prm)
    : family(f), params(prm), target(target_function(f, prm)) {
  validate(family, params);
}

EffectiveRadius effective_radius(const Theorem& thm, double tol) {
  EffectiveRadius out;
  out.root = solve(thm.equation(), tol);
  out.capped = std::min(out.root.midpoint(), 1.0 / 3.0);
  return out;
}

HarmonicMapping make_extremal(const Theorem& thm, cplx mu) {
  if (std::abs(std::abs(mu) - 1.0) > 1e-12)
    throw std::domain_error("make_extremal: mu must be unimodular");
  const ReferenceFunction phi = thm.target;
  HarmonicMapping f;
  f.h = phi.series();
  f.g = f.h.scaled(thm.params.k() * mu);
  f.dilatation_bound = thm.params.k();
  f.h_closed = [phi](cplx z) { return phi.eval(z); };
  f.h_derivative = [phi](cplx z) { return phi.eval_derivative(z); };
  return f;
}

double lhs(const Theorem& thm, const HarmonicMapping& f, double r) {
  if (!(r >= 0.0)) throw std::domain_error("lhs: r must be >= 0");
  const Params& P = thm.params;
  const double q = ipow(r, P.m);
  const double habs =
      std::abs(f.h_closed ? f.h_closed(cplx(q, 0.0)) : evaluate(f.h, cplx(q, 0.0)));
  switch (shape_of(thm.family)) {
    case InequalityShape::Combination: {
      const double sums = majorant_sum(f.h, r, 0).value + majorant_sum(f.g, r, 1).value;
      return P.t * habs + (1.0 - P.t) * sums;
    }
    case InequalityShape::Weighted: {
      const double sums = majorant_sum(f.h, r, 1).value + majorant_sum(f.g, r, 1).value;
      return habs + P.lambda * sums;
    }
    case InequalityShape::WeightedDerivative: {
      const double hd = std::abs(f.h_derivative ? f.h_derivative(cplx(q, 0.0))
                                                : evaluate(differentiate(f.h), cplx(q, 0.0)));
      const double sums = majorant_sum(f.h, r, 2).value + majorant_sum(f.g, r, 1).value;
      return habs + hd * r + P.lambda * sums;
    }
  }
  throw std::logic_error("unreachable");
}

double rhs(const Theorem& thm) {
  return std::abs(thm.target.eval(cplx(0.0, 0.0))) + thm.target.boundary_distance();
}

SharpnessResult check_sharpness(const Theorem& thm, double eps, double tol) {
  const EffectiveRadius er = effective_radius(thm, tol);
  SharpnessResult res;
  res.root = er.root.midpoint();
  res.applicable = res.root <= 1.0 / 3.0 + 1e-9;
  if (!res.applicable) return res;
  if (!(eps > 0.0 && eps < res.root))
    throw std::domain_error("check_sharpness: eps must lie in (0, root)");
  const HarmonicMapping f = make_extremal(thm, cplx(1.0, 0.0));
  const double bound = rhs(thm);
  res.below_ok = lhs(thm, f, res.root - eps) <= bound + 1e-12;
  res.above_violates = lhs(thm, f, res.root + eps) > bound;
  return res;
}

// ---- seeded sampling -------------------------------------------------------

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct SeedStream {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

SchwarzFunction draw_basic_schwarz(SeedStream& s, int order) {
  switch (s.next() % 3) {
    case 0:
      return schwarz_rotation(2.0 * std::numbers::pi * s.unit(), order);
    case 1:
      return schwarz_square(order);
    default:
      return schwarz_blaschke(-0.9 + 1.8 * s.unit(), order);
  }
}

}  // namespace

std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(base ^ mix64(index));
}

SchwarzFunction schwarz_rotation(double theta, int order) {
  const cplx u = std::polar(1.0, theta);
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  c[1] = u;
  SchwarzFunction w;
  w.series = PowerSeries(std::move(c), GeometricTail{0.0, 0.0});
  w.eval = [u](cplx z) { return u * z; };
  w.deriv = [u](cplx) { return u; };
  return w;
}

SchwarzFunction schwarz_square(int order) {
  if (order < 2) throw std::invalid_argument("schwarz_square: order must be >= 2");
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  c[2] = 1.0;
  SchwarzFunction w;
  w.series = PowerSeries(std::move(c), GeometricTail{0.0, 0.0});
  w.eval = [](cplx z) { return z * z; };
  w.deriv = [](cplx z) { return 2.0 * z; };
  return w;
}

SchwarzFunction schwarz_blaschke(double beta, int order) {
  if (!(beta > -1.0 && beta < 1.0))
    throw std::domain_error("schwarz_blaschke: beta must lie in (-1, 1)");
  // z (z + beta) / (1 + beta z) = beta z + (1 - beta^2) sum_{n>=1} (-beta)^(n-1) z^(n+1)
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  if (order >= 1) c[1] = beta;
  for (int n = 2; n <= order; ++n)
    c[static_cast<size_t>(n)] = (1.0 - beta * beta) * ipow(-beta, n - 2);
  SchwarzFunction w;
  const double b = std::abs(beta);
  w.series = PowerSeries(std::move(c), b == 0.0 ? GeometricTail{0.0, 0.0}
                                                : GeometricTail{b, (1.0 - b * b) / (b * b)});
  w.eval = [beta](cplx z) { return z * (z + beta) / (1.0 + beta * z); };
  w.deriv = [beta](cplx z) {
    const cplx d = 1.0 + beta * z;
    return (beta * z * z + 2.0 * z + beta) / (d * d);
  };
  return w;
}

SchwarzFunction schwarz_combination(double weight, const SchwarzFunction& a,
                                    const SchwarzFunction& b) {
  if (!(weight >= 0.0 && weight <= 1.0))
    throw std::domain_error("schwarz_combination: weight must lie in [0, 1]");
  const int order = std::min(a.series.order(), b.series.order());
  std::vector<cplx> c(static_cast<size_t>(order) + 1, cplx(0.0, 0.0));
  for (int n = 0; n <= order; ++n)
    c[static_cast<size_t>(n)] = weight * a.series.coeff(n) + (1.0 - weight) * b.series.coeff(n);
  SchwarzFunction w;
  w.series = PowerSeries(std::move(c));
  auto ea = a.eval, eb = b.eval, da = a.deriv, db = b.deriv;
  w.eval = [weight, ea, eb](cplx z) { return weight * ea(z) + (1.0 - weight) * eb(z); };
  w.deriv = [weight, da, db](cplx z) { return weight * da(z) + (1.0 - weight) * db(z); };
  return w;
}

HarmonicMapping sample_subordinate(const ReferenceFunction& phi, std::uint64_t schwarz_seed,
                                   std::uint64_t dilatation_seed, int order, double dilatation_k) {
  if (order < 8) throw std::domain_error("sample_subordinate: order must be >= 8");
  if (!(dilatation_k >= 0.0 && dilatation_k < 1.0))
    throw std::domain_error("sample_subordinate: dilatation bound must lie in [0, 1)");

  SeedStream ws{schwarz_seed};
  SchwarzFunction w = [&]() {
    switch (ws.next() % 4) {
      case 0:
        return schwarz_rotation(2.0 * std::numbers::pi * ws.unit(), order);
      case 1:
        return schwarz_square(order);
      case 2:
        return schwarz_blaschke(-0.9 + 1.8 * ws.unit(), order);
      default: {
        SchwarzFunction a = draw_basic_schwarz(ws, order);
        SchwarzFunction b = draw_basic_schwarz(ws, order);
        return schwarz_combination(ws.unit(), a, b);
      }
    }
  }();

  SeedStream ds{dilatation_seed};
  PowerSeries omega = [&]() {
    if (ds.next() % 2 == 0) {
      const cplx v = dilatation_k * std::polar(1.0, 2.0 * std::numbers::pi * ds.unit());
      return PowerSeries::constant(v, order);
    }
    return PowerSeries::identity(order).scaled(dilatation_k);
  }();

  HarmonicMapping f;
  f.h = compose(phi.series(order), w.series);
  f.g = antiderivative(multiply(omega, differentiate(f.h))).truncated(order);
  f.dilatation_bound = dilatation_k;
  const ReferenceFunction phi_copy = phi;
  auto weval = w.eval;
  auto wderiv = w.deriv;
  f.h_closed = [phi_copy, weval](cplx z) { return phi_copy.eval(weval(z)); };
  f.h_derivative = [phi_copy, weval, wderiv](cplx z) {
    return phi_copy.eval_derivative(weval(z)) * wderiv(z);
  };
  return f;
}

namespace {

// Numerical slack for an inequality check: the certified tail of the
// target's majorant at the probe radius, scaled by the shape weights.
double tail_allowance(const Theorem& thm, double r) {
  const PowerSeries target = thm.target.series();
  const Params& P = thm.params;
  const double q = ipow(r, P.m);
  const double onek = 1.0 + P.k();
  const double t_r = certified_tail(target, r, 1);
  const double t_q = certified_tail(target, q, 1);
  double allowance = 1e-12;
  switch (shape_of(thm.family)) {
    case InequalityShape::Combination:
      allowance += P.t * t_q + (1.0 - P.t) * onek * t_r;
      break;
    case InequalityShape::Weighted:
      allowance += t_q + P.lambda * onek * t_r;
      break;
    case InequalityShape::WeightedDerivative:
      allowance += t_q + r * certified_derivative_tail(target, q) + P.lambda * onek * t_r;
      break;
  }
  return allowance;
}

}  // namespace

bool check_inequality(const Theorem& thm, const HarmonicMapping& f, double r) {
  if (!(r > 0.0)) throw std::domain_error("check_inequality: r must be > 0");
  if (r > 1.0 / 3.0 + 1e-12)
    throw std::domain_error("check_inequality: r exceeds the 1/3 validity cap");
  return lhs(thm, f, r) <= rhs(thm) + tail_allowance(thm, r);
}

SubordinationReport run_subordination_batch(const Theorem& thm, std::uint64_t base_seed,
                                            int samples, int n_radii) {
  if (samples < 1 || n_radii < 1)
    throw std::invalid_argument("run_subordination_batch: counts must be >= 1");
  SubordinationReport rep;
  rep.base_seed = base_seed;
  rep.samples = samples;
  rep.radii = n_radii;

  const EffectiveRadius er = effective_radius(thm);
  const double capped = er.capped;
  const double k = thm.params.k();
  const PowerSeries target = thm.target.series();
  constexpr double kCompareRadii[] = {0.1, 0.2, 1.0 / 3.0};

  for (int i = 0; i < samples; ++i) {
    const HarmonicMapping f =
        sample_subordinate(thm.target, split_seed(base_seed, 2 * static_cast<std::uint64_t>(i)),
                           split_seed(base_seed, 2 * static_cast<std::uint64_t>(i) + 1),
                           ReferenceFunction::kSeriesOrder, k);
    for (int j = 1; j <= n_radii; ++j) {
      const double r = capped * j / static_cast<double>(n_radii + 1);
      if (!check_inequality(thm, f, r)) ++rep.violations;
    }
    for (double r : kCompareRadii) {
      if (!(r < thm.target.singularity_radius())) continue;
      for (int from : {1, 2}) {
        const double sample_side = majorant_sum(f.h, r, from).value;
        const double target_side = majorant_sum(target, r, from).value;
        if (sample_side > target_side + 1e-12) ++rep.majorant_comparison_failures;
      }
      const double b_side = majorant_sum(f.g, r, 1).value;
      const double a_side = majorant_sum(f.h, r, 1).value;
      if (b_side > k * a_side + 1e-12) ++rep.dilatation_comparison_failures;
    }
  }
  return rep;
}

}  // namespace bohr
