#include "bohr/radius_equation.hpp"

#include <cmath>
#include <stdexcept>

#include "bohr/numeric.hpp"

namespace bohr {

const char* family_name(Family f) {
  switch (f) {
    case Family::ConvexCombination: return "convex-comb";
    case Family::ConvexWeighted: return "convex-weighted";
    case Family::ConvexDerivative: return "convex-deriv";
    case Family::PoleCombination: return "pole-comb";
    case Family::PoleWeighted: return "pole-weighted";
    case Family::AngleCombination: return "angle-comb";
    case Family::AngleWeighted: return "angle-weighted";
    case Family::AngleDerivative: return "angle-deriv";
    case Family::Univalent: return "univalent";
  }
  return "?";
}

FieldUse family_fields(Family f) {
  FieldUse u;
  switch (f) {
    case Family::ConvexCombination: u.m = true; u.t = true; break;
    case Family::ConvexWeighted: u.m = true; u.lambda = true; break;
    case Family::ConvexDerivative: u.m = true; u.lambda = true; break;
    case Family::PoleCombination: u.m = true; u.p = true; u.t = true; break;
    case Family::PoleWeighted: u.m = true; u.p = true; u.lambda = true; break;
    case Family::AngleCombination: u.m = true; u.t = true; u.alpha = true; break;
    case Family::AngleWeighted: u.m = true; u.alpha = true; u.lambda = true; break;
    case Family::AngleDerivative: u.m = true; u.alpha = true; u.lambda = true; break;
    case Family::Univalent: break;
  }
  return u;
}

void validate(Family f, const Params& prm) {
  const FieldUse u = family_fields(f);
  if (!(prm.K >= 1.0) || !std::isfinite(prm.K))
    throw std::domain_error("K must be >= 1");
  if (u.m && prm.m < 1) throw std::domain_error("m must be >= 1");
  if (u.t && !(prm.t >= 0.0 && prm.t <= 1.0))
    throw std::domain_error("t must lie in [0, 1]");
  if (u.lambda && !(prm.lambda > 0.0))
    throw std::domain_error("lambda must be > 0");
  if (u.p && !(prm.p > 0.0 && prm.p < 1.0))
    throw std::domain_error("p must lie in (0, 1)");
  if (u.alpha && !(prm.alpha >= 1.0 && prm.alpha <= 2.0))
    throw std::domain_error("alpha must lie in [1, 2]");
}

namespace {

std::optional<ReferenceFunction> make_target(Family f, const Params& prm) {
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
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

EquationFamily::EquationFamily(Family family, Params prm) : family_(family), prm_(prm) {
  validate(family_, prm_);
  target_ = make_target(family_, prm_);
}

std::pair<double, double> EquationFamily::domain() const {
  if (family_ == Family::PoleCombination || family_ == Family::PoleWeighted)
    return {0.0, prm_.p};
  return {0.0, 1.0};
}

double EquationFamily::evaluate(double r) const {
  const auto [lo, hi] = domain();
  if (!(r > lo && r < hi))
    throw std::domain_error("evaluate: r outside the open domain");
  const double K = prm_.K;
  const double q = ipow(r, prm_.m);
  switch (family_) {
    case Family::ConvexCombination:
      return prm_.t * q / (1.0 - q) + 2.0 * (1.0 - prm_.t) * K * r / ((K + 1.0) * (1.0 - r)) - 0.5;
    case Family::ConvexWeighted:
      return q / (1.0 - q) + 2.0 * K * prm_.lambda * r / ((K + 1.0) * (1.0 - r)) - 0.5;
    case Family::ConvexDerivative:
      return q / (1.0 - q) + r / ((1.0 - q) * (1.0 - q)) +
             prm_.lambda * (K - 1.0 + r * (K + 1.0)) * r / ((K + 1.0) * (1.0 - r)) - 0.5;
    case Family::PoleCombination:
      return prm_.t * target_->eval_real(q) +
             (2.0 * K * (1.0 - prm_.t) / (K + 1.0)) * target_->eval_real(r) -
             target_->boundary_distance();
    case Family::PoleWeighted:
      return target_->eval_real(q) + (2.0 * K * prm_.lambda / (K + 1.0)) * target_->eval_real(r) -
             target_->boundary_distance();
    case Family::AngleCombination:
      return prm_.t * target_->eval_real(q) +
             (2.0 * K * (1.0 - prm_.t) / (K + 1.0)) * target_->eval_real(r) -
             target_->boundary_distance();
    case Family::AngleWeighted:
      return target_->eval_real(q) + (2.0 * K * prm_.lambda / (K + 1.0)) * target_->eval_real(r) -
             target_->boundary_distance();
    case Family::AngleDerivative:
      return target_->eval_real(q) + r * target_->derivative_eval(q) +
             prm_.lambda * ((2.0 * K / (K + 1.0)) * target_->eval_real(r) - r) -
             target_->boundary_distance();
    case Family::Univalent:
      return (1.0 - r) * (1.0 - r) - 4.0 * r * (1.0 + prm_.k() * std::sqrt(1.0 + r));
  }
  throw std::logic_error("unreachable");
}

EquationFamily::Endpoints EquationFamily::endpoint_signs() const {
  Endpoints e;
  switch (family_) {
    case Family::ConvexCombination:
    case Family::ConvexWeighted:
    case Family::ConvexDerivative:
      e.value_at_zero = -0.5;
      e.diverges_at_hi = true;
      break;
    case Family::PoleCombination:
    case Family::PoleWeighted:
    case Family::AngleCombination:
    case Family::AngleWeighted:
    case Family::AngleDerivative:
      e.value_at_zero = -target_->boundary_distance();
      e.diverges_at_hi = true;
      break;
    case Family::Univalent:
      e.value_at_zero = 1.0;
      e.diverges_at_hi = false;
      break;
  }
  return e;
}

RootEnclosure solve(const EquationFamily& eq, double tol) {
  const auto [lo, hi] = eq.domain();
  return find_root([&eq](double r) { return eq.evaluate(r); }, lo, hi, tol);
}

}  // namespace bohr
