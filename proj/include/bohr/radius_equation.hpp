#pragma once

#include <utility>

#include "bohr/reference_function.hpp"
#include "bohr/rootfind.hpp"

namespace bohr {

/// The nine radius-defining real functions of r. Naming: target family
/// (convex / pole / angle / univalent) x weighting shape (convex-combination
/// weight t, multiplicative weight lambda, lambda plus derivative term).
/// All are strictly increasing on their domain except Univalent, which
/// decreases; each has a unique sign change.
enum class Family {
  ConvexCombination,   //  t q/(1-q) + 2(1-t)K r / ((K+1)(1-r)) - 1/2,  q = r^m
  ConvexWeighted,      //  q/(1-q) + 2 K L r / ((K+1)(1-r)) - 1/2
  ConvexDerivative,    //  q/(1-q) + r/(1-q)^2 + L (K-1+r(K+1)) r / ((K+1)(1-r)) - 1/2
  PoleCombination,     //  t k_p(q) + (2K(1-t)/(K+1)) k_p(r) - p/(1+p)^2
  PoleWeighted,        //  k_p(q) + (2KL/(K+1)) k_p(r) - p/(1+p)^2
  AngleCombination,    //  t f_A(q) + (2K(1-t)/(K+1)) f_A(r) - 1/(2A)
  AngleWeighted,       //  f_A(q) + (2KL/(K+1)) f_A(r) - 1/(2A)
  AngleDerivative,     //  f_A(q) + r f_A'(q) + L ((2K/(K+1)) f_A(r) - r) - 1/(2A)
  Univalent,           //  (1-r)^2 - 4r (1 + k sqrt(1+r)),  k = (K-1)/(K+1)
};

const char* family_name(Family f);

/// Parameter tuple; each family reads only the fields it needs.
struct Params {
  double K = 1.0;       // quasiconformality, >= 1
  int m = 1;            // power index, >= 1
  double t = 0.0;       // combination weight, in [0, 1]
  double lambda = 1.0;  // multiplicative weight, > 0
  double p = 0.5;       // pole location, in (0, 1)
  double alpha = 1.0;   // opening-angle parameter, in [1, 2]

  double k() const { return (K - 1.0) / (K + 1.0); }
};

/// Which fields a family reads (K is always read; m by all but Univalent).
struct FieldUse {
  bool m = false;
  bool t = false;
  bool lambda = false;
  bool p = false;
  bool alpha = false;
};
FieldUse family_fields(Family f);

/// Throws std::domain_error naming the violated range.
void validate(Family f, const Params& prm);

class EquationFamily {
 public:
  EquationFamily(Family family, Params prm);

  Family family() const { return family_; }
  const Params& params() const { return prm_; }

  /// Formula value; r must lie strictly inside domain().
  double evaluate(double r) const;

  /// (0, 1) for all families except the pole families, which use (0, p).
  std::pair<double, double> domain() const;

  struct Endpoints {
    double value_at_zero = 0.0;
    bool diverges_at_hi = false;  // Univalent stays finite (and negative) at 1
  };
  Endpoints endpoint_signs() const;

  bool increasing() const { return family_ != Family::Univalent; }

 private:
  Family family_;
  Params prm_;
  std::optional<ReferenceFunction> target_;
};

/// Bracketing bisection over the family's domain.
RootEnclosure solve(const EquationFamily& eq, double tol = 1e-12);

}  // namespace bohr
