#pragma once

#include <cstdint>
#include <functional>

#include "bohr/radius_equation.hpp"

namespace bohr {

/// Weighting shape of an inequality's left-hand side.
enum class InequalityShape {
  Combination,         //  t |h(r^m)| + (1-t) sum_{n>=0} (|a_n|+|b_n|) r^n
  Weighted,            //  |h(r^m)| + L sum_{n>=1} (|a_n|+|b_n|) r^n
  WeightedDerivative,  //  |h(r^m)| + |h'(r^m)| r + L (sum_{n>=2}|a_n|r^n + sum_{n>=1}|b_n|r^n)
};

InequalityShape shape_of(Family f);

/// Subordination target of an inequality family (convex c, pole k_p, or
/// angle f_alpha). Univalent has no catalog target and is rejected.
ReferenceFunction target_function(Family f, const Params& prm);

/// One of the eight radius inequalities: an equation family paired with its
/// parameters and subordination target.
struct Theorem {
  Family family;
  Params params;
  ReferenceFunction target;

  Theorem(Family f, Params prm);
  EquationFamily equation() const { return EquationFamily(family, params); }
};

/// Harmonic mapping h + conj(g) with g(0) = 0 and |g'/h'| <= dilatation
/// bound. The optional evaluators carry the closed form of h when one is
/// known (extremal and sampled mappings), so radius probes do not lose the
/// truncated tail.
struct HarmonicMapping {
  PowerSeries h = PowerSeries::zero(0);
  PowerSeries g = PowerSeries::zero(0);
  double dilatation_bound = 0.0;
  std::function<cplx(cplx)> h_closed;
  std::function<cplx(cplx)> h_derivative;
};

struct EffectiveRadius {
  RootEnclosure root;
  double capped = 0.0;  // min(root midpoint, 1/3)
};

EffectiveRadius effective_radius(const Theorem& thm, double tol = 1e-12);

/// Extremal pair h = target, g = k mu h with |mu| = 1.
HarmonicMapping make_extremal(const Theorem& thm, cplx mu = cplx(1.0, 0.0));

/// Left-hand side of the theorem's inequality at z = r on the positive axis.
/// Majorant sums carry certified tails where the series has them; |h(r^m)|
/// and |h'(r^m)| use the closed form when attached.
double lhs(const Theorem& thm, const HarmonicMapping& f, double r);

/// |target(0)| + boundary distance (the targets vanish at 0).
double rhs(const Theorem& thm);

/// Sharpness probe with the extremal mapping (mu = 1) around the root R:
/// below_ok  = lhs(R - eps) <= rhs + 1e-12, above_violates = lhs(R + eps) > rhs.
/// applicable is false when R > 1/3 (no sharpness claim there).
struct SharpnessResult {
  bool applicable = false;
  bool below_ok = false;
  bool above_violates = false;
  double root = 0.0;
};

SharpnessResult check_sharpness(const Theorem& thm, double eps, double tol = 1e-12);

/// Closed-form Schwarz functions used by the subordination sampler.
struct SchwarzFunction {
  PowerSeries series = PowerSeries::zero(0);
  std::function<cplx(cplx)> eval;
  std::function<cplx(cplx)> deriv;
};

SchwarzFunction schwarz_rotation(double theta, int order);
SchwarzFunction schwarz_square(int order);
SchwarzFunction schwarz_blaschke(double beta, int order);  // z (z + beta) / (1 + beta z)
SchwarzFunction schwarz_combination(double weight, const SchwarzFunction& a,
                                    const SchwarzFunction& b);

/// Random subordinate mapping: w drawn from {rotation, square, blaschke,
/// convex combinations}, h = phi o w, omega drawn from {k e^{i theta}, k z},
/// g the antiderivative of omega h'. Deterministic in the two seeds.
HarmonicMapping sample_subordinate(const ReferenceFunction& phi, std::uint64_t schwarz_seed,
                                   std::uint64_t dilatation_seed, int order, double dilatation_k);

/// lhs <= rhs + certified tail allowance, at a radius within the 1/3
/// validity cap of the coefficient lemmas. Radii beyond the root are legal;
/// the boolean carries the verdict.
bool check_inequality(const Theorem& thm, const HarmonicMapping& f, double r);

/// Fixed splittable seed derivation for per-sample streams.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

struct SubordinationReport {
  std::uint64_t base_seed = 0;
  int samples = 0;
  int radii = 0;
  int violations = 0;
  int majorant_comparison_failures = 0;    // sum_{n>=N} |a_n| r^n vs target, N = 1, 2
  int dilatation_comparison_failures = 0;  // sum |b_n| r^n vs k sum |a_n| r^n
};

/// Seeded Monte-Carlo batch: each sample is checked at n_radii equispaced
/// radii in (0, capped radius) and at r in {0.1, 0.2, 1/3} for the
/// coefficient-sum comparisons.
SubordinationReport run_subordination_batch(const Theorem& thm, std::uint64_t base_seed,
                                            int samples, int n_radii);

}  // namespace bohr
