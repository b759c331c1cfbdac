#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bohr/power_series.hpp"
#include "oracles.hpp"

using bohr::cplx;
using bohr::GeometricTail;
using bohr::PowerSeries;

namespace {

PowerSeries random_integer_series(std::uint64_t seed, int order, bool zero_constant = false) {
  oracle::Stream s{seed};
  std::vector<cplx> c(static_cast<size_t>(order) + 1);
  for (auto& v : c)
    v = cplx(static_cast<double>(s.uniform_int(-2, 2)), static_cast<double>(s.uniform_int(-2, 2)));
  if (zero_constant) c[0] = 0.0;
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("multiply: squared geometric series has coefficients n+1") {
  const PowerSeries g = PowerSeries::geometric(20);
  const PowerSeries sq = multiply(g, g);
  for (int n = 0; n <= 20; ++n) CHECK(sq.coeff(n) == cplx(n + 1.0, 0.0));
}

TEST_CASE("multiply: constant one is the identity") {
  const PowerSeries a = random_integer_series(7, 12);
  const PowerSeries one = PowerSeries::constant(1.0, 12);
  const PowerSeries prod = multiply(a, one);
  for (int n = 0; n <= 12; ++n) CHECK(prod.coeff(n) == a.coeff(n));
}

TEST_CASE("multiply: (1+z)(1-z) = 1 - z^2 with zero coefficients beyond degree 2") {
  std::vector<cplx> up = {1.0, 1.0};
  std::vector<cplx> dn = {1.0, -1.0};
  const PowerSeries prod =
      multiply(PowerSeries(up).truncated(10), PowerSeries(dn).truncated(10));
  CHECK(prod.coeff(0) == cplx(1.0, 0.0));
  CHECK(prod.coeff(1) == cplx(0.0, 0.0));
  CHECK(prod.coeff(2) == cplx(-1.0, 0.0));
  for (int n = 3; n <= 10; ++n) CHECK(prod.coeff(n) == cplx(0.0, 0.0));
}

TEST_CASE("multiply: commutative and associative, exact on integer series") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PowerSeries a = random_integer_series(3 * seed, 10);
    const PowerSeries b = random_integer_series(3 * seed + 1, 10);
    const PowerSeries c = random_integer_series(3 * seed + 2, 10);
    const PowerSeries ab = multiply(a, b);
    const PowerSeries ba = multiply(b, a);
    for (int n = 0; n <= 10; ++n) CHECK(ab.coeff(n) == ba.coeff(n));
    const PowerSeries l = multiply(multiply(a, b), c);
    const PowerSeries r = multiply(a, multiply(b, c));
    for (int n = 0; n <= 10; ++n) CHECK(l.coeff(n) == r.coeff(n));
  }
}

TEST_CASE("multiply: cross-check against brute-force convolution") {
  const PowerSeries a = random_integer_series(101, 16);
  const PowerSeries b = random_integer_series(102, 16);
  const auto expect = oracle::convolve(a.coeffs(), b.coeffs(), 16);
  const PowerSeries prod = multiply(a, b);
  for (int n = 0; n <= 16; ++n) CHECK(prod.coeff(n) == expect[static_cast<size_t>(n)]);
}

TEST_CASE("compose: c(z) with w = z^2 gives the even geometric series") {
  std::vector<cplx> cc(13, cplx(1.0, 0.0));
  cc[0] = 0.0;
  const PowerSeries c(cc);  // z/(1-z)
  std::vector<cplx> ww(13, cplx(0.0, 0.0));
  ww[2] = 1.0;
  const PowerSeries composed = compose(c, PowerSeries(ww));
  for (int n = 0; n <= 12; ++n) {
    const cplx expect = (n >= 2 && n % 2 == 0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    CHECK(composed.coeff(n) == expect);
  }
}

TEST_CASE("compose: c(z) with the blaschke-type w, beta = 1/2, degree 6") {
  // Oracle: c(w(z)) = (beta z + z^2) / (1 - z^2) expanded by synthetic division.
  const double beta = 0.5;
  const auto expect =
      oracle::rational_series({0.0, beta, 1.0}, {1.0, 0.0, -1.0}, 6);
  const std::vector<cplx> frozen = {0.0, 0.5, 1.0, 0.5, 1.0, 0.5, 1.0};
  for (int n = 0; n <= 6; ++n) CHECK(expect[static_cast<size_t>(n)] == frozen[static_cast<size_t>(n)]);

  std::vector<cplx> cc(7, cplx(1.0, 0.0));
  cc[0] = 0.0;
  std::vector<cplx> ww(7, cplx(0.0, 0.0));
  ww[1] = beta;
  for (int n = 2; n <= 6; ++n)
    ww[static_cast<size_t>(n)] = (1.0 - beta * beta) * std::pow(-beta, n - 2);
  const PowerSeries composed = compose(PowerSeries(cc), PowerSeries(ww));
  for (int n = 0; n <= 6; ++n)
    CHECK(std::abs(composed.coeff(n) - frozen[static_cast<size_t>(n)]) <= 1e-15);
}

TEST_CASE("compose: inner must vanish at 0") {
  const PowerSeries outer = PowerSeries::geometric(8);
  const PowerSeries inner = PowerSeries::constant(0.5, 8);
  CHECK_THROWS_AS(compose(outer, inner), std::domain_error);
}

TEST_CASE("compose: identity on either side") {
  const PowerSeries s = random_integer_series(55, 10);
  const PowerSeries id = PowerSeries::identity(10);
  const PowerSeries a = compose(s, id);
  for (int n = 0; n <= 10; ++n) CHECK(a.coeff(n) == s.coeff(n));
  const PowerSeries w = random_integer_series(56, 10, true);
  const PowerSeries b = compose(id, w);
  for (int n = 0; n <= 10; ++n) CHECK(b.coeff(n) == w.coeff(n));
}

TEST_CASE("real_power: alpha = 1 reproduces the base") {
  std::vector<cplx> base(13, cplx(2.0, 0.0));
  base[0] = 1.0;
  const PowerSeries b(base);
  const PowerSeries p = real_power(b, 1.0);
  for (int n = 0; n <= 12; ++n) CHECK(p.coeff(n) == b.coeff(n));
}

TEST_CASE("real_power: alpha = 2 matches the brute-force Cauchy square") {
  std::vector<cplx> base(13, cplx(2.0, 0.0));
  base[0] = 1.0;
  const PowerSeries b(base);
  const PowerSeries p = real_power(b, 2.0);
  const auto expect = oracle::convolve(b.coeffs(), b.coeffs(), 12);
  for (int n = 0; n <= 12; ++n) CHECK(p.coeff(n) == expect[static_cast<size_t>(n)]);
  // constant 1 plus 4n at z^n
  for (int n = 1; n <= 12; ++n) CHECK(p.coeff(n) == cplx(4.0 * n, 0.0));
}

TEST_CASE("real_power: zeroth power is the constant 1") {
  std::vector<cplx> base = {1.0, 1.0};
  const PowerSeries p = real_power(PowerSeries(base).truncated(9), 0.0);
  CHECK(p.coeff(0) == cplx(1.0, 0.0));
  for (int n = 1; n <= 9; ++n) CHECK(p.coeff(n) == cplx(0.0, 0.0));
}

TEST_CASE("real_power: rejects constant term != 1") {
  std::vector<cplx> base = {2.0, 1.0};
  CHECK_THROWS_AS(real_power(PowerSeries(base), 0.5), std::domain_error);
}

TEST_CASE("real_power: exponent additivity") {
  std::vector<cplx> base(17, cplx(2.0, 0.0));
  base[0] = 1.0;
  const PowerSeries b(base);
  for (auto [x, y] : {std::pair{0.5, 1.3}, std::pair{1.7, 0.2}, std::pair{0.9, 0.9}}) {
    const PowerSeries lhs = real_power(b, x + y);
    const PowerSeries rhs = multiply(real_power(b, x), real_power(b, y));
    for (int n = 0; n <= 16; ++n) {
      const double scale = std::max(1.0, std::abs(lhs.coeff(n)));
      CHECK(std::abs(lhs.coeff(n) - rhs.coeff(n)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("majorant_sum: geometric series fixtures") {
  const PowerSeries g = PowerSeries::geometric(64);
  const auto m1 = bohr::majorant_sum(g, 1.0 / 3.0, 1);
  CHECK(m1.certified);
  CHECK(m1.value == doctest::Approx(0.5).epsilon(1e-14));
  const auto m2 = bohr::majorant_sum(g, 1.0 / 3.0, 2);
  CHECK(m2.value == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("majorant_sum: domain errors") {
  const PowerSeries g = PowerSeries::geometric(16);
  CHECK_THROWS_AS(bohr::majorant_sum(g, 1.0, 0), std::domain_error);
  CHECK_THROWS_AS(bohr::majorant_sum(g, -0.1, 0), std::domain_error);
  const PowerSeries bare = random_integer_series(9, 8);
  CHECK_THROWS_AS(bohr::majorant_sum(bare, 0.5, 9), std::domain_error);
  const auto partial = bohr::majorant_sum(bare, 0.5, 0);
  CHECK_FALSE(partial.certified);  // lower bound only
}

TEST_CASE("differentiate: geometric-type fixtures") {
  // d/dz z/(1-z) = 1/(1-z)^2
  std::vector<cplx> c(12, cplx(1.0, 0.0));
  c[0] = 0.0;
  const PowerSeries d = differentiate(PowerSeries(c));
  for (int n = 0; n <= 10; ++n) CHECK(d.coeff(n) == cplx(n + 1.0, 0.0));
  const PowerSeries z = differentiate(PowerSeries::constant(3.0, 5));
  for (int n = 0; n <= z.order(); ++n) CHECK(z.coeff(n) == cplx(0.0, 0.0));
}

TEST_CASE("antiderivative: inverse fixtures and round trip") {
  std::vector<cplx> c(11);
  for (int n = 0; n <= 10; ++n) c[static_cast<size_t>(n)] = cplx(n + 1.0, 0.0);
  const PowerSeries anti = antiderivative(PowerSeries(c));
  CHECK(anti.coeff(0) == cplx(0.0, 0.0));
  for (int n = 1; n <= 11; ++n) CHECK(anti.coeff(n) == cplx(1.0, 0.0));

  const PowerSeries zero = antiderivative(PowerSeries::zero(6));
  for (int n = 0; n <= zero.order(); ++n) CHECK(zero.coeff(n) == cplx(0.0, 0.0));

  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    const PowerSeries s = random_integer_series(seed, 10);
    const PowerSeries back = differentiate(antiderivative(s));
    REQUIRE(back.order() == s.order());
    for (int n = 0; n <= 10; ++n)
      CHECK(std::abs(back.coeff(n) - s.coeff(n)) <=
            2e-16 * std::max(1.0, std::abs(s.coeff(n))));
  }
}

TEST_CASE("evaluate: Horner matches direct summation") {
  const PowerSeries s = random_integer_series(77, 12);
  const cplx z(0.3, -0.2);
  cplx direct(0.0, 0.0);
  cplx zn(1.0, 0.0);
  for (int n = 0; n <= 12; ++n) {
    direct += s.coeff(n) * zn;
    zn *= z;
  }
  CHECK(std::abs(bohr::evaluate(s, z) - direct) <= 1e-13);
}
