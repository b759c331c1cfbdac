#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bohr/tables.hpp"

using bohr::tables::reproduce_table;
using bohr::tables::RowStatus;
using bohr::tables::TableRow;

TEST_CASE("tables 2-7 match the printed radii at four decimals") {
  for (int id = 2; id <= 7; ++id) {
    const auto rows = reproduce_table(id);
    REQUIRE(rows.size() == 5);
    for (const TableRow& r : rows) {
      INFO("table ", id, " K=", r.params.K, " m=", r.params.m);
      CHECK(r.params_valid);
      CHECK(r.status == RowStatus::Match);
      CHECK(r.abs_diff <= 5e-5);
      CHECK(r.residual < 5e-4);
    }
  }
}

TEST_CASE("spot values: weighted convex and weighted angle rows") {
  const auto t2 = reproduce_table(2);
  CHECK(t2[1].computed == doctest::Approx(1.0 / 3.0).epsilon(1e-10));  // K=3 m=2 lambda=0.5
  CHECK(t2[3].computed == doctest::Approx(0.2).epsilon(1e-10));        // K=m=lambda=1
  const auto t7 = reproduce_table(7);
  CHECK(t7[0].computed == doctest::Approx(0.1187).epsilon(5e-4));
}

TEST_CASE("table 1 duality: rows solve the weighted variant, not the printed one") {
  const auto rows = reproduce_table(1);
  REQUIRE(rows.size() == 5);
  for (const TableRow& r : rows) {
    CHECK(r.status == RowStatus::ErratumSuspected);
    CHECK(std::isfinite(r.alt_residual));
    CHECK(r.alt_residual < 5e-4);
    CHECK_FALSE(r.note.empty());
  }
  // the two rows the combination equation visibly rejects
  CHECK(rows[0].residual > 1e-2);  // K=1 m=1 t=0.2
  CHECK(rows[3].residual > 1e-2);  // K=1 m=1 t=1
  // out-of-range t = 2 row is flagged, with the lambda interpretation attached
  CHECK_FALSE(rows[4].params_valid);
  CHECK(std::isnan(rows[4].computed));
  CHECK(std::abs(rows[4].alt_computed - 0.1150) <= 5e-5);
}

TEST_CASE("table 1 computed roots come from the printed equation") {
  const auto rows = reproduce_table(1);
  // K=1, m=1 collapses to root 1/3 regardless of t
  CHECK(rows[0].computed == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(rows[3].computed == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("match status obeys the half-ulp threshold") {
  for (int id : {2, 4, 6}) {
    for (const TableRow& r : reproduce_table(id)) {
      if (r.status == RowStatus::Match) CHECK(r.abs_diff <= 5e-5);
    }
  }
}

TEST_CASE("closed-form checks all pass") {
  const auto checks = bohr::tables::closed_form_checks();
  REQUIRE(checks.size() == 12);
  for (const auto& c : checks) {
    INFO(c.name, ": expected ", c.expected, " computed ", c.computed);
    CHECK(c.pass);
  }
}

TEST_CASE("summarize counts statuses") {
  const auto s1 = bohr::tables::summarize(reproduce_table(1));
  CHECK(s1.rows == 5);
  CHECK(s1.matches == 0);
  CHECK(s1.errata == 5);
  const auto s4 = bohr::tables::summarize(reproduce_table(4));
  CHECK(s4.matches == 5);
  CHECK(s4.errata == 0);
  CHECK(s4.mismatches == 0);
}

TEST_CASE("invalid table id is rejected") {
  CHECK_THROWS_AS(reproduce_table(0), std::invalid_argument);
  CHECK_THROWS_AS(reproduce_table(8), std::invalid_argument);
}
