#pragma once

#include <string>
#include <vector>

#include "bohr/radius_equation.hpp"

namespace bohr::tables {

enum class RowStatus { Match, Mismatch, ErratumSuspected };

const char* status_name(RowStatus s);

/// One fixture row solved and compared against the printed radius.
/// Table 1 rows additionally carry the lambda-variant diagnosis: the printed
/// column satisfies the weighted equation with lambda = t, not the printed
/// combination equation, so alt_computed/alt_residual are filled and the
/// status is erratum-suspected.
struct TableRow {
  int table_id = 0;
  Family family{};
  Params params;
  bool params_valid = true;
  std::string printed;        // value column exactly as printed
  double printed_value = 0.0;   // numeric form of the printed value
  double computed = 0.0;      // root of the table's equation (NaN if params invalid)
  double abs_diff = 0.0;      // |computed - printed_value| (NaN if params invalid)
  double residual = 0.0;      // |equation(printed_value)| (NaN if out of range/domain)
  double alt_computed = 0.0;  // table 1 only: root of the lambda variant, lambda = t
  double alt_residual = 0.0;  // table 1 only: |lambda-variant(printed_value)|
  RowStatus status = RowStatus::Match;
  std::string note;
};

/// Solve every row of the given fixture table (1..7) and compare.
/// Anomalies are reported in the rows, never thrown.
std::vector<TableRow> reproduce_table(int table_id);

struct TableSummary {
  int table_id = 0;
  int rows = 0;
  int matches = 0;
  int mismatches = 0;
  int errata = 0;
};

TableSummary summarize(const std::vector<TableRow>& rows);

/// Closed-form cross-checks: the conformal-limit radius (K+1)/(5K+1), the
/// pole-family quadratic root at K=1, t=0, the p->1 weighted-pole limit
/// 5 - 2 sqrt(6), the weighted convex radius 1/5 at K=m=lambda=1, and the
/// m -> infinity collapse to 1/3.
struct ClosedFormCheck {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<ClosedFormCheck> closed_form_checks();

}  // namespace bohr::tables
