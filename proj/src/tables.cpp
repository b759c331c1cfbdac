#include "bohr/tables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohr::tables {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMatchTol = 5e-5;     // half-ulp of 4-decimal printing
constexpr double kResidualTol = 5e-4;  // printed root substituted into its equation

struct FixtureRow {
  double K;
  int m;
  double x3;  // t or lambda or p, by table
  double x4;  // t/lambda/alpha for the 4-parameter tables
  const char* printed;
  double value;
};

struct Fixture {
  int id;
  Family family;
  int n_params;  // 3 or 4
  // parameter meaning per table: 1 (K,m,t) 2 (K,m,L) 3 (K,m,L)
  // 4 (K,m,p,t) 5 (K,m,p,L) 6 (K,m,t,A) 7 (K,m,A,L)
  std::vector<FixtureRow> rows;
};

const Fixture& fixture(int id) {
  static const std::vector<Fixture> all = {
      {1,
       Family::ConvexCombination,
       3,
       {{1, 1, 0.2, 0, "0.2941", 0.2941},
        {3, 2, 0.5, 0, "1/3", 1.0 / 3.0},
        {9, 5, 0.8, 0, "0.2573", 0.2573},
        {1, 1, 1.0, 0, "0.2", 0.2},
        {25, 15, 2.0, 0, "0.1150", 0.1150}}},
      {2,
       Family::ConvexWeighted,
       3,
       {{1, 1, 0.2, 0, "0.2941", 0.2941},
        {3, 2, 0.5, 0, "1/3", 1.0 / 3.0},
        {9, 5, 0.8, 0, "0.2573", 0.2573},
        {1, 1, 1.0, 0, "0.2", 0.2},
        {25, 15, 2.0, 0, "0.1150", 0.1150}}},
      {3,
       Family::ConvexDerivative,
       3,
       {{6, 3, 0.2, 0, "0.3321", 0.3321},
        {9, 5, 0.5, 0, "0.2832", 0.2832},
        {25, 15, 1.0, 0, "0.2063", 0.2063},
        {20, 5, 2.0, 0, "0.1447", 0.1447},
        {15, 10, 5.0, 0, "0.0807", 0.0807}}},
      {4,
       Family::PoleCombination,
       4,
       {{5, 3, 0.9, 0.2, "0.1383", 0.1383},
        {25, 15, 0.7, 0.6, "0.1957", 0.1957},
        {50, 30, 0.8, 0.7, "0.2384", 0.2384},
        {35, 20, 0.9, 0.77, "0.2840", 0.2840},
        {40, 25, 0.9, 0.83, "0.3323", 0.3323}}},
      {5,
       Family::PoleWeighted,
       4,
       {{25, 20, 0.7, 1.0, "0.1003", 0.1003},
        {25, 15, 0.5, 0.5, "0.1498", 0.1498},
        {45, 25, 0.8, 0.35, "0.2171", 0.2171},
        {35, 20, 0.6, 0.2, "0.2738", 0.2738},
        {2.6, 5, 0.7, 0.2, "0.3323", 0.3323}}},
      {6,
       Family::AngleCombination,
       4,
       {{50, 7, 0.2, 2.0, "0.1227", 0.1227},
        {30, 10, 0.3, 1.5, "0.1822", 0.1822},
        {7, 15, 0.5, 1.6, "0.2338", 0.2338},
        {45, 9, 0.5, 1.2, "0.2853", 0.2853},
        {1, 1, 1.0, 1.0, "1/3", 1.0 / 3.0}}},
      {7,
       Family::AngleWeighted,
       4,
       {{5, 10, 1.1, 2.0, "0.1187", 0.1187},
        {40, 20, 2.0, 0.5, "0.1746", 0.1746},
        {30, 15, 1.2, 0.7, "0.2263", 0.2263},
        {20, 12, 1.5, 0.4, "0.2724", 0.2724},
        {25, 13, 1.5, 0.3, "0.3232", 0.3232}}},
  };
  if (id < 1 || id > 7) throw std::invalid_argument("reproduce_table: table id must lie in 1..7");
  return all[static_cast<size_t>(id - 1)];
}

Params row_params(const Fixture& fix, const FixtureRow& row) {
  Params prm;
  prm.K = row.K;
  prm.m = row.m;
  switch (fix.id) {
    case 1: prm.t = row.x3; break;
    case 2:
    case 3: prm.lambda = row.x3; break;
    case 4: prm.p = row.x3; prm.t = row.x4; break;
    case 5: prm.p = row.x3; prm.lambda = row.x4; break;
    case 6: prm.t = row.x3; prm.alpha = row.x4; break;
    case 7: prm.alpha = row.x3; prm.lambda = row.x4; break;
    default: break;
  }
  return prm;
}

bool row_params_valid(Family fam, const Params& prm) {
  try {
    validate(fam, prm);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

double safe_residual(const EquationFamily& eq, double r) {
  try {
    return std::abs(eq.evaluate(r));
  } catch (const std::domain_error&) {
    return kNaN;
  }
}

}  // namespace

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::ErratumSuspected: return "erratum-suspected";
  }
  return "?";
}

std::vector<TableRow> reproduce_table(int table_id) {
  const Fixture& fix = fixture(table_id);
  std::vector<TableRow> out;
  out.reserve(fix.rows.size());

  for (const FixtureRow& row : fix.rows) {
    TableRow tr;
    tr.table_id = fix.id;
    tr.family = fix.family;
    tr.params = row_params(fix, row);
    tr.printed = row.printed;
    tr.printed_value = row.value;
    tr.params_valid = row_params_valid(fix.family, tr.params);
    tr.computed = kNaN;
    tr.abs_diff = kNaN;
    tr.residual = kNaN;
    tr.alt_computed = kNaN;
    tr.alt_residual = kNaN;

    if (tr.params_valid) {
      const EquationFamily eq(fix.family, tr.params);
      tr.computed = solve(eq).midpoint();
      tr.abs_diff = std::abs(tr.computed - tr.printed_value);
      tr.residual = safe_residual(eq, tr.printed_value);
    }

    if (fix.id == 1) {
      // The printed column solves the weighted variant with lambda = t.
      Params alt = tr.params;
      alt.lambda = alt.t;
      alt.t = 0.0;
      if (row_params_valid(Family::ConvexWeighted, alt)) {
        const EquationFamily alt_eq(Family::ConvexWeighted, alt);
        tr.alt_computed = solve(alt_eq).midpoint();
        tr.alt_residual = safe_residual(alt_eq, tr.printed_value);
      }
    }

    if (tr.params_valid && tr.abs_diff <= kMatchTol) {
      tr.status = RowStatus::Match;
    } else if (!tr.params_valid || (std::isfinite(tr.alt_residual) && tr.alt_residual < kResidualTol)) {
      tr.status = RowStatus::ErratumSuspected;
      if (!tr.params_valid)
        tr.note = "t outside [0, 1]; printed value solves the weighted variant with lambda = t";
      else
        tr.note = "printed value solves the weighted variant with lambda = t, not this equation";
    } else {
      tr.status = RowStatus::Mismatch;
    }
    out.push_back(std::move(tr));
  }
  return out;
}

TableSummary summarize(const std::vector<TableRow>& rows) {
  TableSummary s;
  if (!rows.empty()) s.table_id = rows.front().table_id;
  s.rows = static_cast<int>(rows.size());
  for (const TableRow& r : rows) {
    switch (r.status) {
      case RowStatus::Match: ++s.matches; break;
      case RowStatus::Mismatch: ++s.mismatches; break;
      case RowStatus::ErratumSuspected: ++s.errata; break;
    }
  }
  return s;
}

namespace {

ClosedFormCheck make_check(std::string name, double expected, double computed, double tol) {
  ClosedFormCheck c;
  c.name = std::move(name);
  c.expected = expected;
  c.computed = computed;
  c.abs_diff = std::abs(expected - computed);
  c.tolerance = tol;
  c.pass = c.abs_diff <= tol;
  return c;
}

}  // namespace

std::vector<ClosedFormCheck> closed_form_checks() {
  std::vector<ClosedFormCheck> out;

  for (double K : {1.0, 2.0, 5.0, 25.0, 100.0}) {
    Params prm;
    prm.K = K;
    prm.m = 1;
    prm.t = 0.0;
    const double root = solve(EquationFamily(Family::ConvexCombination, prm)).midpoint();
    out.push_back(make_check("convex-comb t=0, K=" + std::to_string(static_cast<int>(K)) +
                                 ": (K+1)/(5K+1)",
                             (K + 1.0) / (5.0 * K + 1.0), root, 1e-10));
  }

  for (double p : {0.3, 0.5, 0.7, 0.9}) {
    Params prm;
    prm.K = 1.0;
    prm.m = 1;
    prm.t = 0.0;
    prm.p = p;
    const double root = solve(EquationFamily(Family::PoleCombination, prm)).midpoint();
    const double expected =
        (1.0 + 1.0 / p + p) - (std::sqrt(p) + 1.0 / std::sqrt(p)) * std::sqrt(p + 1.0 / p);
    out.push_back(make_check("pole-comb K=1 t=0, p=" + std::to_string(p).substr(0, 3) +
                                 ": quadratic closed form",
                             expected, root, 1e-10));
  }

  {
    Params prm;
    prm.K = 1.0;
    prm.m = 1;
    prm.lambda = 1.0;
    prm.p = 1.0 - 1e-9;
    const double root = solve(EquationFamily(Family::PoleWeighted, prm)).midpoint();
    out.push_back(make_check("pole-weighted K=lambda=m=1, p->1: 5-2*sqrt(6)",
                             5.0 - 2.0 * std::sqrt(6.0), root, 1e-5));
  }

  {
    Params prm;
    prm.K = 1.0;
    prm.m = 1;
    prm.lambda = 1.0;
    const double root = solve(EquationFamily(Family::ConvexWeighted, prm)).midpoint();
    out.push_back(make_check("convex-weighted K=m=lambda=1: 1/5", 0.2, root, 1e-12));
  }

  {
    Params prm;
    prm.K = 1.0;
    prm.m = 200;
    prm.lambda = 1.0;
    const double root = solve(EquationFamily(Family::ConvexWeighted, prm)).midpoint();
    out.push_back(make_check("convex-weighted K=lambda=1, m=200: limit 1/3", 1.0 / 3.0, root, 1e-5));
  }

  return out;
}

}  // namespace bohr::tables
