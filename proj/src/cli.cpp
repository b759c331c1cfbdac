#include "bohr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bohr/tables.hpp"
#include "bohr/theorems.hpp"

namespace bohr::cli {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* field_name(ParamField f) {
  switch (f) {
    case ParamField::K: return "K";
    case ParamField::M: return "m";
    case ParamField::T: return "t";
    case ParamField::Lambda: return "lambda";
    case ParamField::P: return "p";
    case ParamField::Alpha: return "alpha";
  }
  return "?";
}

std::vector<double> SweepRange::values() const {
  std::vector<double> out;
  const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9));
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.push_back(start + i * step);
  return out;
}

std::optional<SweepRange> parse_range(const std::string& text) {
  if (text.find(':') == std::string::npos) return std::nullopt;
  SweepRange r;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.start, &r.stop, &r.step, &extra) != 3)
    throw std::domain_error("malformed range '" + text + "' (expected start:stop:step)");
  if (!(r.step > 0.0)) throw std::domain_error("range step must be > 0");
  if (!(r.stop >= r.start)) throw std::domain_error("range stop must be >= start");
  return r;
}

std::optional<Family> family_from_token(const std::string& token) {
  static const std::map<std::string, Family> tokens = {
      {"T2_1", Family::ConvexCombination}, {"T2_2", Family::ConvexWeighted},
      {"T2_3", Family::ConvexDerivative},  {"T3_1", Family::PoleCombination},
      {"T3_2", Family::PoleWeighted},      {"T4_1", Family::AngleCombination},
      {"T4_2", Family::AngleWeighted},     {"T4_3", Family::AngleDerivative},
      {"convex-comb", Family::ConvexCombination},
      {"convex-weighted", Family::ConvexWeighted},
      {"convex-deriv", Family::ConvexDerivative},
      {"pole-comb", Family::PoleCombination},
      {"pole-weighted", Family::PoleWeighted},
      {"angle-comb", Family::AngleCombination},
      {"angle-weighted", Family::AngleWeighted},
      {"angle-deriv", Family::AngleDerivative},
      {"univalent", Family::Univalent},
      {"RU", Family::Univalent},
  };
  const auto it = tokens.find(token);
  if (it == tokens.end()) return std::nullopt;
  return it->second;
}

std::string theorem_token(Family f) {
  switch (f) {
    case Family::ConvexCombination: return "T2_1";
    case Family::ConvexWeighted: return "T2_2";
    case Family::ConvexDerivative: return "T2_3";
    case Family::PoleCombination: return "T3_1";
    case Family::PoleWeighted: return "T3_2";
    case Family::AngleCombination: return "T4_1";
    case Family::AngleWeighted: return "T4_2";
    case Family::AngleDerivative: return "T4_3";
    case Family::Univalent: return "";
  }
  return "";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string param_text(Family fam, const Params& prm) {
  const FieldUse u = family_fields(fam);
  std::ostringstream os;
  os << "K=" << fmt17(prm.K);
  if (u.m) os << " m=" << prm.m;
  if (u.t) os << " t=" << fmt17(prm.t);
  if (u.lambda) os << " lambda=" << fmt17(prm.lambda);
  if (u.p) os << " p=" << fmt17(prm.p);
  if (u.alpha) os << " alpha=" << fmt17(prm.alpha);
  return os.str();
}

ordered_json params_json(Family fam, const Params& prm) {
  ordered_json j;
  j["family"] = family_name(fam);
  const std::string token = theorem_token(fam);
  if (!token.empty()) j["theorem"] = token;
  j["K"] = prm.K;
  j["m"] = prm.m;
  const FieldUse u = family_fields(fam);
  if (u.t) j["t"] = prm.t;
  if (u.lambda) j["lambda"] = prm.lambda;
  if (u.p) j["p"] = prm.p;
  if (u.alpha) j["alpha"] = prm.alpha;
  return j;
}

std::string csv_param_block(const Params& prm) {
  std::ostringstream os;
  os << fmt17(prm.K) << ',' << prm.m << ',' << fmt17(prm.t) << ',' << fmt17(prm.lambda) << ','
     << fmt17(prm.p) << ',' << fmt17(prm.alpha);
  return os.str();
}

constexpr const char* kCsvParamHeader = "K,m,t,lambda,p,alpha";

struct SolveRow {
  Params params;
  RootEnclosure root;
  double capped = 0.0;
  double residual = 0.0;
};

SolveRow solve_one(Family fam, const Params& prm, double tol) {
  SolveRow row;
  row.params = prm;
  const EquationFamily eq(fam, prm);
  row.root = solve(eq, tol);
  row.capped = std::min(row.root.midpoint(), 1.0 / 3.0);
  row.residual = std::abs(eq.evaluate(row.root.midpoint()));
  return row;
}

ordered_json solve_row_json(Family fam, const SolveRow& row) {
  ordered_json j;
  j["params"] = params_json(fam, row.params);
  j["root_lo"] = row.root.lo;
  j["root_hi"] = row.root.hi;
  j["root"] = row.root.midpoint();
  j["capped"] = row.capped;
  j["residual"] = row.residual;
  j["evaluations"] = row.root.evaluations;
  return j;
}

void emit_solve_csv(std::ostream& os, Family fam, const std::vector<SolveRow>& rows,
                    const std::string& lead_header, ParamField axis_field, bool with_axis) {
  if (with_axis)
    os << lead_header << ",root,root_lo,root_hi,capped,residual,evaluations\n";
  else
    os << "family," << kCsvParamHeader << ",root_lo,root_hi,root,capped,residual,evaluations\n";
  for (const SolveRow& row : rows) {
    if (with_axis) {
      double v = 0.0;
      switch (axis_field) {
        case ParamField::K: v = row.params.K; break;
        case ParamField::M: v = row.params.m; break;
        case ParamField::T: v = row.params.t; break;
        case ParamField::Lambda: v = row.params.lambda; break;
        case ParamField::P: v = row.params.p; break;
        case ParamField::Alpha: v = row.params.alpha; break;
      }
      os << fmt17(v) << ',' << fmt17(row.root.midpoint()) << ',' << fmt17(row.root.lo) << ','
         << fmt17(row.root.hi) << ',' << fmt17(row.capped) << ',' << fmt17(row.residual) << ','
         << row.root.evaluations << '\n';
    } else {
      os << family_name(fam) << ',' << csv_param_block(row.params) << ',' << fmt17(row.root.lo)
         << ',' << fmt17(row.root.hi) << ',' << fmt17(row.root.midpoint()) << ','
         << fmt17(row.capped) << ',' << fmt17(row.residual) << ',' << row.root.evaluations
         << '\n';
    }
  }
}

void emit_solve(std::ostream& os, const RunConfig& cfg, Family fam, const SolveRow& row) {
  switch (cfg.format) {
    case Format::Text: {
      os << "solve family=" << family_name(fam);
      const std::string token = theorem_token(fam);
      if (!token.empty()) os << " (" << token << ")";
      os << "\nparams: " << param_text(fam, row.params) << "\n"
         << "tol: " << fmt17(cfg.tol) << "\n"
         << "root enclosure: [" << fmt17(row.root.lo) << ", " << fmt17(row.root.hi) << "]"
         << " width " << fmt17(row.root.width()) << "\n"
         << "root: " << fmt17(row.root.midpoint()) << "\n"
         << "capped (min with 1/3): " << fmt17(row.capped) << "\n"
         << "residual |f(root)|: " << fmt17(row.residual) << "\n"
         << "evaluations: " << row.root.evaluations << "\n";
      break;
    }
    case Format::Csv:
      emit_solve_csv(os, fam, {row}, "", ParamField::K, false);
      break;
    case Format::Json: {
      ordered_json j;
      j["command"] = "solve";
      j["params"] = params_json(fam, row.params);
      j["params"]["tol"] = cfg.tol;
      j["results"] = ordered_json::array({solve_row_json(fam, row)});
      j["version"] = "1";
      os << j.dump(2) << "\n";
      break;
    }
  }
}

ordered_json table_row_json(const tables::TableRow& r) {
  ordered_json j;
  j["table_id"] = r.table_id;
  j["params"] = params_json(r.family, r.params);
  j["params_valid"] = r.params_valid;
  j["printed"] = r.printed;
  j["printed_value"] = r.printed_value;
  j["computed"] = r.computed;
  j["abs_diff"] = r.abs_diff;
  j["residual"] = r.residual;
  j["alt_computed"] = r.alt_computed;
  j["alt_residual"] = r.alt_residual;
  j["status"] = tables::status_name(r.status);
  j["note"] = r.note;
  return j;
}

void emit_table_text(std::ostream& os, const std::vector<tables::TableRow>& rows) {
  const tables::TableSummary s = tables::summarize(rows);
  os << "table " << s.table_id << " [" << (rows.empty() ? "?" : family_name(rows.front().family))
     << "]: " << s.matches << "/" << s.rows << " rows match";
  if (s.errata > 0) os << ", " << s.errata << " erratum-suspected";
  if (s.mismatches > 0) os << ", " << s.mismatches << " mismatched";
  os << "\n";
  if (s.table_id == 1)
    os << "  note: the printed radii solve the weighted convex equation with lambda = t;"
       << " the printed combination equation is not satisfied by them.\n";
  for (const tables::TableRow& r : rows) {
    os << "  " << param_text(r.family, r.params) << " | printed " << r.printed;
    if (r.params_valid)
      os << " | computed " << fmt17(r.computed) << " | diff " << fmt17(r.abs_diff);
    else
      os << " | parameters out of range";
    if (std::isfinite(r.alt_computed))
      os << " | lambda-variant root " << fmt17(r.alt_computed) << " (residual "
         << fmt17(r.alt_residual) << ")";
    os << " | " << tables::status_name(r.status) << "\n";
  }
}

void emit_table_csv(std::ostream& os, const std::vector<tables::TableRow>& rows) {
  os << "table_id,family," << kCsvParamHeader
     << ",params_valid,printed,printed_value,computed,abs_diff,residual,"
        "alt_computed,alt_residual,status,note\n";
  for (const tables::TableRow& r : rows) {
    os << r.table_id << ',' << family_name(r.family) << ',' << csv_param_block(r.params) << ','
       << (r.params_valid ? 1 : 0) << ',' << csv_escape(r.printed) << ',' << fmt17(r.printed_value)
       << ',' << fmt17(r.computed) << ',' << fmt17(r.abs_diff) << ',' << fmt17(r.residual) << ','
       << fmt17(r.alt_computed) << ',' << fmt17(r.alt_residual) << ','
       << tables::status_name(r.status) << ',' << csv_escape(r.note) << '\n';
  }
}

void emit_closed_forms_text(std::ostream& os) {
  const auto checks = tables::closed_form_checks();
  int ok = 0;
  for (const auto& c : checks) ok += c.pass ? 1 : 0;
  os << "closed-form checks: " << ok << "/" << checks.size() << " pass\n";
  for (const auto& c : checks)
    os << "  " << (c.pass ? "pass" : "FAIL") << " | " << c.name << " | expected "
       << fmt17(c.expected) << " computed " << fmt17(c.computed) << " diff " << fmt17(c.abs_diff)
       << " (tol " << fmt17(c.tolerance) << ")\n";
}

int table_command(std::ostream& os, const RunConfig& cfg) {
  std::vector<int> ids;
  if (cfg.table_id == "all") {
    for (int i = 1; i <= 7; ++i) ids.push_back(i);
  } else {
    size_t pos = 0;
    int id = 0;
    try {
      id = std::stoi(cfg.table_id, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != cfg.table_id.size() || id < 1 || id > 7)
      throw std::domain_error("table id must be 1..7 or 'all'");
    ids.push_back(id);
  }

  switch (cfg.format) {
    case Format::Text:
      for (int id : ids) emit_table_text(os, tables::reproduce_table(id));
      if (cfg.table_id == "all") emit_closed_forms_text(os);
      break;
    case Format::Csv: {
      std::vector<tables::TableRow> all;
      for (int id : ids) {
        auto rows = tables::reproduce_table(id);
        all.insert(all.end(), rows.begin(), rows.end());
      }
      emit_table_csv(os, all);
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["command"] = "table";
      j["params"] = ordered_json{{"id", cfg.table_id}};
      ordered_json rows_json = ordered_json::array();
      ordered_json summaries = ordered_json::array();
      for (int id : ids) {
        auto rows = tables::reproduce_table(id);
        const auto s = tables::summarize(rows);
        summaries.push_back(ordered_json{{"table_id", s.table_id},
                                         {"rows", s.rows},
                                         {"matches", s.matches},
                                         {"mismatches", s.mismatches},
                                         {"erratum_suspected", s.errata}});
        for (const auto& r : rows) rows_json.push_back(table_row_json(r));
      }
      j["results"] = rows_json;
      j["summaries"] = summaries;
      if (cfg.table_id == "all") {
        ordered_json cf = ordered_json::array();
        for (const auto& c : tables::closed_form_checks())
          cf.push_back(ordered_json{{"name", c.name},
                                    {"expected", c.expected},
                                    {"computed", c.computed},
                                    {"abs_diff", c.abs_diff},
                                    {"tolerance", c.tolerance},
                                    {"pass", c.pass}});
        j["closed_form_checks"] = cf;
      }
      j["version"] = "1";
      os << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int verify_command(std::ostream& os, const RunConfig& cfg) {
  if (!cfg.family || *cfg.family == Family::Univalent)
    throw std::domain_error("verify requires one of the eight theorem selectors");
  const Theorem thm(*cfg.family, cfg.params);
  const EffectiveRadius er = effective_radius(thm, cfg.tol);
  const SharpnessResult sharp = check_sharpness(thm, cfg.eps, cfg.tol);

  std::vector<SubordinationReport> reports;
  reports.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds)
    reports.push_back(run_subordination_batch(thm, seed, cfg.samples, cfg.radii));

  bool clean = true;
  for (const auto& rep : reports)
    clean = clean && rep.violations == 0 && rep.majorant_comparison_failures == 0 &&
            rep.dilatation_comparison_failures == 0;
  const bool sharp_ok = !sharp.applicable || (sharp.below_ok && sharp.above_violates);

  switch (cfg.format) {
    case Format::Text: {
      os << "verify family=" << family_name(*cfg.family) << " (" << theorem_token(*cfg.family)
         << ")\nparams: " << param_text(*cfg.family, cfg.params) << "\n"
         << "root: " << fmt17(er.root.midpoint()) << "  capped: " << fmt17(er.capped) << "\n"
         << "sharpness (eps=" << fmt17(cfg.eps) << "): "
         << (sharp.applicable ? (sharp_ok ? "below_ok=yes above_violates=yes"
                                          : "sharpness probe FAILED")
                              : "not-applicable (root > 1/3)")
         << "\n";
      for (const auto& rep : reports)
        os << "subordination batch seed=" << rep.base_seed << ": samples=" << rep.samples
           << " radii=" << rep.radii << " violations=" << rep.violations
           << " majorant_failures=" << rep.majorant_comparison_failures
           << " dilatation_failures=" << rep.dilatation_comparison_failures << "\n";
      os << "result: " << ((clean && sharp_ok) ? "PASS" : "FAIL") << "\n";
      break;
    }
    case Format::Csv: {
      os << "family," << kCsvParamHeader
         << ",root,capped,applicable,below_ok,above_violates,seed,samples,radii,violations,"
            "majorant_failures,dilatation_failures\n";
      for (const auto& rep : reports)
        os << family_name(*cfg.family) << ',' << csv_param_block(cfg.params) << ','
           << fmt17(er.root.midpoint()) << ',' << fmt17(er.capped) << ','
           << (sharp.applicable ? 1 : 0) << ',' << (sharp.below_ok ? 1 : 0) << ','
           << (sharp.above_violates ? 1 : 0) << ',' << rep.base_seed << ',' << rep.samples << ','
           << rep.radii << ',' << rep.violations << ',' << rep.majorant_comparison_failures << ','
           << rep.dilatation_comparison_failures << '\n';
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["command"] = "verify";
      j["params"] = params_json(*cfg.family, cfg.params);
      j["params"]["tol"] = cfg.tol;
      j["params"]["eps"] = cfg.eps;
      ordered_json results = ordered_json::array();
      ordered_json base;
      base["params"] = params_json(*cfg.family, cfg.params);
      base["root_lo"] = er.root.lo;
      base["root_hi"] = er.root.hi;
      base["capped"] = er.capped;
      base["residual"] = std::abs(thm.equation().evaluate(er.root.midpoint()));
      base["sharpness"] = ordered_json{{"applicable", sharp.applicable},
                                       {"below_ok", sharp.below_ok},
                                       {"above_violates", sharp.above_violates}};
      ordered_json batches = ordered_json::array();
      for (const auto& rep : reports)
        batches.push_back(ordered_json{{"seed", rep.base_seed},
                                       {"samples", rep.samples},
                                       {"radii", rep.radii},
                                       {"violations", rep.violations},
                                       {"majorant_failures", rep.majorant_comparison_failures},
                                       {"dilatation_failures", rep.dilatation_comparison_failures}});
      base["batches"] = batches;
      results.push_back(base);
      j["results"] = results;
      j["version"] = "1";
      os << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

int sweep_command(std::ostream& os, const RunConfig& cfg) {
  if (!cfg.family) throw std::domain_error("sweep requires a family or theorem selector");
  if (!cfg.axis) throw std::domain_error("sweep requires exactly one ranged parameter");
  const Family fam = *cfg.family;
  const SweepAxis& axis = *cfg.axis;

  std::vector<SolveRow> rows;
  for (double v : axis.range.values()) {
    Params prm = cfg.params;
    switch (axis.field) {
      case ParamField::K: prm.K = v; break;
      case ParamField::M: prm.m = static_cast<int>(std::lround(v)); break;
      case ParamField::T: prm.t = v; break;
      case ParamField::Lambda: prm.lambda = v; break;
      case ParamField::P: prm.p = v; break;
      case ParamField::Alpha: prm.alpha = v; break;
    }
    rows.push_back(solve_one(fam, prm, cfg.tol));
  }

  switch (cfg.format) {
    case Format::Text:
    case Format::Csv:
      emit_solve_csv(os, fam, rows, field_name(axis.field), axis.field, true);
      break;
    case Format::Json: {
      ordered_json j;
      j["command"] = "sweep";
      j["params"] = params_json(fam, cfg.params);
      j["params"]["axis"] = field_name(axis.field);
      j["params"]["start"] = axis.range.start;
      j["params"]["stop"] = axis.range.stop;
      j["params"]["step"] = axis.range.step;
      j["params"]["tol"] = cfg.tol;
      ordered_json results = ordered_json::array();
      for (const SolveRow& row : rows) results.push_back(solve_row_json(fam, row));
      j["results"] = results;
      j["version"] = "1";
      os << j.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!(cfg.tol > 0.0)) throw std::domain_error("tol must be > 0");
    std::ostringstream buf;
    switch (cfg.command) {
      case Command::Solve: {
        if (!cfg.family) throw std::domain_error("solve requires a family or theorem selector");
        emit_solve(buf, cfg, *cfg.family, solve_one(*cfg.family, cfg.params, cfg.tol));
        break;
      }
      case Command::Table:
        table_command(buf, cfg);
        break;
      case Command::Verify:
        verify_command(buf, cfg);
        break;
      case Command::Sweep:
        sweep_command(buf, cfg);
        break;
    }
    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path);
      if (!file) throw std::domain_error("cannot open output path: " + cfg.output_path);
      file << buf.str();
    } else {
      out << buf.str();
    }
    return 0;
  } catch (const NoRootError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bohr::cli
