#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bohr/cli.hpp"

namespace {

using bohr::cli::Format;
using bohr::cli::ParamField;
using bohr::cli::RunConfig;

struct ParamArgs {
  std::string K, m, t, lambda, p, alpha;
  std::string theorem, family;
  std::string format = "text";
  std::string out_path;
};

void add_param_options(CLI::App* cmd, ParamArgs& args, bool with_theorem = true) {
  if (with_theorem) {
    cmd->add_option("--theorem", args.theorem, "theorem selector (T2_1..T4_3 or role name)");
    cmd->add_option("--family", args.family,
                    "equation family (convex-comb, ..., univalent); alternative to --theorem");
  }
  cmd->add_option("--K", args.K, "quasiconformality K >= 1");
  cmd->add_option("--m", args.m, "power index m >= 1");
  cmd->add_option("--t", args.t, "combination weight t in [0,1]");
  cmd->add_option("--lambda", args.lambda, "weight lambda > 0");
  cmd->add_option("--p", args.p, "pole location p in (0,1)");
  cmd->add_option("--alpha", args.alpha, "opening-angle parameter alpha in [1,2]");
  cmd->add_option("--format", args.format, "text|csv|json");
  cmd->add_option("--out", args.out_path, "write the report to a file instead of stdout");
}

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw std::domain_error("format must be text, csv, or json");
}

// Fills cfg.params and, when ranges are allowed, cfg.axis. Returns 0 on
// success; throws std::domain_error on malformed values.
void apply_params(const ParamArgs& args, RunConfig& cfg, bool allow_range) {
  struct Entry {
    ParamField field;
    const std::string* text;
  };
  const Entry entries[] = {
      {ParamField::K, &args.K},         {ParamField::M, &args.m},
      {ParamField::T, &args.t},         {ParamField::Lambda, &args.lambda},
      {ParamField::P, &args.p},         {ParamField::Alpha, &args.alpha},
  };
  for (const Entry& e : entries) {
    if (e.text->empty()) continue;
    const auto range = bohr::cli::parse_range(*e.text);
    if (range) {
      if (!allow_range)
        throw std::domain_error(std::string("parameter --") + bohr::cli::field_name(e.field) +
                                " does not accept a range here");
      if (cfg.axis) throw std::domain_error("sweep accepts exactly one ranged parameter");
      cfg.axis = bohr::cli::SweepAxis{e.field, *range};
      continue;
    }
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(*e.text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != e.text->size())
      throw std::domain_error(std::string("malformed value for --") +
                              bohr::cli::field_name(e.field) + ": '" + *e.text + "'");
    if (e.field == ParamField::M && v != std::floor(v))
      throw std::domain_error("m must be an integer");
    switch (e.field) {
      case ParamField::K: cfg.params.K = v; break;
      case ParamField::M: cfg.params.m = static_cast<int>(v); break;
      case ParamField::T: cfg.params.t = v; break;
      case ParamField::Lambda: cfg.params.lambda = v; break;
      case ParamField::P: cfg.params.p = v; break;
      case ParamField::Alpha: cfg.params.alpha = v; break;
    }
  }
}

void apply_selector(const ParamArgs& args, RunConfig& cfg) {
  if (!args.theorem.empty() && !args.family.empty())
    throw std::domain_error("give either --theorem or --family, not both");
  const std::string& token = args.theorem.empty() ? args.family : args.theorem;
  if (token.empty()) return;
  const auto fam = bohr::cli::family_from_token(token);
  if (!fam) throw std::domain_error("unknown selector: '" + token + "'");
  cfg.family = *fam;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified Bohr-type radii for quasiconformal harmonic mappings"};
  app.require_subcommand(1);

  double default_tol = 1e-12;
  if (const char* env = std::getenv("BOHR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      std::cerr << "config error: BOHR_TOL must be a positive number\n";
      return 2;
    }
    default_tol = v;
  }

  ParamArgs solve_args, verify_args, sweep_args, table_args;
  double solve_tol = default_tol, verify_tol = default_tol, sweep_tol = default_tol;
  double eps = 1e-4;
  int samples = 200, radii = 20;
  std::vector<std::uint64_t> seeds = {42};
  std::string table_id = "all";

  CLI::App* solve = app.add_subcommand("solve", "solve one radius equation");
  add_param_options(solve, solve_args);
  solve->add_option("--tol", solve_tol, "enclosure width");

  CLI::App* table = app.add_subcommand("table", "reproduce the fixture tables");
  table->add_option("--id", table_id, "table id 1..7, or 'all'");
  table->add_option("--format", table_args.format, "text|csv|json");
  table->add_option("--out", table_args.out_path, "write the report to a file");

  CLI::App* verify = app.add_subcommand("verify", "sharpness + seeded subordination checks");
  add_param_options(verify, verify_args);
  verify->add_option("--tol", verify_tol, "enclosure width");
  verify->add_option("--eps", eps, "sharpness probe offset");
  verify->add_option("--samples", samples, "subordinate samples per seed");
  verify->add_option("--radii", radii, "radii per sample");
  verify->add_option("--seeds", seeds, "base seeds")->delimiter(',');

  CLI::App* sweep = app.add_subcommand("sweep", "solve over a parameter grid (start:stop:step)");
  add_param_options(sweep, sweep_args);
  sweep->add_option("--tol", sweep_tol, "enclosure width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig cfg;
  try {
    if (solve->parsed()) {
      cfg.command = bohr::cli::Command::Solve;
      cfg.tol = solve_tol;
      cfg.format = parse_format(solve_args.format);
      cfg.output_path = solve_args.out_path;
      apply_selector(solve_args, cfg);
      apply_params(solve_args, cfg, false);
    } else if (table->parsed()) {
      cfg.command = bohr::cli::Command::Table;
      cfg.table_id = table_id;
      cfg.format = parse_format(table_args.format);
      cfg.output_path = table_args.out_path;
    } else if (verify->parsed()) {
      cfg.command = bohr::cli::Command::Verify;
      cfg.tol = verify_tol;
      cfg.eps = eps;
      cfg.samples = samples;
      cfg.radii = radii;
      cfg.seeds = seeds;
      cfg.format = parse_format(verify_args.format);
      cfg.output_path = verify_args.out_path;
      apply_selector(verify_args, cfg);
      apply_params(verify_args, cfg, false);
    } else if (sweep->parsed()) {
      cfg.command = bohr::cli::Command::Sweep;
      cfg.tol = sweep_tol;
      cfg.format = sweep_args.format == "text" ? Format::Csv : parse_format(sweep_args.format);
      cfg.output_path = sweep_args.out_path;
      apply_selector(sweep_args, cfg);
      apply_params(sweep_args, cfg, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  return bohr::cli::run(cfg, std::cout, std::cerr);
}
