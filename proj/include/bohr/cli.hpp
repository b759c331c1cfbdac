#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bohr/radius_equation.hpp"

namespace bohr::cli {

enum class Command { Solve, Table, Verify, Sweep };
enum class Format { Text, Csv, Json };

/// Inclusive parameter grid "start:stop:step".
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  std::vector<double> values() const;
};

enum class ParamField { K, M, T, Lambda, P, Alpha };
const char* field_name(ParamField f);

struct SweepAxis {
  ParamField field{};
  SweepRange range;
};

struct RunConfig {
  Command command = Command::Solve;
  std::optional<Family> family;
  std::string table_id = "all";  // "1".."7" or "all"
  Params params;
  std::optional<SweepAxis> axis;
  double tol = 1e-12;
  double eps = 1e-4;
  int samples = 200;
  int radii = 20;
  std::vector<std::uint64_t> seeds = {42};
  Format format = Format::Text;
  std::string output_path;
};

/// Executes the configured command, writing the report to `out` (or the
/// configured output path). Returns the process exit status:
/// 0 success, 2 configuration error, 3 no root, 4 numerical error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Family selector vocabulary. Theorem tokens are the compact ids
/// T2_1..T4_3; family tokens are the role names (convex-comb, ...,
/// univalent). Returns nullopt for unknown tokens.
std::optional<Family> family_from_token(const std::string& token);
/// Compact theorem token for a family; empty for univalent.
std::string theorem_token(Family f);

/// "start:stop:step" -> range; nullopt when the text has no ':'.
/// Throws std::domain_error for malformed or empty ranges.
std::optional<SweepRange> parse_range(const std::string& text);

std::string fmt17(double v);

}  // namespace bohr::cli
