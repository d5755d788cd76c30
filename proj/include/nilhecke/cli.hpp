#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilhecke/algebra.hpp"

namespace nilhecke::cli {

enum class Command { Dim, Classes, Basis, Table, Verify, Conjecture };
enum class Format { Json, Csv, Text };
enum class Suite { Relations, Frobenius, Duality, Census, All };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Dim;
  int n = 3;
  AlgebraParams params = AlgebraParams::nilcoxeter();
  bool algebra_given = false;
  Format format = Format::Json;
  std::optional<std::string> output;
  Suite suite = Suite::All;
  bool modular_precheck = false;
};

/// Parses argv into a config. On failure (or --help) returns nullopt and sets
/// `exit_code`; usage text goes to `err` (to `out` for --help).
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on verification failure, 2 on usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, honoring --output.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilhecke::cli
