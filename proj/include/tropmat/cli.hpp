#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tropmat {

enum class InputKind { None, Graph, Bases, Uniform };
enum class OutputFormat { Auto, Json, Text, Dot };
enum class CoarseMode { Formula, Brute, CrossValidate };

struct RunConfig {
  std::string command;
  InputKind input_kind = InputKind::None;
  std::string input_path;
  /// Rank and dimension for uniform input, and for hypersimplex commands.
  std::optional<int> k;
  std::optional<int> d;
  OutputFormat format = OutputFormat::Auto;
  std::uint64_t cap = 10'000'000;
  bool fvector = false;
  bool with_empty_face = false;
  bool zero_based_vars = false;
  CoarseMode coarse_mode = CoarseMode::Formula;
  /// Halfspace system for check-minimal and verify-exterior.
  std::string halfspaces_path;
  std::size_t probe_budget = 100000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitMismatch = 2;

const std::vector<std::string>& command_names();

/// Throws Error(MalformedInput) on an inconsistent configuration.
void validate_config(const RunConfig& config);

/// Runs one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropmat
