#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bcint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConflicts = 3;

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string domain_path;
  std::vector<std::string> component_paths;
  std::optional<std::string> report_path;
  std::optional<std::string> merged_path;
  std::optional<std::string> result_path;
  bool fail_on_conflict = false;
  int verbosity = 0;
  OutputFormat format = OutputFormat::kText;
};

struct SimilarityConfig {
  std::string domain_path;
  std::vector<std::string> component_paths;
  std::string left;   // "System:Name" or a name unique across the inputs
  std::string right;
  OutputFormat format = OutputFormat::kText;
};

struct ValidateConfig {
  std::optional<std::string> domain_path;
  std::vector<std::string> component_paths;
};

int run_integrate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_similarity(const SimilarityConfig& cfg, std::ostream& out, std::ostream& err);
int run_validate(const ValidateConfig& cfg, std::ostream& out, std::ostream& err);

// Parses `args` (without the program name) and dispatches to a subcommand.
// Always returns 0, 1 or 3.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcint::cli
