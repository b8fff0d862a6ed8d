#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace branchtool::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,  // malformed graph file or bad arguments
  kExitBudget = 2,
  kExitNumeric = 3,
};

enum class Format { kText, kJson, kCsv };

struct Request {
  std::string command;
  std::string graph_path;
  std::vector<std::string> nodes;  // empty means all
  std::size_t max_length = 240;
  std::size_t depth = 6;
  Format format = Format::kText;
  bool sort_labels = false;
  double tolerance = 1e-12;
  std::uint64_t seed = 0x5eed;
  std::uint64_t budget = 10'000'000;
};

/// Parses argv-style arguments (without the program name) and runs the
/// command. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed request; throws the library's error types.
void execute(const Request& request, std::ostream& out);

/// Budget from BRANCHTOOL_BUDGET, if set. Throws std::invalid_argument when
/// the value is not a positive integer.
std::optional<std::uint64_t> budget_from_environment();

const char* version() noexcept;

}  // namespace branchtool::cli
