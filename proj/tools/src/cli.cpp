#include "branchtool/cli.hpp"
#include "branchtool/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace branchtool::cli {

const char* version() noexcept { return BRANCHTOOL_VERSION; }

std::optional<std::uint64_t> budget_from_environment() {
  const char* raw = std::getenv("BRANCHTOOL_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0 || text.front() == '-') {
    throw std::invalid_argument("BRANCHTOOL_BUDGET must be a positive integer, got '" + text + "'");
  }
  return value;
}

namespace {

void add_common(CLI::App& sub, Request& req, bool with_length, bool with_depth) {
  sub.add_option("--graph", req.graph_path, "Edge-list file")->required();
  sub.add_option("--node", req.nodes, "Node labels, comma separated, or 'all'")->delimiter(',');
  if (with_length) sub.add_option("--max-len", req.max_length, "Largest walk length L")->capture_default_str();
  if (with_depth) sub.add_option("--depth", req.depth, "Input-tree depth")->capture_default_str();
  sub.add_option("--format", req.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}}))
      ->capture_default_str();
  sub.add_flag("--sort-labels", req.sort_labels, "Index nodes by sorted label instead of first appearance");
  sub.add_option("--tol", req.tolerance, "Perron power-iteration tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub.add_option("--seed", req.seed, "Seed for root-finding restarts")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Walk counts, branching ratios and growth laws of directed multigraphs", "branchtool"};
  app.set_version_flag("--version", std::string("branchtool ") + version());
  app.require_subcommand(1);
  struct Spec {
    const char* name;
    const char* help;
    bool length;
    bool depth;
  };
  const Spec specs[] = {
      {"analyze", "Branching ratios, asymptotic fits and sandwich bounds per node", true, false},
      {"walks", "Exact walk counts a(0..L) per node", true, false},
      {"tree", "Input tree of each selected node", false, true},
      {"spectrum", "Per-SCC Perron data, eigenvalues and Cesaro residuals", false, false},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(*sub, req, s.length, s.depth);
    sub->callback([&req, name = std::string(s.name)] { req.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (req.nodes.size() == 1 && req.nodes.front() == "all") req.nodes.clear();

  try {
    if (auto budget = budget_from_environment()) req.budget = *budget;
    execute(req, out);
  } catch (const ParseError& e) {
    err << "branchtool: " << req.graph_path << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "branchtool: enumeration budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NonConvergence& e) {
    err << "branchtool: numerical method did not converge: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "branchtool: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "branchtool: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace branchtool::cli
