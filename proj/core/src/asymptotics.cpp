#include "branchtool/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace branchtool {

GraphAnalysis::GraphAnalysis(const MultiGraph& graph, AnalysisOptions options)
    : graph_(graph), options_(options), scc_(scc_decompose(graph_)) {
  const std::size_t count = scc_.size();
  blocks_.reserve(count);
  perron_.reserve(count);
  periods_.reserve(count);
  trivial_.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    const auto& members = scc_.components[c];
    blocks_.push_back(adjacency_matrix(induced_subgraph(graph_, members).graph));
    trivial_.push_back(is_trivial_component(graph_, members));
    perron_.push_back(perron(blocks_.back(), !trivial_.back(), options_.perron));
    periods_.push_back(scc_period(graph_, scc_, c));
  }
  series_ = walk_counts_all(graph_, options_.empirical_length);
}

UpstreamSet GraphAnalysis::upstream_of(NodeId node) const { return upstream(graph_, scc_, node); }

BranchingRatioReport GraphAnalysis::branching_ratio(NodeId node) const {
  graph_.check(node);
  BranchingRatioReport report;
  report.node = node;
  report.upstream_sccs = upstream_of(node).scc_chain;

  std::size_t leader = SccPeriod::kNoComponent;
  for (std::size_t c : report.upstream_sccs) {
    if (trivial_[c]) continue;
    if (leader == SccPeriod::kNoComponent || perron_[c].rho > perron_[leader].rho) leader = c;
  }
  if (leader != SccPeriod::kNoComponent) {
    report.delta = perron_[leader].rho;
    for (std::size_t c : report.upstream_sccs) {
      if (trivial_[c]) continue;
      if (c == leader || perron_values_equal(blocks_[c], perron_[c].rho, blocks_[leader],
                                             perron_[leader].rho, options_.tie_tolerance)) {
        report.critical_sccs.push_back(c);
      }
    }
    report.g = critical_modulus(report, *this);
  }
  report.empirical_estimate = empirical_branching_ratio(series_[node.index]);
  report.agreement = std::abs(report.delta - report.empirical_estimate);
  return report;
}

BranchingRatioReport branching_ratio(const MultiGraph& graph, NodeId node,
                                     const AnalysisOptions& options) {
  graph.check(node);
  return GraphAnalysis(graph, options).branching_ratio(node);
}

std::size_t critical_modulus(const BranchingRatioReport& report, const GraphAnalysis& analysis) {
  if (report.delta <= 0.0 || report.critical_sccs.empty()) {
    throw std::invalid_argument("critical_modulus: node has an acyclic upstream subnetwork");
  }
  std::size_t g = 1;
  for (std::size_t c : report.critical_sccs) g = std::lcm(g, analysis.component_period(c).h);
  return g;
}

std::size_t degree_bound(const SccDecomposition& scc, const UpstreamSet& up,
                         std::span<const std::size_t> critical) {
  std::vector<bool> in_up(scc.size(), false), is_critical(scc.size(), false);
  for (std::size_t c : up.scc_chain) in_up[c] = true;
  for (std::size_t c : critical) is_critical[c] = true;

  // Longest chain, counting critical components, over the upstream DAG.
  std::vector<std::size_t> best(scc.size(), 0);
  std::size_t longest = 0;
  for (std::size_t c : up.scc_chain) {
    std::size_t inherited = 0;
    for (std::size_t p : scc.predecessors(c)) {
      if (in_up[p]) inherited = std::max(inherited, best[p]);
    }
    best[c] = inherited + (is_critical[c] ? 1 : 0);
    longest = std::max(longest, best[c]);
  }
  return longest == 0 ? 0 : longest - 1;
}

AsymptoticProfile fit_asymptotics(const WalkCountSeries& series, double rho, std::size_t g,
                                  std::size_t degree) {
  if (!(rho > 0.0)) throw std::invalid_argument("fit_asymptotics: rho must be positive");
  if (g == 0) throw std::invalid_argument("fit_asymptotics: modulus g must be positive");
  const std::size_t len = series.counts.size();
  const std::size_t minimum = 3 * g * (degree + 2);
  if (len < minimum) {
    throw std::invalid_argument("fit_asymptotics: need at least " + std::to_string(minimum) +
                                " series entries, got " + std::to_string(len));
  }
  constexpr std::size_t kBurnIn = 20;
  constexpr std::size_t kMinWindow = 60;
  const std::size_t window = std::max(3 * g * (degree + 1), kMinWindow);
  const std::size_t short_burn_in = std::min(kBurnIn, len - 3 * g * (degree + 1));
  const std::size_t begin = std::max(len > window ? len - window : 0, short_burn_in);
  const std::size_t end = len - 1;

  AsymptoticProfile profile;
  profile.node = series.node;
  profile.rho = rho;
  profile.g = g;
  profile.degree_bound = degree;
  profile.window_begin = begin;
  profile.window_end = end;

  const double log_rho = std::log(rho);
  const double scale = static_cast<double>(end);
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  for (std::size_t s = 0; s < g; ++s) {
    std::vector<std::size_t> lengths;
    for (std::size_t l = begin; l <= end; ++l) {
      if (l % g == s) lengths.push_back(l);
    }
    const auto rows = static_cast<Eigen::Index>(lengths.size());
    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd y(rows);
    for (Eigen::Index k = 0; k < rows; ++k) {
      const std::size_t l = lengths[static_cast<std::size_t>(k)];
      const BigInt& a = series.counts[l];
      y(k) = a == 0 ? 0.0 : std::exp(log_big(a) - static_cast<double>(l) * log_rho);
      const double t = static_cast<double>(l) / scale;
      double power = 1.0;
      for (Eigen::Index j = 0; j < cols; ++j) {
        design(k, j) = power;
        power *= t;
      }
    }
    const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(y);

    ResidueFit fit;
    fit.residue = s;
    fit.coefficients.resize(degree + 1);
    double largest = 0.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      fit.coefficients[static_cast<std::size_t>(j)] = beta(j) / std::pow(scale, static_cast<double>(j));
      largest = std::max(largest, std::abs(beta(j)));
    }
    // Effective degree: highest term whose contribution over the window matters.
    fit.effective_degree = 0;
    for (Eigen::Index j = cols - 1; j > 0; --j) {
      if (std::abs(beta(j)) > 1e-8 * largest) {
        fit.effective_degree = static_cast<std::size_t>(j);
        break;
      }
    }
    fit.eventually_positive = beta(static_cast<Eigen::Index>(fit.effective_degree)) > 0.0;

    const Eigen::VectorXd fitted = design * beta;
    for (Eigen::Index k = 0; k < rows; ++k) {
      const double denom = std::max(std::abs(y(k)), 1e-300);
      fit.residual = std::max(fit.residual, std::abs(y(k) - fitted(k)) / denom);
    }
    profile.residue_fits.push_back(std::move(fit));
  }
  return profile;
}

SandwichCheck sandwich_check(const WalkCountSeries& series, double delta, std::size_t max_exponent,
                             std::size_t window_begin, std::size_t max_halvings) {
  if (!(delta > 0.0)) throw std::invalid_argument("sandwich_check: delta must be positive");
  SandwichCheck check;
  check.node = series.node;
  check.delta = delta;
  check.window_begin = std::max<std::size_t>(window_begin, 1);
  check.window_end = series.max_length();
  if (check.window_begin > check.window_end) return check;

  constexpr double kSlack = 1e-9;
  const double log_delta = std::log(delta);
  double lowest = std::numeric_limits<double>::infinity();
  std::vector<double> excess;  // log a(l) - l log delta
  std::vector<double> log_length;
  for (std::size_t l = check.window_begin; l <= check.window_end; ++l) {
    const BigInt& a = series.counts[l];
    if (a == 0) return check;
    const double e = log_big(a) - static_cast<double>(l) * log_delta;
    excess.push_back(e);
    log_length.push_back(std::log(static_cast<double>(l)));
    lowest = std::min(lowest, e);
  }

  bool lower_ok = false;
  for (std::size_t k = 0; k <= max_halvings; ++k) {
    const double log_c = -static_cast<double>(k) * std::log(2.0);
    if (log_c <= lowest + kSlack) {
      check.lower_constant = std::ldexp(1.0, -static_cast<int>(k));
      lower_ok = true;
      break;
    }
  }
  bool upper_ok = false;
  for (std::size_t r = 0; r <= max_exponent && !upper_ok; ++r) {
    upper_ok = true;
    for (std::size_t k = 0; k < excess.size(); ++k) {
      if (excess[k] > static_cast<double>(r) * log_length[k] + kSlack) {
        upper_ok = false;
        break;
      }
    }
    if (upper_ok) check.exponent = r;
  }
  check.pass = lower_ok && upper_ok;
  return check;
}

}  // namespace branchtool
