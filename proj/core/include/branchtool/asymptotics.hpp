#pragma once

#include "branchtool/graph.hpp"
#include "branchtool/spectral.hpp"
#include "branchtool/structure.hpp"
#include "branchtool/walks.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace branchtool {

struct AnalysisOptions {
  PerronOptions perron;
  /// Relative tolerance for declaring two SCC Perron values equal.
  double tie_tolerance = 1e-9;
  /// Walk length used for the empirical cross-check of delta.
  std::size_t empirical_length = 200;
};

/// Branching ratio of one node and where it comes from.
struct BranchingRatioReport {
  NodeId node;
  double delta = 0.0;
  std::vector<std::size_t> upstream_sccs;  // topological order
  std::vector<std::size_t> critical_sccs;  // subset attaining delta
  /// lcm of critical periods; 0 when delta == 0.
  std::size_t g = 0;
  const char* method = "spectral";
  double empirical_estimate = 0.0;
  double agreement = 0.0;  // |delta - empirical_estimate|
};

/// Graph-wide precomputation: SCCs, per-SCC Perron data and periods, and walk
/// counts up to the empirical length. Immutable after construction.
class GraphAnalysis {
 public:
  explicit GraphAnalysis(const MultiGraph& graph, AnalysisOptions options = {});

  const MultiGraph& graph() const noexcept { return graph_; }
  const SccDecomposition& scc() const noexcept { return scc_; }
  const AnalysisOptions& options() const noexcept { return options_; }

  const PerronData& component_perron(std::size_t c) const { return perron_.at(c); }
  const SccPeriod& component_period(std::size_t c) const { return periods_.at(c); }
  bool component_trivial(std::size_t c) const { return trivial_.at(c); }
  const AdjacencyMatrix& component_block(std::size_t c) const { return blocks_.at(c); }

  UpstreamSet upstream_of(NodeId node) const;
  /// Walk counts up to options().empirical_length.
  const WalkCountSeries& series(NodeId node) const { return series_.at(node.index); }

  /// Throws std::out_of_range for an unknown node.
  BranchingRatioReport branching_ratio(NodeId node) const;

 private:
  MultiGraph graph_;
  AnalysisOptions options_;
  SccDecomposition scc_;
  std::vector<AdjacencyMatrix> blocks_;
  std::vector<PerronData> perron_;
  std::vector<SccPeriod> periods_;
  std::vector<bool> trivial_;
  std::vector<WalkCountSeries> series_;
};

/// One-shot convenience wrapper around GraphAnalysis.
BranchingRatioReport branching_ratio(const MultiGraph& graph, NodeId node,
                                     const AnalysisOptions& options = {});

/// lcm of the critical SCC periods. Throws std::invalid_argument if delta == 0.
std::size_t critical_modulus(const BranchingRatioReport& report, const GraphAnalysis& analysis);

/// Upper bound on the degree of the residue polynomials: the largest number of
/// critical SCCs on one directed chain of the upstream condensation, minus 1.
std::size_t degree_bound(const SccDecomposition& scc, const UpstreamSet& up,
                         std::span<const std::size_t> critical);

/// a(l) ~ R_s(l) rho^l for l = s (mod g).
struct ResidueFit {
  std::size_t residue = 0;
  /// Coefficients of R_s in powers of l, ascending; length D + 1.
  std::vector<double> coefficients;
  /// Degree after dropping terms negligible over the fit window.
  std::size_t effective_degree = 0;
  bool eventually_positive = false;
  /// max |a(l)/rho^l - R_s(l)| / |a(l)/rho^l| over the window.
  double residual = 0.0;
};

struct AsymptoticProfile {
  NodeId node;
  double rho = 0.0;
  std::size_t g = 1;
  std::size_t degree_bound = 0;
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  std::vector<ResidueFit> residue_fits;
};

/// Per-residue least squares of a(l) / rho^l against a polynomial of degree
/// <= D over the series tail. Throws std::invalid_argument when rho <= 0,
/// g == 0, or the series is shorter than 3 g (D + 2) entries.
AsymptoticProfile fit_asymptotics(const WalkCountSeries& series, double rho, std::size_t g,
                                  std::size_t degree);

struct SandwichCheck {
  NodeId node;
  double delta = 0.0;
  std::size_t exponent = 0;     // r in a(l) <= l^r delta^l
  double lower_constant = 0.0;  // c in c delta^l <= a(l)
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  bool pass = false;
};

/// Searches c in {2^-k : k = 0..max_halvings} (largest first) and
/// r in 0..max_exponent (smallest first) such that c delta^l <= a(l) <= l^r delta^l
/// on [window_begin, L]. Throws std::invalid_argument when delta <= 0.
SandwichCheck sandwich_check(const WalkCountSeries& series, double delta, std::size_t max_exponent,
                             std::size_t window_begin = 3, std::size_t max_halvings = 64);

}  // namespace branchtool
