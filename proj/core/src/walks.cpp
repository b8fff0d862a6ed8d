#include "branchtool/walks.hpp"

#include "branchtool/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace branchtool {

namespace {

std::vector<bool> reverse_reachable(const MultiGraph& graph, NodeId root) {
  std::vector<bool> seen(graph.node_count(), false);
  std::vector<std::size_t> stack{root.index};
  seen[root.index] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t k : graph.in_edges(NodeId{v})) {
      const std::size_t u = graph.edges()[k].source.index;
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

// Least-squares fit r = c0 + c1/l + c2/l^2 on the given points, returning the
// value at 1/l = 0. The abscissa is centred and scaled before fitting.
double extrapolate_limit(std::span<const double> lengths, std::span<const double> values) {
  const auto m = static_cast<Eigen::Index>(lengths.size());
  double lo = std::numeric_limits<double>::max();
  double hi = 0.0;
  for (double l : lengths) {
    lo = std::min(lo, 1.0 / l);
    hi = std::max(hi, 1.0 / l);
  }
  const double centre = 0.5 * (lo + hi);
  const double scale = hi > lo ? 0.5 * (hi - lo) : 1.0;
  const Eigen::Index degree = std::min<Eigen::Index>(2, m - 1);
  Eigen::MatrixXd design(m, degree + 1);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double t = (1.0 / lengths[static_cast<std::size_t>(k)] - centre) / scale;
    double power = 1.0;
    for (Eigen::Index j = 0; j <= degree; ++j) {
      design(k, j) = power;
      power *= t;
    }
    rhs(k) = values[static_cast<std::size_t>(k)];
  }
  const Eigen::VectorXd coeff = design.colPivHouseholderQr().solve(rhs);
  const double t0 = -centre / scale;
  double result = 0.0;
  for (Eigen::Index j = degree; j >= 0; --j) result = result * t0 + coeff(j);
  return result;
}

struct ResidueLimit {
  bool stable = false;
  double value = 0.0;
};

ResidueLimit residue_limit(std::span<const double> lengths, std::span<const double> values,
                           const RatioOptions& options) {
  constexpr std::size_t kWindow = 8;
  const std::size_t count = lengths.size();
  const std::size_t estimates = options.stable_estimates;
  if (count < 3 + estimates - 1) return {};
  const std::size_t window = std::min(kWindow, count - (estimates - 1));
  std::vector<double> limits;
  for (std::size_t shift = 0; shift < estimates; ++shift) {
    const std::size_t end = count - shift;
    const std::size_t begin = end - window;
    limits.push_back(extrapolate_limit(lengths.subspan(begin, window), values.subspan(begin, window)));
  }
  const auto [lo, hi] = std::minmax_element(limits.begin(), limits.end());
  const double reference = std::max(std::abs(limits.front()), 1e-300);
  if ((*hi - *lo) / reference >= options.relative_change) return {};
  return {true, limits.front()};
}

}  // namespace

WalkCountSeries walk_counts(const MultiGraph& graph, NodeId node, std::size_t max_length) {
  graph.check(node);
  const std::vector<bool> upstream = reverse_reachable(graph, node);
  const std::size_t n = graph.node_count();
  std::vector<BigInt> current(n, 0), next(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (upstream[i]) current[i] = 1;
  }
  WalkCountSeries series{node, {}};
  series.counts.reserve(max_length + 1);
  series.counts.push_back(current[node.index]);
  for (std::size_t l = 1; l <= max_length; ++l) {
    for (std::size_t i = 0; i < n; ++i) next[i] = 0;
    for (const Edge& e : graph.edges()) {
      if (!upstream[e.source.index]) continue;
      next[e.target.index] += current[e.source.index] * e.multiplicity;
    }
    std::swap(current, next);
    series.counts.push_back(current[node.index]);
  }
  return series;
}

std::vector<WalkCountSeries> walk_counts_all(const MultiGraph& graph, std::size_t max_length) {
  const std::size_t n = graph.node_count();
  std::vector<WalkCountSeries> all(n);
  std::vector<BigInt> current(n, 1), next(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    all[i].node = NodeId{i};
    all[i].counts.reserve(max_length + 1);
    all[i].counts.push_back(1);
  }
  for (std::size_t l = 1; l <= max_length; ++l) {
    for (std::size_t i = 0; i < n; ++i) next[i] = 0;
    for (const Edge& e : graph.edges()) {
      next[e.target.index] += current[e.source.index] * e.multiplicity;
    }
    std::swap(current, next);
    for (std::size_t i = 0; i < n; ++i) all[i].counts.push_back(current[i]);
  }
  return all;
}

WalkCountSeries brute_force_walk_count(const MultiGraph& graph, NodeId node,
                                       std::size_t max_length, std::uint64_t budget) {
  graph.check(node);
  // Expand every parallel copy into its own edge record: (source, target).
  std::vector<std::vector<std::size_t>> incoming(graph.node_count());
  for (const Edge& e : graph.edges()) {
    for (std::uint64_t copy = 0; copy < e.multiplicity; ++copy) {
      incoming[e.target.index].push_back(e.source.index);
    }
  }

  WalkCountSeries series{node, std::vector<BigInt>(max_length + 1, 0)};
  std::vector<std::uint64_t> tally(max_length + 1, 0);
  std::uint64_t visited = 0;
  // Each stack entry is the current start of a walk and its length.
  std::vector<std::pair<std::size_t, std::size_t>> stack{{node.index, 0}};
  while (!stack.empty()) {
    const auto [head, length] = stack.back();
    stack.pop_back();
    if (++visited > budget) {
      throw BudgetExceeded("walk enumeration exceeded budget of " + std::to_string(budget) +
                           " walks");
    }
    ++tally[length];
    if (length == max_length) continue;
    for (std::size_t source : incoming[head]) stack.emplace_back(source, length + 1);
  }
  for (std::size_t l = 0; l <= max_length; ++l) series.counts[l] = tally[l];
  return series;
}

std::vector<std::size_t> InputTree::level_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(levels.size());
  for (const auto& level : levels) sizes.push_back(level.size());
  return sizes;
}

std::optional<std::size_t> InputTree::first_empty_level() const {
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l].empty()) return l;
  }
  return std::nullopt;
}

InputTree input_tree(const MultiGraph& graph, NodeId root, std::size_t depth,
                     std::uint64_t budget) {
  graph.check(root);
  InputTree tree{root, depth, {}};
  tree.levels.reserve(depth + 1);
  tree.levels.push_back({TreeNode{root}});
  std::uint64_t total = 1;
  for (std::size_t l = 1; l <= depth; ++l) {
    const auto& above = tree.levels.back();
    std::vector<TreeNode> level;
    for (std::size_t p = 0; p < above.size(); ++p) {
      for (std::size_t k : graph.in_edges(above[p].node)) {
        const Edge& e = graph.edges()[k];
        if (total + e.multiplicity > budget) {
          throw BudgetExceeded("input tree exceeds budget of " + std::to_string(budget) +
                               " nodes at level " + std::to_string(l));
        }
        total += e.multiplicity;
        for (std::uint64_t copy = 0; copy < e.multiplicity; ++copy) {
          level.push_back(TreeNode{e.source, p, k, copy});
        }
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

const char* to_string(RatioVerdict verdict) {
  switch (verdict) {
    case RatioVerdict::kConverges: return "converges";
    case RatioVerdict::kOscillates: return "oscillates";
    case RatioVerdict::kDegenerate: return "degenerate";
    case RatioVerdict::kUndetermined: return "undetermined";
  }
  return "unknown";
}

RatioAnalysis ratio_sequence(const WalkCountSeries& series, const RatioOptions& options) {
  RatioAnalysis result;
  const auto& a = series.counts;
  if (a.size() >= 2) {
    result.ratios.reserve(a.size() - 1);
    for (std::size_t l = 0; l + 1 < a.size(); ++l) {
      if (a[l] == 0) {
        result.ratios.emplace_back(std::nullopt);
      } else {
        result.ratios.emplace_back(BigRational(a[l + 1], a[l]));
      }
    }
  }

  constexpr std::size_t kTail = 3;
  if (a.size() < kTail + 1 ||
      std::any_of(a.end() - kTail, a.end(), [](const BigInt& x) { return x == 0; })) {
    return result;
  }
  const std::size_t burn_in = std::min(options.burn_in, result.ratios.size() / 3);
  for (std::size_t l = burn_in; l < a.size(); ++l) {
    if (a[l] == 0) return result;
  }

  result.verdict = RatioVerdict::kUndetermined;
  for (std::size_t p = 1; p <= options.max_period; ++p) {
    std::vector<double> limits;
    bool all_stable = true;
    for (std::size_t s = 0; s < p && all_stable; ++s) {
      std::vector<double> lengths, values;
      for (std::size_t l = burn_in; l + 1 < a.size(); ++l) {
        if (l % p != s) continue;
        lengths.push_back(static_cast<double>(std::max<std::size_t>(l, 1)));
        values.push_back(ratio_to_double(a[l + 1], a[l]));
      }
      const ResidueLimit limit = residue_limit(lengths, values, options);
      all_stable = limit.stable;
      limits.push_back(limit.value);
    }
    if (!all_stable) continue;
    result.period = p;
    result.limits = std::move(limits);
    result.verdict = p == 1 ? RatioVerdict::kConverges : RatioVerdict::kOscillates;
    break;
  }
  return result;
}

double empirical_branching_ratio(const WalkCountSeries& series) {
  const std::size_t l = series.max_length();
  if (l == 0 || series.counts.back() == 0) return 0.0;
  return std::exp(log_big(series.counts.back()) / static_cast<double>(l));
}

}  // namespace branchtool
