#pragma once

#include "branchtool/bigint.hpp"
#include "branchtool/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace branchtool {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// a_i(0..L): number of walks of each length terminating at `node`.
/// counts[0] == 1 (the trivial walk).
struct WalkCountSeries {
  NodeId node;
  std::vector<BigInt> counts;

  /// Largest length L stored, i.e. counts.size() - 1.
  std::size_t max_length() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
};

/// Exact counts via iterated row-vector times matrix products, a(l+1) = a(l) A.
/// Throws std::out_of_range for an unknown node.
WalkCountSeries walk_counts(const MultiGraph& graph, NodeId node, std::size_t max_length);

/// Series for every node from one propagation pass, indexed by node.
std::vector<WalkCountSeries> walk_counts_all(const MultiGraph& graph, std::size_t max_length);

/// Independent oracle: enumerates edge sequences backwards from `node`, with
/// each parallel edge copy treated as a distinct edge. Throws BudgetExceeded
/// once more than `budget` walks would have to be visited.
WalkCountSeries brute_force_walk_count(const MultiGraph& graph, NodeId node,
                                       std::size_t max_length,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// One vertex of an input tree. The root has no parent and no edge.
struct TreeNode {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  NodeId node;
  std::size_t parent = kNone;  // index into the previous level
  std::size_t edge = kNone;    // index into MultiGraph::edges()
  std::uint64_t copy = 0;      // which parallel copy of that edge
};

/// Level l holds one tree node per walk of length l ending at the root.
struct InputTree {
  NodeId root;
  std::size_t depth = 0;
  std::vector<std::vector<TreeNode>> levels;

  std::vector<std::size_t> level_sizes() const;
  /// First level that is empty, if the tree is finite within `depth`.
  std::optional<std::size_t> first_empty_level() const;
};

/// Throws BudgetExceeded if the total tree size would exceed `budget`.
InputTree input_tree(const MultiGraph& graph, NodeId root, std::size_t depth,
                     std::uint64_t budget = kDefaultEnumerationBudget);

enum class RatioVerdict { kConverges, kOscillates, kDegenerate, kUndetermined };

const char* to_string(RatioVerdict verdict);

/// Successive ratios a(l+1)/a(l) and their long-run behaviour.
struct RatioAnalysis {
  /// ratios[l] = a(l+1)/a(l); empty when a(l) == 0.
  std::vector<std::optional<BigRational>> ratios;
  RatioVerdict verdict = RatioVerdict::kDegenerate;
  /// 1 for kConverges, the detected period for kOscillates, 0 otherwise.
  std::size_t period = 0;
  /// limits[s] is the limit along l = s (mod period).
  std::vector<double> limits;
};

struct RatioOptions {
  std::size_t max_period = 12;
  double relative_change = 1e-6;
  std::size_t stable_estimates = 5;
  std::size_t burn_in = 20;
};

RatioAnalysis ratio_sequence(const WalkCountSeries& series, const RatioOptions& options = {});

/// a(L)^(1/L) at the largest stored L; 0 if the tail is zero or L == 0.
double empirical_branching_ratio(const WalkCountSeries& series);

}  // namespace branchtool
