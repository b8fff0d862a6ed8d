#pragma once

#include "branchtool/matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace branchtool {

/// Dense node index into a MultiGraph (0..n-1). Labels live on the graph.
struct NodeId {
  std::size_t index = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// A merged edge: `multiplicity` parallel copies of source -> target.
struct Edge {
  NodeId source;
  NodeId target;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Entry (i, j) is the number of edges i -> j.
using AdjacencyMatrix = Matrix<std::uint64_t>;

/// Immutable finite directed multigraph. Parallel edges are merged into one
/// multiplicity-weighted edge; self-loops are allowed. Edges are stored sorted
/// by (source, target).
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Builds a graph over `labels` (index order preserved). Duplicate
  /// (source, target) pairs are merged by summing multiplicities.
  /// Throws std::invalid_argument on duplicate/empty labels, zero
  /// multiplicity, or out-of-range endpoints.
  static MultiGraph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  /// Number of distinct (source, target) pairs.
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sum of multiplicities, i.e. the number of edges of the multigraph.
  std::uint64_t total_multiplicity() const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(NodeId node) const;

  std::optional<NodeId> find(std::string_view label) const;
  /// Like find(), but throws std::out_of_range for unknown labels.
  NodeId node(std::string_view label) const;

  /// Indices into edges() of edges entering / leaving `node`.
  std::span<const std::size_t> in_edges(NodeId node) const;
  std::span<const std::size_t> out_edges(NodeId node) const;

  std::uint64_t self_loops(NodeId node) const;

  bool contains(NodeId node) const noexcept { return node.index < labels_.size(); }
  /// Throws std::out_of_range unless contains(node).
  void check(NodeId node) const;

  /// Same graph with nodes re-indexed in lexicographic label order.
  MultiGraph with_sorted_labels() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  // CSR-style incidence: offsets have n+1 entries.
  std::vector<std::size_t> in_offsets_, in_list_;
  std::vector<std::size_t> out_offsets_, out_list_;
};

/// Subgraph induced by a node set, with the mapping back to the parent.
struct InducedSubgraph {
  MultiGraph graph;
  /// to_parent[k] is the parent node of subgraph node k.
  std::vector<NodeId> to_parent;
};

/// Parses the edge-list text format:
///   <src-label> <dst-label> [multiplicity]   # comment
/// Nodes are indexed by first appearance. Throws ParseError.
MultiGraph parse_edge_list(std::string_view text);

/// Canonical form: edges sorted by (source index, target index), explicit
/// multiplicity, one per line.
std::string serialize_edge_list(const MultiGraph& graph);

AdjacencyMatrix adjacency_matrix(const MultiGraph& graph);

/// Keeps exactly the edges with both endpoints in `nodes`. Subgraph nodes are
/// ordered by parent index. Throws std::out_of_range for unknown nodes.
InducedSubgraph induced_subgraph(const MultiGraph& graph, std::span<const NodeId> nodes);

/// True iff the graph has no directed cycle (self-loops count as cycles).
bool is_acyclic(const MultiGraph& graph);

}  // namespace branchtool
