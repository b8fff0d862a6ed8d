#pragma once

#include "branchtool/graph.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace branchtool {

/// Strongly connected components of a graph and their condensation.
///
/// Components are numbered by their smallest node index. `topo_order` lists
/// component numbers so that every condensation edge goes from an earlier to
/// a later entry; ties are broken by smallest node index.
struct SccDecomposition {
  std::vector<std::vector<NodeId>> components;  // each sorted ascending
  std::vector<std::size_t> component_of;        // node index -> component
  std::vector<std::pair<std::size_t, std::size_t>> condensation_edges;  // sorted, unique
  std::vector<std::size_t> topo_order;

  std::size_t size() const noexcept { return components.size(); }
  /// Position of each component in topo_order.
  std::vector<std::size_t> topo_position() const;
  /// Predecessors of component c in the condensation.
  std::vector<std::size_t> predecessors(std::size_t c) const;
};

SccDecomposition scc_decompose(const MultiGraph& graph);

/// True if the component is a single node without a self-loop.
bool is_trivial_component(const MultiGraph& graph, std::span<const NodeId> component);

/// Upstream subnetwork U(i): every node with a walk to `root`, plus `root`.
struct UpstreamSet {
  NodeId root;
  std::vector<NodeId> nodes;  // sorted ascending, parent indices
  InducedSubgraph subgraph;
  /// Parent-graph components contained in U(i), in topological order.
  std::vector<std::size_t> scc_chain;
};

/// Throws std::out_of_range for an unknown node.
UpstreamSet upstream(const MultiGraph& graph, NodeId root);
UpstreamSet upstream(const MultiGraph& graph, const SccDecomposition& scc, NodeId root);

/// Period of a strongly connected node set: gcd of its cycle lengths, computed
/// from BFS levels. h = 0 marks a trivial acyclic singleton.
struct SccPeriod {
  static constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);

  std::size_t component = kNoComponent;
  std::size_t h = 0;
};

/// Throws std::invalid_argument if `component` is empty or not strongly
/// connected within `graph`, std::out_of_range for unknown nodes.
SccPeriod scc_period(const MultiGraph& graph, std::span<const NodeId> component);
SccPeriod scc_period(const MultiGraph& graph, const SccDecomposition& scc, std::size_t component);

/// Node order grouping SCCs in topological order (ascending index inside a
/// component). Permuting the adjacency matrix by it gives a block upper
/// triangular matrix with irreducible (or 1x1 zero) diagonal blocks.
std::vector<NodeId> block_triangular_order(const SccDecomposition& scc);
/// Same, restricted to an upstream set; returns parent node ids.
std::vector<NodeId> block_triangular_order(const SccDecomposition& scc, const UpstreamSet& up);
/// Convenience overload that decomposes the parent graph itself.
std::vector<NodeId> block_triangular_order(const MultiGraph& graph, const UpstreamSet& up);

}  // namespace branchtool
