#include "branchtool/structure.hpp"
#include "branchtool/walks.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace branchtool;

namespace {

std::vector<NodeId> ids(const MultiGraph& g, std::initializer_list<const char*> labels) {
  std::vector<NodeId> out;
  for (const char* l : labels) out.push_back(g.node(l));
  return out;
}

}  // namespace

TEST(SccDecompose, LeftUpstreamNetwork) {
  const MultiGraph g = fixtures::upstream_left();
  const SccDecomposition scc = scc_decompose(g);
  ASSERT_EQ(scc.size(), 2u);
  EXPECT_EQ(scc.components[0], ids(g, {"1", "2"}));
  EXPECT_EQ(scc.components[1], ids(g, {"3"}));
  EXPECT_EQ(scc.condensation_edges, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_EQ(scc.topo_order, (std::vector<std::size_t>{0, 1}));
}

TEST(SccDecompose, ThreeNodeFeedforwardHasSingletons) {
  const MultiGraph g = fixtures::three_node();
  const SccDecomposition scc = scc_decompose(g);
  EXPECT_EQ(scc.size(), 3u);
  // 3 feeds 1 and 2, so it comes first.
  EXPECT_EQ(scc.topo_order.front(), scc.component_of[g.node("3").index]);
}

TEST(SccDecompose, ChainCondensationIsTheChain) {
  const MultiGraph g = fixtures::chain(3);
  const SccDecomposition scc = scc_decompose(g);
  EXPECT_EQ(scc.size(), 3u);
  EXPECT_EQ(scc.condensation_edges,
            (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(scc.topo_order, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SccDecompose, TieBreakBySmallestIndex) {
  // Two independent sources; the one holding node 0 goes first.
  const MultiGraph g = parse_edge_list("a z\nb z\n");
  const SccDecomposition scc = scc_decompose(g);
  EXPECT_EQ(scc.topo_order.front(), scc.component_of[g.node("a").index]);
}

TEST(SccDecompose, PartitionAndAcyclicCondensation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = fixtures::random_graph(rng, {1, 9, 0.25, 2});
    const SccDecomposition scc = scc_decompose(g);
    std::vector<int> seen(g.node_count(), 0);
    for (const auto& comp : scc.components) {
      for (NodeId v : comp) ++seen[v.index];
    }
    for (int count : seen) EXPECT_EQ(count, 1);
    const auto pos = scc.topo_position();
    for (const Edge& e : g.edges()) {
      const std::size_t a = scc.component_of[e.source.index];
      const std::size_t b = scc.component_of[e.target.index];
      if (a != b) EXPECT_LT(pos[a], pos[b]);
    }
    // Mutual reachability inside components, none across.
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      for (std::size_t j = 0; j < g.node_count(); ++j) {
        if (i == j) continue;
        const bool both = oracles::walk_exists(g, NodeId{i}, NodeId{j}, g.node_count()) &&
                          oracles::walk_exists(g, NodeId{j}, NodeId{i}, g.node_count());
        EXPECT_EQ(both, scc.component_of[i] == scc.component_of[j]);
      }
    }
  }
}

TEST(Upstream, LeftAndRightNetworks) {
  const MultiGraph left = fixtures::upstream_left();
  EXPECT_EQ(upstream(left, left.node("3")).nodes, ids(left, {"1", "2", "3"}));
  EXPECT_EQ(upstream(left, left.node("1")).nodes, ids(left, {"1", "2"}));

  const MultiGraph right = fixtures::upstream_right();
  const UpstreamSet u1 = upstream(right, right.node("1"));
  EXPECT_EQ(u1.nodes, ids(right, {"1"}));
  EXPECT_EQ(u1.scc_chain.size(), 1u);
  EXPECT_EQ(upstream(right, right.node("2")).nodes.size(), 3u);
}

TEST(Upstream, IsolatedNodeAndErrors) {
  const MultiGraph g = MultiGraph::from_edges({"solo", "other"}, {});
  const UpstreamSet u = upstream(g, NodeId{0});
  EXPECT_EQ(u.nodes, (std::vector<NodeId>{NodeId{0}}));
  EXPECT_EQ(u.subgraph.graph.node_count(), 1u);
  EXPECT_THROW(upstream(g, NodeId{5}), std::out_of_range);
}

TEST(Upstream, MatchesBruteForceReachability) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = fixtures::random_graph(rng, {1, 8, 0.2, 2});
    const SccDecomposition scc = scc_decompose(g);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const UpstreamSet up = upstream(g, scc, NodeId{i});
      std::vector<bool> in(g.node_count(), false);
      for (NodeId v : up.nodes) in[v.index] = true;
      for (std::size_t j = 0; j < g.node_count(); ++j) {
        const bool expected = j == i || oracles::walk_exists(g, NodeId{j}, NodeId{i}, g.node_count());
        EXPECT_EQ(in[j], expected) << "trial " << trial << " i=" << i << " j=" << j;
      }
      // SCCs of U(i) are SCCs of the parent graph.
      const SccDecomposition inner = scc_decompose(up.subgraph.graph);
      EXPECT_EQ(inner.size(), up.scc_chain.size());
      for (const auto& comp : inner.components) {
        const std::size_t parent = scc.component_of[up.subgraph.to_parent[comp.front().index].index];
        EXPECT_EQ(comp.size(), scc.components[parent].size());
      }
    }
  }
}

TEST(Upstream, WalkCountsAgreeOnSubnetwork) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = fixtures::random_graph(rng, {1, 7, 0.3, 2});
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const UpstreamSet up = upstream(g, NodeId{i});
      std::size_t local = 0;
      while (up.subgraph.to_parent[local].index != i) ++local;
      EXPECT_EQ(walk_counts(g, NodeId{i}, 12).counts,
                walk_counts(up.subgraph.graph, NodeId{local}, 12).counts);
    }
  }
}

TEST(SccPeriod, Examples) {
  for (std::size_t n : {1u, 2u, 5u, 7u}) {
    const MultiGraph g = fixtures::cycle(n);
    EXPECT_EQ(scc_period(g, scc_decompose(g), 0).h, n);
  }
  const MultiGraph fib = fixtures::fibonacci();
  EXPECT_EQ(scc_period(fib, scc_decompose(fib), 0).h, 1u);
  const MultiGraph six = fixtures::six_node();
  EXPECT_EQ(scc_period(six, scc_decompose(six), 0).h, 3u);
  EXPECT_EQ(oracles::simple_cycle_lengths(six, scc_decompose(six).components[0]),
            (std::set<std::size_t>{3, 6}));
}

TEST(SccPeriod, TrivialSingletonAndSelfLoop) {
  const MultiGraph g = fixtures::three_node();
  EXPECT_EQ(scc_period(g, std::vector<NodeId>{g.node("3")}).h, 0u);
  EXPECT_EQ(scc_period(g, std::vector<NodeId>{g.node("2")}).h, 1u);
  EXPECT_EQ(scc_period(g, std::vector<NodeId>{g.node("1")}).h, 1u);
}

TEST(SccPeriod, RejectsNonStronglyConnectedSets) {
  const MultiGraph g = fixtures::chain(3);
  EXPECT_THROW(scc_period(g, std::vector<NodeId>{NodeId{0}, NodeId{1}}), std::invalid_argument);
  EXPECT_THROW(scc_period(g, std::vector<NodeId>{}), std::invalid_argument);
  EXPECT_THROW(scc_period(fixtures::linked_cycles(), std::vector<NodeId>{NodeId{0}, NodeId{1}, NodeId{2}, NodeId{3}, NodeId{4}}),
               std::invalid_argument);
}

TEST(SccPeriod, BfsLevelsMatchCycleEnumeration) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const MultiGraph g = fixtures::random_graph(rng, {1, 8, 0.25, 2});
    const SccDecomposition scc = scc_decompose(g);
    for (std::size_t c = 0; c < scc.size(); ++c) {
      EXPECT_EQ(scc_period(g, scc, c).h, oracles::period_by_cycles(g, scc.components[c]));
    }
  }
}

TEST(BlockTriangularOrder, NaturalOrderForLeftNetwork) {
  const MultiGraph g = fixtures::upstream_left();
  const UpstreamSet up = upstream(g, g.node("3"));
  EXPECT_EQ(block_triangular_order(g, up), ids(g, {"1", "2", "3"}));
}

TEST(BlockTriangularOrder, LinkedCyclesSourceFirst) {
  const MultiGraph g = fixtures::linked_cycles();
  const UpstreamSet up = upstream(g, g.node("1"));
  const auto order = block_triangular_order(g, up);
  ASSERT_EQ(order.size(), 8u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_GE(order[k].index, 4u);  // nodes 5..8
  for (std::size_t k = 4; k < 8; ++k) EXPECT_LT(order[k].index, 4u);  // nodes 1..4
}

TEST(BlockTriangularOrder, StronglyConnectedIsOneBlock) {
  const MultiGraph g = fixtures::six_node();
  const UpstreamSet up = upstream(g, NodeId{0});
  EXPECT_EQ(up.scc_chain.size(), 1u);
  EXPECT_EQ(block_triangular_order(g, up).size(), 6u);
}

TEST(BlockTriangularOrder, BelowDiagonalBlocksVanish) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = fixtures::random_graph(rng, {1, 9, 0.25, 2});
    const SccDecomposition scc = scc_decompose(g);
    const auto order = block_triangular_order(scc);
    const AdjacencyMatrix a = adjacency_matrix(g);
    const auto pos = scc.topo_position();
    for (std::size_t r = 0; r < order.size(); ++r) {
      for (std::size_t c = 0; c < order.size(); ++c) {
        const std::size_t br = pos[scc.component_of[order[r].index]];
        const std::size_t bc = pos[scc.component_of[order[c].index]];
        if (br > bc) EXPECT_EQ(a(order[r].index, order[c].index), 0u);
      }
    }
  }
}
