#pragma once

#include "branchtool/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace branchtool::fixtures {

/// Graph with labels "1".."n" whose adjacency matrix is `rows`.
MultiGraph from_matrix(const std::vector<std::vector<std::uint64_t>>& rows);

MultiGraph fibonacci();
/// Fibonacci circuit {1,2} feeding node 3, which has two self-loops.
MultiGraph upstream_left();
/// Node 1 with two self-loops feeding a Fibonacci circuit on {2,3}.
MultiGraph upstream_right();
/// Strongly connected, period 3, rho = 2^(1/3).
MultiGraph six_node();
/// A = [[alpha, 0], [beta, alpha]].
MultiGraph alpha_beta(std::uint64_t alpha, std::uint64_t beta);
/// Source 4-cycle {5,6,7,8} feeding sink 4-cycle {1,2,3,4} through 5 -> 4.
MultiGraph linked_cycles();
/// n-node cycle where the edge from node i+1 to node i has multiplicity m_i.
MultiGraph polycycle(const std::vector<std::uint64_t>& multiplicities);
/// A = [[2,0,0],[0,1,0],[1,1,0]].
MultiGraph three_node();
/// Simple cycle 1 -> 2 -> ... -> n -> 1.
MultiGraph cycle(std::size_t n);
/// Chain 1 -> 2 -> ... -> n.
MultiGraph chain(std::size_t n);
/// A 2-cycle {a,b} and a 3-cycle {c,d,e} both feeding node i.
MultiGraph parallel_feeders();

struct RandomGraphSpec {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 6;
  double edge_probability = 0.3;
  std::uint64_t max_multiplicity = 2;
};

/// Random multigraph with labels "1".."n"; deterministic for a given engine state.
MultiGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec);

/// Random strongly connected graph with at least one edge.
MultiGraph random_irreducible(std::mt19937_64& rng, std::size_t max_nodes,
                              std::uint64_t max_multiplicity = 2);

}  // namespace branchtool::fixtures
