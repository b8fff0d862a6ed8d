#pragma once

#include "branchtool/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace bench {

// Sparse random multigraph with about `degree` out-edges per node.
inline branchtool::MultiGraph random_graph(std::size_t n, std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<branchtool::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < degree; ++k) {
      edges.push_back({branchtool::NodeId{i}, branchtool::NodeId{rng() % n}, 1 + rng() % 2});
    }
  }
  return branchtool::MultiGraph::from_edges(labels, edges);
}

// Strongly connected: a Hamiltonian cycle plus random chords.
inline branchtool::MultiGraph random_strong(std::size_t n, std::size_t chords, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<branchtool::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({branchtool::NodeId{i}, branchtool::NodeId{(i + 1) % n}, 1});
  for (std::size_t k = 0; k < chords; ++k) {
    edges.push_back({branchtool::NodeId{rng() % n}, branchtool::NodeId{rng() % n}, 1});
  }
  return branchtool::MultiGraph::from_edges(labels, edges);
}

}  // namespace bench
