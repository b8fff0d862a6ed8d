#include "support/fixtures.hpp"

#include "branchtool/structure.hpp"

#include <string>

namespace branchtool::fixtures {

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Uniform draws straight from the engine so sequences are portable.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace

MultiGraph from_matrix(const std::vector<std::vector<std::uint64_t>>& rows) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] > 0) edges.push_back({NodeId{i}, NodeId{j}, rows[i][j]});
    }
  }
  return MultiGraph::from_edges(numeric_labels(rows.size()), edges);
}

MultiGraph fibonacci() { return from_matrix({{0, 1}, {1, 1}}); }

MultiGraph upstream_left() { return from_matrix({{1, 1, 0}, {1, 0, 1}, {0, 0, 2}}); }

MultiGraph upstream_right() { return from_matrix({{2, 0, 1}, {0, 0, 1}, {0, 1, 1}}); }

MultiGraph six_node() {
  return from_matrix({{0, 1, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0, 1},
                      {0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 0, 1},
                      {1, 0, 0, 0, 0, 0}});
}

MultiGraph alpha_beta(std::uint64_t alpha, std::uint64_t beta) {
  return from_matrix({{alpha, 0}, {beta, alpha}});
}

MultiGraph linked_cycles() {
  return from_matrix({{0, 0, 0, 1, 0, 0, 0, 0},
                      {1, 0, 0, 0, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0, 0, 0},
                      {0, 0, 1, 0, 0, 0, 0, 0},
                      {0, 0, 0, 1, 0, 0, 0, 1},
                      {0, 0, 0, 0, 1, 0, 0, 0},
                      {0, 0, 0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 0, 0, 1, 0}});
}

MultiGraph polycycle(const std::vector<std::uint64_t>& multiplicities) {
  const std::size_t n = multiplicities.size();
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[(i + 1) % n][i] += multiplicities[i];
  return from_matrix(rows);
}

MultiGraph three_node() { return from_matrix({{2, 0, 0}, {0, 1, 0}, {1, 1, 0}}); }

MultiGraph cycle(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][(i + 1) % n] += 1;
  return from_matrix(rows);
}

MultiGraph chain(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) rows[i][i + 1] = 1;
  return from_matrix(rows);
}

MultiGraph parallel_feeders() {
  return parse_edge_list(
      "a b\nb a\n"
      "c d\nd e\ne c\n"
      "b i\ne i\n");
}

MultiGraph random_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  const std::size_t n = pick(rng, spec.min_nodes, spec.max_nodes);
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(n, 0));
  for (auto& row : rows) {
    for (auto& entry : row) {
      if (uniform(rng) < spec.edge_probability) entry = pick(rng, 1, spec.max_multiplicity);
    }
  }
  return from_matrix(rows);
}

MultiGraph random_irreducible(std::mt19937_64& rng, std::size_t max_nodes,
                              std::uint64_t max_multiplicity) {
  for (;;) {
    RandomGraphSpec spec{1, max_nodes, 0.45, max_multiplicity};
    MultiGraph g = random_graph(rng, spec);
    if (g.edge_count() == 0) continue;
    if (scc_decompose(g).size() == 1) return g;
  }
}

}  // namespace branchtool::fixtures
