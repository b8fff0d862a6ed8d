#include "branchtool/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace branchtool {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns component id per node in discovery order.
std::vector<std::size_t> tarjan(const MultiGraph& g, std::size_t& count) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next out-edge slot)
  std::size_t next_index = 0;
  count = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    call.emplace_back(start, 0);
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto outs = g.out_edges(NodeId{v});
      if (slot < outs.size()) {
        const std::size_t w = g.edges()[outs[slot++]].target.index;
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<std::size_t> SccDecomposition::topo_position() const {
  std::vector<std::size_t> pos(components.size());
  for (std::size_t k = 0; k < topo_order.size(); ++k) pos[topo_order[k]] = k;
  return pos;
}

std::vector<std::size_t> SccDecomposition::predecessors(std::size_t c) const {
  std::vector<std::size_t> preds;
  for (const auto& [from, to] : condensation_edges) {
    if (to == c) preds.push_back(from);
  }
  return preds;
}

SccDecomposition scc_decompose(const MultiGraph& graph) {
  const std::size_t n = graph.node_count();
  std::size_t count = 0;
  const std::vector<std::size_t> raw = tarjan(graph, count);

  // Renumber components by smallest member index.
  std::vector<std::size_t> renumber(count, kUnset);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (renumber[raw[i]] == kUnset) renumber[raw[i]] = next++;
  }

  SccDecomposition scc;
  scc.components.resize(count);
  scc.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scc.component_of[i] = renumber[raw[i]];
    scc.components[scc.component_of[i]].push_back(NodeId{i});
  }

  for (const Edge& e : graph.edges()) {
    const std::size_t a = scc.component_of[e.source.index];
    const std::size_t b = scc.component_of[e.target.index];
    if (a != b) scc.condensation_edges.emplace_back(a, b);
  }
  std::sort(scc.condensation_edges.begin(), scc.condensation_edges.end());
  scc.condensation_edges.erase(
      std::unique(scc.condensation_edges.begin(), scc.condensation_edges.end()),
      scc.condensation_edges.end());

  // Kahn with a min-heap; component numbers already order by smallest member.
  std::vector<std::size_t> indegree(count, 0);
  std::vector<std::vector<std::size_t>> succ(count);
  for (const auto& [a, b] : scc.condensation_edges) {
    ++indegree[b];
    succ[a].push_back(b);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  while (!ready.empty()) {
    const std::size_t c = ready.top();
    ready.pop();
    scc.topo_order.push_back(c);
    for (std::size_t d : succ[c]) {
      if (--indegree[d] == 0) ready.push(d);
    }
  }
  return scc;
}

bool is_trivial_component(const MultiGraph& graph, std::span<const NodeId> component) {
  return component.size() == 1 && graph.self_loops(component.front()) == 0;
}

UpstreamSet upstream(const MultiGraph& graph, NodeId root) {
  return upstream(graph, scc_decompose(graph), root);
}

UpstreamSet upstream(const MultiGraph& graph, const SccDecomposition& scc, NodeId root) {
  graph.check(root);
  const std::size_t n = graph.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> frontier{root.index};
  seen[root.index] = true;
  while (!frontier.empty()) {
    const std::size_t v = frontier.back();
    frontier.pop_back();
    for (std::size_t k : graph.in_edges(NodeId{v})) {
      const std::size_t u = graph.edges()[k].source.index;
      if (!seen[u]) {
        seen[u] = true;
        frontier.push_back(u);
      }
    }
  }

  UpstreamSet up;
  up.root = root;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) up.nodes.push_back(NodeId{i});
  }
  up.subgraph = induced_subgraph(graph, up.nodes);
  for (std::size_t c : scc.topo_order) {
    if (seen[scc.components[c].front().index]) up.scc_chain.push_back(c);
  }
  return up;
}

SccPeriod scc_period(const MultiGraph& graph, std::span<const NodeId> component) {
  if (component.empty()) {
    throw std::invalid_argument("scc_period: empty component");
  }
  const std::size_t n = graph.node_count();
  std::vector<bool> member(n, false);
  for (NodeId v : component) {
    graph.check(v);
    member[v.index] = true;
  }

  // BFS levels from the first node along intra-component edges.
  std::vector<std::size_t> level(n, kUnset);
  std::queue<std::size_t> queue;
  const std::size_t start = component.front().index;
  level[start] = 0;
  queue.push(start);
  std::size_t reached = 0;
  std::size_t h = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    ++reached;
    for (std::size_t k : graph.out_edges(NodeId{u})) {
      const std::size_t v = graph.edges()[k].target.index;
      if (!member[v]) continue;
      if (level[v] == kUnset) {
        level[v] = level[u] + 1;
        queue.push(v);
      }
    }
  }
  if (reached != component.size()) {
    throw std::invalid_argument("scc_period: node set is not strongly connected");
  }
  // Reverse reachability completes the strong-connectivity check.
  std::vector<bool> back(n, false);
  std::vector<std::size_t> stack{start};
  back[start] = true;
  std::size_t back_reached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++back_reached;
    for (std::size_t k : graph.in_edges(NodeId{v})) {
      const std::size_t u = graph.edges()[k].source.index;
      if (member[u] && !back[u]) {
        back[u] = true;
        stack.push_back(u);
      }
    }
  }
  if (back_reached != component.size()) {
    throw std::invalid_argument("scc_period: node set is not strongly connected");
  }

  for (NodeId u : component) {
    for (std::size_t k : graph.out_edges(u)) {
      const std::size_t v = graph.edges()[k].target.index;
      if (!member[v]) continue;
      const auto lu = static_cast<long long>(level[u.index]);
      const auto lv = static_cast<long long>(level[v]);
      const auto diff = static_cast<std::size_t>(std::llabs(lu + 1 - lv));
      h = std::gcd(h, diff);
    }
  }
  return SccPeriod{SccPeriod::kNoComponent, h};
}

SccPeriod scc_period(const MultiGraph& graph, const SccDecomposition& scc, std::size_t component) {
  if (component >= scc.size()) {
    throw std::out_of_range("component index out of range");
  }
  SccPeriod p = scc_period(graph, scc.components[component]);
  p.component = component;
  return p;
}

std::vector<NodeId> block_triangular_order(const SccDecomposition& scc) {
  std::vector<NodeId> order;
  for (std::size_t c : scc.topo_order) {
    order.insert(order.end(), scc.components[c].begin(), scc.components[c].end());
  }
  return order;
}

std::vector<NodeId> block_triangular_order(const SccDecomposition& scc, const UpstreamSet& up) {
  std::vector<NodeId> order;
  order.reserve(up.nodes.size());
  for (std::size_t c : up.scc_chain) {
    order.insert(order.end(), scc.components[c].begin(), scc.components[c].end());
  }
  return order;
}

std::vector<NodeId> block_triangular_order(const MultiGraph& graph, const UpstreamSet& up) {
  return block_triangular_order(scc_decompose(graph), up);
}

}  // namespace branchtool
