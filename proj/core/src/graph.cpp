#include "branchtool/graph.hpp"

#include "branchtool/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace branchtool {

namespace {

void build_incidence(std::size_t n, std::span<const Edge> edges, bool incoming,
                     std::vector<std::size_t>& offsets, std::vector<std::size_t>& list) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[(incoming ? e.target : e.source).index + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  list.assign(edges.size(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t owner = (incoming ? edges[k].target : edges[k].source).index;
    list[cursor[owner]++] = k;
  }
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::uint64_t parse_multiplicity(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line_no, "multiplicity must be positive, got '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line_no, "invalid multiplicity '" + std::string(token) + "'");
  }
  if (value == 0) {
    throw ParseError(line_no, "multiplicity must be positive, got 0");
  }
  return value;
}

}  // namespace

MultiGraph MultiGraph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  MultiGraph g;
  const std::size_t n = labels.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) {
      throw std::invalid_argument("empty node label");
    }
    if (!g.index_.emplace(labels[i], i).second) {
      throw std::invalid_argument("duplicate node label '" + labels[i] + "'");
    }
  }
  g.labels_ = std::move(labels);

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> merged;
  for (const Edge& e : edges) {
    if (e.source.index >= n || e.target.index >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.multiplicity == 0) {
      throw std::invalid_argument("edge multiplicity must be positive");
    }
    std::uint64_t& m = merged[{e.source.index, e.target.index}];
    if (m > std::numeric_limits<std::uint64_t>::max() - e.multiplicity) {
      throw std::overflow_error("edge multiplicity overflows 64 bits");
    }
    m += e.multiplicity;
  }
  g.edges_.reserve(merged.size());
  for (const auto& [key, m] : merged) {
    g.edges_.push_back(Edge{NodeId{key.first}, NodeId{key.second}, m});
  }
  build_incidence(n, g.edges_, true, g.in_offsets_, g.in_list_);
  build_incidence(n, g.edges_, false, g.out_offsets_, g.out_list_);
  return g;
}

std::uint64_t MultiGraph::total_multiplicity() const noexcept {
  std::uint64_t total = 0;
  for (const Edge& e : edges_) total += e.multiplicity;
  return total;
}

const std::string& MultiGraph::label(NodeId node) const {
  check(node);
  return labels_[node.index];
}

std::optional<NodeId> MultiGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return NodeId{it->second};
}

NodeId MultiGraph::node(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw std::out_of_range("unknown node label '" + std::string(label) + "'");
}

std::span<const std::size_t> MultiGraph::in_edges(NodeId node) const {
  check(node);
  return std::span<const std::size_t>(in_list_).subspan(
      in_offsets_[node.index], in_offsets_[node.index + 1] - in_offsets_[node.index]);
}

std::span<const std::size_t> MultiGraph::out_edges(NodeId node) const {
  check(node);
  return std::span<const std::size_t>(out_list_).subspan(
      out_offsets_[node.index], out_offsets_[node.index + 1] - out_offsets_[node.index]);
}

std::uint64_t MultiGraph::self_loops(NodeId node) const {
  for (std::size_t k : out_edges(node)) {
    if (edges_[k].target == node) return edges_[k].multiplicity;
  }
  return 0;
}

void MultiGraph::check(NodeId node) const {
  if (!contains(node)) {
    throw std::out_of_range("node index " + std::to_string(node.index) + " out of range (n=" +
                            std::to_string(labels_.size()) + ")");
  }
}

MultiGraph MultiGraph::with_sorted_labels() const {
  std::vector<std::size_t> order(labels_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
  std::vector<std::size_t> new_index(labels_.size());
  std::vector<std::string> labels;
  labels.reserve(labels_.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[order[k]] = k;
    labels.push_back(labels_[order[k]]);
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    edges.push_back({NodeId{new_index[e.source.index]}, NodeId{new_index[e.target.index]},
                     e.multiplicity});
  }
  return from_edges(std::move(labels), edges);
}

MultiGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = seen.emplace(std::string(token), labels.size());
    if (inserted) labels.emplace_back(token);
    return NodeId{it->second};
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected '<src> <dst> [multiplicity]', got " +
                                    std::to_string(tokens.size()) + " field(s)");
    }
    const std::uint64_t m = tokens.size() == 3 ? parse_multiplicity(tokens[2], line_no) : 1;
    const NodeId src = intern(tokens[0]);
    const NodeId dst = intern(tokens[1]);
    edges.push_back({src, dst, m});
    if (eol == text.size()) break;
  }
  return MultiGraph::from_edges(std::move(labels), edges);
}

std::string serialize_edge_list(const MultiGraph& graph) {
  std::ostringstream out;
  for (const Edge& e : graph.edges()) {
    out << graph.label(e.source) << ' ' << graph.label(e.target) << ' ' << e.multiplicity << '\n';
  }
  return out.str();
}

AdjacencyMatrix adjacency_matrix(const MultiGraph& graph) {
  const std::size_t n = graph.node_count();
  AdjacencyMatrix a(n, n, 0);
  for (const Edge& e : graph.edges()) {
    a(e.source.index, e.target.index) += e.multiplicity;
  }
  return a;
}

InducedSubgraph induced_subgraph(const MultiGraph& graph, std::span<const NodeId> nodes) {
  constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> local(graph.node_count(), kAbsent);
  for (NodeId v : nodes) {
    graph.check(v);
    local[v.index] = 0;
  }
  InducedSubgraph sub;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (local[i] == kAbsent) continue;
    local[i] = sub.to_parent.size();
    sub.to_parent.push_back(NodeId{i});
    labels.push_back(graph.labels()[i]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    const std::size_t s = local[e.source.index];
    const std::size_t t = local[e.target.index];
    if (s != kAbsent && t != kAbsent) {
      edges.push_back({NodeId{s}, NodeId{t}, e.multiplicity});
    }
  }
  sub.graph = MultiGraph::from_edges(std::move(labels), edges);
  return sub;
}

bool is_acyclic(const MultiGraph& graph) {
  // Kahn's algorithm; a self-loop keeps its node's in-degree positive forever.
  const std::size_t n = graph.node_count();
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& e : graph.edges()) ++indegree[e.target.index];
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    ++removed;
    for (std::size_t k : graph.out_edges(NodeId{v})) {
      if (--indegree[graph.edges()[k].target.index] == 0) {
        ready.push(graph.edges()[k].target.index);
      }
    }
  }
  return removed == n;
}

}  // namespace branchtool
