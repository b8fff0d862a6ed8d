#include "branchtool/asymptotics.hpp"
#include "branchtool/cli.hpp"
#include "branchtool/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace branchtool::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kHeadLength = 11;
constexpr std::size_t kTailLength = 5;
constexpr std::size_t kOracleLength = 8;
constexpr std::size_t kCesaroSteps[] = {100, 1000, 10000};

MultiGraph load_graph(const Request& req) {
  std::ifstream in(req.graph_path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open graph file");
  std::ostringstream text;
  text << in.rdbuf();
  MultiGraph g = parse_edge_list(text.str());
  return req.sort_labels ? g.with_sorted_labels() : g;
}

std::vector<NodeId> select_nodes(const MultiGraph& g, const Request& req) {
  std::vector<NodeId> out;
  if (req.nodes.empty()) {
    for (std::size_t i = 0; i < g.node_count(); ++i) out.push_back(NodeId{i});
    return out;
  }
  for (const std::string& label : req.nodes) {
    const auto id = g.find(label);
    if (!id) throw std::invalid_argument("unknown node label '" + label + "'");
    out.push_back(*id);
  }
  return out;
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

json tool_section(const Request& req) {
  return {{"name", "branchtool"}, {"version", version()}, {"seed", req.seed}};
}

json labels_of(const MultiGraph& g, const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId v : nodes) out.push_back(g.label(v));
  return out;
}

json graph_section(const MultiGraph& g, const SccDecomposition& scc) {
  return {{"nodes", g.node_count()},
          {"edges", g.edge_count()},
          {"total_multiplicity", g.total_multiplicity()},
          {"sccs", scc.size()}};
}

json string_list(std::span<const BigInt> values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(v.str());
  return out;
}

void emit_json(const json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

/// Largest m <= limit whose enumeration a(0) + ... + a(m) fits the budget.
std::size_t oracle_length(const WalkCountSeries& s, std::size_t limit, std::uint64_t budget) {
  BigInt total = 0;
  std::size_t m = 0;
  for (std::size_t l = 0; l <= std::min(limit, s.max_length()); ++l) {
    total += s.counts[l];
    if (total > budget) break;
    m = l;
  }
  return m;
}

// analyze ------------------------------------------------------------------

struct NodeResult {
  BranchingRatioReport report;
  RatioAnalysis ratios;
  std::optional<AsymptoticProfile> profile;
  std::optional<SandwichCheck> sandwich;
  std::size_t oracle_length = 0;
  bool oracle_match = false;
};

NodeResult analyze_node(const GraphAnalysis& analysis, NodeId node, const Request& req) {
  const MultiGraph& g = analysis.graph();
  NodeResult r;
  r.report = analysis.branching_ratio(node);
  const WalkCountSeries& series = analysis.series(node);
  r.ratios = ratio_sequence(series);
  if (r.report.delta > 0.0) {
    const std::size_t d = degree_bound(analysis.scc(), analysis.upstream_of(node), r.report.critical_sccs);
    if (series.counts.size() >= 3 * r.report.g * (d + 2)) {
      r.profile = fit_asymptotics(series, r.report.delta, r.report.g, d);
    }
    r.sandwich = sandwich_check(series, r.report.delta, d + 2);
  }
  r.oracle_length = oracle_length(series, kOracleLength, req.budget);
  const WalkCountSeries brute = brute_force_walk_count(g, node, r.oracle_length, req.budget);
  r.oracle_match = std::equal(brute.counts.begin(), brute.counts.end(), series.counts.begin());
  return r;
}

json node_json(const GraphAnalysis& analysis, const NodeResult& r) {
  const MultiGraph& g = analysis.graph();
  const WalkCountSeries& series = analysis.series(r.report.node);
  json j;
  j["label"] = g.label(r.report.node);
  j["index"] = r.report.node.index;
  j["delta"] = r.report.delta;
  j["method"] = r.report.method;
  j["upstream_sccs"] = r.report.upstream_sccs;
  j["critical_sccs"] = r.report.critical_sccs;
  j["g"] = r.report.g;
  j["empirical_estimate"] = r.report.empirical_estimate;
  j["agreement"] = r.report.agreement;

  json ratio;
  ratio["verdict"] = to_string(r.ratios.verdict);
  ratio["period"] = r.ratios.period;
  ratio["limits"] = r.ratios.limits;
  j["ratio"] = ratio;

  if (r.profile) {
    json p;
    p["rho"] = r.profile->rho;
    p["g"] = r.profile->g;
    p["degree_bound"] = r.profile->degree_bound;
    p["window"] = {r.profile->window_begin, r.profile->window_end};
    json fits = json::array();
    for (const ResidueFit& f : r.profile->residue_fits) {
      fits.push_back({{"residue", f.residue},
                      {"coefficients", f.coefficients},
                      {"effective_degree", f.effective_degree},
                      {"eventually_positive", f.eventually_positive},
                      {"residual", f.residual}});
    }
    p["residues"] = fits;
    j["asymptotics"] = p;
  } else {
    j["asymptotics"] = nullptr;
  }

  if (r.sandwich) {
    j["sandwich"] = {{"exponent", r.sandwich->exponent},
                     {"lower_constant", r.sandwich->lower_constant},
                     {"window", {r.sandwich->window_begin, r.sandwich->window_end}},
                     {"pass", r.sandwich->pass}};
  } else {
    j["sandwich"] = nullptr;
  }

  const std::span<const BigInt> counts(series.counts);
  const std::size_t head = std::min(kHeadLength, counts.size());
  const std::size_t tail = counts.size() > head ? std::min(kTailLength, counts.size() - head) : 0;
  j["series"] = {{"max_length", series.max_length()},
                 {"head", string_list(counts.first(head))},
                 {"tail", string_list(counts.last(tail))}};
  j["oracle"] = {{"length", r.oracle_length}, {"match", r.oracle_match}};
  return j;
}

AnalysisOptions analysis_options(const Request& req) {
  AnalysisOptions opts;
  opts.perron.tolerance = req.tolerance;
  opts.empirical_length = req.max_length;
  return opts;
}

json component_summary(const GraphAnalysis& analysis) {
  const MultiGraph& g = analysis.graph();
  json out = json::array();
  for (std::size_t c = 0; c < analysis.scc().size(); ++c) {
    out.push_back({{"index", c},
                   {"nodes", labels_of(g, analysis.scc().components[c])},
                   {"trivial", analysis.component_trivial(c)},
                   {"rho", analysis.component_perron(c).rho},
                   {"period", analysis.component_period(c).h}});
  }
  return out;
}

std::string join_labels(const GraphAnalysis& analysis, std::span<const std::size_t> comps) {
  std::string out;
  for (std::size_t c : comps) {
    if (!out.empty()) out += ' ';
    out += '{';
    bool first = true;
    for (NodeId v : analysis.scc().components[c]) {
      if (!first) out += ',';
      out += analysis.graph().label(v);
      first = false;
    }
    out += '}';
  }
  return out.empty() ? "-" : out;
}

void cmd_analyze(const Request& req, std::ostream& out) {
  const MultiGraph g = load_graph(req);
  const std::vector<NodeId> nodes = select_nodes(g, req);
  const GraphAnalysis analysis(g, analysis_options(req));
  std::vector<NodeResult> results;
  for (NodeId v : nodes) results.push_back(analyze_node(analysis, v, req));

  if (req.format == Format::kJson) {
    json doc;
    doc["tool"] = tool_section(req);
    doc["command"] = "analyze";
    doc["graph"] = graph_section(g, analysis.scc());
    doc["components"] = component_summary(analysis);
    doc["parameters"] = {{"max_length", req.max_length},
                         {"tolerance", req.tolerance},
                         {"tie_tolerance", analysis.options().tie_tolerance},
                         {"budget", req.budget}};
    json list = json::array();
    for (const NodeResult& r : results) list.push_back(node_json(analysis, r));
    doc["nodes"] = list;
    emit_json(doc, out);
    return;
  }
  if (req.format == Format::kCsv) {
    out << "node,delta,g,degree_bound,empirical,agreement,ratio_verdict,sandwich_pass,oracle_match\n";
    for (const NodeResult& r : results) {
      out << g.label(r.report.node) << ',' << num(r.report.delta) << ',' << r.report.g << ','
          << (r.profile ? std::to_string(r.profile->degree_bound) : "") << ',' << num(r.report.empirical_estimate)
          << ',' << num(r.report.agreement) << ',' << to_string(r.ratios.verdict) << ','
          << (r.sandwich ? (r.sandwich->pass ? "true" : "false") : "") << ','
          << (r.oracle_match ? "true" : "false") << '\n';
    }
    return;
  }
  out << "graph: " << g.node_count() << " nodes, " << g.edge_count() << " edges, " << analysis.scc().size()
      << " SCCs\n";
  for (const NodeResult& r : results) {
    out << "\nnode " << g.label(r.report.node) << '\n';
    out << "  delta        " << num(r.report.delta) << '\n';
    out << "  empirical    " << num(r.report.empirical_estimate) << " (L=" << analysis.series(r.report.node).max_length()
        << ", |diff| " << num(r.report.agreement) << ")\n";
    out << "  upstream     " << join_labels(analysis, r.report.upstream_sccs) << '\n';
    out << "  critical     " << join_labels(analysis, r.report.critical_sccs) << '\n';
    out << "  g            " << r.report.g << '\n';
    out << "  ratios       " << to_string(r.ratios.verdict);
    if (r.ratios.period > 0) {
      out << " (period " << r.ratios.period << ", limits";
      for (double x : r.ratios.limits) out << ' ' << num(x);
      out << ')';
    }
    out << '\n';
    if (r.profile) {
      out << "  fit window   [" << r.profile->window_begin << ", " << r.profile->window_end << "], D = "
          << r.profile->degree_bound << '\n';
      for (const ResidueFit& f : r.profile->residue_fits) {
        out << "    R_" << f.residue << "(l) =";
        for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
          out << (k == 0 ? " " : " + ") << num(f.coefficients[k]);
          if (k == 1) out << " l";
          if (k > 1) out << " l^" << k;
        }
        out << "   residual " << num(f.residual) << '\n';
      }
    }
    if (r.sandwich) {
      out << "  sandwich     " << (r.sandwich->pass ? "pass" : "fail") << " (c = " << num(r.sandwich->lower_constant)
          << ", r = " << r.sandwich->exponent << ", window [" << r.sandwich->window_begin << ", "
          << r.sandwich->window_end << "])\n";
    }
    out << "  oracle       " << (r.oracle_match ? "match" : "MISMATCH") << " up to l = " << r.oracle_length << '\n';
  }
}

// walks --------------------------------------------------------------------

struct WalkRow {
  std::string ratio;
  std::string root;
};

WalkRow walk_row(const WalkCountSeries& s, std::size_t l) {
  WalkRow row;
  if (l > 0 && s.counts[l - 1] != 0) row.ratio = num(ratio_to_double(s.counts[l], s.counts[l - 1]));
  if (l > 0) row.root = s.counts[l] == 0 ? "0" : num(std::exp(log_big(s.counts[l]) / static_cast<double>(l)));
  return row;
}

void cmd_walks(const Request& req, std::ostream& out) {
  const MultiGraph g = load_graph(req);
  const std::vector<NodeId> nodes = select_nodes(g, req);
  const std::vector<WalkCountSeries> all = walk_counts_all(g, req.max_length);

  if (req.format == Format::kJson) {
    json doc;
    doc["tool"] = tool_section(req);
    doc["command"] = "walks";
    doc["graph"] = graph_section(g, scc_decompose(g));
    json list = json::array();
    for (NodeId v : nodes) {
      const RatioAnalysis ratios = ratio_sequence(all[v.index]);
      list.push_back({{"label", g.label(v)},
                      {"index", v.index},
                      {"max_length", req.max_length},
                      {"counts", string_list(all[v.index].counts)},
                      {"empirical_branching_ratio", empirical_branching_ratio(all[v.index])},
                      {"ratio", {{"verdict", to_string(ratios.verdict)},
                                 {"period", ratios.period},
                                 {"limits", ratios.limits}}}});
    }
    doc["nodes"] = list;
    emit_json(doc, out);
    return;
  }
  if (req.format == Format::kCsv) {
    out << "length,count,ratio,root,node\n";
    for (NodeId v : nodes) {
      const WalkCountSeries& s = all[v.index];
      for (std::size_t l = 0; l <= req.max_length; ++l) {
        const WalkRow row = walk_row(s, l);
        out << l << ',' << s.counts[l].str() << ',' << row.ratio << ',' << row.root << ',' << g.label(v) << '\n';
      }
    }
    return;
  }
  for (NodeId v : nodes) {
    const WalkCountSeries& s = all[v.index];
    out << "node " << g.label(v) << '\n';
    out << std::setw(6) << "l" << "  " << std::setw(20) << "a(l)" << "  " << std::setw(14) << "a(l)/a(l-1)"
        << "  " << std::setw(14) << "a(l)^(1/l)" << '\n';
    for (std::size_t l = 0; l <= req.max_length; ++l) {
      const WalkRow row = walk_row(s, l);
      out << std::setw(6) << l << "  " << std::setw(20) << s.counts[l].str() << "  " << std::setw(14)
          << (row.ratio.empty() ? "-" : row.ratio) << "  " << std::setw(14) << (row.root.empty() ? "-" : row.root)
          << '\n';
    }
  }
}

// tree ---------------------------------------------------------------------

std::vector<std::size_t> empty_levels(const InputTree& tree) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < tree.levels.size(); ++l) {
    if (tree.levels[l].empty()) out.push_back(l);
  }
  return out;
}

void print_subtree(const MultiGraph& g, const InputTree& tree,
                   const std::vector<std::vector<std::vector<std::size_t>>>& children, std::size_t level,
                   std::size_t index, std::ostream& out) {
  const TreeNode& t = tree.levels[level][index];
  out << std::string(2 * level, ' ') << g.label(t.node);
  if (t.edge != TreeNode::kNone) {
    const Edge& e = g.edges()[t.edge];
    out << "  [" << g.label(e.source) << " -> " << g.label(e.target);
    if (e.multiplicity > 1) out << " #" << t.copy + 1 << '/' << e.multiplicity;
    out << ']';
  }
  out << '\n';
  if (level + 1 >= tree.levels.size()) return;
  for (std::size_t child : children[level][index]) print_subtree(g, tree, children, level + 1, child, out);
}

void cmd_tree(const Request& req, std::ostream& out) {
  const MultiGraph g = load_graph(req);
  const std::vector<NodeId> nodes = select_nodes(g, req);
  std::vector<InputTree> trees;
  for (NodeId v : nodes) trees.push_back(input_tree(g, v, req.depth, req.budget));

  if (req.format == Format::kJson) {
    json doc;
    doc["tool"] = tool_section(req);
    doc["command"] = "tree";
    doc["graph"] = graph_section(g, scc_decompose(g));
    json list = json::array();
    for (const InputTree& tree : trees) {
      json levels = json::array();
      for (const auto& level : tree.levels) {
        json row = json::array();
        for (const TreeNode& t : level) {
          json entry{{"node", g.label(t.node)}};
          if (t.edge == TreeNode::kNone) {
            entry["parent"] = nullptr;
            entry["edge"] = nullptr;
          } else {
            const Edge& e = g.edges()[t.edge];
            entry["parent"] = t.parent;
            entry["edge"] = {{"source", g.label(e.source)}, {"target", g.label(e.target)}, {"copy", t.copy}};
          }
          row.push_back(entry);
        }
        levels.push_back(row);
      }
      const auto first_empty = tree.first_empty_level();
      list.push_back({{"root", g.label(tree.root)},
                      {"depth", tree.depth},
                      {"level_sizes", tree.level_sizes()},
                      {"levels", levels},
                      {"finite", first_empty.has_value()},
                      {"first_empty_level", first_empty ? json(*first_empty) : json(nullptr)},
                      {"empty_levels", empty_levels(tree)}});
    }
    doc["trees"] = list;
    emit_json(doc, out);
    return;
  }
  if (req.format == Format::kCsv) {
    out << "root,level,index,node,parent,edge_source,edge_target,copy\n";
    for (const InputTree& tree : trees) {
      for (std::size_t l = 0; l < tree.levels.size(); ++l) {
        for (std::size_t k = 0; k < tree.levels[l].size(); ++k) {
          const TreeNode& t = tree.levels[l][k];
          out << g.label(tree.root) << ',' << l << ',' << k << ',' << g.label(t.node) << ',';
          if (t.edge == TreeNode::kNone) {
            out << ",,,\n";
          } else {
            const Edge& e = g.edges()[t.edge];
            out << t.parent << ',' << g.label(e.source) << ',' << g.label(e.target) << ',' << t.copy << '\n';
          }
        }
      }
    }
    return;
  }
  for (const InputTree& tree : trees) {
    // children[l][k]: indices in level l+1 whose parent is node k of level l.
    std::vector<std::vector<std::vector<std::size_t>>> children(tree.levels.size());
    for (std::size_t l = 0; l < tree.levels.size(); ++l) {
      children[l].resize(tree.levels[l].size());
      if (l == 0) continue;
      for (std::size_t k = 0; k < tree.levels[l].size(); ++k) {
        children[l - 1][tree.levels[l][k].parent].push_back(k);
      }
    }
    out << "input tree of " << g.label(tree.root) << ", depth " << tree.depth << '\n';
    print_subtree(g, tree, children, 0, 0, out);
    out << "level sizes:";
    for (std::size_t s : tree.level_sizes()) out << ' ' << s;
    out << '\n';
    if (const auto first_empty = tree.first_empty_level()) {
      out << "levels " << *first_empty << ".." << tree.depth << " are empty (finite tree)\n";
    }
  }
}

// spectrum -----------------------------------------------------------------

struct ComponentSpectrum {
  std::size_t index = 0;
  std::optional<SpectrumEstimate> spectrum;
  std::size_t peripheral = 0;
  std::vector<double> cesaro;  // deviations at kCesaroSteps
};

void cmd_spectrum(const Request& req, std::ostream& out) {
  const MultiGraph g = load_graph(req);
  const GraphAnalysis analysis(g, analysis_options(req));

  // Restrict to components upstream of the selected nodes when a selector is given.
  std::vector<bool> wanted(analysis.scc().size(), req.nodes.empty());
  for (NodeId v : req.nodes.empty() ? std::vector<NodeId>{} : select_nodes(g, req)) {
    for (std::size_t c : analysis.upstream_of(v).scc_chain) wanted[c] = true;
  }

  std::vector<ComponentSpectrum> comps;
  for (std::size_t c = 0; c < analysis.scc().size(); ++c) {
    if (!wanted[c]) continue;
    ComponentSpectrum cs;
    cs.index = c;
    const AdjacencyMatrix& block = analysis.component_block(c);
    const PerronData& pd = analysis.component_perron(c);
    if (block.rows() <= kSmallSpectrumLimit) {
      cs.spectrum = spectrum_small(block, req.seed);
      cs.peripheral = analysis.component_trivial(c) ? 0 : peripheral_count(*cs.spectrum, pd.rho);
      if (!analysis.component_trivial(c)) {
        const Matrix<double> limit = perron_projector(pd);
        for (std::size_t k : kCesaroSteps) cs.cesaro.push_back(max_abs_difference(cesaro_average(block, pd, k), limit));
      }
    }
    comps.push_back(std::move(cs));
  }

  if (req.format == Format::kJson) {
    json doc;
    doc["tool"] = tool_section(req);
    doc["command"] = "spectrum";
    doc["graph"] = graph_section(g, analysis.scc());
    json list = json::array();
    for (const ComponentSpectrum& cs : comps) {
      const PerronData& pd = analysis.component_perron(cs.index);
      json j{{"index", cs.index},
             {"nodes", labels_of(g, analysis.scc().components[cs.index])},
             {"trivial", analysis.component_trivial(cs.index)},
             {"rho", pd.rho},
             {"period", analysis.component_period(cs.index).h},
             {"left", pd.left},
             {"right", pd.right},
             {"iterations", pd.iterations},
             {"residual", pd.residual}};
      if (cs.spectrum) {
        json eig = json::array();
        for (const auto& z : cs.spectrum->eigenvalues) eig.push_back({z.real(), z.imag()});
        j["eigenvalues"] = eig;
        j["method"] = cs.spectrum->method;
        j["characteristic"] = string_list(cs.spectrum->characteristic.coefficients());
        j["peripheral_count"] = cs.peripheral;
      } else {
        j["eigenvalues"] = nullptr;
        j["method"] = nullptr;
        j["characteristic"] = nullptr;
        j["peripheral_count"] = nullptr;
      }
      if (cs.cesaro.empty()) {
        j["cesaro"] = nullptr;
      } else {
        json steps = json::array();
        for (std::size_t k : kCesaroSteps) steps.push_back(k);
        j["cesaro"] = {{"k", steps}, {"deviation", cs.cesaro}};
      }
      list.push_back(j);
    }
    doc["components"] = list;
    emit_json(doc, out);
    return;
  }
  if (req.format == Format::kCsv) {
    out << "component,rho,period,eigen_re,eigen_im\n";
    for (const ComponentSpectrum& cs : comps) {
      if (!cs.spectrum) continue;
      for (const auto& z : cs.spectrum->eigenvalues) {
        out << cs.index << ',' << num(analysis.component_perron(cs.index).rho) << ','
            << analysis.component_period(cs.index).h << ',' << num(z.real()) << ',' << num(z.imag()) << '\n';
      }
    }
    return;
  }
  for (const ComponentSpectrum& cs : comps) {
    const std::size_t c = cs.index;
    out << "component " << c << ' ' << join_labels(analysis, std::vector<std::size_t>{c})
        << (analysis.component_trivial(c) ? " (trivial)" : "") << '\n';
    out << "  rho          " << num(analysis.component_perron(c).rho) << '\n';
    out << "  period h     " << analysis.component_period(c).h << '\n';
    if (cs.spectrum) {
      out << "  eigenvalues ";
      for (const auto& z : cs.spectrum->eigenvalues) {
        out << ' ' << num(z.real());
        if (z.imag() != 0.0) out << (z.imag() < 0 ? "-" : "+") << num(std::abs(z.imag())) << 'i';
      }
      out << "\n  peripheral   " << cs.peripheral << '\n';
    } else {
      out << "  eigenvalues  (block larger than " << kSmallSpectrumLimit << ", skipped)\n";
    }
    if (!cs.cesaro.empty()) {
      out << "  cesaro dev  ";
      for (std::size_t k = 0; k < cs.cesaro.size(); ++k) out << " k=" << kCesaroSteps[k] << ':' << num(cs.cesaro[k]);
      out << '\n';
    }
  }
}

}  // namespace

void execute(const Request& request, std::ostream& out) {
  if (request.command == "analyze") return cmd_analyze(request, out);
  if (request.command == "walks") return cmd_walks(request, out);
  if (request.command == "tree") return cmd_tree(request, out);
  if (request.command == "spectrum") return cmd_spectrum(request, out);
  throw std::invalid_argument("unknown command '" + request.command + "'");
}

}  // namespace branchtool::cli
