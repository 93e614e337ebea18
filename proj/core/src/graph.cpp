#include "pmlg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pmlg {

LabeledGraph::LabeledGraph(bool directed, std::vector<std::string> labels,
                           std::vector<Edge> edges)
    : directed_(directed), labels_(std::move(labels)), edges_(std::move(edges)) {
  const int n = node_count();
  for (int v = 0; v < n; ++v) {
    if (labels_[v].empty()) {
      throw std::invalid_argument("node " + std::to_string(v) + " has an empty label");
    }
    for (unsigned char c : labels_[v]) {
      if (std::isspace(c)) {
        throw std::invalid_argument("node " + std::to_string(v) +
                                    " has whitespace in its label");
      }
    }
  }
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(u));
    }
    if (!directed_ && u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

std::vector<std::vector<int>> LabeledGraph::out_neighbors() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    if (!directed_) adj[v].push_back(u);
  }
  return adj;
}

std::set<char> LabeledGraph::alphabet() const {
  std::set<char> symbols;
  for (const auto& l : labels_) symbols.insert(l.begin(), l.end());
  return symbols;
}

namespace {

// Returns the next significant line, skipping blanks and '#' comments.
// line_no tracks the physical line number of the returned line.
bool next_line(std::istream& in, std::string& out, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out = line;
    return true;
  }
  return false;
}

int parse_int(const std::string& tok, int line, const char* what) {
  try {
    size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
  int line_no = 0;
  std::string line;

  if (!next_line(in, line, line_no)) throw ParseError(0, "empty graph file");
  std::istringstream header(line);
  std::string magic, version, direction;
  header >> magic >> version >> direction;
  if (magic != "pmlg" || version != "1" ||
      (direction != "directed" && direction != "undirected")) {
    throw ParseError(line_no, "malformed header, expected 'pmlg 1 directed|undirected'");
  }
  const bool directed = direction == "directed";

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "missing node/edge count line");
  std::istringstream counts(line);
  std::string ntok, etok, extra;
  counts >> ntok >> etok;
  if (ntok.empty() || etok.empty() || (counts >> extra)) {
    throw ParseError(line_no, "expected '<num_nodes> <num_edges>'");
  }
  const int num_nodes = parse_int(ntok, line_no, "node count");
  const int num_edges = parse_int(etok, line_no, "edge count");
  if (num_nodes < 0 || num_edges < 0) throw ParseError(line_no, "negative count");

  std::vector<std::string> labels(num_nodes);
  std::vector<bool> seen(num_nodes, false);
  for (int i = 0; i < num_nodes; ++i) {
    if (!next_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(num_nodes) + " node lines, got " +
                                    std::to_string(i));
    }
    std::istringstream ls(line);
    std::string tag, idtok, label;
    ls >> tag >> idtok >> label;
    if (tag != "n") throw ParseError(line_no, "expected node line 'n <id> <label>'");
    const int id = parse_int(idtok, line_no, "node id");
    if (id < 0 || id >= num_nodes) {
      throw ParseError(line_no, "node id " + std::to_string(id) + " out of range");
    }
    if (seen[id]) throw ParseError(line_no, "duplicate node id " + std::to_string(id));
    if (label.empty()) throw ParseError(line_no, "empty label on node " + std::to_string(id));
    if (ls >> tag) throw ParseError(line_no, "trailing tokens on node line");
    seen[id] = true;
    labels[id] = std::move(label);
  }

  std::vector<Edge> edges;
  edges.reserve(num_edges);
  for (int i = 0; i < num_edges; ++i) {
    if (!next_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(num_edges) + " edge lines, got " +
                                    std::to_string(i));
    }
    std::istringstream ls(line);
    std::string tag, utok, vtok, extra2;
    ls >> tag >> utok >> vtok;
    if (tag != "e") throw ParseError(line_no, "expected edge line 'e <u> <v>'");
    if (ls >> extra2) throw ParseError(line_no, "trailing tokens on edge line");
    const int u = parse_int(utok, line_no, "edge endpoint");
    const int v = parse_int(vtok, line_no, "edge endpoint");
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes) {
      throw ParseError(line_no, "edge endpoint out of range: " + utok + " " + vtok);
    }
    if (u == v) throw ParseError(line_no, "self-loop on node " + utok);
    edges.emplace_back(u, v);
  }
  if (next_line(in, line, line_no)) throw ParseError(line_no, "unexpected trailing content");

  try {
    return LabeledGraph(directed, std::move(labels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

LabeledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

LabeledGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << "pmlg 1 " << (g.directed() ? "directed" : "undirected") << "\n";
  out << g.node_count() << " " << g.edge_count() << "\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << "n " << v << " " << g.label(v) << "\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "e " << u << " " << v << "\n";
  }
  return out.str();
}

void write_graph_file(const LabeledGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << serialize_graph(g);
}

std::string read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pattern file: " + path);
  std::string pattern;
  std::getline(in, pattern);
  if (!pattern.empty() && pattern.back() == '\r') pattern.pop_back();
  return pattern;
}

void write_pattern_file(const std::string& pattern, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << pattern << "\n";
}

std::vector<Edge> find_bridges(const LabeledGraph& g) {
  if (g.directed()) throw std::invalid_argument("find_bridges requires an undirected graph");
  const int n = g.node_count();

  // Adjacency with edge ids so the DFS skips the tree edge it arrived by.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
  }

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> bridges;
  int timer = 0;

  struct Frame {
    int node;
    int via_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.node].size()) {
        auto [w, eid] = adj[f.node][f.next++];
        if (eid == f.via_edge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else {
          low[f.node] = std::min(low[f.node], disc[w]);
        }
      } else {
        const int child = f.node;
        const int via = f.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().node;
          low[parent] = std::min(low[parent], low[child]);
          if (low[child] > disc[parent]) bridges.push_back(g.edges()[via]);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

DegreeStats max_degree(const LabeledGraph& g) {
  std::vector<int> degree(g.node_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    ++degree[u];
    ++degree[v];
  }
  DegreeStats stats;
  for (int d : degree) stats.max_degree = std::max(stats.max_degree, d);
  stats.max_in_plus_out = stats.max_degree;
  return stats;
}

bool is_dag(const LabeledGraph& g) {
  if (!g.directed()) throw std::invalid_argument("is_dag requires a directed graph");
  const int n = g.node_count();
  std::vector<int> indegree(n, 0);
  auto adj = g.out_neighbors();
  for (const auto& [u, v] : g.edges()) ++indegree[v];

  std::vector<int> queue;
  queue.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  size_t head = 0;
  int processed = 0;
  while (head < queue.size()) {
    const int u = queue[head++];
    ++processed;
    for (int w : adj[u]) {
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  return processed == n;
}

UnitExpansion expand_to_unit_labels(const LabeledGraph& g) {
  UnitExpansion result;
  const int n = g.node_count();
  result.chain_start.resize(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    result.chain_start[v + 1] = result.chain_start[v] + static_cast<int>(g.label(v).size());
  }
  const int total = result.chain_start[n];

  std::vector<std::string> labels(total);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const std::string& l = g.label(v);
    for (size_t t = 0; t < l.size(); ++t) {
      labels[result.chain_start[v] + t] = std::string(1, l[t]);
      if (t + 1 < l.size()) {
        edges.emplace_back(result.chain_start[v] + static_cast<int>(t),
                           result.chain_start[v] + static_cast<int>(t) + 1);
      }
    }
  }
  auto head = [&](int v) { return result.chain_start[v]; };
  auto tail = [&](int v) { return result.chain_start[v + 1] - 1; };
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(tail(u), head(v));
    if (!g.directed()) edges.emplace_back(tail(v), head(u));
  }
  if (!g.directed()) {
    for (auto& [a, b] : edges) {
      if (a > b) std::swap(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  result.graph = LabeledGraph(g.directed(), std::move(labels), std::move(edges));
  return result;
}

}  // namespace pmlg
