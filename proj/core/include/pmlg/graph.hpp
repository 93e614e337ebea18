#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmlg {

/// Error raised by the file parsers; carries the 1-based line number of the
/// offending input line (0 when no line applies, e.g. truncated input).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using Edge = std::pair<int, int>;

/// Immutable node-labeled graph. Nodes are dense ids 0..n-1, each carrying a
/// nonempty label string. Undirected edges are stored canonically with
/// u <= v; the edge list is sorted and duplicate-free. Self-loops are
/// rejected. Safe for concurrent reads once constructed.
class LabeledGraph {
 public:
  LabeledGraph() : directed_(false) {}
  LabeledGraph(bool directed, std::vector<std::string> labels, std::vector<Edge> edges);

  bool directed() const { return directed_; }
  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors reachable by one step from each node (undirected graphs list
  /// both endpoints; directed graphs list arc heads only).
  std::vector<std::vector<int>> out_neighbors() const;

  /// Set of symbols appearing in any label.
  std::set<char> alphabet() const;

  bool operator==(const LabeledGraph& other) const = default;

 private:
  bool directed_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

/// Parses the line-oriented graph format:
///   pmlg 1 directed|undirected
///   <num_nodes> <num_edges>
///   n <id> <label>     (num_nodes lines; label nonempty, no whitespace)
///   e <u> <v>          (num_edges lines)
/// Lines starting with '#' and blank lines are ignored. Throws ParseError.
LabeledGraph parse_graph(std::istream& in);
LabeledGraph parse_graph(const std::string& text);
LabeledGraph parse_graph_file(const std::string& path);

/// Canonical serialization: nodes in id order, undirected edges with u <= v,
/// edges sorted lexicographically. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const LabeledGraph& g);
void write_graph_file(const LabeledGraph& g, const std::string& path);

/// Pattern file: a single line holding the pattern string.
std::string read_pattern_file(const std::string& path);
void write_pattern_file(const std::string& pattern, const std::string& path);

/// Edges whose removal increases the number of connected components.
/// Undirected input only. Result is sorted, endpoints canonical u <= v.
std::vector<Edge> find_bridges(const LabeledGraph& g);

struct DegreeStats {
  int max_degree = 0;       // incident edges ignoring direction
  int max_in_plus_out = 0;  // for directed graphs; equals max_degree otherwise
};
DegreeStats max_degree(const LabeledGraph& g);

/// True iff the directed graph has no directed cycle. Directed input only.
bool is_dag(const LabeledGraph& g);

/// Result of splitting every node into a chain of single-symbol nodes.
/// The node for (original node v, label offset t) is chain_start[v] + t.
struct UnitExpansion {
  LabeledGraph graph;
  std::vector<int> chain_start;  // size node_count()+1, last entry = new node count

  int mapped_node(int original, int offset) const { return chain_start[original] + offset; }
};

/// Replaces each node whose label has length L by a chain of L single-symbol
/// nodes. A directed edge u->v becomes tail(u)->head(v); an undirected edge
/// {u,v} becomes {tail(u),head(v)} and {tail(v),head(u)} so the label of
/// either endpoint can be read first.
UnitExpansion expand_to_unit_labels(const LabeledGraph& g);

}  // namespace pmlg
