#include "pmlg/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmlg {

std::string encode_symbol(char symbol) {
  switch (symbol) {
    case 'c': return "0000";
    case 'd': return "1111";
    case 'b': return "10";
    case 'e': return "01";
  }
  throw std::invalid_argument(std::string("symbol outside {b,e,c,d}: ") + symbol);
}

std::string encode_alpha(std::string_view text) {
  std::string out;
  out.reserve(text.size() * 4);
  for (char c : text) out += encode_symbol(c);
  return out;
}

EncodingTableReport verify_encoding_table() {
  EncodingTableReport report;
  const char alphabet[4] = {'b', 'e', 'c', 'd'};

  for (char a : alphabet) {
    for (char b : alphabet) {
      for (char c : alphabet) {
        const std::string triple{a, b, c};
        ++report.cases_checked;
        const bool has_eb = triple.find("eb") != std::string::npos;
        const bool encodes_0110 = encode_alpha(triple).find("0110") != std::string::npos;
        if (has_eb != encodes_0110) {
          report.violations.push_back("triple " + triple + ": eb=" + (has_eb ? "1" : "0") +
                                      " 0110=" + (encodes_0110 ? "1" : "0"));
        }
      }
    }
  }

  // Length-3 shapes that can occur in a revised pattern (which lies in the
  // language eb ({c,d}+ eb)+): none may contain "be" or encode to hold 1001.
  std::vector<std::string> shapes;
  for (char a : {'c', 'd'}) {
    shapes.push_back(std::string("b") + a + "e");
    shapes.push_back(std::string("eb") + a);
    shapes.push_back(std::string(1, a) + "eb");
    for (char b : {'c', 'd'}) {
      shapes.push_back(std::string("b") + a + b);
      shapes.push_back(std::string(1, a) + b + "e");
      for (char c : {'c', 'd'}) shapes.push_back(std::string(1, a) + b + c);
    }
  }
  for (const std::string& shape : shapes) {
    ++report.cases_checked;
    if (shape.find("be") != std::string::npos) {
      report.violations.push_back("shape " + shape + " contains be");
    }
    if (encode_alpha(shape).find("1001") != std::string::npos) {
      report.violations.push_back("shape " + shape + " encodes 1001");
    }
  }
  return report;
}

std::string build_revised_pattern(const std::string& base_pattern, int n, int k) {
  const std::string padding(n / 2, 'd');
  std::string out = "eb";
  for (const std::string& block : pattern_blocks(base_pattern, k)) {
    out += padding;
    for (int h = 0; h < k; ++h) {
      if (h > 0) out += "dd";
      out += block[h];
    }
    out += padding;
    out += "eb";
  }
  return out;
}

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::vector<NodeRole> roles;
  std::vector<Edge> oriented;

  int add(char label, NodeRole role) {
    labels.emplace_back(1, label);
    roles.push_back(role);
    return static_cast<int>(labels.size()) - 1;
  }
  void link(int from, int to) { oriented.emplace_back(from, to); }
  int size() const { return static_cast<int>(labels.size()); }
};

struct Deg3Gadget {
  std::vector<std::string> labels;
  std::vector<NodeRole> roles;
  std::vector<Edge> oriented;
  int begin_node = -1;
  int end_node = -1;
};

// Inter-column 2-dummy chains shared by both gadgets: left {c?,d} -> f1 ->
// f2 -> right {c?,d}. Absent clause nodes are simply not attached.
void add_pair_chain(Builder& b, Gadget gadget, int j, int h, int left_c, int left_d,
                    int right_c, int right_d) {
  const int f1 = b.add('d', {Role::PairDummy, gadget, j, h});
  const int f2 = b.add('d', {Role::PairDummy, gadget, j, h});
  if (left_c != -1) b.link(left_c, f1);
  b.link(left_d, f1);
  b.link(f1, f2);
  if (right_c != -1) b.link(f2, right_c);
  b.link(f2, right_d);
}

Deg3Gadget build_degree3_gu(int k, int copies, int half) {
  Builder b;
  Deg3Gadget out;
  int prev_end = -1;
  for (int i = 1; i <= copies; ++i) {
    const int begin = b.add('b', {Role::Begin, Gadget::GU1, i, -1});
    int left = begin;
    for (int t = 0; t < half; ++t) {
      const int q = b.add('d', {Role::TreeDummy, Gadget::GU1, i, -1});
      b.link(left, q);
      left = q;
    }
    int prev_c = -1, prev_d = -1;
    for (int h = 1; h <= k; ++h) {
      const int c = b.add('c', {Role::Clause, Gadget::GU1, i, h});
      const int d = b.add('d', {Role::Dummy, Gadget::GU1, i, h});
      if (h == 1) {
        b.link(left, c);
        b.link(left, d);
      } else {
        add_pair_chain(b, Gadget::GU1, i, h - 1, prev_c, prev_d, c, d);
      }
      prev_c = c;
      prev_d = d;
    }
    int right = -1;
    for (int t = 0; t < half; ++t) {
      const int r = b.add('d', {Role::TreeDummy, Gadget::GU1, i, -1});
      if (t == 0) {
        b.link(prev_c, r);
        b.link(prev_d, r);
      } else {
        b.link(right, r);
      }
      right = r;
    }
    const int end = b.add('e', {Role::End, Gadget::GU1, i, -1});
    b.link(right, end);

    if (i == 1) out.begin_node = begin;
    if (prev_end != -1) b.link(prev_end, begin);
    prev_end = end;
  }
  out.end_node = prev_end;
  out.labels = std::move(b.labels);
  out.roles = std::move(b.roles);
  out.oriented = std::move(b.oriented);
  return out;
}

Deg3Gadget build_degree3_gf(const SatisfactionMatrix& matrix, int half) {
  const int rows = matrix.row_count();
  const int k = matrix.clause_count;

  Builder b;
  Deg3Gadget out;
  out.begin_node = b.add('b', {Role::Begin, Gadget::GF, -1, -1});

  // Uniform-depth fan-out tree: level l holds 2^l dummies, leaves (level
  // half) attach row j's first column; every b-to-column path crosses
  // exactly half dummies.
  std::vector<std::vector<int>> btree(half + 1);
  for (int level = 1; level <= half; ++level) {
    btree[level].resize(size_t{1} << level);
    for (int t = 0; t < (1 << level); ++t) {
      btree[level][t] = b.add('d', {Role::TreeDummy, Gadget::GF, -1, -1});
      const int parent = level == 1 ? out.begin_node : btree[level - 1][t / 2];
      b.link(parent, btree[level][t]);
    }
  }

  std::vector<std::vector<int>> clause_id(rows + 1, std::vector<int>(k + 1, -1));
  std::vector<std::vector<int>> dummy_id(rows + 1, std::vector<int>(k + 1, -1));
  for (int j = 1; j <= rows; ++j) {
    for (int h = 1; h <= k; ++h) {
      if (matrix.contains(j, h)) clause_id[j][h] = b.add('c', {Role::Clause, Gadget::GF, j, h});
      dummy_id[j][h] = b.add('d', {Role::Dummy, Gadget::GF, j, h});
      if (h == 1) {
        const int leaf = btree[half][j - 1];
        if (clause_id[j][1] != -1) b.link(leaf, clause_id[j][1]);
        b.link(leaf, dummy_id[j][1]);
      } else {
        add_pair_chain(b, Gadget::GF, j, h - 1, clause_id[j][h - 1], dummy_id[j][h - 1],
                       clause_id[j][h], dummy_id[j][h]);
      }
    }
  }

  // Mirror-image fan-in tree toward e, leaves first.
  std::vector<std::vector<int>> etree(half + 1);
  for (int level = half; level >= 1; --level) {
    etree[level].resize(size_t{1} << level);
    for (int t = 0; t < (1 << level); ++t) {
      etree[level][t] = b.add('d', {Role::TreeDummy, Gadget::GF, -1, -1});
    }
  }
  for (int j = 1; j <= rows; ++j) {
    const int leaf = etree[half][j - 1];
    if (clause_id[j][k] != -1) b.link(clause_id[j][k], leaf);
    b.link(dummy_id[j][k], leaf);
  }
  for (int level = half; level >= 2; --level) {
    for (int t = 0; t < (1 << level); ++t) {
      b.link(etree[level][t], etree[level - 1][t / 2]);
    }
  }
  out.end_node = b.add('e', {Role::End, Gadget::GF, -1, -1});
  b.link(etree[1][0], out.end_node);
  b.link(etree[1][1], out.end_node);

  out.labels = std::move(b.labels);
  out.roles = std::move(b.roles);
  out.oriented = std::move(b.oriented);
  return out;
}

int append_gadget(Builder& global, const Deg3Gadget& part, Gadget tag) {
  const int offset = global.size();
  for (size_t v = 0; v < part.labels.size(); ++v) {
    NodeRole role = part.roles[v];
    role.gadget = tag;
    global.add(part.labels[v][0], role);
  }
  for (const auto& [u, v] : part.oriented) global.link(u + offset, v + offset);
  return offset;
}

std::vector<Edge> label_boundary_edges(const LabeledGraph& g) {
  std::vector<Edge> result;
  for (const auto& [u, v] : g.edges()) {
    if ((g.label(u) == "e" && g.label(v) == "b") || (g.label(u) == "b" && g.label(v) == "e")) {
      result.emplace_back(u, v);
    }
  }
  return result;
}

ReductionStats recompute_stats(const ReductionArtifacts& art) {
  ReductionStats stats;
  stats.n = art.stats.n;
  stats.k = art.stats.k;
  stats.m = static_cast<long long>(art.pattern.size());
  stats.nodes = art.graph.node_count();
  stats.edges = art.graph.edge_count();
  for (const NodeRole& r : art.roles) {
    if (r.role == Role::Clause) ++stats.clause_nodes;
    if (r.role == Role::Dummy || r.role == Role::TreeDummy || r.role == Role::PairDummy) {
      ++stats.dummy_nodes;
    }
  }
  return stats;
}

}  // namespace

ReductionArtifacts to_degree3(const ReductionArtifacts& base) {
  if (base.variant != Variant::Base) {
    throw std::invalid_argument("to_degree3 expects the base variant");
  }
  const int n = base.stats.n;
  const int k = base.stats.k;
  const int half = n / 2;
  const int copies = base.matrix.row_count() - 1;

  ReductionArtifacts art;
  art.variant = Variant::Degree3;
  art.matrix = base.matrix;
  art.pattern = build_revised_pattern(base.pattern, n, k);

  const Deg3Gadget gf = build_degree3_gf(base.matrix, half);
  const Deg3Gadget gu = build_degree3_gu(k, copies, half);

  Builder global;
  const int off_gu1 = append_gadget(global, gu, Gadget::GU1);
  const int entry = global.add('e', {Role::End, Gadget::Extremal, -1, -1});
  const int off_gf = append_gadget(global, gf, Gadget::GF);
  const int off_gu2 = append_gadget(global, gu, Gadget::GU2);
  const int exit = global.add('b', {Role::Begin, Gadget::Extremal, -1, -1});

  global.link(entry, off_gu1 + gu.begin_node);
  global.link(off_gu1 + gu.end_node, off_gf + gf.begin_node);
  global.link(off_gf + gf.end_node, off_gu2 + gu.begin_node);
  global.link(off_gu2 + gu.end_node, exit);

  art.graph = LabeledGraph(false, global.labels, global.oriented);
  art.roles = std::move(global.roles);
  art.oriented_edges = std::move(global.oriented);
  art.stats = recompute_stats(art);
  art.stats.n = n;
  art.stats.k = k;
  art.stats.bridges = label_boundary_edges(art.graph);

  if (max_degree(art.graph).max_degree > 3) {
    throw std::logic_error("degree-3 transform produced a node of degree > 3");
  }
  check_artifacts(art);
  return art;
}

ReductionArtifacts encode_binary(const ReductionArtifacts& deg3) {
  if (deg3.variant != Variant::Degree3) {
    throw std::invalid_argument("encode_binary expects the degree3 variant");
  }

  // Relabel with the code image, then split chains along the construction
  // orientation so each original edge becomes a single tail-to-head edge.
  std::vector<std::string> bit_labels(deg3.graph.node_count());
  for (int v = 0; v < deg3.graph.node_count(); ++v) {
    bit_labels[v] = encode_symbol(deg3.graph.label(v)[0]);
  }
  const LabeledGraph oriented(true, bit_labels, deg3.oriented_edges);
  const UnitExpansion expansion = expand_to_unit_labels(oriented);

  ReductionArtifacts art;
  art.variant = Variant::Binary;
  art.matrix = deg3.matrix;
  art.pattern = encode_alpha(deg3.pattern);
  art.oriented_edges = expansion.graph.edges();
  art.graph = LabeledGraph(false, expansion.graph.labels(), expansion.graph.edges());

  art.roles.resize(art.graph.node_count());
  for (int v = 0; v < deg3.graph.node_count(); ++v) {
    const int len = expansion.chain_start[v + 1] - expansion.chain_start[v];
    for (int t = 0; t < len; ++t) {
      NodeRole role = deg3.roles[v];
      if (t > 0) role.role = Role::BitChain;
      art.roles[expansion.mapped_node(v, t)] = role;
    }
  }

  art.stats = recompute_stats(art);
  art.stats.n = deg3.stats.n;
  art.stats.k = deg3.stats.k;
  for (const auto& [x, y] : deg3.stats.bridges) {
    const int from = deg3.graph.label(x) == "e" ? x : y;  // bridges run e -> b
    const int to = from == x ? y : x;
    Edge mapped{expansion.chain_start[from + 1] - 1, expansion.mapped_node(to, 0)};
    if (mapped.first > mapped.second) std::swap(mapped.first, mapped.second);
    art.stats.bridges.push_back(mapped);
  }
  std::sort(art.stats.bridges.begin(), art.stats.bridges.end());

  if (max_degree(art.graph).max_degree > 3) {
    throw std::logic_error("binary encoding produced a node of degree > 3");
  }
  check_artifacts(art);
  return art;
}

ReductionArtifacts orient_dag(const ReductionArtifacts& input) {
  if (input.variant != Variant::Degree3 && input.variant != Variant::Binary) {
    throw std::invalid_argument("orient_dag expects the degree3 or binary variant");
  }

  ReductionArtifacts art = input;
  art.variant = input.variant == Variant::Degree3 ? Variant::Degree3Dag : Variant::BinaryDag;
  art.graph = LabeledGraph(true, input.graph.labels(), input.oriented_edges);
  art.oriented_edges = art.graph.edges();

  // Bridge endpoints keep their traversal order in the directed graph.
  std::vector<Edge> arcs = art.graph.edges();
  art.stats.bridges.clear();
  for (Edge e : input.stats.bridges) {
    if (!std::binary_search(arcs.begin(), arcs.end(), e)) std::swap(e.first, e.second);
    art.stats.bridges.push_back(e);
  }
  std::sort(art.stats.bridges.begin(), art.stats.bridges.end());

  if (max_degree(art.graph).max_in_plus_out > 3) {
    throw std::logic_error("DAG orientation produced indegree+outdegree > 3");
  }
  check_artifacts(art);
  return art;
}

}  // namespace pmlg
