#include "pmlg/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pmlg {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Base: return "base";
    case Variant::Degree3: return "degree3";
    case Variant::Binary: return "binary";
    case Variant::Degree3Dag: return "degree3_dag";
    case Variant::BinaryDag: return "binary_dag";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "base") return Variant::Base;
  if (name == "degree3") return Variant::Degree3;
  if (name == "binary") return Variant::Binary;
  if (name == "degree3_dag") return Variant::Degree3Dag;
  if (name == "binary_dag") return Variant::BinaryDag;
  throw std::invalid_argument("unknown variant: " + name);
}

std::string role_name(Role r) {
  switch (r) {
    case Role::Begin: return "begin";
    case Role::End: return "end";
    case Role::Clause: return "clause";
    case Role::Dummy: return "dummy";
    case Role::TreeDummy: return "tree_dummy";
    case Role::PairDummy: return "pair_dummy";
    case Role::BitChain: return "bit_chain";
  }
  return "?";
}

std::string gadget_name(Gadget g) {
  switch (g) {
    case Gadget::GF: return "gf";
    case Gadget::GU1: return "gu1";
    case Gadget::GU2: return "gu2";
    case Gadget::Extremal: return "extremal";
  }
  return "?";
}

namespace {

Role role_from_name(const std::string& name) {
  if (name == "begin") return Role::Begin;
  if (name == "end") return Role::End;
  if (name == "clause") return Role::Clause;
  if (name == "dummy") return Role::Dummy;
  if (name == "tree_dummy") return Role::TreeDummy;
  if (name == "pair_dummy") return Role::PairDummy;
  if (name == "bit_chain") return Role::BitChain;
  throw std::invalid_argument("unknown role: " + name);
}

Gadget gadget_from_name(const std::string& name) {
  if (name == "gf") return Gadget::GF;
  if (name == "gu1") return Gadget::GU1;
  if (name == "gu2") return Gadget::GU2;
  if (name == "extremal") return Gadget::Extremal;
  throw std::invalid_argument("unknown gadget: " + name);
}

int half_space_size(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("reduction requires even n >= 2");
  return 1 << (n / 2);
}

// Sequential node allocation with role tracking and oriented edge list.
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

LabeledGraph to_undirected_graph(const Builder& b) {
  return LabeledGraph(false, b.labels, b.oriented);
}

}  // namespace

bool SatisfactionMatrix::contains(int j, int h) const {
  const auto& row = rows[j - 1];
  return std::binary_search(row.begin(), row.end(), h);
}

std::string build_pattern(const CnfFormula& f) {
  f.validate();
  const int count = half_space_size(f.n);
  const auto halves = enumerate_half_assignments(f.n, Half::First);
  std::string pattern = "eb";
  pattern.reserve(2 + static_cast<size_t>(count) * (f.clause_count() + 2));
  for (const HalfAssignment& x : halves) {
    for (const Clause& c : f.clauses) pattern += half_satisfies(x, c) ? 'd' : 'c';
    pattern += "eb";
  }
  return pattern;
}

SatisfactionMatrix build_satisfaction_matrix(const CnfFormula& f) {
  f.validate();
  half_space_size(f.n);
  SatisfactionMatrix matrix;
  matrix.clause_count = f.clause_count();
  for (const HalfAssignment& y : enumerate_half_assignments(f.n, Half::Second)) {
    std::vector<int> row;
    for (int h = 1; h <= f.clause_count(); ++h) {
      if (half_satisfies(y, f.clauses[h - 1])) row.push_back(h);
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

GadgetGraph build_gadget_gf(const SatisfactionMatrix& matrix) {
  const int rows = matrix.row_count();
  const int k = matrix.clause_count;
  if (rows < 1 || k < 1) throw std::invalid_argument("empty satisfaction matrix");

  Builder b;
  GadgetGraph out;
  out.begin_node = b.add('b', {Role::Begin, Gadget::GF, -1, -1});
  std::vector<std::vector<int>> clause_id(rows + 1, std::vector<int>(k + 1, -1));
  std::vector<std::vector<int>> dummy_id(rows + 1, std::vector<int>(k + 1, -1));
  for (int j = 1; j <= rows; ++j) {
    for (int h = 1; h <= k; ++h) {
      if (matrix.contains(j, h)) clause_id[j][h] = b.add('c', {Role::Clause, Gadget::GF, j, h});
      dummy_id[j][h] = b.add('d', {Role::Dummy, Gadget::GF, j, h});
    }
  }
  out.end_node = b.add('e', {Role::End, Gadget::GF, -1, -1});

  for (int j = 1; j <= rows; ++j) {
    if (clause_id[j][1] != -1) b.link(out.begin_node, clause_id[j][1]);
    b.link(out.begin_node, dummy_id[j][1]);
  }
  for (int j = 1; j <= rows; ++j) {
    for (int h = 1; h < k; ++h) {
      const int left[2] = {clause_id[j][h], dummy_id[j][h]};
      const int right[2] = {clause_id[j][h + 1], dummy_id[j][h + 1]};
      for (int a : left) {
        if (a == -1) continue;
        for (int c : right) {
          if (c != -1) b.link(a, c);
        }
      }
    }
  }
  for (int j = 1; j <= rows; ++j) {
    if (clause_id[j][k] != -1) b.link(clause_id[j][k], out.end_node);
    b.link(dummy_id[j][k], out.end_node);
  }

  out.graph = to_undirected_graph(b);
  out.roles = std::move(b.roles);
  out.oriented_edges = std::move(b.oriented);
  return out;
}

GadgetGraph build_gadget_gf(const CnfFormula& f) {
  return build_gadget_gf(build_satisfaction_matrix(f));
}

GadgetGraph build_gadget_gu(int k, int copies) {
  if (k < 1 || copies < 1) throw std::invalid_argument("universal gadget needs k >= 1, copies >= 1");

  Builder b;
  GadgetGraph out;
  int prev_end = -1;
  for (int i = 1; i <= copies; ++i) {
    const int begin = b.add('b', {Role::Begin, Gadget::GU1, i, -1});
    std::vector<int> crow(k + 1), drow(k + 1);
    for (int h = 1; h <= k; ++h) crow[h] = b.add('c', {Role::Clause, Gadget::GU1, i, h});
    for (int h = 1; h <= k; ++h) drow[h] = b.add('d', {Role::Dummy, Gadget::GU1, i, h});
    const int end = b.add('e', {Role::End, Gadget::GU1, i, -1});

    b.link(begin, crow[1]);
    b.link(begin, drow[1]);
    for (int h = 1; h < k; ++h) {
      b.link(crow[h], crow[h + 1]);
      b.link(crow[h], drow[h + 1]);
      b.link(drow[h], crow[h + 1]);
      b.link(drow[h], drow[h + 1]);
    }
    b.link(crow[k], end);
    b.link(drow[k], end);

    if (i == 1) out.begin_node = begin;
    if (prev_end != -1) b.link(prev_end, begin);
    prev_end = end;
  }
  out.end_node = prev_end;
  out.graph = to_undirected_graph(b);
  out.roles = std::move(b.roles);
  out.oriented_edges = std::move(b.oriented);
  return out;
}

GadgetGraph build_gadget_gu(const CnfFormula& f, int copies) {
  f.validate();
  return build_gadget_gu(f.clause_count(), copies);
}

namespace {

// Relocates a gadget into the global builder at the next free id.
int append_gadget(Builder& global, const GadgetGraph& part, Gadget tag) {
  const int offset = global.size();
  for (int v = 0; v < part.graph.node_count(); ++v) {
    NodeRole role = part.roles[v];
    if (role.gadget != Gadget::Extremal) role.gadget = tag;
    global.add(part.graph.label(v)[0], role);
  }
  for (const auto& [u, v] : part.oriented_edges) {
    global.link(u + offset, v + offset);
  }
  return offset;
}

std::vector<Edge> label_boundary_edges(const LabeledGraph& g) {
  std::vector<Edge> result;
  for (const auto& [u, v] : g.edges()) {
    const std::string& lu = g.label(u);
    const std::string& lv = g.label(v);
    if ((lu == "e" && lv == "b") || (lu == "b" && lv == "e")) result.emplace_back(u, v);
  }
  return result;
}

ReductionStats compute_stats(const ReductionArtifacts& art, int n, int k) {
  ReductionStats stats;
  stats.n = n;
  stats.k = k;
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

ReductionArtifacts build_full_graph(const CnfFormula& f) {
  f.validate();
  if (f.n > 20) {
    throw std::invalid_argument("reduction generation is guarded to n <= 20, got n = " +
                                std::to_string(f.n));
  }
  const int rows = half_space_size(f.n);
  const int k = f.clause_count();
  const int copies = rows - 1;

  ReductionArtifacts art;
  art.variant = Variant::Base;
  art.pattern = build_pattern(f);
  art.matrix = build_satisfaction_matrix(f);

  const GadgetGraph gf = build_gadget_gf(art.matrix);
  const GadgetGraph gu = build_gadget_gu(k, copies);

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

  art.graph = to_undirected_graph(global);
  art.roles = std::move(global.roles);
  art.oriented_edges = std::move(global.oriented);
  art.stats = compute_stats(art, f.n, k);
  art.stats.bridges = label_boundary_edges(art.graph);

  const SizeFormula predicted = predicted_base_sizes(art.matrix, f.n);
  if (art.stats.m != predicted.m || art.stats.nodes != predicted.nodes ||
      art.stats.edges != predicted.edges) {
    throw std::logic_error("base instance sizes disagree with closed forms");
  }
  check_artifacts(art);
  return art;
}

SizeFormula predicted_base_sizes(const SatisfactionMatrix& matrix, int n) {
  const long long rows = half_space_size(n);
  const long long k = matrix.clause_count;
  const long long copies = rows - 1;
  long long entries = 0;
  for (const auto& row : matrix.rows) entries += static_cast<long long>(row.size());

  SizeFormula out;
  out.m = (k + 2) * rows + 2;
  out.nodes = 2 * copies * (2 * k + 2) + 2 + (2 + k * rows + entries);

  long long gu_edges = copies * 4 * k + (copies - 1);
  long long gf_edges = 0;
  for (int j = 1; j <= rows; ++j) {
    gf_edges += 1 + (matrix.contains(j, 1) ? 1 : 0);                      // b side
    gf_edges += 1 + (matrix.contains(j, static_cast<int>(k)) ? 1 : 0);    // e side
    for (int h = 1; h < k; ++h) {
      const int left = matrix.contains(j, h) ? 1 : 0;
      const int right = matrix.contains(j, h + 1) ? 1 : 0;
      gf_edges += 1 + left + right + left * right;
    }
  }
  out.edges = 2 * gu_edges + gf_edges + 4;
  return out;
}

std::vector<std::string> pattern_blocks(const std::string& pattern, int k) {
  const long long len = static_cast<long long>(pattern.size());
  if (k < 1 || len < 2 || (len - 2) % (k + 2) != 0) {
    throw std::invalid_argument("pattern length inconsistent with k");
  }
  const long long count = (len - 2) / (k + 2);
  std::vector<std::string> blocks;
  if (pattern.substr(0, 2) != "eb") throw std::invalid_argument("pattern must start with eb");
  for (long long i = 0; i < count; ++i) {
    const long long at = 2 + i * (k + 2);
    blocks.push_back(pattern.substr(at, k));
    if (pattern.substr(at + k, 2) != "eb") {
      throw std::invalid_argument("pattern block " + std::to_string(i + 1) +
                                  " not followed by eb");
    }
  }
  return blocks;
}

void check_artifacts(const ReductionArtifacts& art) {
  const auto fail = [](const std::string& what) { throw std::logic_error("artifact check: " + what); };

  if (static_cast<int>(art.roles.size()) != art.graph.node_count()) fail("role count");
  if (art.stats.m != static_cast<long long>(art.pattern.size())) fail("stats.m");
  if (art.stats.nodes != art.graph.node_count()) fail("stats.nodes");
  if (art.stats.edges != art.graph.edge_count()) fail("stats.edges");

  long long clause_nodes = 0, dummy_nodes = 0;
  for (const NodeRole& r : art.roles) {
    if (r.role == Role::Clause) ++clause_nodes;
    if (r.role == Role::Dummy || r.role == Role::TreeDummy || r.role == Role::PairDummy) {
      ++dummy_nodes;
    }
  }
  if (clause_nodes != art.stats.clause_nodes) fail("stats.clause_nodes");
  if (dummy_nodes != art.stats.dummy_nodes) fail("stats.dummy_nodes");

  if (art.oriented_edges.size() != art.graph.edges().size()) fail("oriented edge count");
  std::vector<Edge> canonical = art.oriented_edges;
  if (!art.graph.directed()) {
    for (auto& [u, v] : canonical) {
      if (u > v) std::swap(u, v);
    }
  }
  std::sort(canonical.begin(), canonical.end());
  if (canonical != art.graph.edges()) fail("oriented edges disagree with graph edges");

  if (art.graph.directed()) {
    if (!is_dag(art.graph)) fail("directed variant is not acyclic");
  } else {
    const auto bridges = find_bridges(art.graph);
    for (const Edge& e : art.stats.bridges) {
      if (!std::binary_search(bridges.begin(), bridges.end(), e)) {
        fail("stats bridge is not a bridge of the graph");
      }
    }
  }

  if (art.variant == Variant::Base) {
    const int rows = art.matrix.row_count();
    const int k = art.stats.k;
    if (art.stats.m != static_cast<long long>(k + 2) * rows + 2) fail("base pattern length");
    int gu1_copies = 0, gu2_copies = 0;
    long long gu1_nodes = 0, gu2_nodes = 0;
    for (const NodeRole& r : art.roles) {
      if (r.gadget == Gadget::GU1) {
        ++gu1_nodes;
        if (r.role == Role::Begin) ++gu1_copies;
      }
      if (r.gadget == Gadget::GU2) {
        ++gu2_nodes;
        if (r.role == Role::Begin) ++gu2_copies;
      }
    }
    if (gu1_copies != rows - 1 || gu2_copies != rows - 1) fail("universal gadget copy count");
    if (gu1_nodes != static_cast<long long>(rows - 1) * (2 * k + 2) || gu1_nodes != gu2_nodes) {
      fail("universal gadget node count");
    }
  }
}

std::string serialize_manifest(const ReductionArtifacts& art) {
  std::ostringstream out;
  out << "stat variant " << variant_name(art.variant) << "\n";
  out << "stat n " << art.stats.n << "\n";
  out << "stat k " << art.stats.k << "\n";
  out << "stat m " << art.stats.m << "\n";
  out << "stat nodes " << art.stats.nodes << "\n";
  out << "stat edges " << art.stats.edges << "\n";
  out << "stat clause_nodes " << art.stats.clause_nodes << "\n";
  out << "stat dummy_nodes " << art.stats.dummy_nodes << "\n";
  for (size_t v = 0; v < art.roles.size(); ++v) {
    const NodeRole& r = art.roles[v];
    out << "role " << v << " " << role_name(r.role);
    if (r.j != -1 || r.h != -1) {
      out << " " << (r.j == -1 ? std::string("-") : std::to_string(r.j));
      out << " " << (r.h == -1 ? std::string("-") : std::to_string(r.h));
    }
    out << " " << gadget_name(r.gadget) << "\n";
  }
  for (const auto& [u, v] : art.stats.bridges) {
    out << "bridge " << u << " " << v << "\n";
  }
  return out.str();
}

void write_manifest_file(const ReductionArtifacts& art, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << serialize_manifest(art);
}

Manifest parse_manifest(std::istream& in) {
  Manifest manifest;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "stat") {
      std::string key, value;
      if (!(ls >> key >> value)) throw ParseError(line_no, "malformed stat line");
      manifest.stats[key] = value;
    } else if (tag == "role") {
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.size() != 3 && tokens.size() != 5) {
        throw ParseError(line_no, "malformed role line");
      }
      NodeRole role;
      const int id = std::stoi(tokens[0]);
      role.role = role_from_name(tokens[1]);
      if (tokens.size() == 5) {
        role.j = tokens[2] == "-" ? -1 : std::stoi(tokens[2]);
        role.h = tokens[3] == "-" ? -1 : std::stoi(tokens[3]);
      }
      role.gadget = gadget_from_name(tokens.back());
      manifest.roles.emplace_back(id, role);
    } else if (tag == "bridge") {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(line_no, "malformed bridge line");
      manifest.bridges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown manifest line tag: " + tag);
    }
  }
  return manifest;
}

Manifest parse_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest file: " + path);
  return parse_manifest(in);
}

}  // namespace pmlg
