#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pmlg/cnf.hpp"
#include "pmlg/graph.hpp"

namespace pmlg {

enum class Variant { Base, Degree3, Binary, Degree3Dag, BinaryDag };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

enum class Role { Begin, End, Clause, Dummy, TreeDummy, PairDummy, BitChain };
enum class Gadget { GF, GU1, GU2, Extremal };

std::string role_name(Role r);
std::string gadget_name(Gadget g);

/// Structural role of one node. j/h are 1-based row/column coordinates where
/// they apply (-1 otherwise); Begin/End nodes inside the universal gadgets
/// carry the copy index in j.
struct NodeRole {
  Role role = Role::Dummy;
  Gadget gadget = Gadget::GF;
  int j = -1;
  int h = -1;

  bool operator==(const NodeRole&) const = default;
};

/// Row j lists, in increasing order, the 1-based clause indices h satisfied
/// by the j-th second-half assignment.
struct SatisfactionMatrix {
  int clause_count = 0;
  std::vector<std::vector<int>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  bool contains(int j, int h) const;  // 1-based
};

struct ReductionStats {
  int n = 0;
  int k = 0;
  long long m = 0;
  long long nodes = 0;
  long long edges = 0;
  long long clause_nodes = 0;
  long long dummy_nodes = 0;
  std::vector<Edge> bridges;
};

/// Pattern + graph produced by the reduction, with per-node roles, the
/// construction's left-to-right edge orientation (used by the binary
/// splitting and the DAG orientation), the satisfaction matrix the graph
/// encodes, and recomputed size statistics.
struct ReductionArtifacts {
  Variant variant = Variant::Base;
  std::string pattern;
  LabeledGraph graph;
  std::vector<NodeRole> roles;
  std::vector<Edge> oriented_edges;
  SatisfactionMatrix matrix;
  ReductionStats stats;
};

/// A standalone gadget with local node ids; begin_node/end_node are the
/// b-labeled entry and e-labeled exit (first/last copy for the universal
/// gadget).
struct GadgetGraph {
  LabeledGraph graph;
  std::vector<NodeRole> roles;
  std::vector<Edge> oriented_edges;
  int begin_node = -1;
  int end_node = -1;
};

/// Pattern over {b,e,c,d}: "eb" then, per first-half assignment in canonical
/// order, a k-symbol block ('c' where the half-assignment fails the clause,
/// 'd' where it satisfies it) followed by "eb". Length (k+2)*2^{n/2} + 2.
/// Requires even n.
std::string build_pattern(const CnfFormula& f);

/// Row j holds h iff the j-th second-half assignment satisfies clause h.
SatisfactionMatrix build_satisfaction_matrix(const CnfFormula& f);

/// Formula gadget: b, e, a full grid of dummy nodes, clause nodes where the
/// matrix has entries; b fans to column 1, column k fans to e, and rows link
/// consecutive columns with all present {c,d} combinations.
GadgetGraph build_gadget_gf(const SatisfactionMatrix& matrix);
GadgetGraph build_gadget_gf(const CnfFormula& f);

/// Universal gadget: `copies` chained blocks, each matching any b{c,d}^k e
/// block; per-copy node count 2k+2.
GadgetGraph build_gadget_gu(int k, int copies);
GadgetGraph build_gadget_gu(const CnfFormula& f, int copies);

/// Full reduction instance: extremal e-labeled entry, one universal gadget,
/// the formula gadget, a second universal gadget, extremal b-labeled exit,
/// joined by bridge edges. Requires even n; guarded to n <= 20.
ReductionArtifacts build_full_graph(const CnfFormula& f);

/// Closed-form sizes of the base instance for a given matrix and n.
struct SizeFormula {
  long long m = 0;
  long long nodes = 0;
  long long edges = 0;
};
SizeFormula predicted_base_sizes(const SatisfactionMatrix& matrix, int n);

/// Splits the pattern into its 2^{n/2} per-assignment blocks of k symbols.
std::vector<std::string> pattern_blocks(const std::string& pattern, int k);

/// Recomputes stats from the graph/roles/pattern and checks them against
/// art.stats, including the bridge cross-check on undirected variants.
/// Throws std::logic_error on any inconsistency.
void check_artifacts(const ReductionArtifacts& art);

/// Line-oriented manifest: `stat <key> <value>`, `role <id> <role> [<j> <h>]
/// <gadget>`, `bridge <u> <v>`.
std::string serialize_manifest(const ReductionArtifacts& art);
void write_manifest_file(const ReductionArtifacts& art, const std::string& path);

struct Manifest {
  std::map<std::string, std::string> stats;
  std::vector<std::pair<int, NodeRole>> roles;
  std::vector<Edge> bridges;
};
Manifest parse_manifest(std::istream& in);
Manifest parse_manifest_file(const std::string& path);

}  // namespace pmlg
