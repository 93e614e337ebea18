#include "pmlg/reduction.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "pmlg/matcher.hpp"
#include "pmlg/verification.hpp"

namespace pmlg {
namespace {

CnfFormula tiny_sat() { return parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n"); }
CnfFormula tiny_unsat() { return parse_dimacs("p cnf 2 2\n1 0\n-1 0\n"); }

TEST(BuildPattern, TinyExample) {
  EXPECT_EQ(build_pattern(tiny_sat()), "ebcdebdceb");
}

TEST(BuildPattern, AllSatisfiedHalfGivesFullDummyBlock) {
  // Every clause contains v1 positively, so the second half-assignment
  // (v1 = T) satisfies them all.
  const CnfFormula f = parse_dimacs("p cnf 2 3\n1 0\n1 2 0\n1 -2 0\n");
  const auto blocks = pattern_blocks(build_pattern(f), 3);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[1], "ddd");
}

TEST(BuildPattern, LengthFormula) {
  std::mt19937_64 rng(41);
  for (int n : {2, 4, 6}) {
    for (int k = 1; k <= 5; ++k) {
      const CnfFormula f = random_formula(rng, n, k, 1, 3);
      const std::string pattern = build_pattern(f);
      EXPECT_EQ(pattern.size(), static_cast<size_t>((k + 2) * (1 << (n / 2)) + 2));
    }
  }
}

TEST(BuildPattern, SyncSymbolShape) {
  const std::string pattern = build_pattern(tiny_unsat());
  EXPECT_EQ(pattern.find("be"), std::string::npos);
  EXPECT_EQ(std::count(pattern.begin(), pattern.end(), 'e'), 3);
  EXPECT_EQ(std::count(pattern.begin(), pattern.end(), 'b'), 3);
}

TEST(SatisfactionMatrix, ContradictionHasEmptyRows) {
  const SatisfactionMatrix matrix = build_satisfaction_matrix(tiny_unsat());
  ASSERT_EQ(matrix.row_count(), 2);
  EXPECT_TRUE(matrix.rows[0].empty());
  EXPECT_TRUE(matrix.rows[1].empty());
}

TEST(SatisfactionMatrix, SingleSecondHalfLiteral) {
  const SatisfactionMatrix matrix = build_satisfaction_matrix(parse_dimacs("p cnf 2 1\n2 0\n"));
  ASSERT_EQ(matrix.row_count(), 2);
  EXPECT_TRUE(matrix.rows[0].empty());        // v2 = F
  EXPECT_EQ(matrix.rows[1], std::vector{1});  // v2 = T
}

TEST(SatisfactionMatrix, ColumnMembershipFollowsHalfSatisfaction) {
  // c1 = (v3): satisfied by exactly the second-half assignments with v3 = T,
  // i.e. rows 2 and 4 in counting order.
  const SatisfactionMatrix matrix =
      build_satisfaction_matrix(parse_dimacs("p cnf 4 1\n3 0\n"));
  ASSERT_EQ(matrix.row_count(), 4);
  EXPECT_FALSE(matrix.contains(1, 1));
  EXPECT_TRUE(matrix.contains(2, 1));
  EXPECT_FALSE(matrix.contains(3, 1));
  EXPECT_TRUE(matrix.contains(4, 1));
}

TEST(BuildGadgetGf, EmptyMatrixHasOnlyDummies) {
  const GadgetGraph gf = build_gadget_gf(tiny_unsat());
  EXPECT_EQ(gf.graph.node_count(), 2 + 4);  // b, e, 2x2 dummy grid
  int clause_nodes = 0;
  for (const NodeRole& r : gf.roles) clause_nodes += r.role == Role::Clause;
  EXPECT_EQ(clause_nodes, 0);
  EXPECT_FALSE(match_exact(gf.graph, "bcde"));
  EXPECT_FALSE(match_exact(gf.graph, "bdce"));
  EXPECT_TRUE(match_exact(gf.graph, "bdde"));
}

TEST(BuildGadgetGf, ClauseNodesFollowMatrix) {
  const GadgetGraph gf = build_gadget_gf(tiny_sat());
  std::vector<std::pair<int, int>> clause_coords;
  for (const NodeRole& r : gf.roles) {
    if (r.role == Role::Clause) clause_coords.emplace_back(r.j, r.h);
  }
  std::sort(clause_coords.begin(), clause_coords.end());
  EXPECT_EQ(clause_coords, (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(match_exact(gf.graph, "bdce"));
  EXPECT_TRUE(match_bruteforce(gf.graph, "bdce"));

  // The unique matching walk is b, the row-1 dummy in column 1, the row-1
  // clause node in column 2, e.
  const auto walks = enumerate_matching_walks(gf.graph, "bdce");
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_EQ(gf.roles[walks[0][0]].role, Role::Begin);
  EXPECT_EQ(gf.roles[walks[0][1]], (NodeRole{Role::Dummy, Gadget::GF, 1, 1}));
  EXPECT_EQ(gf.roles[walks[0][2]], (NodeRole{Role::Clause, Gadget::GF, 1, 2}));
  EXPECT_EQ(gf.roles[walks[0][3]].role, Role::End);
}

TEST(BuildGadgetGf, NodeCountFormula) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const CnfFormula f = random_formula(rng, 2 + 2 * (trial % 3), 1 + trial % 5, 1, 3);
    const SatisfactionMatrix matrix = build_satisfaction_matrix(f);
    long long entries = 0;
    for (const auto& row : matrix.rows) entries += row.size();
    const GadgetGraph gf = build_gadget_gf(matrix);
    EXPECT_EQ(gf.graph.node_count(),
              2 + matrix.clause_count * matrix.row_count() + entries);
  }
}

TEST(BuildGadgetGu, SingleCopyShape) {
  const GadgetGraph gu = build_gadget_gu(2, 1);
  EXPECT_EQ(gu.graph.node_count(), 2 * 2 + 2);
  EXPECT_EQ(gu.begin_node, 0);
  EXPECT_EQ(gu.end_node, gu.graph.node_count() - 1);
}

TEST(BuildGadgetGu, CopiesAreChained) {
  const GadgetGraph gu = build_gadget_gu(3, 3);
  EXPECT_EQ(gu.graph.node_count(), 3 * (2 * 3 + 2));
  int begins = 0, ends = 0;
  for (const NodeRole& r : gu.roles) {
    begins += r.role == Role::Begin;
    ends += r.role == Role::End;
  }
  EXPECT_EQ(begins, 3);
  EXPECT_EQ(ends, 3);
}

TEST(BuildGadgetGu, MatchesEveryBlock) {
  for (int k = 1; k <= 4; ++k) {
    const GadgetGraph gu = build_gadget_gu(k, 1);
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::string block = "b";
      for (int h = 0; h < k; ++h) block += (mask >> h) & 1 ? 'd' : 'c';
      block += 'e';
      EXPECT_TRUE(match_exact(gu.graph, block)) << block;
    }
  }
}

TEST(BuildFullGraph, EquivalenceOnTinyExamples) {
  const ReductionArtifacts sat_art = build_full_graph(tiny_sat());
  EXPECT_EQ(sat_art.pattern, "ebcdebdceb");
  EXPECT_TRUE(match_exact(sat_art.graph, sat_art.pattern));

  const ReductionArtifacts unsat_art = build_full_graph(tiny_unsat());
  EXPECT_FALSE(match_exact(unsat_art.graph, unsat_art.pattern));
}

TEST(BuildFullGraph, FullDummyBlockStillMatches) {
  // One half-assignment satisfies everything alone: its block is all-d and
  // matches a full dummy row.
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 0\n1 2 0\n");
  ASSERT_TRUE(brute_force_sat(f).has_value());
  const ReductionArtifacts art = build_full_graph(f);
  EXPECT_TRUE(match_exact(art.graph, art.pattern));
}

TEST(BuildFullGraph, SingleClauseEdgeCase) {
  const CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n");
  const ReductionArtifacts art = build_full_graph(f);
  EXPECT_EQ(art.stats.k, 1);
  EXPECT_TRUE(match_exact(art.graph, art.pattern));
}

TEST(BuildFullGraph, BoundaryEdgesAreBridges) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const CnfFormula f = make_even(random_formula(rng, 4, 2 + trial % 3, 1, 3));
    const ReductionArtifacts art = build_full_graph(f);
    const int rows = art.matrix.row_count();
    EXPECT_EQ(art.stats.bridges.size(), static_cast<size_t>(4 + 2 * (rows - 2)));
    const auto bridges = find_bridges(art.graph);
    for (const Edge& e : art.stats.bridges) {
      EXPECT_TRUE(std::binary_search(bridges.begin(), bridges.end(), e));
    }
  }
}

TEST(BuildFullGraph, SizesMatchClosedForms) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const CnfFormula f = random_formula(rng, 2 + 2 * (trial % 3), 1 + trial % 4, 1, 3);
    const ReductionArtifacts art = build_full_graph(f);
    const SizeFormula predicted = predicted_base_sizes(art.matrix, art.stats.n);
    EXPECT_EQ(art.stats.m, predicted.m);
    EXPECT_EQ(art.stats.nodes, predicted.nodes);
    EXPECT_EQ(art.stats.edges, predicted.edges);
    EXPECT_NO_THROW(check_artifacts(art));
  }
}

TEST(BuildFullGraph, GuardRejectsLargeN) {
  CnfFormula f;
  f.n = 22;
  f.clauses = {{1}};
  EXPECT_THROW(build_full_graph(f), std::invalid_argument);
}

TEST(PatternBlocks, SplitsAndValidates) {
  const auto blocks = pattern_blocks("ebcdebdceb", 2);
  EXPECT_EQ(blocks, (std::vector<std::string>{"cd", "dc"}));
  EXPECT_THROW(pattern_blocks("ebcde", 2), std::invalid_argument);
  EXPECT_THROW(pattern_blocks("bcdebdceeb", 2), std::invalid_argument);
}

TEST(BuildFullGraph, SerializedOutputRoundTripsBitExactly) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const CnfFormula f = make_even(random_formula(rng, 4, 1 + trial % 4, 1, 3));
    const ReductionArtifacts art = build_full_graph(f);
    const std::string text = serialize_graph(art.graph);
    EXPECT_EQ(parse_graph(text), art.graph);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(Manifest, RoundTripsThroughText) {
  const ReductionArtifacts art = build_full_graph(tiny_sat());
  std::istringstream in(serialize_manifest(art));
  const Manifest manifest = parse_manifest(in);

  EXPECT_EQ(manifest.stats.at("variant"), "base");
  EXPECT_EQ(manifest.stats.at("n"), "2");
  EXPECT_EQ(manifest.stats.at("m"), "10");
  EXPECT_EQ(manifest.stats.at("nodes"), std::to_string(art.stats.nodes));
  ASSERT_EQ(manifest.roles.size(), art.roles.size());
  for (size_t v = 0; v < art.roles.size(); ++v) {
    EXPECT_EQ(manifest.roles[v].first, static_cast<int>(v));
    EXPECT_EQ(manifest.roles[v].second, art.roles[v]);
  }
  EXPECT_EQ(manifest.bridges, art.stats.bridges);
}

TEST(Manifest, ExtremalNodesCarryNoCoordinates) {
  const ReductionArtifacts art = build_full_graph(tiny_sat());
  const std::string text = serialize_manifest(art);
  EXPECT_NE(text.find("end extremal"), std::string::npos);
  EXPECT_NE(text.find("begin extremal"), std::string::npos);
}

}  // namespace
}  // namespace pmlg
