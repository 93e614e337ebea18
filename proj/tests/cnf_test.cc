#include "pmlg/cnf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pmlg/verification.hpp"

namespace pmlg {
namespace {

TEST(ParseDimacs, Basic) {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  EXPECT_EQ(f.n, 2);
  ASSERT_EQ(f.clause_count(), 2);
  EXPECT_EQ(f.clauses[0], (Clause{1, 2}));
  EXPECT_EQ(f.clauses[1], (Clause{-1, -2}));
}

TEST(ParseDimacs, CommentsAndMultilineClauses) {
  const CnfFormula f = parse_dimacs("c header comment\np cnf 3 1\nc mid\n1\n-2 3 0\n");
  ASSERT_EQ(f.clause_count(), 1);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2, 3}));
}

TEST(ParseDimacs, TautologyRejected) {
  try {
    parse_dimacs("p cnf 2 1\n1 -1 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("tautological"), std::string::npos);
  }
}

TEST(ParseDimacs, DuplicateLiteralDropped) {
  const CnfFormula f = parse_dimacs("p cnf 2 1\n1 1 2 0\n");
  EXPECT_EQ(f.clauses[0], (Clause{1, 2}));
}

TEST(ParseDimacs, ClauseCountMismatch) {
  EXPECT_THROW(parse_dimacs("p cnf 4 3\n1 0\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 4 1\n1 0\n2 0\n"), ParseError);
}

TEST(ParseDimacs, LiteralOutOfRange) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
}

TEST(ParseDimacs, EmptyClauseAndMissingHeader) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1\n"), ParseError);  // unterminated
}

TEST(MakeEven, IdentityForEvenN) {
  const CnfFormula f = parse_dimacs("p cnf 4 1\n1 2 0\n");
  EXPECT_EQ(make_even(f).n, 4);
}

TEST(MakeEven, PadsOddNWithUnusedVariable) {
  const CnfFormula f = parse_dimacs("p cnf 3 2\n1 2 0\n-3 0\n");
  const CnfFormula even = make_even(f);
  EXPECT_EQ(even.n, 4);
  EXPECT_EQ(even.clauses, f.clauses);
}

TEST(MakeEven, PreservesSatisfiability) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + 2 * (trial % 3);  // 3, 5, 7
    const CnfFormula f = random_formula(rng, n, 2 + trial % 4, 1, 3);
    EXPECT_EQ(brute_force_sat(f).has_value(), brute_force_sat(make_even(f)).has_value());
  }
}

TEST(HalfAssignments, CountingOrderN2) {
  const auto xs = enumerate_half_assignments(2, Half::First);
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(xs[0].bits, (std::vector<bool>{false}));
  EXPECT_EQ(xs[1].bits, (std::vector<bool>{true}));
  EXPECT_EQ(xs[0].index, 1);
  EXPECT_EQ(xs[1].index, 2);
}

TEST(HalfAssignments, CountingOrderN4) {
  const auto xs = enumerate_half_assignments(4, Half::First);
  ASSERT_EQ(xs.size(), 4u);
  EXPECT_EQ(xs[0].bits, (std::vector<bool>{false, false}));
  EXPECT_EQ(xs[1].bits, (std::vector<bool>{true, false}));
  EXPECT_EQ(xs[2].bits, (std::vector<bool>{false, true}));
  EXPECT_EQ(xs[3].bits, (std::vector<bool>{true, true}));
}

TEST(HalfAssignments, CardinalityAndBijection) {
  for (int n : {2, 4, 6, 8}) {
    const auto xs = enumerate_half_assignments(n, Half::Second);
    EXPECT_EQ(xs.size(), 1u << (n / 2));
    for (size_t i = 0; i < xs.size(); ++i) {
      EXPECT_EQ(xs[i].index, static_cast<int>(i + 1));
      std::uint64_t reconstructed = 0;
      for (size_t t = 0; t < xs[i].bits.size(); ++t) {
        if (xs[i].bits[t]) reconstructed |= std::uint64_t{1} << t;
      }
      EXPECT_EQ(reconstructed, i);
    }
  }
}

TEST(HalfAssignments, OddNRejected) {
  EXPECT_THROW(enumerate_half_assignments(3, Half::First), std::invalid_argument);
}

TEST(HalfSatisfies, LiteralInsideHalf) {
  const auto xs = enumerate_half_assignments(2, Half::First);
  EXPECT_TRUE(half_satisfies(xs[1], {1, 2}));  // v1 = T satisfies v1 | v2
}

TEST(HalfSatisfies, LiteralOutsideHalfNeverContributes) {
  const auto ys = enumerate_half_assignments(2, Half::Second);
  EXPECT_FALSE(half_satisfies(ys[0], {1, 2}));  // v2 = F; v1 is out of reach
  EXPECT_TRUE(half_satisfies(ys[1], {1, 2}));
}

TEST(HalfSatisfies, DecomposesFullEvaluation) {
  std::mt19937_64 rng(17);
  const auto xs = enumerate_half_assignments(4, Half::First);
  const auto ys = enumerate_half_assignments(4, Half::Second);
  for (int trial = 0; trial < 100; ++trial) {
    const CnfFormula f = random_formula(rng, 4, 1 + trial % 5, 1, 3);
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        std::vector<bool> full = {x.bits[0], x.bits[1], y.bits[0], y.bits[1]};
        for (const Clause& c : f.clauses) {
          EXPECT_EQ(clause_satisfied(c, full), half_satisfies(x, c) || half_satisfies(y, c));
        }
      }
    }
  }
}

TEST(BruteForceSat, Contradiction) {
  EXPECT_FALSE(brute_force_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")).has_value());
}

TEST(BruteForceSat, LowestWitnessInCountingOrder) {
  const auto witness = brute_force_sat(parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n"));
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, (std::vector<bool>{true, false}));
}

TEST(BruteForceSat, GuardRejectsLargeN) {
  CnfFormula f;
  f.n = 25;
  f.clauses = {{1}};
  EXPECT_THROW(brute_force_sat(f), std::invalid_argument);
}

TEST(Validate, RejectsBadFormulas) {
  CnfFormula f;
  f.n = 2;
  EXPECT_THROW(f.validate(), std::invalid_argument);  // no clauses
  f.clauses = {{}};
  EXPECT_THROW(f.validate(), std::invalid_argument);  // empty clause
  f.clauses = {{1, -1}};
  EXPECT_THROW(f.validate(), std::invalid_argument);  // tautology
  f.clauses = {{3}};
  EXPECT_THROW(f.validate(), std::invalid_argument);  // out of range
}

TEST(SerializeDimacs, RoundTripsRandomFormulas) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const CnfFormula f = random_formula(rng, 2 + trial % 7, 1 + trial % 6, 1, 3);
    const CnfFormula back = parse_dimacs(serialize_dimacs(f));
    EXPECT_EQ(back.n, f.n);
    EXPECT_EQ(back.clauses, f.clauses);
  }
}

TEST(FormulaDigest, DistinguishesClauseOrder) {
  const CnfFormula a = parse_dimacs("p cnf 2 2\n1 0\n2 0\n");
  const CnfFormula b = parse_dimacs("p cnf 2 2\n2 0\n1 0\n");
  EXPECT_NE(formula_digest(a), formula_digest(b));
}

}  // namespace
}  // namespace pmlg
