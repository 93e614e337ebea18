#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmlg/graph.hpp"

namespace pmlg {

/// A literal is a signed 1-based variable index: +i means v_i, -i means not v_i.
using Clause = std::vector<int>;

/// CNF formula over variables v_1..v_n. Clauses are nonempty, duplicate-free
/// and non-tautological; there is at least one clause.
struct CnfFormula {
  int n = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  /// Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

/// Parses standard DIMACS CNF ("p cnf <n> <k>" header, 'c' comments,
/// 0-terminated clauses). Duplicate literals within a clause are dropped;
/// tautological and empty clauses are errors. Throws ParseError.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

std::string serialize_dimacs(const CnfFormula& f);

/// Pads the formula with one unused variable when n is odd; returns the
/// formula unchanged otherwise. Satisfiability is unaffected.
CnfFormula make_even(const CnfFormula& f);

enum class Half { First, Second };

/// Truth assignment to one half of the variables. For Half::First, bits[t]
/// is the value of v_{t+1}; for Half::Second, of v_{n/2+t+1}. index is the
/// 1-based position in the canonical enumeration (binary counting, least
/// significant bit = lowest-numbered variable of the half).
struct HalfAssignment {
  Half which = Half::First;
  int n = 0;
  int index = 0;
  std::vector<bool> bits;
};

/// All 2^{n/2} half-assignments in canonical counting order. n must be even
/// and >= 2.
std::vector<HalfAssignment> enumerate_half_assignments(int n, Half which);

/// True iff some literal of the clause over a variable inside the
/// assignment's half is satisfied. Literals over the other half never
/// contribute.
bool half_satisfies(const HalfAssignment& a, const Clause& clause);

/// Evaluates a clause / the whole formula under a full assignment
/// (assignment[t] is the value of v_{t+1}).
bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment);
bool formula_satisfied(const CnfFormula& f, const std::vector<bool>& assignment);

/// Exhaustive truth-table search. Returns the lowest satisfying assignment
/// in counting order, or nullopt when unsatisfiable. Guarded to n <= 24.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f);

/// FNV-1a digest of the formula, for report records.
std::uint64_t formula_digest(const CnfFormula& f);

}  // namespace pmlg
