#include "pmlg/cnf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pmlg {

void CnfFormula::validate() const {
  if (n < 1) throw std::invalid_argument("formula must have at least one variable");
  if (clauses.empty()) throw std::invalid_argument("formula must have at least one clause");
  for (size_t i = 0; i < clauses.size(); ++i) {
    const Clause& c = clauses[i];
    if (c.empty()) throw std::invalid_argument("clause " + std::to_string(i + 1) + " is empty");
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) + " has a duplicate literal");
    }
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > n) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) + " literal " +
                                    std::to_string(lit) + " out of range");
      }
      if (std::binary_search(sorted.begin(), sorted.end(), -lit)) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) + " is tautological");
      }
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  int line_no = 0;
  std::string line;
  int n = -1, k = -1;

  // Header: first significant line must be "p cnf <n> <k>".
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok != "p") throw ParseError(line_no, "missing 'p cnf' header");
    std::string fmt;
    if (!(ls >> fmt >> n >> k) || fmt != "cnf" || n < 1 || k < 0) {
      throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
    }
    break;
  }
  if (n < 0) throw ParseError(0, "missing 'p cnf' header");
  if (k < 1) throw ParseError(line_no, "formula must declare at least one clause");

  CnfFormula f;
  f.n = n;
  Clause current;
  int clause_line = line_no;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) {
      if (tok == "c") continue;
      ls.seekg(0);
    } else {
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (current.empty()) clause_line = line_no;
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "empty clause");
        if (static_cast<int>(f.clauses.size()) == k) {
          throw ParseError(line_no, "clause count mismatch: more than " + std::to_string(k) +
                                        " clauses");
        }
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > n) {
          throw ParseError(line_no,
                           "literal " + std::to_string(lit) + " out of range [1," +
                               std::to_string(n) + "]");
        }
        for (int prev : current) {
          if (prev == -lit) {
            throw ParseError(line_no, "tautological clause " +
                                          std::to_string(f.clauses.size() + 1));
          }
        }
        if (std::find(current.begin(), current.end(), lit) == current.end()) {
          current.push_back(lit);
        }
      }
    }
    if (!ls.eof()) throw ParseError(line_no, "unexpected token in clause data");
  }
  if (!current.empty()) throw ParseError(clause_line, "unterminated clause (missing 0)");
  if (static_cast<int>(f.clauses.size()) != k) {
    throw ParseError(line_no, "clause count mismatch: header declares " + std::to_string(k) +
                                  ", found " + std::to_string(f.clauses.size()));
  }
  f.validate();
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CNF file: " + path);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << " " << f.clause_count() << "\n";
  for (const Clause& c : f.clauses) {
    for (int lit : c) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

CnfFormula make_even(const CnfFormula& f) {
  if (f.n % 2 == 0) return f;
  CnfFormula padded = f;
  padded.n = f.n + 1;
  return padded;
}

std::vector<HalfAssignment> enumerate_half_assignments(int n, Half which) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("half-assignment enumeration requires even n >= 2");
  }
  const int half = n / 2;
  const std::uint64_t count = std::uint64_t{1} << half;
  std::vector<HalfAssignment> result;
  result.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    HalfAssignment a;
    a.which = which;
    a.n = n;
    a.index = static_cast<int>(i + 1);
    a.bits.resize(half);
    for (int t = 0; t < half; ++t) a.bits[t] = (i >> t) & 1;
    result.push_back(std::move(a));
  }
  return result;
}

bool half_satisfies(const HalfAssignment& a, const Clause& clause) {
  const int half = a.n / 2;
  const int lo = a.which == Half::First ? 1 : half + 1;
  const int hi = a.which == Half::First ? half : a.n;
  for (int lit : clause) {
    const int var = std::abs(lit);
    if (var < lo || var > hi) continue;
    if (a.bits[var - lo] == (lit > 0)) return true;
  }
  return false;
}

bool clause_satisfied(const Clause& clause, const std::vector<bool>& assignment) {
  for (int lit : clause) {
    if (assignment[std::abs(lit) - 1] == (lit > 0)) return true;
  }
  return false;
}

bool formula_satisfied(const CnfFormula& f, const std::vector<bool>& assignment) {
  for (const Clause& c : f.clauses) {
    if (!clause_satisfied(c, assignment)) return false;
  }
  return true;
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f) {
  f.validate();
  if (f.n > 24) {
    throw std::invalid_argument("brute_force_sat is guarded to n <= 24, got n = " +
                                std::to_string(f.n));
  }
  const std::uint64_t total = std::uint64_t{1} << f.n;
  std::vector<bool> assignment(f.n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int t = 0; t < f.n; ++t) assignment[t] = (bits >> t) & 1;
    if (formula_satisfied(f, assignment)) return assignment;
  }
  return std::nullopt;
}

std::uint64_t formula_digest(const CnfFormula& f) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(f.n));
  for (const Clause& c : f.clauses) {
    mix(0xFFFFFFFFFFFFFFFFULL);
    for (int lit : c) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(lit)));
  }
  return h;
}

}  // namespace pmlg
