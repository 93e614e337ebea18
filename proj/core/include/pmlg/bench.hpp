#pragma once

#include <string>
#include <vector>

#include "pmlg/cnf.hpp"
#include "pmlg/reduction.hpp"

namespace pmlg {

struct BenchConfig {
  int n_min = 8;
  int n_max = 14;   // guarded to <= 16
  int k = 8;        // >= 2 so the unsatisfiable instance exists
  int repeats = 9;  // median of this many timed matcher runs

  void validate() const;
};

struct BenchRecord {
  int n = 0;
  int k = 0;
  long long m = 0;      // recomputed from the instance
  long long edges = 0;  // recomputed from the instance
  bool sat = false;
  long long micros = 0;  // median matcher wall time
  int repeats = 0;
};

/// Deterministic formula for a bench point: planted-satisfiable when
/// `satisfiable`, otherwise (v1), (not v1) plus planted filler clauses over
/// the remaining variables.
CnfFormula bench_formula(int n, int k, bool satisfiable);

/// Builds one satisfiable and one unsatisfiable base instance per n and
/// times the exact matcher. m and |E| double per n -> n+2 step.
std::vector<BenchRecord> run_scaling_bench(const BenchConfig& cfg);

/// CSV with the fixed header n,k,m,edges,sat,micros,repeats.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace pmlg
