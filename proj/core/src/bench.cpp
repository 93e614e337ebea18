#include "pmlg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pmlg/matcher.hpp"

namespace pmlg {

void BenchConfig::validate() const {
  if (n_min < 2 || n_min % 2 != 0 || n_max % 2 != 0 || n_min > n_max) {
    throw std::invalid_argument("bench needs even 2 <= n_min <= n_max");
  }
  if (n_max > 16) throw std::invalid_argument("bench is guarded to n_max <= 16");
  if (k < 2) throw std::invalid_argument("bench needs k >= 2");
  if (repeats < 1) throw std::invalid_argument("bench needs repeats >= 1");
}

namespace {

// Clause of three distinct variables from [lo, n]; when planted is given,
// one literal is forced to agree with it.
Clause planted_clause(std::mt19937_64& rng, int lo, int n, const std::vector<bool>* planted) {
  const int span = n - lo + 1;
  const int width = std::min(3, span);
  Clause clause;
  std::vector<bool> used(n + 1, false);
  while (static_cast<int>(clause.size()) < width) {
    const int var = lo + static_cast<int>(rng() % span);
    if (used[var]) continue;
    used[var] = true;
    clause.push_back(rng() % 2 ? var : -var);
  }
  if (planted != nullptr) {
    bool satisfied = false;
    for (int lit : clause) {
      if ((*planted)[std::abs(lit) - 1] == (lit > 0)) satisfied = true;
    }
    if (!satisfied) {
      const int at = static_cast<int>(rng() % clause.size());
      clause[at] = -clause[at];
    }
  }
  return clause;
}

}  // namespace

CnfFormula bench_formula(int n, int k, bool satisfiable) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(n) << 32) ^
                      (static_cast<std::uint64_t>(k) << 1) ^ (satisfiable ? 1 : 0));
  CnfFormula f;
  f.n = n;
  std::vector<bool> planted(n);
  for (int t = 0; t < n; ++t) planted[t] = rng() % 2;

  if (satisfiable) {
    for (int i = 0; i < k; ++i) f.clauses.push_back(planted_clause(rng, 1, n, &planted));
  } else {
    if (k < 2) throw std::invalid_argument("unsatisfiable bench formula needs k >= 2");
    f.clauses.push_back({1});
    f.clauses.push_back({-1});
    for (int i = 2; i < k; ++i) f.clauses.push_back(planted_clause(rng, 2, n, &planted));
  }
  f.validate();
  return f;
}

std::vector<BenchRecord> run_scaling_bench(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<BenchRecord> records;
  for (int n = cfg.n_min; n <= cfg.n_max; n += 2) {
    for (bool satisfiable : {true, false}) {
      const CnfFormula f = bench_formula(n, cfg.k, satisfiable);
      const ReductionArtifacts art = build_full_graph(f);

      volatile bool sink = match_exact(art.graph, art.pattern);  // warm-up
      std::vector<long long> times;
      times.reserve(cfg.repeats);
      for (int r = 0; r < cfg.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        sink = match_exact(art.graph, art.pattern);
        times.push_back(std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count());
      }
      (void)sink;
      std::sort(times.begin(), times.end());

      BenchRecord record;
      record.n = n;
      record.k = cfg.k;
      record.m = art.stats.m;
      record.edges = art.stats.edges;
      record.sat = satisfiable;
      record.micros = times[times.size() / 2];
      record.repeats = cfg.repeats;
      records.push_back(record);
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "n,k,m,edges,sat,micros,repeats\n";
  for (const BenchRecord& r : records) {
    out << r.n << "," << r.k << "," << r.m << "," << r.edges << "," << (r.sat ? 1 : 0) << ","
        << r.micros << "," << r.repeats << "\n";
  }
  return out.str();
}

}  // namespace pmlg
