#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmlg/cnf.hpp"
#include "pmlg/reduction.hpp"

namespace pmlg {

/// Random formula: k clauses, each sampling a number of distinct literals in
/// [min_literals, max_literals] (capped at n) with uniform signs. Distinct
/// variables per clause, so no tautologies or duplicates arise.
CnfFormula random_formula(std::mt19937_64& rng, int n, int k, int min_literals,
                          int max_literals);

struct CampaignConfig {
  std::vector<int> n_values;            // even values, each in [2,10]
  std::pair<int, int> k_range{1, 3};    // k drawn uniformly per trial
  int trials = 1;                       // per n value
  std::uint64_t seed = 0;
  std::vector<Variant> variants;        // Base, Degree3, Binary, BinaryDag
  std::pair<int, int> clause_literals{1, 3};
  std::string dump_dir = ".";           // disagreement instances land here

  void validate() const;
};

struct TrialRecord {
  int trial = 0;
  int n = 0;
  int k = 0;
  std::uint64_t digest = 0;
  bool sat = false;
  std::optional<bool> match_base, match_deg3, match_bin, match_dag;
  bool agreement = true;
  long long m = 0;
  long long edges = 0;
  long long micros_match = 0;
  bool redraw = false;
  std::string failure;
};

struct CampaignReport {
  std::vector<TrialRecord> records;
  int sat_count = 0;
  int unsat_count = 0;
  bool size_checks_ok = true;
  bool both_classes_seen = false;

  bool all_agree() const;
  double agreement_rate() const;
  bool passed() const { return all_agree() && size_checks_ok; }

  /// Byte-deterministic for a fixed config (timing is CSV-only).
  std::string to_text() const;
  /// Columns: trial,n,k,sat,match_base,match_deg3,match_bin,match_dag,m,edges,micros_match.
  std::string to_csv() const;
};

/// The exact formula sequence a campaign with this config processes
/// (excluding class-coverage redraws).
std::vector<CnfFormula> campaign_formulas(const CampaignConfig& cfg);

/// Per trial: random formula -> make_even -> reduce -> selected transforms ->
/// match on each variant -> compare with the brute-force oracle. Any
/// disagreement or internal invariant failure persists the instance under
/// cfg.dump_dir. Deterministic given the seed.
CampaignReport run_campaign(const CampaignConfig& cfg);

struct LemmaCheck {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> details;  // first few failure descriptions
};

struct LemmaSuiteReport {
  std::vector<LemmaCheck> checks;

  bool all_pass() const;
  std::string to_text() const;
};

/// Structure checks on generated instances: same-row block walks, block vs
/// row-cover equivalence, full-graph vs per-block equivalence, the encoding
/// table sweep, encode-preserves-match, the bridge inventory, and the
/// pattern-shape assertions. Requires every n value <= 6 (block-level walk
/// enumeration).
LemmaSuiteReport run_lemma_suite(const CampaignConfig& cfg);

/// Every walk (node sequence) of a unit-labeled graph spelling the pattern.
/// Plain depth-first enumeration; throws if more than `limit` walks match.
std::vector<std::vector<int>> enumerate_matching_walks(const LabeledGraph& g,
                                                       std::string_view pattern,
                                                       std::size_t limit = 1u << 20);

}  // namespace pmlg
