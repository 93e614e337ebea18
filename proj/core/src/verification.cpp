#include "pmlg/verification.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pmlg/matcher.hpp"
#include "pmlg/transform.hpp"

namespace pmlg {

namespace {

// Bounded draw from the raw engine; uniform_int_distribution is
// implementation-defined, and reports must be byte-reproducible.
int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % bound); }

bool wants(const CampaignConfig& cfg, Variant v) {
  return std::find(cfg.variants.begin(), cfg.variants.end(), v) != cfg.variants.end();
}

std::string opt_flag(const std::optional<bool>& v) {
  if (!v.has_value()) return "-";
  return *v ? "1" : "0";
}

}  // namespace

CnfFormula random_formula(std::mt19937_64& rng, int n, int k, int min_literals,
                          int max_literals) {
  CnfFormula f;
  f.n = n;
  for (int i = 0; i < k; ++i) {
    const int width = std::min(n, min_literals + draw(rng, max_literals - min_literals + 1));
    Clause clause;
    std::vector<bool> used(n + 1, false);
    while (static_cast<int>(clause.size()) < width) {
      const int var = 1 + draw(rng, n);
      if (used[var]) continue;
      used[var] = true;
      clause.push_back(draw(rng, 2) ? var : -var);
    }
    f.clauses.push_back(std::move(clause));
  }
  f.validate();
  return f;
}

void CampaignConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("campaign needs at least one n value");
  for (int n : n_values) {
    if (n < 2 || n > 10 || n % 2 != 0) {
      throw std::invalid_argument("campaign n values must be even and in [2,10], got " +
                                  std::to_string(n));
    }
  }
  if (trials < 1) throw std::invalid_argument("campaign needs trials >= 1");
  if (k_range.first < 1 || k_range.second < k_range.first) {
    throw std::invalid_argument("invalid k range");
  }
  if (clause_literals.first < 1 || clause_literals.second < clause_literals.first) {
    throw std::invalid_argument("invalid clause literal range");
  }
  for (Variant v : variants) {
    if (v == Variant::Degree3Dag) {
      throw std::invalid_argument("campaigns drive the binary DAG variant; degree3_dag is not a "
                                  "campaign column");
    }
  }
}

namespace {

CnfFormula draw_trial_formula(std::mt19937_64& rng, const CampaignConfig& cfg, int n) {
  const int k = cfg.k_range.first + draw(rng, cfg.k_range.second - cfg.k_range.first + 1);
  return random_formula(rng, n, k, cfg.clause_literals.first, cfg.clause_literals.second);
}

std::vector<CnfFormula> draw_main_formulas(std::mt19937_64& rng, const CampaignConfig& cfg) {
  std::vector<CnfFormula> formulas;
  formulas.reserve(cfg.n_values.size() * static_cast<size_t>(cfg.trials));
  for (int n : cfg.n_values) {
    for (int t = 0; t < cfg.trials; ++t) formulas.push_back(draw_trial_formula(rng, cfg, n));
  }
  return formulas;
}

}  // namespace

std::vector<CnfFormula> campaign_formulas(const CampaignConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  return draw_main_formulas(rng, cfg);
}

namespace {

void dump_instance(const CampaignConfig& cfg, const TrialRecord& record, const CnfFormula& f,
                   const ReductionArtifacts* base) {
  try {
    std::filesystem::path dir = cfg.dump_dir.empty() ? "." : cfg.dump_dir;
    std::filesystem::create_directories(dir);
    const std::string prefix = (dir / ("disagreement_trial" + std::to_string(record.trial))).string();
    std::ofstream cnf(prefix + ".cnf");
    cnf << serialize_dimacs(f);
    if (base != nullptr) {
      write_graph_file(base->graph, prefix + ".graph");
      write_pattern_file(base->pattern, prefix + ".pattern");
      write_manifest_file(*base, prefix + ".manifest");
    }
  } catch (const std::exception&) {
    // Triage dumps are best-effort; the record already carries the failure.
  }
}

TrialRecord run_trial(const CampaignConfig& cfg, int trial_index, const CnfFormula& f) {
  TrialRecord record;
  record.trial = trial_index;
  record.digest = formula_digest(f);

  const CnfFormula even = make_even(f);
  record.n = even.n;
  record.k = even.clause_count();

  ReductionArtifacts base;
  bool have_base = false;
  try {
    record.sat = brute_force_sat(even).has_value();

    base = build_full_graph(even);
    have_base = true;
    record.m = base.stats.m;
    record.edges = base.stats.edges;
    if (base.stats.m !=
        static_cast<long long>(record.k + 2) * base.matrix.row_count() + 2) {
      throw std::logic_error("pattern length formula violated");
    }

    const bool need_deg3 = wants(cfg, Variant::Degree3) || wants(cfg, Variant::Binary) ||
                           wants(cfg, Variant::BinaryDag);
    const bool need_bin = wants(cfg, Variant::Binary) || wants(cfg, Variant::BinaryDag);

    if (wants(cfg, Variant::Base)) {
      const auto start = std::chrono::steady_clock::now();
      record.match_base = match_exact(base.graph, base.pattern);
      record.micros_match = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    if (need_deg3) {
      const ReductionArtifacts deg3 = to_degree3(base);
      if (wants(cfg, Variant::Degree3)) {
        record.match_deg3 = match_exact(deg3.graph, deg3.pattern);
      }
      if (need_bin) {
        const ReductionArtifacts bin = encode_binary(deg3);
        if (wants(cfg, Variant::Binary)) {
          record.match_bin = match_exact(bin.graph, bin.pattern);
        }
        if (wants(cfg, Variant::BinaryDag)) {
          const ReductionArtifacts dag = orient_dag(bin);
          record.match_dag = match_exact(dag.graph, dag.pattern);
        }
      }
    }

    for (const auto& answer :
         {record.match_base, record.match_deg3, record.match_bin, record.match_dag}) {
      if (answer.has_value() && *answer != record.sat) record.agreement = false;
    }
  } catch (const std::exception& e) {
    record.failure = e.what();
    record.agreement = false;
  }

  if (!record.agreement) {
    dump_instance(cfg, record, f, have_base ? &base : nullptr);
  }
  return record;
}

}  // namespace

bool CampaignReport::all_agree() const {
  return std::all_of(records.begin(), records.end(),
                     [](const TrialRecord& r) { return r.agreement; });
}

double CampaignReport::agreement_rate() const {
  if (records.empty()) return 1.0;
  long long good = std::count_if(records.begin(), records.end(),
                                 [](const TrialRecord& r) { return r.agreement; });
  return static_cast<double>(good) / static_cast<double>(records.size());
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  CampaignReport report;
  std::mt19937_64 rng(cfg.seed);

  int trial_index = 0;
  for (const CnfFormula& f : draw_main_formulas(rng, cfg)) {
    TrialRecord record = run_trial(cfg, ++trial_index, f);
    (record.sat ? report.sat_count : report.unsat_count)++;
    if (!record.failure.empty() || record.m == 0) report.size_checks_ok &= false;
    report.records.push_back(std::move(record));
  }

  // Both satisfiability classes must be exercised; redraw when one is absent
  // (bounded, since e.g. k = 1 admits no unsatisfiable formula).
  int redraws = 0;
  while ((report.sat_count == 0 || report.unsat_count == 0) && redraws < 1000) {
    const int n = cfg.n_values[redraws % cfg.n_values.size()];
    TrialRecord record = run_trial(cfg, ++trial_index, draw_trial_formula(rng, cfg, n));
    record.redraw = true;
    (record.sat ? report.sat_count : report.unsat_count)++;
    report.records.push_back(std::move(record));
    ++redraws;
  }
  report.both_classes_seen = report.sat_count > 0 && report.unsat_count > 0;
  return report;
}

std::string CampaignReport::to_text() const {
  std::ostringstream out;
  out << "pmlg verification campaign\n";
  for (const TrialRecord& r : records) {
    out << "trial " << r.trial << " n " << r.n << " k " << r.k << " digest " << std::hex
        << std::setw(16) << std::setfill('0') << r.digest << std::dec << std::setfill(' ')
        << " sat " << (r.sat ? 1 : 0) << " base " << opt_flag(r.match_base) << " degree3 "
        << opt_flag(r.match_deg3) << " binary " << opt_flag(r.match_bin) << " dag "
        << opt_flag(r.match_dag) << " agree " << (r.agreement ? 1 : 0) << " m " << r.m
        << " edges " << r.edges;
    if (r.redraw) out << " redraw 1";
    if (!r.failure.empty()) out << " failure " << r.failure;
    out << "\n";
  }
  out << "classes sat " << sat_count << " unsat " << unsat_count << "\n";
  out << "size_checks " << (size_checks_ok ? "ok" : "FAILED") << "\n";
  long long good = std::count_if(records.begin(), records.end(),
                                 [](const TrialRecord& r) { return r.agreement; });
  out << "agreement " << good << " of " << records.size() << "\n";
  out << "result " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string CampaignReport::to_csv() const {
  std::ostringstream out;
  out << "trial,n,k,sat,match_base,match_deg3,match_bin,match_dag,m,edges,micros_match\n";
  for (const TrialRecord& r : records) {
    out << r.trial << "," << r.n << "," << r.k << "," << (r.sat ? 1 : 0) << ","
        << opt_flag(r.match_base) << "," << opt_flag(r.match_deg3) << ","
        << opt_flag(r.match_bin) << "," << opt_flag(r.match_dag) << "," << r.m << "," << r.edges
        << "," << r.micros_match << "\n";
  }
  return out.str();
}

std::vector<std::vector<int>> enumerate_matching_walks(const LabeledGraph& g,
                                                       std::string_view pattern,
                                                       std::size_t limit) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.label(v).size() != 1) {
      throw std::invalid_argument("walk enumeration requires unit labels");
    }
  }
  const auto adj = g.out_neighbors();
  std::vector<std::vector<int>> result;
  std::vector<int> walk;

  auto dfs = [&](auto&& self, int node, size_t pos) -> void {
    if (g.label(node)[0] != pattern[pos]) return;
    walk.push_back(node);
    if (pos + 1 == pattern.size()) {
      if (result.size() >= limit) throw std::runtime_error("walk enumeration limit exceeded");
      result.push_back(walk);
    } else {
      for (int w : adj[node]) self(self, w, pos + 1);
    }
    walk.pop_back();
  };
  for (int v = 0; v < g.node_count(); ++v) dfs(dfs, v, 0);
  return result;
}

bool LemmaSuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.failures == 0; });
}

std::string LemmaSuiteReport::to_text() const {
  std::ostringstream out;
  out << "pmlg lemma suite\n";
  for (const LemmaCheck& c : checks) {
    out << "check " << c.name << " cases " << c.cases << " failures " << c.failures << " "
        << (c.failures == 0 ? "PASS" : "FAIL") << "\n";
    for (const std::string& d : c.details) out << "  detail " << d << "\n";
  }
  out << "result " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

void note_failure(LemmaCheck& check, const std::string& detail) {
  ++check.failures;
  if (check.details.size() < 5) check.details.push_back(detail);
}

}  // namespace

LemmaSuiteReport run_lemma_suite(const CampaignConfig& cfg) {
  cfg.validate();
  for (int n : cfg.n_values) {
    if (n > 6) {
      throw std::invalid_argument("lemma suite block enumeration requires n <= 6");
    }
  }

  LemmaSuiteReport report;
  LemmaCheck encoding{"encoding_table", 0, 0, {}};
  LemmaCheck same_row{"block_walks_same_row", 0, 0, {}};
  LemmaCheck row_cover{"block_iff_row_cover", 0, 0, {}};
  LemmaCheck full_blocks{"full_match_iff_block_match", 0, 0, {}};
  LemmaCheck bridges{"boundary_edges_are_bridges", 0, 0, {}};
  LemmaCheck pattern_shape{"pattern_shape", 0, 0, {}};
  LemmaCheck encode_match{"binary_encoding_preserves_match", 0, 0, {}};

  const EncodingTableReport table = verify_encoding_table();
  encoding.cases = table.cases_checked;
  for (const std::string& v : table.violations) note_failure(encoding, v);

  std::mt19937_64 rng(cfg.seed);
  for (int n : cfg.n_values) {
    for (int t = 0; t < cfg.trials; ++t) {
      const int k = cfg.k_range.first + draw(rng, cfg.k_range.second - cfg.k_range.first + 1);
      const CnfFormula f = make_even(
          random_formula(rng, n, k, cfg.clause_literals.first, cfg.clause_literals.second));
      const ReductionArtifacts base = build_full_graph(f);
      const GadgetGraph gf = build_gadget_gf(base.matrix);
      const int rows = base.matrix.row_count();

      // Every completed block walk stays in one row and crosses columns 1..k
      // in order.
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::string block = "b";
        for (int h = 0; h < k; ++h) block += (mask >> h) & 1 ? 'd' : 'c';
        block += 'e';
        ++same_row.cases;
        for (const auto& walk : enumerate_matching_walks(gf.graph, block)) {
          std::vector<int> sorted(walk);
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            note_failure(same_row, "walk revisits a node for block " + block);
            continue;
          }
          if (static_cast<int>(walk.size()) != k + 2) {
            note_failure(same_row, "walk length != k+2 for block " + block);
            continue;
          }
          const int row = gf.roles[walk[1]].j;
          for (int h = 1; h <= k; ++h) {
            const NodeRole& role = gf.roles[walk[h]];
            if (role.j != row || role.h != h) {
              note_failure(same_row, "walk leaves its row for block " + block);
              break;
            }
          }
        }
      }

      // A block matches the formula gadget iff some row covers its 'c'
      // positions.
      const auto blocks = pattern_blocks(base.pattern, k);
      for (const std::string& body : blocks) {
        ++row_cover.cases;
        bool covered = false;
        for (int j = 1; j <= rows && !covered; ++j) {
          bool row_ok = true;
          for (int h = 1; h <= k; ++h) {
            if (body[h - 1] == 'c' && !base.matrix.contains(j, h)) {
              row_ok = false;
              break;
            }
          }
          covered = row_ok;
        }
        const bool matched = match_exact(gf.graph, "b" + body + "e");
        if (matched != covered) {
          note_failure(row_cover, "block " + body + " matched=" + std::to_string(matched) +
                                      " covered=" + std::to_string(covered));
        }
      }

      // The full pattern matches iff some single block matches the formula
      // gadget alone.
      {
        ++full_blocks.cases;
        bool any_block = false;
        for (const std::string& body : blocks) {
          if (match_exact(gf.graph, "b" + body + "e")) {
            any_block = true;
            break;
          }
        }
        const bool full = match_exact(base.graph, base.pattern);
        if (full != any_block) {
          note_failure(full_blocks, "full=" + std::to_string(full) +
                                        " blocks=" + std::to_string(any_block));
        }
      }

      // Every e-b labeled edge is a bridge.
      {
        ++bridges.cases;
        const auto bridge_set = find_bridges(base.graph);
        for (const Edge& e : base.stats.bridges) {
          if (!std::binary_search(bridge_set.begin(), bridge_set.end(), e)) {
            note_failure(bridges, "edge " + std::to_string(e.first) + "-" +
                                      std::to_string(e.second) + " is not a bridge");
          }
        }
      }

      // Pattern shape: no "be", and exactly 2^{n/2}+1 of each sync symbol.
      {
        ++pattern_shape.cases;
        if (base.pattern.find("be") != std::string::npos) {
          note_failure(pattern_shape, "pattern contains be");
        }
        const long long b_count = std::count(base.pattern.begin(), base.pattern.end(), 'b');
        const long long e_count = std::count(base.pattern.begin(), base.pattern.end(), 'e');
        if (b_count != rows + 1 || e_count != rows + 1) {
          note_failure(pattern_shape, "sync symbol counts off");
        }
      }

      // Binary encoding preserves the degree-3 answer; the revised and
      // encoded patterns avoid the forbidden factors.
      {
        ++encode_match.cases;
        const ReductionArtifacts deg3 = to_degree3(base);
        const ReductionArtifacts bin = encode_binary(deg3);
        if (deg3.pattern.find("be") != std::string::npos) {
          note_failure(encode_match, "revised pattern contains be");
        }
        if (bin.pattern.find("1001") != std::string::npos) {
          note_failure(encode_match, "encoded pattern contains 1001");
        }
        const bool d3 = match_exact(deg3.graph, deg3.pattern);
        const bool b2 = match_exact(bin.graph, bin.pattern);
        if (d3 != b2) {
          note_failure(encode_match,
                       "degree3=" + std::to_string(d3) + " binary=" + std::to_string(b2));
        }
      }
    }
  }

  report.checks = {encoding, same_row,      row_cover,   full_blocks,
                   bridges,  pattern_shape, encode_match};
  return report;
}

}  // namespace pmlg
