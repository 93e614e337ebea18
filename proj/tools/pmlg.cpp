#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmlg/bench.hpp"
#include "pmlg/cnf.hpp"
#include "pmlg/graph.hpp"
#include "pmlg/matcher.hpp"
#include "pmlg/reduction.hpp"
#include "pmlg/transform.hpp"
#include "pmlg/verification.hpp"

namespace {

struct ReduceOptions {
  std::string cnf_path;
  std::string out_prefix;
  bool degree3 = false;
  bool binary = false;
  bool dag = false;
};

int cmd_reduce(const ReduceOptions& opt) {
  if (opt.binary && !opt.degree3) {
    std::cerr << "pmlg reduce: --binary requires --degree3\n";
    return 2;
  }
  if (opt.dag && !opt.degree3) {
    std::cerr << "pmlg reduce: --dag requires --degree3\n";
    return 2;
  }

  const pmlg::CnfFormula f = pmlg::make_even(pmlg::parse_dimacs_file(opt.cnf_path));
  pmlg::ReductionArtifacts art = pmlg::build_full_graph(f);
  if (opt.degree3) art = pmlg::to_degree3(art);
  if (opt.binary) art = pmlg::encode_binary(art);
  if (opt.dag) art = pmlg::orient_dag(art);

  std::string prefix = opt.out_prefix;
  if (prefix.empty()) {
    prefix = std::filesystem::path(opt.cnf_path).stem().string();
    if (prefix.empty()) prefix = "out";
  }
  pmlg::write_graph_file(art.graph, prefix + ".graph");
  pmlg::write_pattern_file(art.pattern, prefix + ".pattern");
  pmlg::write_manifest_file(art, prefix + ".manifest");

  std::cout << "reduce variant=" << pmlg::variant_name(art.variant) << " n=" << art.stats.n
            << " k=" << art.stats.k << " m=" << art.stats.m << " nodes=" << art.stats.nodes
            << " edges=" << art.stats.edges << " clause_nodes=" << art.stats.clause_nodes
            << " dummy_nodes=" << art.stats.dummy_nodes
            << " bridges=" << art.stats.bridges.size() << " out=" << prefix << ".{graph,pattern,manifest}\n";
  return 0;
}

struct MatchOptions {
  std::string graph_path;
  std::string pattern_path;
  bool report_all = false;
};

int cmd_match(const MatchOptions& opt) {
  const pmlg::LabeledGraph g = pmlg::parse_graph_file(opt.graph_path);
  const std::string pattern = pmlg::read_pattern_file(opt.pattern_path);

  if (!opt.report_all) {
    return pmlg::match_exact(g, pattern) ? 0 : 1;
  }
  const pmlg::MatchReport report = pmlg::match_exact_report(g, pattern);
  for (const pmlg::Occurrence& occ : report.witnesses) {
    std::cout << "match " << occ.nodes.front() << " " << occ.offset << " ";
    for (size_t i = 0; i < occ.nodes.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << occ.nodes[i];
    }
    std::cout << " " << occ.end_offset << "\n";
  }
  return report.matched ? 0 : 1;
}

struct VerifyOptions {
  int n = 4;
  int k = 3;
  int k_max = 0;  // 0 = same as k
  int trials = 100;
  std::uint64_t seed = 42;
  std::string variants = "base,degree3,binary,dag";
  std::string report_prefix = "verify_report";
};

std::vector<pmlg::Variant> parse_variants(const std::string& csv) {
  std::vector<pmlg::Variant> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "dag") {
      out.push_back(pmlg::Variant::BinaryDag);
    } else {
      out.push_back(pmlg::variant_from_name(item));
    }
  }
  return out;
}

int cmd_verify(const VerifyOptions& opt) {
  int n = opt.n;
  bool padded = false;
  if (n % 2 != 0) {
    n += 1;
    padded = true;
  }

  pmlg::CampaignConfig cfg;
  cfg.n_values = {n};
  cfg.k_range = {opt.k, opt.k_max > 0 ? opt.k_max : opt.k};
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.variants = parse_variants(opt.variants);

  const pmlg::CampaignReport campaign = pmlg::run_campaign(cfg);

  pmlg::CampaignConfig lemma_cfg = cfg;
  lemma_cfg.n_values = {std::min(n, 6)};
  lemma_cfg.trials = std::min(cfg.trials, 50);
  const pmlg::LemmaSuiteReport lemmas = pmlg::run_lemma_suite(lemma_cfg);

  std::ofstream text(opt.report_prefix + ".txt");
  if (padded) text << "note: odd n " << opt.n << " padded to " << n << " via make_even\n";
  text << campaign.to_text() << lemmas.to_text();
  std::ofstream csv(opt.report_prefix + ".csv");
  csv << campaign.to_csv();

  if (padded) std::cout << "note: odd n " << opt.n << " padded to " << n << " via make_even\n";
  std::cout << "campaign trials=" << campaign.records.size()
            << " agreement_rate=" << campaign.agreement_rate()
            << " sat=" << campaign.sat_count << " unsat=" << campaign.unsat_count << " "
            << (campaign.passed() ? "PASS" : "FAIL") << "\n";
  std::cout << "lemma_suite " << (lemmas.all_pass() ? "PASS" : "FAIL") << "\n";
  std::cout << "report " << opt.report_prefix << ".txt " << opt.report_prefix << ".csv\n";
  return campaign.passed() && lemmas.all_pass() ? 0 : 1;
}

int cmd_sat(const std::string& cnf_path) {
  const pmlg::CnfFormula f = pmlg::parse_dimacs_file(cnf_path);
  const auto witness = pmlg::brute_force_sat(f);
  if (!witness.has_value()) {
    std::cout << "s UNSATISFIABLE\n";
    return 1;
  }
  std::cout << "s SATISFIABLE\nv ";
  for (int t = 0; t < f.n; ++t) {
    std::cout << ((*witness)[t] ? t + 1 : -(t + 1)) << " ";
  }
  std::cout << "0\n";
  return 0;
}

struct BenchOptions {
  pmlg::BenchConfig cfg;
  std::string csv_path;
};

int cmd_bench(const BenchOptions& opt) {
  const auto records = pmlg::run_scaling_bench(opt.cfg);
  const std::string csv = pmlg::bench_csv(records);
  std::cout << csv;
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    out << csv;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pattern matching in labeled graphs and its SAT-based instance generator"};
  app.require_subcommand(1);

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand("reduce", "build pattern/graph/manifest from a CNF");
  reduce->add_option("--cnf", reduce_opt.cnf_path, "DIMACS CNF input")->required();
  reduce->add_option("--out", reduce_opt.out_prefix, "output file prefix (default: CNF stem)");
  reduce->add_flag("--degree3", reduce_opt.degree3, "rewire to maximum degree three");
  reduce->add_flag("--binary", reduce_opt.binary, "encode labels over {0,1} (needs --degree3)");
  reduce->add_flag("--dag", reduce_opt.dag, "orient edges into a DAG (needs --degree3)");

  MatchOptions match_opt;
  CLI::App* match = app.add_subcommand("match", "match a pattern file against a graph file");
  match->add_option("--graph", match_opt.graph_path, "graph file")->required();
  match->add_option("--pattern", match_opt.pattern_path, "pattern file")->required();
  match->add_flag("--all", match_opt.report_all, "print one witness line per end state");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "run the equivalence campaign and lemma suite");
  verify->add_option("--n", verify_opt.n, "variable count (odd values are padded)")->required();
  verify->add_option("--k", verify_opt.k, "clause count (lower bound when --k-max is set)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--k-max", verify_opt.k_max, "upper clause count bound");
  verify->add_option("--trials", verify_opt.trials, "trials per n")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opt.seed, "rng seed (default 42)");
  verify->add_option("--variants", verify_opt.variants,
                     "comma list from base,degree3,binary,dag (default all)");
  verify->add_option("--report", verify_opt.report_prefix, "report file prefix");

  std::string sat_cnf;
  CLI::App* sat = app.add_subcommand("sat", "brute-force satisfiability of a DIMACS file");
  sat->add_option("--cnf", sat_cnf, "DIMACS CNF input")->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand("bench", "matcher scaling measurement (CSV)");
  bench->add_option("--n-min", bench_opt.cfg.n_min, "smallest n (even)");
  bench->add_option("--n-max", bench_opt.cfg.n_max, "largest n (even, <= 16)");
  bench->add_option("--k", bench_opt.cfg.k, "clause count (>= 2)");
  bench->add_option("--repeats", bench_opt.cfg.repeats, "timed runs per instance")
      ->check(CLI::PositiveNumber);
  bench->add_option("--csv", bench_opt.csv_path, "also write the CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(reduce)) return cmd_reduce(reduce_opt);
    if (app.got_subcommand(match)) return cmd_match(match_opt);
    if (app.got_subcommand(verify)) return cmd_verify(verify_opt);
    if (app.got_subcommand(sat)) return cmd_sat(sat_cnf);
    if (app.got_subcommand(bench)) return cmd_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "pmlg: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
