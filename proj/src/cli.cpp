#include "taspm/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "taspm/bench.hpp"
#include "taspm/error.hpp"
#include "taspm/miner.hpp"
#include "taspm/spmf_io.hpp"
#include "taspm/synth_gen.hpp"

namespace taspm {

namespace {

// Failures caused by flag values rather than data.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_usage(ErrorCode c) {
  return c == ErrorCode::BadThreshold || c == ErrorCode::BadParams;
}

QuerySequence query_flag(const std::string& text, const ParseOptions& opts) {
  try {
    return parse_query(text, opts);
  } catch (const Error& e) {
    throw UsageError(std::string("--query: ") + e.what());
  }
}

MinerConfig config_flags(const std::string& algo, const std::vector<std::string>& toggles) {
  MinerConfig cfg;
  try {
    cfg = MinerConfig::preset(algo);
  } catch (const Error& e) {
    throw UsageError(std::string("--algo: ") + e.what());
  }
  for (const auto& t : toggles) {
    auto eq = t.find('=');
    std::string value = eq == std::string::npos ? "" : t.substr(eq + 1);
    if (eq == std::string::npos || (value != "on" && value != "off"))
      throw UsageError("--toggle: expected NAME=on|off, got '" + t + "'");
    try {
      cfg.set_toggle(t.substr(0, eq), value == "on");
    } catch (const Error& e) {
      throw UsageError(std::string("--toggle: ") + e.what());
    }
  }
  return cfg;
}

std::string metrics_line(const MinerConfig& cfg, const MiningMetrics& m) {
  std::ostringstream s;
  s << "algo=" << cfg.label << " minsup=" << m.effective_minsup
    << " patterns=" << m.patterns_emitted << " intersections=" << m.intersections
    << " peak_bitmap_bytes=" << m.peak_bitmap_bytes
    << " db_after_filter=" << m.db_size_after_filter << " runtime_ms="
    << std::chrono::duration_cast<std::chrono::milliseconds>(m.runtime).count();
  return s.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

struct MineArgs {
  std::string input, query, algo = "taspm-v2", output;
  std::uint64_t minsup = 0;
  double minsup_rel = 0.0;
  std::vector<std::string> toggles;
  bool normalize = false;
};

int cmd_mine(const MineArgs& a, CLI::Option* abs_opt, std::ostream& out, std::ostream& err) {
  ParseOptions opts{a.normalize};
  QuerySequence qs = query_flag(a.query, opts);
  MinerConfig cfg = config_flags(a.algo, a.toggles);
  MinSupport ms = [&] {
    try {
      return abs_opt->count() ? MinSupport::absolute(a.minsup) : MinSupport::relative(a.minsup_rel);
    } catch (const Error& e) {
      throw UsageError(std::string(abs_opt->count() ? "--minsup: " : "--minsup-rel: ") + e.what());
    }
  }();

  SequenceDatabase db = read_database_file(a.input, opts);
  MiningResult res = mine(db, qs, ms, cfg);
  if (a.output.empty() || a.output == "-") {
    write_patterns(res.patterns, out);
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw Error(ErrorCode::Io, "cannot open '" + a.output + "' for writing");
    write_patterns(res.patterns, f);
  }
  err << metrics_line(cfg, res.metrics) << '\n';
  return kExitOk;
}

struct GenArgs {
  GenParams params;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  SequenceDatabase db;
  try {
    db = generate(a.params);
  } catch (const Error& e) {
    if (is_usage(e.code())) throw UsageError(e.what());
    throw;
  }
  if (a.output.empty() || a.output == "-")
    write_database(db, out);
  else
    write_database_file(db, a.output);
  return kExitOk;
}

int cmd_stats(const std::string& input, bool normalize, std::ostream& out) {
  auto db = read_database_file(input, ParseOptions{normalize});
  out << format_stats(compute_stats(db)) << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::string query, minsups, algos = "cmspam,taspm-v1,taspm-v2", csv;
  unsigned repeat = 1;
  GenParams gen{10000, 7500, 6.0, 4.3, 100, 0.5, 42};
  bool normalize = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  ParseOptions opts{a.normalize};
  BenchPlan plan;
  plan.query = query_flag(a.query, opts);
  plan.repeat = a.repeat;
  if (a.repeat < 1) throw UsageError("--repeat: must be >= 1");
  for (const auto& m : split_list(a.minsups)) {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(m, &used);
      if (used != m.size() || m.front() == '-') throw std::invalid_argument(m);
    } catch (const std::exception&) {
      throw UsageError("--minsup-list: bad value '" + m + "'");
    }
    if (v < 1) throw UsageError("--minsup-list: values must be >= 1");
    plan.minsups.push_back(v);
  }
  if (plan.minsups.empty()) throw UsageError("--minsup-list: no values");
  for (const auto& name : split_list(a.algos)) plan.algorithms.push_back(config_flags(name, {}));
  if (plan.algorithms.empty()) throw UsageError("--algos: no algorithms");
  for (const auto& in : a.inputs) {
    try {
      auto more = expand_input(in, a.gen, opts);
      plan.datasets.insert(plan.datasets.end(), more.begin(), more.end());
    } catch (const Error& e) {
      throw UsageError(std::string("--input: ") + e.what());
    }
  }

  std::ofstream file;
  std::ostream* csv = &out;
  if (!a.csv.empty() && a.csv != "-") {
    file.open(a.csv, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot open '" + a.csv + "' for writing");
    csv = &file;
  }
  *csv << kBenchCsvHeader << '\n' << std::flush;
  auto rows = run_bench(plan, [&](const BenchRow& r) {
    *csv << format_bench_row(r) << '\n' << std::flush;
    err << r.dataset << ' ' << r.algorithm << " minsup=" << r.minsup
        << " intersections=" << r.intersections << " runtime_ms=" << r.runtime_ms << '\n';
  });
  auto bad = intersection_order_violations(rows);
  for (const auto& v : bad) err << "intersection ordering violated: " << v << '\n';
  return bad.empty() ? kExitOk : kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Targeted sequential pattern mining", "taspm"};
  app.require_subcommand(1);

  MineArgs mine_args;
  auto* mine_cmd = app.add_subcommand("mine", "Mine target sequential patterns");
  mine_cmd->add_option("--input", mine_args.input, "SPMF sequence file")->required();
  mine_cmd->add_option("--query", mine_args.query, "Query in SPMF tokens, e.g. \"1 -1 2 -1\"");
  auto* abs_opt = mine_cmd->add_option("--minsup", mine_args.minsup, "Absolute minimum support");
  auto* rel_opt =
      mine_cmd->add_option("--minsup-rel", mine_args.minsup_rel, "Relative minimum support");
  abs_opt->excludes(rel_opt);
  mine_cmd->add_option("--algo", mine_args.algo, "cmspam | taspm-v1 | taspm-v2")
      ->capture_default_str();
  mine_cmd->add_option("--toggle", mine_args.toggles, "NAME=on|off, repeatable");
  mine_cmd->add_option("--output", mine_args.output, "Pattern file (stdout when omitted)");
  mine_cmd->add_flag("--normalize", mine_args.normalize, "Sort unsorted itemsets");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic SPMF database");
  gen_cmd->add_option("--sequences", gen_args.params.n_sequences)->capture_default_str();
  gen_cmd->add_option("--alphabet", gen_args.params.alphabet_size)->capture_default_str();
  gen_cmd->add_option("--avg-itemsets", gen_args.params.avg_itemsets_per_seq)
      ->capture_default_str();
  gen_cmd->add_option("--avg-items", gen_args.params.avg_items_per_itemset)
      ->capture_default_str();
  gen_cmd->add_option("--patterns", gen_args.params.n_embedded_patterns)->capture_default_str();
  gen_cmd->add_option("--embed-prob", gen_args.params.embed_probability)->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.params.seed)->capture_default_str();
  gen_cmd->add_option("--output", gen_args.output, "Output file (stdout when omitted)");

  std::string stats_input;
  bool stats_normalize = false;
  auto* stats_cmd = app.add_subcommand("stats", "Print dataset statistics");
  stats_cmd->add_option("--input", stats_input)->required();
  stats_cmd->add_flag("--normalize", stats_normalize);

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a minsup sweep and write CSV");
  bench_cmd->add_option("--input", bench_args.inputs, "SPMF file, gen:N or gen:A..B:STEP")
      ->required();
  bench_cmd->add_option("--query", bench_args.query);
  bench_cmd->add_option("--minsup-list", bench_args.minsups, "Comma-separated absolute values")
      ->required();
  bench_cmd->add_option("--algos", bench_args.algos)->capture_default_str();
  bench_cmd->add_option("--csv", bench_args.csv, "CSV file (stdout when omitted)");
  bench_cmd->add_option("--repeat", bench_args.repeat)->capture_default_str();
  bench_cmd->add_option("--gen-alphabet", bench_args.gen.alphabet_size)->capture_default_str();
  bench_cmd->add_option("--gen-avg-itemsets", bench_args.gen.avg_itemsets_per_seq)
      ->capture_default_str();
  bench_cmd->add_option("--gen-avg-items", bench_args.gen.avg_items_per_itemset)
      ->capture_default_str();
  bench_cmd->add_option("--gen-patterns", bench_args.gen.n_embedded_patterns)
      ->capture_default_str();
  bench_cmd->add_option("--gen-embed-prob", bench_args.gen.embed_probability)
      ->capture_default_str();
  bench_cmd->add_option("--gen-seed", bench_args.gen.seed)->capture_default_str();
  bench_cmd->add_flag("--normalize", bench_args.normalize);

  std::vector<std::string> argv_store{"taspm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mine_cmd) {
      if (!abs_opt->count() && !rel_opt->count()) {
        err << "mine: one of --minsup or --minsup-rel is required\n";
        return kExitUsage;
      }
      return cmd_mine(mine_args, abs_opt, out, err);
    }
    if (*gen_cmd) return cmd_gen(gen_args, out);
    if (*stats_cmd) return cmd_stats(stats_input, stats_normalize, out);
    if (*bench_cmd) return cmd_bench(bench_args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage(e.code()) ? kExitUsage : kExitData;
  }
  return kExitUsage;
}

}  // namespace taspm
