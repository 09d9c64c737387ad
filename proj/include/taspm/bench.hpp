#pragma once

// Benchmark grid: every (dataset x algorithm x minsup) cell mined
// sequentially, one CSV row per cell.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "taspm/core_model.hpp"
#include "taspm/miner.hpp"
#include "taspm/spmf_io.hpp"
#include "taspm/synth_gen.hpp"

namespace taspm {

struct BenchRow {
  std::string dataset;
  std::string algorithm;
  std::uint64_t minsup = 0;
  std::string query;
  std::uint64_t runtime_ms = 0;
  std::uint64_t intersections = 0;
  std::uint64_t peak_bitmap_bytes = 0;
  std::uint64_t patterns = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

extern const char* const kBenchCsvHeader;

std::string format_bench_row(const BenchRow& row);
// Throws SyntaxError.
BenchRow parse_bench_row(std::string_view line);
// Expects the header on the first line.
std::vector<BenchRow> parse_bench_csv(std::istream& in);

struct DatasetSource {
  std::string label;
  std::function<SequenceDatabase()> load;
};

// "gen:N" and "gen:A..B:STEP" expand to generated databases (label
// "gen:N", params `gen` with n_sequences = N); anything else is a file.
std::vector<DatasetSource> expand_input(const std::string& spec, const GenParams& gen,
                                        const ParseOptions& opts = {});

struct BenchPlan {
  std::vector<DatasetSource> datasets;
  QuerySequence query;
  std::vector<std::uint64_t> minsups;
  std::vector<MinerConfig> algorithms;
  unsigned repeat = 1;
};

// Runs the grid, handing each finished row to `sink` before the next cell
// starts. With repeat > 1 runtime is the median and intersection counts
// must agree across repeats (BadParams otherwise).
std::vector<BenchRow> run_bench(const BenchPlan& plan,
                                const std::function<void(const BenchRow&)>& sink = {});

// Cells where the pruned variants use more intersections than the less
// pruned ones (taspm-v2 <= taspm-v1 <= cmspam per dataset and minsup).
std::vector<std::string> intersection_order_violations(const std::vector<BenchRow>& rows);

}  // namespace taspm
