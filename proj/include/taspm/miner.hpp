#pragma once

// Depth-first targeted sequential pattern miner over the vertical bitmap
// database, configurable from the plain co-occurrence-pruned baseline
// (with output filtering) up to the fully pruned targeted search.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "taspm/core_model.hpp"

namespace taspm {

struct MinerConfig {
  std::string label = "custom";
  bool utfp = false;          // drop sequences not containing the query
  bool upip = false;          // feasibility check on prefix items
  bool usip = false;          // feasibility check after S-extensions
  bool uiip = false;          // feasibility check after I-extensions
  bool cmap_pruning = false;  // co-occurrence pruning of candidates
  bool post_filter = false;   // emit every frequent pattern, keep those containing the query

  static MinerConfig cmspam();
  static MinerConfig taspm_v1();
  static MinerConfig taspm_v2();
  // "cmspam", "taspm-v1" / "taspm_v1", "taspm-v2" / "taspm_v2". Throws BadParams.
  static MinerConfig preset(std::string_view name);

  // Sets one toggle by name ("utfp", "upip", "usip", "uiip",
  // "cmap_pruning" or "cmap", "post_filter"). Throws BadParams.
  void set_toggle(std::string_view name, bool on);
};

class MinSupport {
 public:
  static MinSupport absolute(std::uint64_t count);
  static MinSupport relative(double fraction);

  // Absolute count for a database of `db_size` sequences:
  // ceil(fraction * db_size), at least 1. Throws BadThreshold.
  std::uint64_t resolve(std::size_t db_size) const;

  bool is_relative() const { return relative_; }

 private:
  bool relative_ = false;
  std::uint64_t count_ = 1;
  double fraction_ = 0.0;
};

struct MiningMetrics {
  std::chrono::nanoseconds runtime{0};
  std::uint64_t intersections = 0;
  std::uint64_t peak_bitmap_bytes = 0;
  std::uint64_t patterns_emitted = 0;
  std::uint64_t db_size_after_filter = 0;
  std::uint64_t effective_minsup = 0;
  // Candidates skipped by each pruning rule.
  std::uint64_t pruned_cmap = 0;
  std::uint64_t pruned_upip = 0;
  std::uint64_t pruned_usip = 0;
  std::uint64_t pruned_uiip = 0;
};

struct MiningResult {
  PatternSet patterns;  // DFS order
  MiningMetrics metrics;
};

// Items of db with support >= minsup, ascending.
std::vector<Item> frequent_items(const SequenceDatabase& db, std::uint64_t minsup);

// The relative threshold is resolved against |db| before any filtering.
MiningResult mine(const SequenceDatabase& db, const QuerySequence& qs, const MinSupport& minsup,
                  const MinerConfig& cfg);

}  // namespace taspm
