#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "taspm/containment.hpp"
#include "taspm/error.hpp"
#include "taspm/miner.hpp"
#include "taspm/spmf_io.hpp"

using namespace taspm;
using namespace fixtures;

namespace {
MiningResult run(const SequenceDatabase& db, const QuerySequence& qs, std::uint64_t minsup,
                 const MinerConfig& cfg) {
  return mine(db, qs, MinSupport::absolute(minsup), cfg);
}
const MinerConfig kPresets[] = {MinerConfig::cmspam(), MinerConfig::taspm_v1(),
                                MinerConfig::taspm_v2()};
}  // namespace

TEST_CASE("presets") {
  auto v2 = MinerConfig::taspm_v2();
  CHECK(v2.utfp);
  CHECK(v2.upip);
  CHECK(v2.usip);
  CHECK(v2.uiip);
  CHECK(v2.cmap_pruning);
  CHECK_FALSE(v2.post_filter);
  auto v1 = MinerConfig::preset("taspm-v1");
  CHECK(v1.utfp);
  CHECK_FALSE(v1.upip);
  CHECK(v1.post_filter);
  auto base = MinerConfig::preset("cmspam");
  CHECK_FALSE(base.utfp);
  CHECK(base.cmap_pruning);
  CHECK_THROWS_AS(MinerConfig::preset("spade"), Error);
  CHECK_THROWS_AS(base.set_toggle("nope", true), Error);
}

TEST_CASE("thresholds") {
  CHECK_THROWS_AS(MinSupport::absolute(0), Error);
  CHECK_THROWS_AS(MinSupport::relative(0.0), Error);
  CHECK_THROWS_AS(MinSupport::relative(1.5), Error);
  CHECK(MinSupport::relative(0.5).resolve(4) == 2);
  CHECK(MinSupport::relative(0.3).resolve(4) == 2);
  CHECK(MinSupport::relative(1.0).resolve(4) == 4);
  CHECK(MinSupport::relative(0.5).resolve(0) == 1);
  CHECK(MinSupport::absolute(3).resolve(100) == 3);
}

TEST_CASE("frequent_items") {
  auto db = table1();
  CHECK(frequent_items(db, 2) == std::vector<Item>{a, b, c, d, e, f, g});
  CHECK(frequent_items(db, 5).empty());
  auto af = filter_database(db, query({{a}, {f}}));
  CHECK(frequent_items(af, 2) == std::vector<Item>{a, b, c, d, f});
}

TEST_CASE("query <(a),(e)> at minsup 2") {
  for (const auto& cfg : kPresets) {
    auto res = run(table1(), query({{a}, {e}}), 2, cfg);
    CHECK(as_map(res.patterns) == PatternMap{{{{a}, {e}}, 2}, {{{a}, {b}, {e}}, 2}});
    CHECK(res.metrics.patterns_emitted == 2);
  }
}

TEST_CASE("filtered database below minsup yields nothing") {
  for (const auto* name : {"taspm-v1", "taspm-v2"}) {
    auto res = run(table1(), query({{a}, {e}, {f}}), 2, MinerConfig::preset(name));
    CHECK(res.patterns.empty());
    CHECK(res.metrics.db_size_after_filter == 1);
    CHECK(res.metrics.intersections == 0);
  }
}

TEST_CASE("empty query degenerates to plain frequent mining") {
  auto db = table1();
  auto res = run(db, query({}), 2, MinerConfig::cmspam());
  CHECK(as_map(res.patterns) == as_map(oracle_enumerate(db, query({}), 2)));
  auto v2 = run(db, query({}), 2, MinerConfig::taspm_v2());
  CHECK(v2.patterns == res.patterns);
}

TEST_CASE("running example query <(a),(b)>") {
  auto db = table1();
  auto qs = query({{a}, {b}});
  auto expected = as_map(oracle_enumerate(db, qs, 2));
  CHECK(expected.at({{g}, {a}, {b}}) == 2);
  CHECK(expected.at({{a}, {b}, {f}}) == 2);
  PatternSet reference;
  for (const auto& cfg : kPresets) {
    auto res = run(db, qs, 2, cfg);
    CHECK(as_map(res.patterns) == expected);
    if (reference.empty()) reference = res.patterns;
    CHECK(res.patterns == reference);  // same DFS order
  }
}

TEST_CASE("USIP skips <(g),(b)> under <(a),(b)>") {
  auto res = run(table1(), query({{a}, {b}}), 2, MinerConfig::taspm_v2());
  CHECK(res.metrics.pruned_usip > 0);
  auto only_usip = MinerConfig::taspm_v1();
  only_usip.usip = true;
  auto with = run(table1(), query({{a}, {b}}), 2, only_usip);
  CHECK(with.metrics.intersections < run(table1(), query({{a}, {b}}), 2,
                                         MinerConfig::taspm_v1()).metrics.intersections);
  CHECK(as_map(with.patterns) == as_map(res.patterns));
}

TEST_CASE("UIIP on <(g),(a,c),(b)>") {
  auto db = table1();
  auto qs = query({{g}, {a, c}, {b}});
  auto cfg = MinerConfig::taspm_v1();
  cfg.uiip = true;
  auto res = run(db, qs, 2, cfg);
  CHECK(res.metrics.pruned_uiip > 0);
  CHECK(as_map(res.patterns) == as_map(oracle_enumerate(db, qs, 2)));
  CHECK(as_map(res.patterns).count({{g}, {a, c}, {b}}) == 1);
}

TEST_CASE("UPIP rejects prefix f under <(a),(b)>") {
  auto cfg = MinerConfig::taspm_v1();
  cfg.upip = true;
  auto res = run(table1(), query({{a}, {b}}), 2, cfg);
  CHECK(res.metrics.pruned_upip >= 1);
}

TEST_CASE("relative minsup resolves against the unfiltered database") {
  auto db = table1();
  auto rel = mine(db, query({{a}, {b}}), MinSupport::relative(0.5), MinerConfig::taspm_v2());
  CHECK(rel.metrics.effective_minsup == 2);
  CHECK(rel.patterns == run(db, query({{a}, {b}}), 2, MinerConfig::taspm_v2()).patterns);
}

TEST_CASE("query item missing from the database") {
  for (const auto& cfg : kPresets) CHECK(run(table1(), query({{26}}), 1, cfg).patterns.empty());
  auto no_filter = MinerConfig::taspm_v2();
  no_filter.utfp = false;
  CHECK(run(table1(), query({{a}, {26}}), 1, no_filter).patterns.empty());
}

TEST_CASE("empty database") {
  for (const auto& cfg : kPresets) {
    auto res = run(SequenceDatabase{}, query({{a}}), 1, cfg);
    CHECK(res.patterns.empty());
    CHECK(res.metrics.intersections == 0);
  }
}

TEST_CASE("emitted patterns are frequent targets with exact supports") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto db = random_db(rng, {});
    auto qs = random_query(rng, db, 3, 6);
    std::uint64_t minsup = 1 + rng() % 3;
    for (const auto& cfg : kPresets) {
      auto res = run(db, qs, minsup, cfg);
      for (const auto& p : res.patterns) {
        REQUIRE(p.support >= minsup);
        REQUIRE(p.support == naive_support(db, p.itemsets));
        REQUIRE(sequence_contains(p, qs));
      }
    }
  }
}

TEST_CASE("deterministic output and counts") {
  std::mt19937_64 rng(5);
  auto db = random_db(rng, {10, 6, 6, 3});
  auto qs = random_query(rng, db, 2, 6);
  for (const auto& cfg : kPresets) {
    auto x = run(db, qs, 2, cfg);
    auto y = run(db, qs, 2, cfg);
    CHECK(patterns_to_string(x.patterns) == patterns_to_string(y.patterns));
    CHECK(x.metrics.intersections == y.metrics.intersections);
    CHECK(x.metrics.peak_bitmap_bytes == y.metrics.peak_bitmap_bytes);
  }
}

TEST_CASE("pruned variants never use more intersections or memory") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto db = random_db(rng, {});
    auto qs = random_query(rng, db, 3, 6);
    std::uint64_t minsup = 1 + rng() % 3;
    auto base = run(db, qs, minsup, MinerConfig::cmspam()).metrics;
    auto v1 = run(db, qs, minsup, MinerConfig::taspm_v1()).metrics;
    auto v2 = run(db, qs, minsup, MinerConfig::taspm_v2()).metrics;
    CHECK(v2.intersections <= v1.intersections);
    CHECK(v1.intersections <= base.intersections);
    CHECK(v1.peak_bitmap_bytes <= base.peak_bitmap_bytes);
  }
}
