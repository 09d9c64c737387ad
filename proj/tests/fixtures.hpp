#pragma once

// Shared test data: the four-sequence running example (letters a..g mapped
// to items 1..7) and small random instances.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taspm/containment.hpp"
#include "taspm/core_model.hpp"
#include "taspm/spmf_io.hpp"

namespace fixtures {

using taspm::Item;
using taspm::Itemset;

enum : Item { a = 1, b, c, d, e, f, g };

// s1 <(g),(a,d)>
// s2 <(g),(a,b,c,d),(b),(f)>
// s3 <(g),(a,b,c,d),(a,b),(e)>
// s4 <(a),(b,c,d,e),(e),(f)>
inline taspm::SequenceDatabase table1() {
  return taspm::parse_database_text(
      "7 -1 1 4 -1 -2\n"
      "7 -1 1 2 3 4 -1 2 -1 6 -1 -2\n"
      "7 -1 1 2 3 4 -1 1 2 -1 5 -1 -2\n"
      "1 -1 2 3 4 5 -1 5 -1 6 -1 -2\n");
}

inline taspm::QuerySequence query(std::vector<Itemset> itemsets) {
  return taspm::QuerySequence{std::move(itemsets)};
}

inline taspm::SequenceDatabase subset(const taspm::SequenceDatabase& db,
                                      std::vector<std::size_t> rows) {
  std::vector<taspm::Sequence> out;
  for (auto r : rows) out.push_back(db[r]);
  return taspm::SequenceDatabase(std::move(out));
}

struct InstanceShape {
  std::size_t max_sequences = 10;
  std::size_t max_itemsets = 6;
  Item max_alphabet = 6;
  std::size_t max_itemset_size = 3;
};

inline Itemset random_itemset(std::mt19937_64& rng, Item alphabet, std::size_t max_size) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(
      1, std::min<std::size_t>(max_size, alphabet))(rng);
  std::set<Item> s;
  while (s.size() < n) s.insert(std::uniform_int_distribution<Item>(1, alphabet)(rng));
  return Itemset(s.begin(), s.end());
}

inline taspm::SequenceDatabase random_db(std::mt19937_64& rng, const InstanceShape& shape) {
  Item alphabet = std::uniform_int_distribution<Item>(2, shape.max_alphabet)(rng);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, shape.max_sequences)(rng);
  std::vector<taspm::Sequence> seqs;
  for (std::size_t i = 0; i < n; ++i) {
    taspm::Sequence s;
    s.sid = static_cast<std::uint32_t>(i);
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, shape.max_itemsets)(rng);
    for (std::size_t j = 0; j < len; ++j)
      s.itemsets.push_back(random_itemset(rng, alphabet, shape.max_itemset_size));
    seqs.push_back(std::move(s));
  }
  return taspm::SequenceDatabase(std::move(seqs));
}

// Half of the time a sub-sequence of a random database sequence, otherwise
// random items. 0..max_size itemsets.
inline taspm::QuerySequence random_query(std::mt19937_64& rng, const taspm::SequenceDatabase& db,
                                         std::size_t max_size, Item alphabet) {
  std::size_t size = std::uniform_int_distribution<std::size_t>(0, max_size)(rng);
  taspm::QuerySequence qs;
  if (size == 0) return qs;
  if (rng() % 2 == 0 && !db.empty()) {
    const auto& s = db[rng() % db.size()];
    std::vector<std::size_t> pos(s.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(std::min(size, pos.size()));
    std::sort(pos.begin(), pos.end());
    for (auto p : pos) {
      Itemset src = s.itemsets[p];
      std::shuffle(src.begin(), src.end(), rng);
      src.resize(1 + rng() % std::min<std::size_t>(src.size(), 2));
      std::sort(src.begin(), src.end());
      qs.itemsets.push_back(src);
    }
    return qs;
  }
  for (std::size_t i = 0; i < size; ++i) qs.itemsets.push_back(random_itemset(rng, alphabet, 2));
  return qs;
}

// Pattern -> support, for order-insensitive comparison.
using PatternMap = std::map<std::vector<Itemset>, std::uint64_t>;

inline PatternMap as_map(const taspm::PatternSet& ps) {
  PatternMap m;
  for (const auto& p : ps) m.emplace(p.itemsets, p.support);
  return m;
}

// Containment by exhaustive backtracking; independent of the greedy scan.
inline bool contains_backtracking(taspm::ItemsetSpan super, taspm::ItemsetSpan sub,
                                  std::size_t i = 0, std::size_t k = 0) {
  if (k == sub.size()) return true;
  for (std::size_t j = i; j < super.size(); ++j) {
    bool subset = std::includes(super[j].begin(), super[j].end(), sub[k].begin(), sub[k].end());
    if (subset && contains_backtracking(super, sub, j + 1, k + 1)) return true;
  }
  return false;
}

// Bit (i, j) of a pattern's bitmap by definition: the pattern embeds into
// sequence i with its last itemset at position j.
inline std::vector<std::vector<bool>> naive_pattern_bits(const taspm::SequenceDatabase& db,
                                                         taspm::ItemsetSpan pattern) {
  std::vector<std::vector<bool>> out;
  for (const auto& s : db) {
    std::vector<bool> row(s.size(), false);
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto& last = pattern.back();
      if (!std::includes(s.itemsets[j].begin(), s.itemsets[j].end(), last.begin(), last.end()))
        continue;
      taspm::ItemsetSpan prefix(pattern.data(), pattern.size() - 1);
      taspm::ItemsetSpan before(s.itemsets.data(), j);
      row[j] = contains_backtracking(before, prefix);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace fixtures
