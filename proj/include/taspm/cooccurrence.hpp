#pragma once

// Co-occurrence map (CMAP) for pruning S- and I-extensions.
//
// s_succ(i, j): sequences where j occurs in an itemset strictly after some
// itemset containing i. i_succ(i, j), j > i: sequences where i and j share
// an itemset. Each sequence contributes at most 1 to a pair.

#include <cstdint>
#include <functional>
#include <vector>

#include "taspm/core_model.hpp"

namespace taspm {

class CoocMap {
 public:
  // Counts for pairs of items accepted by `keep` (all items when empty).
  // Pairs counted fewer than `min_count` times are dropped and read back
  // as 0, which is all a miner running at minsup = min_count needs.
  static CoocMap build(const SequenceDatabase& db, const std::function<bool(Item)>& keep = {},
                       std::uint64_t min_count = 1);

  std::uint64_t s_succ_count(Item i, Item j) const { return s_succ_.lookup(i, j); }
  std::uint64_t i_succ_count(Item i, Item j) const { return i_succ_.lookup(i, j); }

  std::size_t s_pairs() const { return s_succ_.keys.size(); }
  std::size_t i_pairs() const { return i_succ_.keys.size(); }
  std::uint64_t bytes() const { return s_succ_.bytes() + i_succ_.bytes(); }

 private:
  // Sparse (i, j) -> count, keys sorted.
  struct Table {
    std::vector<std::uint64_t> keys;
    std::vector<std::uint32_t> counts;

    std::uint64_t lookup(Item i, Item j) const;
    std::uint64_t bytes() const { return keys.size() * 12; }
    static Table from_pairs(std::vector<std::uint64_t>& pairs, std::uint64_t min_count);
  };

  Table s_succ_;
  Table i_succ_;
};

inline CoocMap build_cmap(const SequenceDatabase& db) { return CoocMap::build(db); }

}  // namespace taspm
