#pragma once

// Itemset-subsequence containment and the brute-force target miner used
// as a reference in tests.

#include <cstddef>
#include <cstdint>

#include "taspm/core_model.hpp"

namespace taspm {

// Both itemsets sorted. Linear merge.
bool itemset_subset(const Itemset& x, const Itemset& y);

// True iff `sub` embeds into `super` at strictly increasing itemset
// positions. Greedy earliest embedding.
bool sequence_contains(ItemsetSpan super, ItemsetSpan sub);

inline bool sequence_contains(const Sequence& t, const QuerySequence& qs) {
  return sequence_contains(t.itemsets, qs.itemsets);
}
inline bool sequence_contains(const Pattern& p, const QuerySequence& qs) {
  return sequence_contains(p.itemsets, qs.itemsets);
}

// Sequences containing qs, order and sids preserved.
SequenceDatabase filter_database(const SequenceDatabase& db, const QuerySequence& qs);

// Patterns containing qs, order preserved.
PatternSet postfilter(const PatternSet& patterns, const QuerySequence& qs);

// Number of sequences of db containing the pattern, by direct scan.
std::uint64_t naive_support(const SequenceDatabase& db, ItemsetSpan pattern);

struct OracleLimits {
  std::size_t max_sequences = 12;
  std::size_t max_itemsets = 8;
  std::size_t max_alphabet = 8;
};

// Default limits, scaled by TASPM_ORACLE_LIMIT (a positive multiplier) when
// that variable is set.
OracleLimits oracle_limits_from_env();

// Every pattern p with naive support >= minsup and qs contained in p,
// enumerated depth-first over S-/I-extensions. Throws TooLarge when the
// database exceeds `limits`, BadThreshold when minsup is 0.
PatternSet oracle_enumerate(const SequenceDatabase& db, const QuerySequence& qs,
                            std::uint64_t minsup,
                            const OracleLimits& limits = oracle_limits_from_env());

}  // namespace taspm
