#pragma once

// Greedy embedding of the query into a growing pattern.
//
// `imatch` counts fully matched query itemsets, `iimatch` the matched
// prefix of query itemset `imatch` inside the pattern's last itemset.
// `frozen` blocks updates from I-extensions of an itemset that already
// completed a query itemset: the next query itemset has to land in a later
// pattern itemset.

#include <cstdint>
#include <optional>

#include "taspm/core_model.hpp"

namespace taspm {

struct MatchState {
  std::uint32_t imatch = 0;
  std::uint32_t iimatch = 0;
  bool frozen = false;

  friend bool operator==(const MatchState&, const MatchState&) = default;
};

enum class ExtensionKind { Prefix, SStep, IStep };

// How the current query item must be positioned relative to the earliest
// end of the pattern for a target to remain reachable.
enum class Strictness { Strict, NonStrict, NoCheck };

constexpr MatchState initial_state() { return {}; }

inline bool is_matched(const MatchState& st, const QuerySequence& qs) {
  return st.imatch == qs.size();
}

std::optional<Item> current_query_item(const MatchState& st, const QuerySequence& qs);

// State after extending the pattern by `e`. Total and deterministic;
// terminal states are returned unchanged.
MatchState advance(const MatchState& st, ExtensionKind kind, Item e, const QuerySequence& qs);

// `st_after` is the state after extending by `e`.
//   NoCheck    matched, every extension is a target.
//   NonStrict  the query item may still join the pattern's last itemset.
//   Strict     it must appear in a later itemset.
Strictness strictness(const MatchState& st_after, Item e, const QuerySequence& qs);

}  // namespace taspm
