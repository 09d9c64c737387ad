#include "taspm/match_tracker.hpp"

namespace taspm {

std::optional<Item> current_query_item(const MatchState& st, const QuerySequence& qs) {
  if (st.imatch >= qs.size()) return std::nullopt;
  return qs.itemsets[st.imatch][st.iimatch];
}

MatchState advance(const MatchState& st, ExtensionKind kind, Item e, const QuerySequence& qs) {
  if (is_matched(st, qs)) return st;
  MatchState next = st;
  if (kind == ExtensionKind::IStep) {
    if (next.frozen) return next;
  } else {
    next.frozen = false;
    next.iimatch = 0;
  }

  Item qi = qs.itemsets[next.imatch][next.iimatch];
  if (e < qi) return next;
  if (e > qi) {
    // Items grow within an itemset; qi can no longer join this one.
    next.iimatch = 0;
    return next;
  }
  ++next.iimatch;
  if (next.iimatch == qs.itemsets[next.imatch].size()) {
    ++next.imatch;
    next.iimatch = 0;
    next.frozen = true;
  }
  return next;
}

Strictness strictness(const MatchState& st_after, Item e, const QuerySequence& qs) {
  auto qi = current_query_item(st_after, qs);
  if (!qi) return Strictness::NoCheck;
  if (st_after.frozen) return Strictness::Strict;
  if (st_after.iimatch > 0) return Strictness::NonStrict;
  return *qi > e ? Strictness::NonStrict : Strictness::Strict;
}

}  // namespace taspm
