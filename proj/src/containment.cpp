#include "taspm/containment.hpp"

#include <cstdlib>
#include <string>

#include "taspm/error.hpp"

namespace taspm {

bool itemset_subset(const Itemset& x, const Itemset& y) {
  if (x.size() > y.size()) return false;
  std::size_t j = 0;
  for (Item e : x) {
    while (j < y.size() && y[j] < e) ++j;
    if (j == y.size() || y[j] != e) return false;
    ++j;
  }
  return true;
}

bool sequence_contains(ItemsetSpan super, ItemsetSpan sub) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < super.size() && k < sub.size(); ++i)
    if (itemset_subset(sub[k], super[i])) ++k;
  return k == sub.size();
}

SequenceDatabase filter_database(const SequenceDatabase& db, const QuerySequence& qs) {
  std::vector<Sequence> kept;
  for (const auto& s : db)
    if (sequence_contains(s, qs)) kept.push_back(s);
  return SequenceDatabase(std::move(kept));
}

PatternSet postfilter(const PatternSet& patterns, const QuerySequence& qs) {
  PatternSet out;
  for (const auto& p : patterns)
    if (sequence_contains(p, qs)) out.push_back(p);
  return out;
}

std::uint64_t naive_support(const SequenceDatabase& db, ItemsetSpan pattern) {
  std::uint64_t n = 0;
  for (const auto& s : db)
    if (sequence_contains(s.itemsets, pattern)) ++n;
  return n;
}

OracleLimits oracle_limits_from_env() {
  OracleLimits lim;
  if (const char* env = std::getenv("TASPM_ORACLE_LIMIT")) {
    char* end = nullptr;
    unsigned long scale = std::strtoul(env, &end, 10);
    if (end != env && scale > 1) {
      lim.max_sequences *= scale;
      lim.max_itemsets *= scale;
      lim.max_alphabet *= scale;
    }
  }
  return lim;
}

namespace {

struct OracleRun {
  const SequenceDatabase& db;
  const QuerySequence& qs;
  std::uint64_t minsup;
  std::vector<Item> alphabet;
  PatternSet out;

  // Support is anti-monotone under both extensions, so infrequent nodes
  // close their subtree.
  void grow(Pattern& p) {
    for (Item e : alphabet) {
      p.itemsets.push_back(Itemset{e});
      visit(p);
      p.itemsets.pop_back();
    }
    for (Item e : alphabet) {
      if (e <= p.itemsets.back().back()) continue;
      p.itemsets.back().push_back(e);
      visit(p);
      p.itemsets.back().pop_back();
    }
  }

  void visit(Pattern& p) {
    std::uint64_t sup = naive_support(db, p.itemsets);
    if (sup < minsup) return;
    if (sequence_contains(p.itemsets, qs.itemsets)) out.push_back(Pattern{p.itemsets, sup});
    grow(p);
  }
};

}  // namespace

PatternSet oracle_enumerate(const SequenceDatabase& db, const QuerySequence& qs,
                            std::uint64_t minsup, const OracleLimits& limits) {
  if (minsup == 0) throw Error(ErrorCode::BadThreshold, "minsup must be at least 1");
  auto alphabet = db.alphabet();
  if (db.size() > limits.max_sequences || alphabet.size() > limits.max_alphabet)
    throw Error(ErrorCode::TooLarge, "database exceeds oracle limits");
  for (const auto& s : db)
    if (s.size() > limits.max_itemsets)
      throw Error(ErrorCode::TooLarge, "sequence " + std::to_string(s.sid) +
                                           " exceeds oracle itemset limit");

  OracleRun run{db, qs, minsup, std::move(alphabet), {}};
  Pattern p;
  for (Item e : run.alphabet) {
    p.itemsets = {Itemset{e}};
    run.visit(p);
  }
  return std::move(run.out);
}

}  // namespace taspm
