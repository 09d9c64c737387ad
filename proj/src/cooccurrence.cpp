#include "taspm/cooccurrence.hpp"

#include <algorithm>

namespace taspm {

namespace {
std::uint64_t pair_key(Item i, Item j) { return (std::uint64_t{i} << 32) | j; }
}  // namespace

std::uint64_t CoocMap::Table::lookup(Item i, Item j) const {
  auto k = pair_key(i, j);
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) return 0;
  return counts[static_cast<std::size_t>(it - keys.begin())];
}

CoocMap::Table CoocMap::Table::from_pairs(std::vector<std::uint64_t>& pairs,
                                          std::uint64_t min_count) {
  std::sort(pairs.begin(), pairs.end());
  Table t;
  for (std::size_t r = 0; r < pairs.size();) {
    std::size_t e = r;
    while (e < pairs.size() && pairs[e] == pairs[r]) ++e;
    if (e - r >= min_count) {
      t.keys.push_back(pairs[r]);
      t.counts.push_back(static_cast<std::uint32_t>(e - r));
    }
    r = e;
  }
  pairs.clear();
  pairs.shrink_to_fit();
  return t;
}

CoocMap CoocMap::build(const SequenceDatabase& db, const std::function<bool(Item)>& keep,
                       std::uint64_t min_count) {
  struct Span {
    Item item;
    std::size_t first;
    std::size_t last;
  };
  std::vector<Span> spans;
  std::vector<std::uint64_t> seq_i_pairs;
  std::vector<std::uint64_t> s_pairs;
  std::vector<std::uint64_t> i_pairs;

  for (const auto& s : db) {
    spans.clear();
    seq_i_pairs.clear();
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      const auto& is = s.itemsets[pos];
      for (std::size_t a = 0; a < is.size(); ++a) {
        if (keep && !keep(is[a])) continue;
        spans.push_back({is[a], pos, pos});
        for (std::size_t b = a + 1; b < is.size(); ++b)
          if (!keep || keep(is[b])) seq_i_pairs.push_back(pair_key(is[a], is[b]));
      }
    }
    // One span per item: earliest and latest itemset position.
    std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) {
      return x.item != y.item ? x.item < y.item : x.first < y.first;
    });
    std::size_t w = 0;
    for (std::size_t r = 0; r < spans.size(); ++r) {
      if (w > 0 && spans[w - 1].item == spans[r].item)
        spans[w - 1].last = spans[r].last;
      else
        spans[w++] = spans[r];
    }
    spans.resize(w);

    for (const auto& i : spans)
      for (const auto& j : spans)
        if (i.first < j.last) s_pairs.push_back(pair_key(i.item, j.item));

    std::sort(seq_i_pairs.begin(), seq_i_pairs.end());
    seq_i_pairs.erase(std::unique(seq_i_pairs.begin(), seq_i_pairs.end()), seq_i_pairs.end());
    i_pairs.insert(i_pairs.end(), seq_i_pairs.begin(), seq_i_pairs.end());
  }

  CoocMap cm;
  cm.s_succ_ = Table::from_pairs(s_pairs, std::max<std::uint64_t>(min_count, 1));
  cm.i_succ_ = Table::from_pairs(i_pairs, std::max<std::uint64_t>(min_count, 1));
  return cm;
}

}  // namespace taspm
