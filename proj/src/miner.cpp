#include "taspm/miner.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_map>

#include "taspm/bitmap.hpp"
#include "taspm/containment.hpp"
#include "taspm/cooccurrence.hpp"
#include "taspm/error.hpp"
#include "taspm/match_tracker.hpp"

namespace taspm {

MinerConfig MinerConfig::cmspam() {
  MinerConfig c;
  c.label = "cmspam";
  c.cmap_pruning = true;
  c.post_filter = true;
  return c;
}

MinerConfig MinerConfig::taspm_v1() {
  MinerConfig c;
  c.label = "taspm-v1";
  c.utfp = true;
  c.cmap_pruning = true;
  c.post_filter = true;
  return c;
}

MinerConfig MinerConfig::taspm_v2() {
  MinerConfig c;
  c.label = "taspm-v2";
  c.utfp = c.upip = c.usip = c.uiip = true;
  c.cmap_pruning = true;
  return c;
}

MinerConfig MinerConfig::preset(std::string_view name) {
  if (name == "cmspam") return cmspam();
  if (name == "taspm-v1" || name == "taspm_v1") return taspm_v1();
  if (name == "taspm-v2" || name == "taspm_v2") return taspm_v2();
  throw Error(ErrorCode::BadParams, "unknown algorithm '" + std::string(name) + "'");
}

void MinerConfig::set_toggle(std::string_view name, bool on) {
  if (name == "utfp") utfp = on;
  else if (name == "upip") upip = on;
  else if (name == "usip") usip = on;
  else if (name == "uiip") uiip = on;
  else if (name == "cmap_pruning" || name == "cmap") cmap_pruning = on;
  else if (name == "post_filter") post_filter = on;
  else throw Error(ErrorCode::BadParams, "unknown toggle '" + std::string(name) + "'");
}

MinSupport MinSupport::absolute(std::uint64_t count) {
  if (count < 1) throw Error(ErrorCode::BadThreshold, "absolute minsup must be at least 1");
  MinSupport m;
  m.count_ = count;
  return m;
}

MinSupport MinSupport::relative(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error(ErrorCode::BadThreshold, "relative minsup must lie in (0, 1]");
  MinSupport m;
  m.relative_ = true;
  m.fraction_ = fraction;
  return m;
}

std::uint64_t MinSupport::resolve(std::size_t db_size) const {
  if (!relative_) return count_;
  auto n = static_cast<std::uint64_t>(std::ceil(fraction_ * static_cast<double>(db_size)));
  return std::max<std::uint64_t>(n, 1);
}

std::vector<Item> frequent_items(const SequenceDatabase& db, std::uint64_t minsup) {
  std::unordered_map<Item, std::uint64_t> counts;
  std::vector<Item> seen;
  for (const auto& s : db) {
    seen.clear();
    for (const auto& is : s.itemsets) seen.insert(seen.end(), is.begin(), is.end());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (Item e : seen) ++counts[e];
  }
  std::vector<Item> out;
  for (const auto& [e, n] : counts)
    if (n >= minsup) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// A frequent extension of the current node. `slot` indexes the frequent
// item table.
struct Child {
  std::uint32_t slot;
  BitVec bitmap;
};

class Search {
 public:
  Search(const VerticalBitmapIndex& index, const CoocMap& cmap, std::vector<Item> items,
         const QuerySequence& qs, std::uint64_t minsup, const MinerConfig& cfg,
         MiningResult& result)
      : index_(index), cmap_(cmap), items_(std::move(items)), qs_(qs), minsup_(minsup),
        cfg_(cfg), out_(result.patterns), metrics_(result.metrics) {
    item_bm_.reserve(items_.size());
    for (Item e : items_) item_bm_.push_back(index_.bitmap(e));
    zero_ = index_.empty_bitmap();
    live_bytes_ = bitmap_bytes(index_);
    metrics_.peak_bitmap_bytes = live_bytes_;
  }

  void run() {
    std::vector<std::uint32_t> all(items_.size());
    for (std::uint32_t k = 0; k < all.size(); ++k) all[k] = k;

    for (std::uint32_t k = 0; k < items_.size(); ++k) {
      Item f = items_[k];
      MatchState st = advance(initial_state(), ExtensionKind::Prefix, f, qs_);
      if (cfg_.upip && !feasible(*item_bm_[k], st, f)) {
        ++metrics_.pruned_upip;
        continue;
      }
      std::vector<std::uint32_t> ie(all.begin() + k + 1, all.end());
      pattern_.itemsets.assign(1, Itemset{f});
      search(*item_bm_[k], st, all, ie);
    }
  }

 private:
  const BitVec& query_bitmap(Item qi) const {
    const BitVec* bm = index_.bitmap(qi);
    return bm ? *bm : zero_;
  }

  // False when fewer than minsup sequences can still complete the query
  // after the pattern whose bitmap is `bm`.
  bool feasible(const BitVec& bm, const MatchState& st, Item e) const {
    Strictness mode = strictness(st, e, qs_);
    if (mode == Strictness::NoCheck) return true;
    const BitVec& qbm = query_bitmap(*current_query_item(st, qs_));
    return feasible_count(bm, qbm, mode == Strictness::Strict, index_) >= minsup_;
  }

  void emit(const BitVec& bm, const MatchState& st) {
    if (cfg_.post_filter ? !sequence_contains(pattern_.itemsets, qs_.itemsets)
                         : !is_matched(st, qs_))
      return;
    out_.push_back(Pattern{pattern_.itemsets, support(bm, index_)});
  }

  void hold(const std::vector<Child>& kids) {
    for (const auto& c : kids) live_bytes_ += c.bitmap.bytes();
    metrics_.peak_bitmap_bytes = std::max(metrics_.peak_bitmap_bytes, live_bytes_);
  }
  void release(const std::vector<Child>& kids) {
    for (const auto& c : kids) live_bytes_ -= c.bitmap.bytes();
  }

  void search(const BitVec& bm, const MatchState& st, const std::vector<std::uint32_t>& se,
              const std::vector<std::uint32_t>& ie) {
    emit(bm, st);
    Item last = pattern_.itemsets.back().back();

    std::vector<Child> s_temp;
    for (std::uint32_t k : se) {
      if (cfg_.cmap_pruning && cmap_.s_succ_count(last, items_[k]) < minsup_) {
        ++metrics_.pruned_cmap;
        continue;
      }
      BitVec ext = s_step(bm, *item_bm_[k], index_, counter_);
      if (support(ext, index_) >= minsup_) s_temp.push_back({k, std::move(ext)});
    }
    hold(s_temp);
    std::vector<std::uint32_t> s_slots;
    s_slots.reserve(s_temp.size());
    for (const auto& c : s_temp) s_slots.push_back(c.slot);

    for (std::size_t n = 0; n < s_temp.size(); ++n) {
      const Child& c = s_temp[n];
      Item f = items_[c.slot];
      MatchState next = advance(st, ExtensionKind::SStep, f, qs_);
      if (cfg_.usip && !feasible(c.bitmap, next, f)) {
        ++metrics_.pruned_usip;
        continue;
      }
      std::vector<std::uint32_t> child_ie(s_slots.begin() + static_cast<std::ptrdiff_t>(n) + 1,
                                          s_slots.end());
      pattern_.itemsets.push_back(Itemset{f});
      search(c.bitmap, next, s_slots, child_ie);
      pattern_.itemsets.pop_back();
    }

    std::vector<Child> i_temp;
    for (std::uint32_t k : ie) {
      if (cfg_.cmap_pruning && cmap_.i_succ_count(last, items_[k]) < minsup_) {
        ++metrics_.pruned_cmap;
        continue;
      }
      BitVec ext = i_step(bm, *item_bm_[k], counter_);
      if (support(ext, index_) >= minsup_) i_temp.push_back({k, std::move(ext)});
    }
    hold(i_temp);
    std::vector<std::uint32_t> i_slots;
    i_slots.reserve(i_temp.size());
    for (const auto& c : i_temp) i_slots.push_back(c.slot);

    for (std::size_t n = 0; n < i_temp.size(); ++n) {
      const Child& c = i_temp[n];
      Item f = items_[c.slot];
      MatchState next = advance(st, ExtensionKind::IStep, f, qs_);
      if (cfg_.uiip && !feasible(c.bitmap, next, f)) {
        ++metrics_.pruned_uiip;
        continue;
      }
      std::vector<std::uint32_t> child_ie(i_slots.begin() + static_cast<std::ptrdiff_t>(n) + 1,
                                          i_slots.end());
      pattern_.itemsets.back().push_back(f);
      search(c.bitmap, next, s_slots, child_ie);
      pattern_.itemsets.back().pop_back();
    }

    release(i_temp);
    release(s_temp);
  }

 public:
  std::uint64_t intersections() const { return counter_.count; }

 private:
  const VerticalBitmapIndex& index_;
  const CoocMap& cmap_;
  std::vector<Item> items_;
  std::vector<const BitVec*> item_bm_;
  const QuerySequence& qs_;
  std::uint64_t minsup_;
  const MinerConfig& cfg_;
  PatternSet& out_;
  MiningMetrics& metrics_;

  BitVec zero_;
  Pattern pattern_;
  IntersectionCounter counter_;
  std::uint64_t live_bytes_ = 0;
};

}  // namespace

MiningResult mine(const SequenceDatabase& db, const QuerySequence& qs, const MinSupport& minsup,
                  const MinerConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  MiningResult result;
  auto& m = result.metrics;
  m.effective_minsup = minsup.resolve(db.size());

  std::unique_ptr<SequenceDatabase> filtered;
  const SequenceDatabase* work = &db;
  if (cfg.utfp) {
    filtered = std::make_unique<SequenceDatabase>(filter_database(db, qs));
    work = filtered.get();
  }
  m.db_size_after_filter = work->size();

  if (work->size() >= m.effective_minsup) {
    auto items = frequent_items(*work, m.effective_minsup);
    std::vector<bool> keep_flag;
    Item max_item = items.empty() ? 0 : items.back();
    keep_flag.assign(static_cast<std::size_t>(max_item) + 1, false);
    for (Item e : items) keep_flag[e] = true;
    auto keep = [&](Item e) { return e <= max_item && keep_flag[e]; };

    auto index = VerticalBitmapIndex::build(*work, keep);
    CoocMap cmap;
    if (cfg.cmap_pruning) cmap = CoocMap::build(*work, keep, m.effective_minsup);

    Search search(index, cmap, std::move(items), qs, m.effective_minsup, cfg, result);
    search.run();
    m.intersections = search.intersections();
  }

  m.patterns_emitted = result.patterns.size();
  m.runtime = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return result;
}

}  // namespace taspm
