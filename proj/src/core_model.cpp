#include "taspm/core_model.hpp"

#include <algorithm>
#include <unordered_set>

#include "taspm/error.hpp"

namespace taspm {

std::size_t total_length(ItemsetSpan itemsets) {
  std::size_t n = 0;
  for (const auto& is : itemsets) n += is.size();
  return n;
}

bool well_formed(ItemsetSpan itemsets) {
  for (const auto& is : itemsets) {
    if (is.empty()) return false;
    if (is.front() < 1) return false;
    for (std::size_t k = 1; k < is.size(); ++k)
      if (is[k - 1] >= is[k]) return false;
  }
  return true;
}

SequenceDatabase::SequenceDatabase(std::vector<Sequence> sequences)
    : sequences_(std::move(sequences)) {
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(sequences_.size());
  for (const auto& s : sequences_) {
    if (!seen.insert(s.sid).second)
      throw Error(ErrorCode::BadParams, "duplicate sid " + std::to_string(s.sid));
  }
}

std::vector<Item> SequenceDatabase::alphabet() const {
  std::vector<Item> items;
  for (const auto& s : sequences_)
    for (const auto& is : s.itemsets) items.insert(items.end(), is.begin(), is.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::optional<Item> Pattern::last_item() const {
  if (itemsets.empty() || itemsets.back().empty()) return std::nullopt;
  return itemsets.back().back();
}

namespace {

std::vector<Itemset> checked_itemsets(const std::vector<std::vector<std::int64_t>>& raw) {
  std::vector<Itemset> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& in = raw[i];
    if (in.empty())
      throw Error(ErrorCode::EmptyItemset, "itemset " + std::to_string(i + 1) + " is empty");
    Itemset is;
    is.reserve(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (in[k] < 1 || in[k] > static_cast<std::int64_t>(UINT32_MAX))
        throw Error(ErrorCode::BadItem, "item " + std::to_string(in[k]) + " out of range");
      if (k > 0 && in[k - 1] >= in[k])
        throw Error(ErrorCode::UnsortedItemset,
                    "itemset " + std::to_string(i + 1) + " is not strictly increasing");
      is.push_back(static_cast<Item>(in[k]));
    }
    out.push_back(std::move(is));
  }
  return out;
}

}  // namespace

Sequence validate_sequence(const std::vector<std::vector<std::int64_t>>& raw,
                           std::uint32_t sid) {
  if (raw.empty()) throw Error(ErrorCode::EmptyItemset, "sequence has no itemsets");
  return Sequence{sid, checked_itemsets(raw)};
}

QuerySequence validate_query(const std::vector<std::vector<std::int64_t>>& raw) {
  return QuerySequence{checked_itemsets(raw)};
}

Pattern pattern_s_extend(const Pattern& p, Item e) {
  Pattern out{p.itemsets, 0};
  out.itemsets.push_back(Itemset{e});
  return out;
}

Pattern pattern_i_extend(const Pattern& p, Item e) {
  if (p.empty()) throw Error(ErrorCode::BadParams, "I-extension of the empty pattern");
  if (e <= p.itemsets.back().back())
    throw Error(ErrorCode::NotGreater, "item " + std::to_string(e) +
                                           " does not exceed the last item of the pattern");
  Pattern out{p.itemsets, 0};
  out.itemsets.back().push_back(e);
  return out;
}

std::string to_string(ItemsetSpan itemsets) {
  std::string s = "<";
  for (std::size_t i = 0; i < itemsets.size(); ++i) {
    if (i) s += ",";
    s += "(";
    for (std::size_t k = 0; k < itemsets[i].size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(itemsets[i][k]);
    }
    s += ")";
  }
  s += ">";
  return s;
}

}  // namespace taspm
