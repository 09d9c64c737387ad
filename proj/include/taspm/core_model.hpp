#pragma once

// Items, itemsets, sequences, queries and patterns.
//
// Items are positive integer tokens; their numeric order is the
// lexicographic order used for itemset sorting and pattern growth.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace taspm {

using Item = std::uint32_t;
using Itemset = std::vector<Item>;
using ItemsetSpan = std::span<const Itemset>;

// Number of items across all itemsets.
std::size_t total_length(ItemsetSpan itemsets);

// True iff every itemset is non-empty and strictly increasing.
bool well_formed(ItemsetSpan itemsets);

struct Sequence {
  std::uint32_t sid = 0;
  std::vector<Itemset> itemsets;

  std::size_t size() const { return itemsets.size(); }
  std::size_t length() const { return total_length(itemsets); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

class SequenceDatabase {
 public:
  SequenceDatabase() = default;
  // Throws BadParams if two sequences share a sid.
  explicit SequenceDatabase(std::vector<Sequence> sequences);

  const std::vector<Sequence>& sequences() const { return sequences_; }
  std::size_t size() const { return sequences_.size(); }
  bool empty() const { return sequences_.empty(); }
  const Sequence& operator[](std::size_t i) const { return sequences_[i]; }

  auto begin() const { return sequences_.begin(); }
  auto end() const { return sequences_.end(); }

  // Distinct items present, ascending.
  std::vector<Item> alphabet() const;

  friend bool operator==(const SequenceDatabase&, const SequenceDatabase&) = default;

 private:
  std::vector<Sequence> sequences_;
};

struct QuerySequence {
  std::vector<Itemset> itemsets;

  std::size_t size() const { return itemsets.size(); }
  bool empty() const { return itemsets.empty(); }

  friend bool operator==(const QuerySequence&, const QuerySequence&) = default;
};

struct Pattern {
  std::vector<Itemset> itemsets;
  std::uint64_t support = 0;

  std::size_t size() const { return itemsets.size(); }
  std::size_t length() const { return total_length(itemsets); }
  bool empty() const { return itemsets.empty(); }
  // Last item of the last itemset; nullopt for the empty pattern.
  std::optional<Item> last_item() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

using PatternSet = std::vector<Pattern>;

// Builds a Sequence from raw integer lists, rejecting empty itemsets
// (EmptyItemset), ids < 1 (BadItem) and unsorted or duplicated items
// (UnsortedItemset).
Sequence validate_sequence(const std::vector<std::vector<std::int64_t>>& raw,
                           std::uint32_t sid = 0);

// Same checks, for a query. An empty outer list is the empty query.
QuerySequence validate_query(const std::vector<std::vector<std::int64_t>>& raw);

// Appends the single-item itemset (e).
Pattern pattern_s_extend(const Pattern& p, Item e);

// Appends e to the last itemset. Throws NotGreater if e does not exceed
// the current last item, BadParams if p is empty.
Pattern pattern_i_extend(const Pattern& p, Item e);

// "<(1),(2, 3)>" style rendering for diagnostics.
std::string to_string(ItemsetSpan itemsets);

}  // namespace taspm
