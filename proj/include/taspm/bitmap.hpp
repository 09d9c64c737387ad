#pragma once

// Vertical bitmap database.
//
// One bit per (sequence, itemset position) slot in a single contiguous bit
// space; an offset table gives each sequence's segment. Words are 64-bit,
// bit k of the space lives in word k/64 at bit k%64. Segments are not word
// aligned.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "taspm/core_model.hpp"

namespace taspm {

class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : words_((nbits + 63) / 64, 0), nbits_(nbits) {}

  std::size_t size() const { return nbits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool any() const;
  std::size_t count() const;

  // First set bit at index >= pos, or npos.
  std::size_t find_next(std::size_t pos) const;
  // True iff some bit in [from, to) is set.
  bool any_in(std::size_t from, std::size_t to) const { return from < to && find_next(from) < to; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::size_t bytes() const { return words_.size() * sizeof(std::uint64_t); }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t nbits_ = 0;
};

struct IntersectionCounter {
  std::uint64_t count = 0;
};

class VerticalBitmapIndex {
 public:
  VerticalBitmapIndex() = default;

  // Bitmaps for every item of db, or only those accepted by `keep`.
  static VerticalBitmapIndex build(const SequenceDatabase& db,
                                   const std::function<bool(Item)>& keep = {});

  std::size_t seq_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t total_slots() const { return offsets_.empty() ? 0 : offsets_.back(); }
  // seq_count()+1 entries; segment i is [offsets[i], offsets[i+1]).
  std::span<const std::size_t> offsets() const { return offsets_; }
  std::size_t segment_begin(std::size_t seq) const { return offsets_[seq]; }
  std::size_t segment_end(std::size_t seq) const { return offsets_[seq + 1]; }
  std::size_t sequence_of(std::size_t slot) const { return slot_seq_[slot]; }

  // nullptr when the item has no bitmap.
  const BitVec* bitmap(Item e) const;
  // Items with a bitmap, ascending.
  std::vector<Item> items() const;

  BitVec empty_bitmap() const { return BitVec(total_slots()); }

  // "[0 1, 0 1 0 0, ...]" with one group per sequence.
  std::string format(const BitVec& bv) const;
  // Inverse of format(); whitespace-insensitive. Throws LengthMismatch if
  // the group sizes do not match the segments.
  BitVec parse(const std::string& text) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> slot_seq_;
  std::unordered_map<Item, BitVec> bitmaps_;
};

// Bitwise AND. Extends the pattern's last itemset by the item.
BitVec i_step(const BitVec& pattern_bm, const BitVec& item_bm, IntersectionCounter& ctr);

// Per sequence: bits strictly after the first set bit of pattern_bm, ANDed
// with item_bm. The transform is not counted as an intersection.
BitVec s_step(const BitVec& pattern_bm, const BitVec& item_bm, const VerticalBitmapIndex& index,
              IntersectionCounter& ctr);

// Sequences whose segment has at least one set bit.
std::uint64_t support(const BitVec& bm, const VerticalBitmapIndex& index);

// Sequences where item_bm has a set bit after (strict) or at-or-after
// (non-strict) the first set bit of anchor's segment.
std::uint64_t feasible_count(const BitVec& anchor, const BitVec& item_bm, bool strict,
                             const VerticalBitmapIndex& index);

// Bytes held by the index's item bitmaps.
std::uint64_t bitmap_bytes(const VerticalBitmapIndex& index);

}  // namespace taspm
