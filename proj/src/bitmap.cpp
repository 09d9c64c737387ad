#include "taspm/bitmap.hpp"

#include <algorithm>
#include <bit>

#include "taspm/error.hpp"

namespace taspm {

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVec::find_next(std::size_t pos) const {
  if (pos >= nbits_) return npos;
  std::size_t w = pos >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos & 63));
  while (true) {
    if (word != 0) {
      std::size_t bit = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return bit < nbits_ ? bit : npos;
    }
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// dst[from, to) = src[from, to); dst is zero there beforehand.
void copy_range(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                std::size_t from, std::size_t to) {
  while (from < to) {
    std::size_t w = from >> 6;
    std::size_t lo = from & 63;
    std::size_t n = std::min<std::size_t>(64 - lo, to - from);
    std::uint64_t mask = low_mask(n) << lo;
    dst[w] |= src[w] & mask;
    from += n;
  }
}

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorCode::LengthMismatch,
                "bitmaps of " + std::to_string(a) + " and " + std::to_string(b) + " bits");
}

void check_lengths(const BitVec& a, const BitVec& b) { check_lengths(a.size(), b.size()); }

}  // namespace

VerticalBitmapIndex VerticalBitmapIndex::build(const SequenceDatabase& db,
                                               const std::function<bool(Item)>& keep) {
  VerticalBitmapIndex idx;
  idx.offsets_.reserve(db.size() + 1);
  std::size_t slots = 0;
  idx.offsets_.push_back(0);
  for (const auto& s : db) {
    slots += s.size();
    idx.offsets_.push_back(slots);
  }
  idx.slot_seq_.resize(slots);
  for (std::size_t i = 0; i < db.size(); ++i)
    std::fill(idx.slot_seq_.begin() + static_cast<std::ptrdiff_t>(idx.offsets_[i]),
              idx.slot_seq_.begin() + static_cast<std::ptrdiff_t>(idx.offsets_[i + 1]),
              static_cast<std::uint32_t>(i));

  for (std::size_t i = 0; i < db.size(); ++i) {
    const auto& s = db[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (Item e : s.itemsets[j]) {
        auto it = idx.bitmaps_.find(e);
        if (it == idx.bitmaps_.end()) {
          if (keep && !keep(e)) continue;
          it = idx.bitmaps_.emplace(e, BitVec(slots)).first;
        }
        it->second.set(idx.offsets_[i] + j);
      }
    }
  }
  return idx;
}

const BitVec* VerticalBitmapIndex::bitmap(Item e) const {
  auto it = bitmaps_.find(e);
  return it == bitmaps_.end() ? nullptr : &it->second;
}

std::vector<Item> VerticalBitmapIndex::items() const {
  std::vector<Item> out;
  out.reserve(bitmaps_.size());
  for (const auto& [e, bm] : bitmaps_) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::string VerticalBitmapIndex::format(const BitVec& bv) const {
  check_lengths(bv.size(), total_slots());
  std::string s = "[";
  for (std::size_t i = 0; i < seq_count(); ++i) {
    if (i) s += ", ";
    for (std::size_t k = segment_begin(i); k < segment_end(i); ++k) {
      if (k != segment_begin(i)) s += ' ';
      s += bv.test(k) ? '1' : '0';
    }
  }
  s += "]";
  return s;
}

BitVec VerticalBitmapIndex::parse(const std::string& text) const {
  BitVec bv(total_slots());
  std::size_t seq = 0;
  std::size_t in_seg = 0;
  auto close_group = [&] {
    if (seq >= seq_count() || in_seg != segment_end(seq) - segment_begin(seq))
      throw Error(ErrorCode::LengthMismatch, "bitmap group " + std::to_string(seq + 1) +
                                                 " does not match its segment");
    ++seq;
    in_seg = 0;
  };
  for (char c : text) {
    if (c == '0' || c == '1') {
      if (seq >= seq_count() || in_seg >= segment_end(seq) - segment_begin(seq))
        throw Error(ErrorCode::LengthMismatch, "too many bits in bitmap text");
      if (c == '1') bv.set(segment_begin(seq) + in_seg);
      ++in_seg;
    } else if (c == ',') {
      close_group();
    }
  }
  if (seq_count() > 0) close_group();
  if (seq != seq_count()) throw Error(ErrorCode::LengthMismatch, "too few groups in bitmap text");
  return bv;
}

BitVec i_step(const BitVec& pattern_bm, const BitVec& item_bm, IntersectionCounter& ctr) {
  check_lengths(pattern_bm, item_bm);
  BitVec out(pattern_bm.size());
  auto dst = out.words();
  auto a = pattern_bm.words();
  auto b = item_bm.words();
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = a[w] & b[w];
  ++ctr.count;
  return out;
}

BitVec s_step(const BitVec& pattern_bm, const BitVec& item_bm, const VerticalBitmapIndex& index,
              IntersectionCounter& ctr) {
  check_lengths(pattern_bm, item_bm);
  check_lengths(pattern_bm.size(), index.total_slots());
  BitVec out(pattern_bm.size());
  std::size_t pos = pattern_bm.find_next(0);
  while (pos != BitVec::npos) {
    std::size_t end = index.segment_end(index.sequence_of(pos));
    copy_range(out.words(), item_bm.words(), pos + 1, end);
    pos = pattern_bm.find_next(end);
  }
  ++ctr.count;
  return out;
}

std::uint64_t support(const BitVec& bm, const VerticalBitmapIndex& index) {
  check_lengths(bm.size(), index.total_slots());
  std::uint64_t n = 0;
  std::size_t pos = bm.find_next(0);
  while (pos != BitVec::npos) {
    ++n;
    pos = bm.find_next(index.segment_end(index.sequence_of(pos)));
  }
  return n;
}

std::uint64_t feasible_count(const BitVec& anchor, const BitVec& item_bm, bool strict,
                             const VerticalBitmapIndex& index) {
  check_lengths(anchor, item_bm);
  check_lengths(anchor.size(), index.total_slots());
  std::uint64_t n = 0;
  std::size_t pos = anchor.find_next(0);
  while (pos != BitVec::npos) {
    std::size_t end = index.segment_end(index.sequence_of(pos));
    if (item_bm.any_in(strict ? pos + 1 : pos, end)) ++n;
    pos = anchor.find_next(end);
  }
  return n;
}

std::uint64_t bitmap_bytes(const VerticalBitmapIndex& index) {
  std::uint64_t n = 0;
  for (Item e : index.items()) n += index.bitmap(e)->bytes();
  return n;
}

}  // namespace taspm
