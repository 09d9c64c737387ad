#include "taspm/synth_gen.hpp"

#include <algorithm>
#include <cmath>

#include "taspm/error.hpp"

namespace taspm {

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  state_ = z ? z : 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t n) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next()) * n) >> 64);
}

double Xorshift64Star::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

// Geometric on {1, 2, ...} with the given mean, resampled above
// min(4 * mean, cap).
std::uint64_t geometric(Xorshift64Star& rng, double mean, std::uint64_t cap) {
  auto limit = std::min<std::uint64_t>(
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(4.0 * mean))), cap);
  if (mean <= 1.0 || limit == 1) return 1;
  double log_q = std::log(1.0 - 1.0 / mean);
  while (true) {
    double u = 1.0 - rng.unit();  // (0, 1]
    auto k = 1 + static_cast<std::uint64_t>(std::floor(std::log(u) / log_q));
    if (k <= limit) return k;
  }
}

// n distinct items from 1..alphabet, sorted. n <= alphabet.
Itemset draw_items(Xorshift64Star& rng, std::uint64_t n, std::uint64_t alphabet) {
  Itemset is;
  is.reserve(n);
  while (is.size() < n) {
    auto e = static_cast<Item>(1 + rng.below(alphabet));
    if (std::find(is.begin(), is.end(), e) == is.end()) is.push_back(e);
  }
  std::sort(is.begin(), is.end());
  return is;
}

Itemset merge(const Itemset& a, const Itemset& b) {
  Itemset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check(const GenParams& p) {
  if (p.alphabet_size < 1) throw Error(ErrorCode::BadParams, "alphabet_size must be >= 1");
  if (p.alphabet_size > UINT32_MAX) throw Error(ErrorCode::BadParams, "alphabet_size too large");
  if (!(p.avg_itemsets_per_seq >= 1.0))
    throw Error(ErrorCode::BadParams, "avg_itemsets_per_seq must be >= 1");
  if (!(p.avg_items_per_itemset >= 1.0))
    throw Error(ErrorCode::BadParams, "avg_items_per_itemset must be >= 1");
  if (!(p.embed_probability >= 0.0 && p.embed_probability <= 1.0))
    throw Error(ErrorCode::BadParams, "embed_probability must lie in [0, 1]");
  if (p.n_sequences > UINT32_MAX) throw Error(ErrorCode::BadParams, "n_sequences too large");
}

}  // namespace

GeneratedData generate_with_patterns(const GenParams& p) {
  check(p);
  Xorshift64Star rng(p.seed);
  GeneratedData out;

  // Embedded patterns: 2-4 itemsets of 1-2 items.
  const std::uint64_t pat_items = std::min<std::uint64_t>(2, p.alphabet_size);
  for (std::uint64_t k = 0; k < p.n_embedded_patterns; ++k) {
    std::uint64_t len = 2 + rng.below(3);
    std::vector<Itemset> pat;
    for (std::uint64_t j = 0; j < len; ++j)
      pat.push_back(draw_items(rng, 1 + rng.below(pat_items), p.alphabet_size));
    out.embedded.push_back(std::move(pat));
  }

  std::vector<Sequence> seqs;
  seqs.reserve(p.n_sequences);
  std::vector<std::uint64_t> slots;
  for (std::uint64_t i = 0; i < p.n_sequences; ++i) {
    std::uint64_t n_itemsets = geometric(rng, p.avg_itemsets_per_seq, UINT64_MAX);
    const std::vector<Itemset>* pat = nullptr;
    if (!out.embedded.empty() && rng.unit() < p.embed_probability) {
      pat = &out.embedded[rng.below(out.embedded.size())];
      n_itemsets = std::max<std::uint64_t>(n_itemsets, pat->size());
    }

    // Positions receiving the embedded itemsets, ascending.
    std::vector<const Itemset*> planted(n_itemsets, nullptr);
    if (pat) {
      slots.resize(n_itemsets);
      for (std::uint64_t j = 0; j < n_itemsets; ++j) slots[j] = j;
      for (std::uint64_t j = 0; j < pat->size(); ++j)
        std::swap(slots[j], slots[j + rng.below(n_itemsets - j)]);
      std::sort(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(pat->size()));
      for (std::uint64_t j = 0; j < pat->size(); ++j) planted[slots[j]] = &(*pat)[j];
    }

    Sequence s;
    s.sid = static_cast<std::uint32_t>(i);
    s.itemsets.reserve(n_itemsets);
    for (std::uint64_t j = 0; j < n_itemsets; ++j) {
      std::uint64_t size = geometric(rng, p.avg_items_per_itemset, p.alphabet_size);
      if (planted[j]) {
        std::uint64_t base = planted[j]->size();
        std::uint64_t noise = size > base ? size - base : 0;
        s.itemsets.push_back(merge(*planted[j], draw_items(rng, noise, p.alphabet_size)));
      } else {
        s.itemsets.push_back(draw_items(rng, size, p.alphabet_size));
      }
    }
    seqs.push_back(std::move(s));
  }
  out.db = SequenceDatabase(std::move(seqs));
  return out;
}

SequenceDatabase generate(const GenParams& p) { return generate_with_patterns(p).db; }

}  // namespace taspm
