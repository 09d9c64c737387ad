#pragma once

// Seeded synthetic sequence databases with embedded frequent patterns.

#include <cstdint>
#include <vector>

#include "taspm/core_model.hpp"

namespace taspm {

// xorshift64* (shifts 12/25/27, multiplier 0x2545F4914F6CDD1D), state seeded
// through one splitmix64 step so that seed 0 is usable.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t n_sequences = 1000;
  std::uint64_t alphabet_size = 1000;
  double avg_itemsets_per_seq = 6.0;
  double avg_items_per_itemset = 4.3;
  std::uint64_t n_embedded_patterns = 100;
  double embed_probability = 0.5;
  std::uint64_t seed = 42;
};

struct GeneratedData {
  SequenceDatabase db;
  // Patterns drawn before any sequence; sequence i embeds at most one.
  std::vector<std::vector<Itemset>> embedded;
};

// Throws BadParams. Deterministic in params; the first n sequences do not
// depend on n_sequences, so a larger database extends a smaller one.
GeneratedData generate_with_patterns(const GenParams& p);
SequenceDatabase generate(const GenParams& p);

}  // namespace taspm
