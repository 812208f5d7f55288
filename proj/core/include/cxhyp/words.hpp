#pragma once

#include <cstdint>
#include <vector>

namespace cxhyp {

// Letter of a free-product word: a generator (or its inverse) of one factor.
struct Letter {
  std::uint8_t group;  // 1 or 2
  std::uint16_t gen;   // generator index within the factor
  std::int8_t exp;     // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

bool is_inverse_pair(const Letter& a, const Letter& b);

// Cancels adjacent inverse pairs until none remain. Idempotent, never grows.
Word reduce_word(Word w);

// Number of freely reduced nonempty words of length <= depth over an alphabet
// of `letters` letters (generators and inverses counted separately).
std::uint64_t count_reduced_words(std::uint64_t letters, std::uint64_t depth);

} // namespace cxhyp
