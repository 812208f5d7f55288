#include "cxhyp/words.hpp"

namespace cxhyp {

bool is_inverse_pair(const Letter& a, const Letter& b) {
  return a.group == b.group && a.gen == b.gen && int(a.exp) + int(b.exp) == 0;
}

Word reduce_word(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && is_inverse_pair(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::uint64_t count_reduced_words(std::uint64_t letters, std::uint64_t depth) {
  if (letters == 0) return 0;
  std::uint64_t total = 0, level = letters;
  for (std::uint64_t k = 1; k <= depth; ++k) {
    total += level;
    level *= (letters - 1);
  }
  return total;
}

} // namespace cxhyp
