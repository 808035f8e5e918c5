#pragma once

#include "wordrel/bigint.hpp"
#include "wordrel/words.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace wordrel::detail {

struct CountOverflow {};

inline void add_to(std::uint64_t& acc, std::uint64_t value) {
  if (__builtin_add_overflow(acc, value, &acc)) throw CountOverflow{};
}
inline void add_to(BigInt& acc, const BigInt& value) { acc += value; }

inline std::vector<Letter> letters_present(WordView w) {
  std::array<bool, kMaxAlphabetSize> seen{};
  for (Letter a : w) seen[a] = true;
  std::vector<Letter> out;
  for (std::size_t a = 0; a < seen.size(); ++a)
    if (seen[a]) out.push_back(static_cast<Letter>(a));
  return out;
}

// Depth-first walk over the subwords x of w with |x| <= k and binom(w, x) > 0, in
// lexicographic order. levels[j][i] holds binom(w_1..w_i, x_1..x_j) along the path.
// Count = std::uint64_t throws CountOverflow on overflow.
template <class Count, class Visit>
void subword_dfs(WordView w, std::size_t k, Visit&& visit) {
  const std::size_t n = w.size();
  const auto letters = letters_present(w);
  std::vector<std::vector<Count>> levels(k + 1, std::vector<Count>(n + 1, Count(0)));
  std::fill(levels[0].begin(), levels[0].end(), Count(1));
  std::vector<Letter> x;
  x.reserve(k);
  visit(WordView{}, levels[0][n]);

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    const auto& prev = levels[depth];
    auto& next = levels[depth + 1];
    for (Letter a : letters) {
      next[0] = Count(0);
      for (std::size_t i = 0; i < n; ++i) {
        next[i + 1] = next[i];
        if (w[i] == a) add_to(next[i + 1], prev[i]);
      }
      if (next[n] == Count(0)) continue;
      x.push_back(a);
      visit(WordView(x), next[n]);
      if (depth + 1 < k) self(self, depth + 1);
      x.pop_back();
    }
  };
  if (k > 0) rec(rec, 0);
}

}  // namespace wordrel::detail
