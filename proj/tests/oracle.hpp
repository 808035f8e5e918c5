#pragma once

// Brute-force reference implementations on plain strings. Nothing here calls into the
// library, so agreement with it is evidence rather than a tautology.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Str = std::string;

// Every length-n word over the given letters, in lexicographic order of the letter string.
inline std::vector<Str> words(const Str& letters, std::size_t n) {
  std::vector<Str> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Str> next;
    for (const auto& w : out)
      for (char c : letters) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

inline std::vector<Str> words_up_to(const Str& letters, std::size_t n) {
  std::vector<Str> out;
  for (std::size_t m = 0; m <= n; ++m)
    for (auto& w : words(letters, m)) out.push_back(std::move(w));
  return out;
}

// Counts index subsets of w spelling x; exponential, so |w| <= 20.
inline std::uint64_t binom(const Str& w, const Str& x) {
  if (w.size() > 20) throw std::length_error("subset enumeration needs |w| <= 20");
  if (x.empty()) return 1;
  if (x.size() > w.size()) return 0;
  std::uint64_t count = 0;
  const std::uint32_t n = static_cast<std::uint32_t>(w.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != x.size()) continue;
    Str picked;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1u) picked += w[i];
    if (picked == x) ++count;
  }
  return count;
}

// Textbook recurrence: binom(wa, xb) = binom(w, xb) + [a = b] binom(w, x).
inline std::uint64_t binom_dp(const Str& w, const Str& x) {
  std::vector<std::uint64_t> c(x.size() + 1, 0);
  c[0] = 1;
  for (char a : w)
    for (std::size_t j = x.size(); j > 0; --j)
      if (x[j - 1] == a) c[j] += c[j - 1];
  return c[x.size()];
}

inline std::uint64_t factor_count(const Str& w, const Str& x) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i + x.size() <= w.size(); ++i)
    if (w.compare(i, x.size(), x) == 0) ++c;
  return c;
}

inline std::map<Str, std::uint64_t> factor_counts(const Str& w, std::size_t m) {
  std::map<Str, std::uint64_t> counts;
  for (std::size_t i = 0; i + m <= w.size(); ++i) ++counts[w.substr(i, m)];
  return counts;
}

inline bool abelian(Str u, Str v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  return u == v;
}

// Equal counts of every factor of length at most l.
inline bool l_abelian(const Str& u, const Str& v, std::size_t l) {
  if (u.size() != v.size()) return false;
  for (std::size_t m = 1; m <= l; ++m)
    if (factor_counts(u, m) != factor_counts(v, m)) return false;
  return true;
}

inline bool k_binomial(const Str& u, const Str& v, std::size_t k, const Str& letters) {
  for (const auto& x : words_up_to(letters, k))
    if (binom_dp(u, x) != binom_dp(v, x)) return false;
  return true;
}

inline std::set<Str> subwords_up_to(const Str& w, std::size_t k) {
  if (w.size() > 20) throw std::length_error("subset enumeration needs |w| <= 20");
  std::set<Str> out;
  const std::uint32_t n = static_cast<std::uint32_t>(w.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
    Str picked;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1u) picked += w[i];
    out.insert(picked);
  }
  return out;
}

inline std::size_t hamming(const Str& u, const Str& v) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

// Entries binom(w, index[i..j-1]) above the diagonal, by definition.
inline std::vector<std::vector<std::uint64_t>> parikh_matrix(const Str& w, const Str& index) {
  const std::size_t d = index.size() + 1;
  std::vector<std::vector<std::uint64_t>> m(d, std::vector<std::uint64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    m[i][i] = 1;
    for (std::size_t j = i + 1; j < d; ++j) m[i][j] = binom(w, index.substr(i, j - i));
  }
  return m;
}

using Rel = std::function<bool(const Str&, const Str&)>;

// Number of classes of an equivalence among the given words, by pairwise comparison.
inline std::size_t class_count(const std::vector<Str>& items, const Rel& rel) {
  std::vector<Str> reps;
  for (const auto& w : items) {
    if (std::none_of(reps.begin(), reps.end(), [&](const Str& r) { return rel(r, w); })) reps.push_back(w);
  }
  return reps.size();
}

inline std::vector<Str> distinct_factors(const Str& w, std::size_t n) {
  std::set<Str> s;
  for (std::size_t i = 0; i + n <= w.size(); ++i) s.insert(w.substr(i, n));
  return {s.begin(), s.end()};
}

// Is x a concatenation of |p| non-empty blocks, blocks for equal pattern letters pairwise related?
inline bool in_pattern_language(const Str& x, const Str& p, const Rel& rel) {
  const std::size_t parts = p.size();
  if (x.size() < parts) return false;
  std::vector<std::size_t> cut(parts + 1);
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t from) -> bool {
    if (i == parts) {
      if (from != x.size()) return false;
      for (std::size_t a = 0; a < parts; ++a)
        for (std::size_t b = a + 1; b < parts; ++b)
          if (p[a] == p[b] &&
              !rel(x.substr(cut[a], cut[a + 1] - cut[a]), x.substr(cut[b], cut[b + 1] - cut[b])))
            return false;
      return true;
    }
    cut[i] = from;
    for (std::size_t end = from + 1; end + (parts - i - 1) <= x.size(); ++end) {
      cut[i + 1] = end;
      if (place(i + 1, end)) return true;
    }
    return false;
  };
  return place(0, 0);
}

inline bool contains_pattern(const Str& w, const Str& p, const Rel& rel) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + p.size(); j <= w.size(); ++j)
      if (in_pattern_language(w.substr(i, j - i), p, rel)) return true;
  return false;
}

inline bool eq(const Str& u, const Str& v) { return u == v; }

// Fixed point prefix of a morphism given as images of 'a', 'b', ... (or digits).
inline Str iterate(const std::map<char, Str>& f, char seed, std::size_t n) {
  Str w(1, seed);
  while (w.size() < n) {
    Str next;
    for (char c : w) next += f.at(c);
    if (next.size() <= w.size()) break;
    w = std::move(next);
  }
  return w.substr(0, n);
}

}  // namespace oracle
