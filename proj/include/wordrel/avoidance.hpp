#pragma once

#include "wordrel/generator.hpp"
#include "wordrel/relation.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wordrel {

// A word over variables 0..v-1, numbered by first appearance.
class Pattern {
 public:
  explicit Pattern(std::vector<std::size_t> symbols, std::vector<std::string> names = {});

  // Each code point of text is a variable: "XX", "XYXYX", ...
  static Pattern parse(std::string_view text);
  // X^n.
  static Pattern power(std::size_t n);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::size_t variable_count() const noexcept { return names_.size(); }
  std::size_t operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::size_t>& symbols() const noexcept { return symbols_; }
  std::string to_string() const;

  // P = Q^e Q' with Q of pairwise distinct variables and Q' a proper prefix of Q,
  // for the smallest such |Q| < |P|.
  struct Periodic {
    std::size_t root = 0;      // |Q|
    std::size_t exponent = 0;  // e
    std::size_t tail = 0;      // |Q'|
  };
  std::optional<Periodic> periodic_form() const;

 private:
  std::vector<std::size_t> symbols_;
  std::vector<std::string> names_;
};

struct PatternMatch {
  std::size_t position = 0;
  std::size_t length = 0;
  // One block per pattern letter.
  std::vector<std::size_t> block_starts;
  std::vector<std::size_t> block_lengths;

  friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
};

// First occurrence of P in w: smallest start, then the lexicographically smallest
// sequence of block lengths. Blocks are non-empty and blocks of the same variable are
// pairwise related (same length as well when rel only relates equal lengths).
std::optional<PatternMatch> find_pattern(WordView w, const Pattern& p, const Relation& rel);

bool is_P_free(WordView w, const Pattern& p, const Relation& rel);

// Every occurrence of X^n, ordered by start then block lengths.
std::vector<PatternMatch> find_powers(WordView w, std::size_t n, const Relation& rel);

// Whether u ~ v^n for some v over an alphabet of the given size. Needs a length-preserving
// equivalence; CapExceeded when #A^(|u|/n) > cap.
bool is_strong_power(WordView u, std::size_t n, const Relation& rel, std::size_t alphabet_size,
                     std::uint64_t cap = 1u << 20);

struct AvoidanceSearch {
  std::size_t max_length = 0;
  Word witness;  // lexicographically first P-free word of max_length
  bool exhausted = false;  // true: no P-free word longer than max_length exists
  std::uint64_t nodes = 0;
};

// Lexicographic DFS over P-free words, stopping at length `cap`.
// CapExceeded when more than node_budget words are visited.
AvoidanceSearch longest_avoiding(std::size_t alphabet_size, const Pattern& p, const Relation& rel,
                                 std::size_t cap, std::uint64_t node_budget = std::uint64_t{1} << 26);

// #{w in A^n : w is P-free}; CapExceeded when more than node_budget words are visited.
std::uint64_t count_P_free(std::size_t alphabet_size, const Pattern& p, const Relation& rel, std::size_t n,
                           std::uint64_t node_budget = std::uint64_t{1} << 26);

// Distinct factors of w lying in the pattern language; for an equivalence, one
// representative (shortlex smallest) per class.
std::set<Word, ShortLex> bounded_pattern_census(WordView w, const Pattern& p, const Relation& rel);
std::set<Word, ShortLex> bounded_pattern_census(const InfiniteWord& gen, const Pattern& p, const Relation& rel,
                                                std::size_t window);

struct FreenessCheck {
  bool passed = true;
  std::optional<Word> counterexample;  // shortlex smallest P-free u with f(u) not P-free
  std::uint64_t tested = 0;
};

// Tests every P-free u over the domain alphabet with |u| <= bound.
FreenessCheck morphism_freeness_check(const Morphism& f, const Pattern& p, const Relation& rel,
                                      std::size_t bound);

}  // namespace wordrel
