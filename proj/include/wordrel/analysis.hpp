#pragma once

#include "wordrel/generator.hpp"
#include "wordrel/relation.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace wordrel {

// Windowed analyses of an infinite word inspect prefix(N) only. Results are lower
// bounds or evidence for the infinite word, never proofs.
std::size_t default_window(std::size_t n);

struct WindowCount {
  std::uint64_t value = 0;
  std::size_t window = 0;
  // Start of the factor that introduced the last new class.
  std::size_t last_new_position = 0;

  // The last new class showed up in the first half of the window.
  bool settled() const noexcept { return 2 * last_new_position < window; }
};

// Number of classes of rel among the length-n factors of w.
WindowCount complexity(WordView w, const Relation& rel, std::size_t n);
WindowCount complexity(const InfiniteWord& gen, const Relation& rel, std::size_t n,
                       std::optional<std::size_t> window = std::nullopt);

// complexity for n = first..last over one shared window.
std::vector<WindowCount> complexity_profile(const InfiniteWord& gen, const Relation& rel, std::size_t first,
                                            std::size_t last, std::optional<std::size_t> window = std::nullopt);

// #(A^n / rel) by enumeration; CapExceeded when #A^n > cap.
std::uint64_t growth(const Relation& rel, std::size_t alphabet_size, std::size_t n,
                     std::uint64_t cap = 1u << 22);

// max over letters a of (max |u|_a - min |v|_a) over length-n factors u, v of w.
std::uint64_t balance_coefficient(WordView w, std::size_t n);
std::uint64_t balance_coefficient(const InfiniteWord& gen, std::size_t n,
                                  std::optional<std::size_t> window = std::nullopt);

struct OccurrenceSet {
  Word pattern;
  std::size_t window = 0;
  std::vector<std::size_t> positions;  // 0-based, increasing
};

// Positions i with w_i ... w_{i+|u|-1} related to u.
OccurrenceSet occurrences(WordView w, const Relation& rel, const Word& u);
OccurrenceSet occurrences(const InfiniteWord& gen, const Relation& rel, const Word& u,
                          std::optional<std::size_t> window = std::nullopt);

// Largest difference of consecutive positions; DomainError with fewer than two.
std::size_t max_gap(const OccurrenceSet& occ);

struct DerivedSequence {
  // Return words numbered 1, 2, ... by first appearance.
  std::vector<Word> dictionary;
  // 1-based indices into the dictionary.
  std::vector<std::size_t> code;
  // Position of the first occurrence, where the factorization starts.
  std::size_t start = 0;
};

// Blocks between consecutive occurrences, starting from the first occurrence.
// DomainError with fewer than two occurrences.
DerivedSequence derived_sequence(const OccurrenceSet& occ, WordView w);
DerivedSequence derived_sequence(const InfiniteWord& gen, const Relation& rel, const Word& u,
                                 std::optional<std::size_t> window = std::nullopt);

std::set<Word, ShortLex> return_words(const OccurrenceSet& occ, WordView w);
std::set<Word, ShortLex> return_words(const InfiniteWord& gen, const Relation& rel, const Word& u,
                                      std::optional<std::size_t> window = std::nullopt);

enum class PeriodMode { Global, External, Local };

// Checks the length-l block factorization u_0 u_1 ... of w (incomplete last block
// dropped) against the mode's constraint:
//   global    i = j (mod p) implies u_i ~ u_j
//   external  some v_0..v_{p-1} with u_{np+r} ~ v_r
//   local     u_i ~ u_{i+p}
// External witnesses are searched among the blocks of each residue class and, when
// that fails and #A^l <= witness_cap, among all of A^l.
bool detect_period(WordView w, std::size_t alphabet_size, const Relation& rel, std::size_t p, std::size_t l,
                   PeriodMode mode, std::uint64_t witness_cap = 1u << 16);
bool detect_period(const InfiniteWord& gen, const Relation& rel, std::size_t p, std::size_t l, PeriodMode mode,
                   std::optional<std::size_t> window = std::nullopt);

// For a congruence: (p, l) period implies (1, p·l) period on the same window.
// Returns whether the implication holds; DomainError if rel is not a congruence.
bool period_upgrade_check(const Relation& rel, WordView w, std::size_t alphabet_size, std::size_t p,
                          std::size_t l, PeriodMode mode = PeriodMode::Global);

struct MorseHedlundVerdict {
  bool bounded = false;
  // Factor complexities p(0..) computed on the window.
  std::vector<std::uint64_t> complexities;
  // First n with p(n) = p(n+1) when bounded.
  std::size_t plateau = 0;
  // w = u v v ... on the window, with |u| = preperiod and |v| = period, when found.
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;
};

// Scans p(n) for n <= max_n on w.
MorseHedlundVerdict morse_hedlund_scan(WordView w, std::size_t max_n);
// max_n defaults to floor(sqrt(window)).
MorseHedlundVerdict morse_hedlund_scan(const InfiniteWord& gen, std::size_t window,
                                       std::optional<std::size_t> max_n = std::nullopt);

}  // namespace wordrel
