#pragma once

#include "wordrel/bigint.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wordrel {

// Number of occurrences of x as a scattered subword of w.
BigInt binom(WordView w, WordView x);

// Number of (possibly overlapping) factor occurrences of a non-empty x in w.
std::uint64_t factor_count(WordView w, WordView x);

// Sum of the 1-based positions i with w_i = a.
std::uint64_t position_sum(WordView w, Letter a);

// Visits every x with |x| <= k and binom(w, x) > 0, in lexicographic order
// (epsilon first), together with binom(w, x).
void for_each_subword(WordView w, std::size_t k,
                      const std::function<void(WordView x, const BigInt& count)>& visit);

// Sparse k-spectrum: coefficients binom(w, x) for |x| <= k; absent terms are zero.
class Spectrum {
 public:
  struct Order {
    using is_transparent = void;
    bool operator()(WordView a, WordView b) const noexcept { return ShortLex{}(a, b); }
  };
  using Terms = std::map<Word, BigInt, Order>;

  Spectrum(std::size_t degree, Terms terms) : degree_(degree), terms_(std::move(terms)) {}

  std::size_t degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  // Zero for absent terms; DomainError when |x| exceeds the degree.
  BigInt coefficient(WordView x) const;
  // Terms whose word has exactly the given length.
  Terms terms_of_length(std::size_t length) const;

  // One `word:count` line per non-zero term, shortlex order; epsilon renders as the empty word.
  std::string to_text(const Alphabet& alphabet) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::size_t degree_;
  Terms terms_;
};

Spectrum spectrum(WordView w, std::size_t k);

// Binary words only. Coefficient at index val_2(1x) is binom(w, x) for 1 <= |x| <= k;
// index 0 carries binom(w, epsilon) = 1. Result length is 2^(k+1).
std::vector<BigInt> spectrum_poly_encode(WordView w, std::size_t k);

// Weighted automaton whose accepting-path count on x equals binom(w, x) for |x| <= k.
// States are (position, letters consumed); a transition on a from (i, j) reaches
// (i', j+1) for every i' > i with w_{i'} = a.
class CountingAutomaton {
 public:
  struct Transition {
    Letter letter;
    std::size_t target;
  };

  std::size_t state_count() const noexcept { return transitions_.size(); }
  std::size_t transition_count() const noexcept;
  std::size_t degree() const noexcept { return degree_; }
  std::size_t initial_state() const noexcept { return 0; }
  const std::vector<Transition>& transitions(std::size_t state) const { return transitions_.at(state); }
  // Every state reached after at most `degree` letters accepts.
  BigInt count_paths(WordView x) const;

 private:
  friend CountingAutomaton build_counting_automaton(WordView w, std::size_t k);
  std::size_t degree_ = 0;
  std::vector<std::vector<Transition>> transitions_;
};

CountingAutomaton build_counting_automaton(WordView w, std::size_t k);

// Encoded spectrum polynomial sum_{|x|<=k} binom(w,x) X^{e(x)} with e(epsilon) = 0 and
// e(x) = val_b(1x) for b = max(alphabet_size, 2), evaluated at `point` modulo `prime`.
BigInt spectrum_poly_eval(WordView w, std::size_t k, std::size_t alphabet_size,
                          const BigInt& point, const BigInt& prime);

// Smallest prime exceeding 2 · (number of exponents) · (coefficient bound) for words of
// length at most n; distinct spectra stay distinct modulo it.
BigInt spectrum_field_prime(std::size_t n, std::size_t k, std::size_t alphabet_size);

// One-sided Monte Carlo test of k-binomial equivalence. false is certain; true errs with
// probability at most (degree / prime)^trials. Deterministic for a given seed.
bool randomized_spectrum_equiv(WordView u, WordView v, std::size_t k, std::size_t alphabet_size,
                               std::size_t trials = 20, std::uint64_t seed = 0x5eed);

// Minimal k such that k-spectra separate all words of A^n, by exhaustive comparison.
// CapExceeded when #A^n > cap.
std::size_t reconstruction_min_k(std::size_t n, std::size_t alphabet_size,
                                 std::uint64_t cap = 1u << 20);

}  // namespace wordrel
