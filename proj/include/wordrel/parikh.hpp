#pragma once

#include "wordrel/bigint.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordrel {

// Letter counts (|w|_0, ..., |w|_{k-1}).
using ParikhVector = std::vector<std::uint64_t>;

ParikhVector parikh_vector(WordView w, std::size_t alphabet_size);

// Factor counts |w|_x for every x of length 1..level, one block per length, each block
// indexed by the base-k value of x (lexicographic order).
class ExtendedParikhVector {
 public:
  ExtendedParikhVector(std::size_t alphabet_size, std::vector<std::vector<std::uint64_t>> blocks)
      : alphabet_size_(alphabet_size), blocks_(std::move(blocks)) {}

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t level() const noexcept { return blocks_.size(); }
  const std::vector<std::uint64_t>& block(std::size_t length) const { return blocks_.at(length - 1); }
  std::uint64_t count(WordView x) const;

  friend bool operator==(const ExtendedParikhVector&, const ExtendedParikhVector&) = default;

 private:
  std::size_t alphabet_size_;
  std::vector<std::vector<std::uint64_t>> blocks_;
};

ExtendedParikhVector extended_parikh(WordView w, std::size_t level, std::size_t alphabet_size);

// Unit upper-triangular matrix of dimension |index| + 1 with entries
// m(i, j+1) = binom(w, index_i ... index_j) (1-based).
class ParikhMatrix {
 public:
  ParikhMatrix(Word index, std::vector<BigInt> entries);
  static ParikhMatrix identity(Word index);

  std::size_t dimension() const noexcept { return index_.size() + 1; }
  const Word& index_word() const noexcept { return index_; }
  // 0-based row and column.
  const BigInt& at(std::size_t row, std::size_t col) const { return entries_.at(row * dimension() + col); }

  // Right multiplication by psi_index(a).
  ParikhMatrix& append_letter(Letter a);

  ParikhMatrix operator*(const ParikhMatrix& rhs) const;
  friend bool operator==(const ParikhMatrix&, const ParikhMatrix&) = default;

  // Row-major, space-separated, one row per line.
  std::string to_text() const;

 private:
  Word index_;
  std::vector<BigInt> entries_;
};

// psi_index(a): identity plus a 1 at (q, q+1) for each position q with index_q = a.
ParikhMatrix letter_matrix(Letter a, const Word& index);

ParikhMatrix generalized_parikh(WordView w, const Word& index);

// psi_k with index word 0 1 ... k-1.
ParikhMatrix parikh_matrix(WordView w, std::size_t alphabet_size);

bool m_equivalent(WordView u, WordView v, std::size_t alphabet_size);

// Same generalized Parikh matrix with respect to a non-empty prefix word.
bool wj_equivalent(const Word& prefix, WordView u, WordView v);

// True iff no other word has the same psi_k. Enumerates the words sharing w's Parikh
// vector; CapExceeded when there are more than `cap` of them.
bool m_unambiguous(WordView w, std::size_t alphabet_size, std::uint64_t cap = 1u << 20);

// Binary words: v is reachable from u by moves x ab y ba z -> x ba y ab z.
// CapExceeded when the explored class exceeds `cap` words.
bool transform_reachable(WordView u, WordView v, std::uint64_t cap = 1u << 20);

}  // namespace wordrel
