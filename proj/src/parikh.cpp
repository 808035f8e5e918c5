#include "wordrel/parikh.hpp"

#include "wordrel/error.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace wordrel {

namespace {

void require_alphabet(WordView w, std::size_t alphabet_size) {
  for (Letter a : w)
    if (a >= alphabet_size) throw DomainError("letter outside the declared alphabet");
}

}  // namespace

ParikhVector parikh_vector(WordView w, std::size_t alphabet_size) {
  require_alphabet(w, alphabet_size);
  ParikhVector counts(alphabet_size, 0);
  for (Letter a : w) ++counts[a];
  return counts;
}

std::uint64_t ExtendedParikhVector::count(WordView x) const {
  if (x.empty() || x.size() > level()) throw DomainError("factor length outside 1..level");
  std::size_t index = 0;
  for (Letter a : x) {
    if (a >= alphabet_size_) throw DomainError("letter outside the declared alphabet");
    index = index * alphabet_size_ + a;
  }
  return blocks_[x.size() - 1][index];
}

ExtendedParikhVector extended_parikh(WordView w, std::size_t level, std::size_t alphabet_size) {
  if (level < 1) throw DomainError("level must be at least 1");
  require_alphabet(w, alphabet_size);
  std::vector<std::vector<std::uint64_t>> blocks;
  std::size_t block_size = 1;
  for (std::size_t n = 1; n <= level; ++n) {
    if (block_size > (std::size_t{1} << 24) / alphabet_size)
      throw CapExceeded("extended Parikh vector too large");
    block_size *= alphabet_size;
    std::vector<std::uint64_t> block(block_size, 0);
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      std::size_t index = 0;
      for (std::size_t j = 0; j < n; ++j) index = index * alphabet_size + w[i + j];
      ++block[index];
    }
    blocks.push_back(std::move(block));
  }
  return ExtendedParikhVector(alphabet_size, std::move(blocks));
}

// ---------------------------------------------------------------------------

ParikhMatrix::ParikhMatrix(Word index, std::vector<BigInt> entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
  if (entries_.size() != dimension() * dimension()) throw DomainError("matrix entry count mismatch");
}

ParikhMatrix ParikhMatrix::identity(Word index) {
  const std::size_t d = index.size() + 1;
  std::vector<BigInt> entries(d * d, BigInt(0));
  for (std::size_t i = 0; i < d; ++i) entries[i * d + i] = 1;
  return ParikhMatrix(std::move(index), std::move(entries));
}

ParikhMatrix& ParikhMatrix::append_letter(Letter a) {
  const std::size_t d = dimension();
  // M · (I + sum e_{q,q+1}) adds column q to column q+1 for each q with index_q = a.
  // Descending q keeps every addition on the old column values.
  for (std::size_t q = index_.size(); q-- > 0;) {
    if (index_[q] != a) continue;
    for (std::size_t row = 0; row <= q; ++row) entries_[row * d + q + 1] += entries_[row * d + q];
  }
  return *this;
}

ParikhMatrix ParikhMatrix::operator*(const ParikhMatrix& rhs) const {
  if (index_ != rhs.index_) throw DomainError("matrices for different index words");
  const std::size_t d = dimension();
  std::vector<BigInt> out(d * d, BigInt(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = i; l < d; ++l) {
      const BigInt& x = entries_[i * d + l];
      if (x == 0) continue;
      for (std::size_t j = l; j < d; ++j) out[i * d + j] += x * rhs.entries_[l * d + j];
    }
  return ParikhMatrix(index_, std::move(out));
}

std::string ParikhMatrix::to_text() const {
  std::string out;
  const std::size_t d = dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j > 0) out += ' ';
      out += entries_[i * d + j].str();
    }
    out += '\n';
  }
  return out;
}

ParikhMatrix letter_matrix(Letter a, const Word& index) {
  return ParikhMatrix::identity(index).append_letter(a);
}

ParikhMatrix generalized_parikh(WordView w, const Word& index) {
  if (index.empty()) throw DomainError("generalized Parikh matrix needs a non-empty index word");
  auto m = ParikhMatrix::identity(index);
  for (Letter a : w) m.append_letter(a);
  return m;
}

ParikhMatrix parikh_matrix(WordView w, std::size_t alphabet_size) {
  require_alphabet(w, alphabet_size);
  std::vector<Letter> index(alphabet_size);
  for (std::size_t a = 0; a < alphabet_size; ++a) index[a] = static_cast<Letter>(a);
  return generalized_parikh(w, Word(std::move(index)));
}

bool m_equivalent(WordView u, WordView v, std::size_t alphabet_size) {
  return parikh_matrix(u, alphabet_size) == parikh_matrix(v, alphabet_size);
}

bool wj_equivalent(const Word& prefix, WordView u, WordView v) {
  if (prefix.empty()) throw DomainError("(w,j)-equivalence needs a non-empty prefix");
  return generalized_parikh(u, prefix) == generalized_parikh(v, prefix);
}

bool m_unambiguous(WordView w, std::size_t alphabet_size, std::uint64_t cap) {
  const auto counts = parikh_vector(w, alphabet_size);
  // Multinomial coefficient |w|! / prod(count!), accumulated exactly with overflow guard.
  BigInt arrangements = 1;
  std::uint64_t placed = 0;
  for (auto c : counts) {
    for (std::uint64_t i = 1; i <= c; ++i) {
      ++placed;
      arrangements = arrangements * placed / i;
    }
  }
  if (arrangements > cap) throw CapExceeded("too many words share the Parikh vector");

  const auto target = parikh_matrix(w, alphabet_size);
  std::vector<Letter> candidate(w.begin(), w.end());
  std::sort(candidate.begin(), candidate.end());
  do {
    if (same_letters(candidate, w)) continue;
    if (parikh_matrix(candidate, alphabet_size) == target) return false;
  } while (std::next_permutation(candidate.begin(), candidate.end()));
  return true;
}

bool transform_reachable(WordView u, WordView v, std::uint64_t cap) {
  for (WordView w : {u, v})
    for (Letter a : w)
      if (a > 1) throw DomainError("transformation moves are defined on binary words");
  if (u.size() != v.size()) return false;
  if (parikh_vector(u, 2) != parikh_vector(v, 2)) return false;

  auto as_string = [](WordView w) { return std::string(w.begin(), w.end()); };
  const std::string target = as_string(v);
  std::unordered_set<std::string> seen{as_string(u)};
  std::deque<std::string> queue{as_string(u)};
  while (!queue.empty()) {
    std::string current = std::move(queue.front());
    queue.pop_front();
    if (current == target) return true;
    const std::size_t n = current.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (current[i] == current[i + 1]) continue;
      // x ab y ba z -> x ba y ab z
      for (std::size_t j = i + 2; j + 1 < n; ++j) {
        if (current[j] != current[i + 1] || current[j + 1] != current[i]) continue;
        std::string next = current;
        std::swap(next[i], next[i + 1]);
        std::swap(next[j], next[j + 1]);
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw CapExceeded("transformation class exceeds the cap");
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return false;
}

}  // namespace wordrel
