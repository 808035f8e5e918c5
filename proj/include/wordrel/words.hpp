#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordrel {

// Letters are dense indices 0..k-1 into an ordered alphabet.
using Letter = std::uint8_t;
using WordView = std::span<const Letter>;

inline constexpr std::size_t kMaxAlphabetSize = 256;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(WordView view) : letters_(view.begin(), view.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  WordView view() const noexcept { return letters_; }
  operator WordView() const noexcept { return letters_; }  // NOLINT(google-explicit-constructor)
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Factor of length len starting at 0-based position pos.
  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }

  void push_back(Letter a) { letters_.push_back(a); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  void truncate(std::size_t n) {
    if (n < letters_.size()) letters_.resize(n);
  }
  Word& append(WordView other);
  Word& operator+=(WordView other) { return append(other); }

  std::size_t count(Letter a) const noexcept;

  friend Word operator+(Word lhs, WordView rhs) { return std::move(lhs.append(rhs)); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word power(WordView w, std::size_t n);

// Length first, then lexicographic.
struct ShortLex {
  bool operator()(WordView a, WordView b) const noexcept;
};

std::size_t hash_letters(WordView w) noexcept;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return hash_letters(w); }
};

inline bool same_letters(WordView a, WordView b) noexcept {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

class Alphabet {
 public:
  // Symbols must be pairwise distinct, non-empty, and at most kMaxAlphabetSize.
  explicit Alphabet(std::vector<std::string> symbols);

  // Each UTF-8 code point of text is one symbol, in order of appearance.
  static Alphabet from_string(std::string_view text);
  // 0, 1, ..., 9, a, b, ..., z (k <= 36).
  static Alphabet digits(std::size_t k);
  // a, b, c, ... (k <= 26).
  static Alphabet latin(std::size_t k);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Letter> find(std::string_view symbol) const;

  // Throws ParseError carrying the 1-based position of the first unknown symbol.
  Word parse(std::string_view text) const;
  std::string render(WordView w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

Word word_from_string(std::string_view text, const Alphabet& alphabet);

// Splits UTF-8 text into code points; a malformed byte sequence is a ParseError.
std::vector<std::string> split_code_points(std::string_view text);

class Morphism {
 public:
  Morphism(std::size_t domain_size, std::size_t codomain_size, std::vector<Word> images);

  static Morphism identity(std::size_t k);

  std::size_t domain_size() const noexcept { return images_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_size_; }
  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  bool is_endomorphism() const noexcept { return domain_size() == codomain_size_; }
  bool is_nonerasing() const noexcept;
  bool is_coding() const noexcept;
  bool is_uniform() const noexcept;

  Word apply(WordView w) const;
  Word operator()(WordView w) const { return apply(w); }

  // M[a][b] = |f(a)|_b.
  std::vector<std::vector<std::uint64_t>> incidence_matrix() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::size_t codomain_size_;
  std::vector<Word> images_;
};

Word morphism_apply(const Morphism& f, WordView w);

// f(a) = a·u with |f^n(a)| unbounded. Decided exactly: the limit is infinite iff u
// contains a letter that is not mortal (a letter is mortal when some iterate erases it).
bool is_prolongable(const Morphism& f, Letter a);

// Incidence matrix has a strictly positive power; powers up to (k-1)^2+1 are tested.
bool is_primitive(const Morphism& f);

std::set<Word> factors(WordView w, std::size_t n);

}  // namespace wordrel
