#include "wordrel/words.hpp"

#include "wordrel/bigint.hpp"
#include "wordrel/error.hpp"

#include <algorithm>
#include <numeric>

namespace wordrel {

BigInt choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos)
    throw DomainError("factor out of range");
  return Word(WordView(letters_).subspan(pos, len));
}

Word& Word::append(WordView other) {
  letters_.insert(letters_.end(), other.begin(), other.end());
  return *this;
}

std::size_t Word::count(Letter a) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), a));
}

Word power(WordView w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.append(w);
  return out;
}

bool ShortLex::operator()(WordView a, WordView b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t hash_letters(WordView w) noexcept {
  std::string_view bytes(reinterpret_cast<const char*>(w.data()), w.size());
  return std::hash<std::string_view>{}(bytes);
}

// ---------------------------------------------------------------------------

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    else if (lead >= 0x80) throw ParseError("malformed UTF-8", out.size() + 1);
    if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence", out.size() + 1);
    for (std::size_t j = 1; j < len; ++j) {
      if ((static_cast<unsigned char>(text[i + j]) & 0xC0) != 0x80)
        throw ParseError("malformed UTF-8", out.size() + 1);
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet must contain at least one letter");
  if (symbols_.size() > kMaxAlphabetSize) throw DomainError("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw DomainError("empty alphabet symbol");
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[i] == symbols_[j])
        throw DomainError("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
  }
}

Alphabet Alphabet::from_string(std::string_view text) { return Alphabet(split_code_points(text)); }

Alphabet Alphabet::digits(std::size_t k) {
  static constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (k == 0 || k > kDigits.size()) throw DomainError("digit alphabet size must be in 1..36");
  return from_string(kDigits.substr(0, k));
}

Alphabet Alphabet::latin(std::size_t k) {
  static constexpr std::string_view kLatin = "abcdefghijklmnopqrstuvwxyz";
  if (k == 0 || k > kLatin.size()) throw DomainError("latin alphabet size must be in 1..26");
  return from_string(kLatin.substr(0, k));
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  auto points = split_code_points(text);
  std::vector<Letter> letters;
  letters.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto letter = find(points[i]);
    if (!letter) throw ParseError("unknown symbol '" + points[i] + "'", i + 1);
    letters.push_back(*letter);
  }
  return Word(std::move(letters));
}

std::string Alphabet::render(WordView w) const {
  std::string out;
  for (Letter a : w) out += symbol(a);
  return out;
}

Word word_from_string(std::string_view text, const Alphabet& alphabet) {
  return alphabet.parse(text);
}

// ---------------------------------------------------------------------------

Morphism::Morphism(std::size_t domain_size, std::size_t codomain_size, std::vector<Word> images)
    : codomain_size_(codomain_size), images_(std::move(images)) {
  if (images_.size() != domain_size) throw DomainError("morphism needs one image per letter");
  if (domain_size == 0 || domain_size > kMaxAlphabetSize || codomain_size == 0 ||
      codomain_size > kMaxAlphabetSize)
    throw DomainError("morphism alphabet size out of range");
  for (const auto& img : images_) {
    for (Letter b : img) {
      if (b >= codomain_size_) throw DomainError("morphism image leaves the codomain alphabet");
    }
  }
}

Morphism Morphism::identity(std::size_t k) {
  std::vector<Word> images;
  for (std::size_t a = 0; a < k; ++a) images.push_back(Word{static_cast<Letter>(a)});
  return Morphism(k, k, std::move(images));
}

bool Morphism::is_nonerasing() const noexcept {
  return std::none_of(images_.begin(), images_.end(), [](const Word& w) { return w.empty(); });
}

bool Morphism::is_coding() const noexcept {
  return std::all_of(images_.begin(), images_.end(), [](const Word& w) { return w.size() == 1; });
}

bool Morphism::is_uniform() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const Word& w) { return w.size() == images_.front().size(); });
}

Word Morphism::apply(WordView w) const {
  std::size_t total = 0;
  for (Letter a : w) {
    if (a >= images_.size()) throw DomainError("word letter outside morphism domain");
    total += images_[a].size();
  }
  Word out;
  out.reserve(total);
  for (Letter a : w) out.append(images_[a]);
  return out;
}

std::vector<std::vector<std::uint64_t>> Morphism::incidence_matrix() const {
  std::vector<std::vector<std::uint64_t>> m(domain_size(),
                                            std::vector<std::uint64_t>(codomain_size_, 0));
  for (std::size_t a = 0; a < domain_size(); ++a) {
    for (Letter b : images_[a]) ++m[a][b];
  }
  return m;
}

Word morphism_apply(const Morphism& f, WordView w) { return f.apply(w); }

bool is_prolongable(const Morphism& f, Letter a) {
  if (!f.is_endomorphism()) throw DomainError("prolongability needs an endomorphism");
  if (a >= f.domain_size()) throw DomainError("letter outside morphism domain");
  const Word& img = f.image(a);
  if (img.size() < 2 || img[0] != a) return false;

  // Mortal letters: least fixed point of "every letter of the image is mortal".
  std::vector<bool> mortal(f.domain_size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < f.domain_size(); ++b) {
      if (mortal[b]) continue;
      const Word& ib = f.image(static_cast<Letter>(b));
      if (std::all_of(ib.begin(), ib.end(), [&](Letter c) { return mortal[c]; })) {
        mortal[b] = true;
        changed = true;
      }
    }
  }
  return std::any_of(img.begin() + 1, img.end(), [&](Letter c) { return !mortal[c]; });
}

bool is_primitive(const Morphism& f) {
  if (!f.is_endomorphism()) throw DomainError("primitivity needs an endomorphism");
  const std::size_t k = f.domain_size();
  using BoolMatrix = std::vector<std::vector<bool>>;
  BoolMatrix m(k, std::vector<bool>(k, false));
  auto inc = f.incidence_matrix();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = inc[i][j] > 0;

  auto positive = [](const BoolMatrix& x) {
    return std::all_of(x.begin(), x.end(),
                       [](const auto& row) { return std::all_of(row.begin(), row.end(),
                                                                [](bool b) { return b; }); });
  };
  auto multiply = [k](const BoolMatrix& x, const BoolMatrix& y) {
    BoolMatrix z(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (x[i][l])
          for (std::size_t j = 0; j < k; ++j)
            if (y[l][j]) z[i][j] = true;
    return z;
  };

  const std::size_t bound = (k - 1) * (k - 1) + 1;
  BoolMatrix p = m;
  for (std::size_t n = 1; n <= bound; ++n) {
    if (positive(p)) return true;
    p = multiply(p, m);
  }
  return false;
}

std::set<Word> factors(WordView w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace(w.subspan(i, n));
  return out;
}

}  // namespace wordrel
