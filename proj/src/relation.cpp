#include "wordrel/relation.hpp"

#include "subword_dfs.hpp"
#include "wordrel/binomial.hpp"
#include "wordrel/error.hpp"
#include "wordrel/parikh.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <unordered_map>

namespace wordrel {

Key& Key::push(WordView w) {
  data_.push_back(w.size());
  data_.insert(data_.end(), w.begin(), w.end());
  return *this;
}

// Limb count followed by little-endian 64-bit limbs; zero has no limbs.
Key& Key::push(const BigInt& value) {
  if (value == 0) return push(std::uint64_t{0});
  std::vector<std::uint64_t> limbs;
  boost::multiprecision::export_bits(value, std::back_inserter(limbs), 64, false);
  data_.push_back(limbs.size());
  data_.insert(data_.end(), limbs.begin(), limbs.end());
  return *this;
}

std::size_t KeyHash::operator()(const Key& key) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.data().size();
  for (std::uint64_t v : key.data()) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

namespace {

// Same encoding as Key::push(BigInt) for values that fit in 64 bits.
void push_count(Key& key, std::uint64_t value) {
  if (value == 0) {
    key.push(std::uint64_t{0});
  } else {
    key.push(std::uint64_t{1}).push(value);
  }
}

void push_matrix(Key& key, const ParikhMatrix& m) {
  const std::size_t d = m.dimension();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) key.push(m.at(i, j));
}

Key abelian_key(WordView w) {
  std::array<std::uint64_t, kMaxAlphabetSize> counts{};
  for (Letter a : w) ++counts[a];
  Key key;
  for (std::size_t a = 0; a < counts.size(); ++a)
    if (counts[a] != 0) key.push(a).push(counts[a]);
  return key;
}

struct LexLess {
  bool operator()(WordView a, WordView b) const noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Short words are their own class; otherwise prefix, suffix and length-l factor counts.
Key l_abelian_key(WordView w, std::size_t l) {
  Key key;
  key.push(w.size());
  if (w.size() < l) {
    key.push(w);
    return key;
  }
  key.push(w.first(l - 1)).push(w.last(l - 1));
  std::map<WordView, std::uint64_t, LexLess> counts;
  for (std::size_t i = 0; i + l <= w.size(); ++i) ++counts[w.subspan(i, l)];
  for (const auto& [x, c] : counts) key.push(x).push(c);
  return key;
}

Key binomial_key(WordView w, std::size_t k) {
  Key key;
  try {
    detail::subword_dfs<std::uint64_t>(w, k, [&](WordView x, std::uint64_t c) {
      key.push(x);
      push_count(key, c);
    });
  } catch (const detail::CountOverflow&) {
    key = Key{};
    detail::subword_dfs<BigInt>(w, k, [&](WordView x, const BigInt& c) { key.push(x).push(c); });
  }
  return key;
}

Key additive_key(WordView w, const std::vector<std::int64_t>& values) {
  __int128 sum = 0;
  for (Letter a : w) {
    if (a >= values.size()) throw DomainError("no additive value for a letter");
    sum += values[a];
  }
  Key key;
  key.push(w.size());
  key.push(static_cast<std::uint64_t>(static_cast<unsigned __int128>(sum) >> 64));
  key.push(static_cast<std::uint64_t>(sum));
  return key;
}

void require_same_length(WordView u, WordView v) {
  if (u.size() != v.size()) throw DomainError("relation needs words of equal length");
}

}  // namespace

// ---------------------------------------------------------------------------

LetterRelation::LetterRelation(std::size_t k, const std::vector<std::pair<Letter, Letter>>& pairs)
    : k_(k), table_(k * k, false) {
  if (k < 1 || k > kMaxAlphabetSize) throw DomainError("letter relation needs 1..256 letters");
  for (std::size_t a = 0; a < k; ++a) table_[a * k + a] = true;
  for (auto [a, b] : pairs) {
    if (a >= k || b >= k) throw DomainError("letter relation pair outside the alphabet");
    table_[a * k + b] = true;
    table_[b * k + a] = true;
  }
}

LetterRelation LetterRelation::partial_words(std::size_t k, Letter hole) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(static_cast<Letter>(a), hole);
  return LetterRelation(k, pairs);
}

bool LetterRelation::related(Letter a, Letter b) const {
  if (a >= k_ || b >= k_) throw DomainError("letter outside the relation's alphabet");
  return table_[a * k_ + b];
}

// ---------------------------------------------------------------------------

Relation Relation::equality() { return Relation(RelationKind::Equality); }
Relation Relation::hamming_at_most(std::size_t k) { return Relation(RelationKind::HammingAtMost, k); }
Relation Relation::abelian() { return Relation(RelationKind::Abelian, 1); }

Relation Relation::l_abelian(std::size_t l) {
  if (l < 1) throw DomainError("l-abelian equivalence needs l >= 1");
  return Relation(RelationKind::LAbelian, l);
}

Relation Relation::k_binomial(std::size_t k) {
  if (k < 1) throw DomainError("k-binomial equivalence needs k >= 1");
  return Relation(RelationKind::KBinomial, k);
}

Relation Relation::m_equivalence(std::size_t alphabet_size) {
  if (alphabet_size < 1) throw DomainError("M-equivalence needs a non-empty alphabet");
  return Relation(RelationKind::MEquivalence, alphabet_size);
}

Relation Relation::generalized_parikh(Word index) {
  if (index.empty()) throw DomainError("generalized Parikh relation needs a non-empty index word");
  Relation rel(RelationKind::GeneralizedParikh, index.size());
  rel.index_ = std::move(index);
  return rel;
}

Relation Relation::additive(std::vector<std::int64_t> letter_values) {
  if (letter_values.empty()) throw DomainError("additive relation needs letter values");
  Relation rel(RelationKind::Additive, letter_values.size());
  rel.values_ = std::move(letter_values);
  return rel;
}

Relation Relation::simon(std::optional<std::size_t> k) {
  if (k && *k < 1) throw DomainError("Simon bound must be at least 1");
  return Relation(RelationKind::Simon, k.value_or(0));
}

Relation Relation::r_similarity(LetterRelation letters) {
  Relation rel(RelationKind::RSimilarity, letters.alphabet_size());
  rel.letters_ = std::move(letters);
  return rel;
}

std::string Relation::name() const {
  switch (kind_) {
    case RelationKind::Equality: return "eq";
    case RelationKind::HammingAtMost: return "hamming<=" + std::to_string(param_);
    case RelationKind::Abelian: return "ab";
    case RelationKind::LAbelian: return "ab:" + std::to_string(param_);
    case RelationKind::KBinomial: return "bin:" + std::to_string(param_);
    case RelationKind::MEquivalence: return "matrix";
    case RelationKind::GeneralizedParikh: {
      std::string out = "gparikh:";
      for (std::size_t i = 0; i < index_.size(); ++i) out += (i ? "," : "") + std::to_string(index_[i]);
      return out;
    }
    case RelationKind::Additive: {
      std::string out = "additive:";
      for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
      return out;
    }
    case RelationKind::Simon: return param_ == 0 ? "simon" : "simon:" + std::to_string(param_);
    case RelationKind::RSimilarity: return "similar";
  }
  return "?";
}

bool Relation::is_equivalence() const noexcept {
  return kind_ != RelationKind::HammingAtMost && kind_ != RelationKind::RSimilarity;
}

bool Relation::is_congruence() const noexcept { return is_equivalence(); }

bool Relation::is_length_restricted() const noexcept { return !is_equivalence(); }

bool Relation::is_length_preserving() const noexcept {
  switch (kind_) {
    case RelationKind::GeneralizedParikh: return false;
    case RelationKind::Simon: return param_ == 0;
    default: return true;
  }
}

bool Relation::equivalent(WordView u, WordView v) const {
  switch (kind_) {
    case RelationKind::Equality: return same_letters(u, v);
    case RelationKind::HammingAtMost: return hamming_distance(u, v) <= param_;
    case RelationKind::RSimilarity: return similar(*letters_, u, v);
    case RelationKind::Abelian:
    case RelationKind::LAbelian:
    case RelationKind::KBinomial:
      if (u.size() != v.size()) return false;
      return canonical_key(u) == canonical_key(v);
    case RelationKind::MEquivalence: return m_equivalent(u, v, param_);
    case RelationKind::GeneralizedParikh: return wordrel::generalized_parikh(u, index_) == wordrel::generalized_parikh(v, index_);
    case RelationKind::Additive:
    case RelationKind::Simon: return canonical_key(u) == canonical_key(v);
  }
  return false;
}

Key Relation::canonical_key(WordView w) const {
  Key key;
  switch (kind_) {
    case RelationKind::Equality: return key.push(w);
    case RelationKind::Abelian: return abelian_key(w);
    case RelationKind::LAbelian: return param_ == 1 ? abelian_key(w) : l_abelian_key(w, param_);
    case RelationKind::KBinomial: return binomial_key(w, param_);
    case RelationKind::MEquivalence: push_matrix(key, parikh_matrix(w, param_)); return key;
    case RelationKind::GeneralizedParikh: push_matrix(key, wordrel::generalized_parikh(w, index_)); return key;
    case RelationKind::Additive: return additive_key(w, values_);
    case RelationKind::Simon:
      return subword_automaton_key(w, param_ == 0 ? std::nullopt : std::optional<std::size_t>(param_));
    case RelationKind::HammingAtMost:
    case RelationKind::RSimilarity: break;
  }
  throw DomainError("relation " + name() + " is not an equivalence and has no canonical key");
}

bool equivalent(const Relation& rel, WordView u, WordView v) { return rel.equivalent(u, v); }
Key canonical_key(const Relation& rel, WordView w) { return rel.canonical_key(w); }

std::size_t hamming_distance(WordView u, WordView v) {
  require_same_length(u, v);
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

bool similar(const LetterRelation& r, WordView u, WordView v) {
  require_same_length(u, v);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!r.related(u[i], v[i])) return false;
  return true;
}

EquivIndex largest_equiv_index(RelationFamily family, WordView u, WordView v) {
  if (same_letters(u, v)) return EquivIndex::infinity();
  if (u.size() != v.size()) return {};
  // Both chains refine as the index grows and collapse to equality by index |u|.
  std::size_t index = 0;
  for (std::size_t next = 1; next <= u.size(); ++next) {
    const Relation rel =
        family == RelationFamily::LAbelian ? Relation::l_abelian(next) : Relation::k_binomial(next);
    if (!rel.equivalent(u, v)) break;
    index = next;
  }
  return {false, index};
}

// ---------------------------------------------------------------------------

Key subword_automaton_key(WordView w, std::optional<std::size_t> max_length) {
  const std::size_t n = w.size();
  const auto letters = detail::letters_present(w);
  const std::size_t sigma = letters.size();

  // next[i][c]: smallest j >= i with w_j = letters[c], else n (absent).
  std::vector<std::size_t> next((n + 1) * sigma, n);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < sigma; ++c) next[i * sigma + c] = next[(i + 1) * sigma + c];
    const auto c = static_cast<std::size_t>(
        std::lower_bound(letters.begin(), letters.end(), w[i]) - letters.begin());
    next[i * sigma + c] = i;
  }

  // Greedy-embedding DFA: state (consumed prefix i, depth d); sink handles missing letters.
  const std::size_t depth_levels = max_length ? *max_length + 1 : 1;
  auto id = [&](std::size_t i, std::size_t d) { return i * depth_levels + d; };
  const std::size_t states = (n + 1) * depth_levels;
  const std::size_t sink = states;
  std::vector<std::size_t> delta((states + 1) * sigma, sink);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t d = 0; d < depth_levels; ++d) {
      if (max_length && d == *max_length) continue;
      const std::size_t nd = max_length ? d + 1 : 0;
      for (std::size_t c = 0; c < sigma; ++c) {
        const std::size_t j = i < n ? next[i * sigma + c] : n;
        if (j < n) delta[id(i, d) * sigma + c] = id(j + 1, nd);
      }
    }

  // Moore refinement: live states accept, the sink does not.
  std::vector<std::size_t> cls(states + 1, 0);
  cls[sink] = 1;
  std::size_t class_count = 2;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signatures;
    std::vector<std::size_t> refined(states + 1);
    for (std::size_t s = 0; s <= states; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t c = 0; c < sigma; ++c) sig.push_back(cls[delta[s * sigma + c]]);
      refined[s] = signatures.emplace(std::move(sig), signatures.size()).first->second;
    }
    cls = std::move(refined);
    if (signatures.size() == class_count) break;
    class_count = signatures.size();
  }

  // Canonical numbering by BFS from the initial state in letter order.
  std::vector<std::size_t> number(class_count, SIZE_MAX);
  std::vector<std::size_t> representative;
  number[cls[id(0, 0)]] = 0;
  representative.push_back(id(0, 0));
  Key key;
  key.push(letters.size());
  for (Letter a : letters) key.push(a);
  for (std::size_t head = 0; head < representative.size(); ++head) {
    const std::size_t s = representative[head];
    for (std::size_t c = 0; c < sigma; ++c) {
      const std::size_t t = delta[s * sigma + c];
      if (cls[t] == cls[sink]) {
        key.push(SIZE_MAX);
        continue;
      }
      if (number[cls[t]] == SIZE_MAX) {
        number[cls[t]] = representative.size();
        representative.push_back(t);
      }
      key.push(number[cls[t]]);
    }
  }
  return key;
}

}  // namespace wordrel
