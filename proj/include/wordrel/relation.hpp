#pragma once

#include "wordrel/bigint.hpp"
#include "wordrel/words.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wordrel {

// Totally ordered, hashable fingerprint of an equivalence class.
class Key {
 public:
  Key& push(std::uint64_t value) {
    data_.push_back(value);
    return *this;
  }
  Key& push(WordView w);
  Key& push(const BigInt& value);

  const std::vector<std::uint64_t>& data() const noexcept { return data_; }

  friend bool operator==(const Key&, const Key&) = default;
  friend auto operator<=>(const Key&, const Key&) = default;

 private:
  std::vector<std::uint64_t> data_;
};

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept;
};

// Reflexive, symmetric relation on letters, stored as a dense k×k table.
class LetterRelation {
 public:
  // Reflexive-symmetric closure of the given pairs over an alphabet of size k.
  LetterRelation(std::size_t k, const std::vector<std::pair<Letter, Letter>>& pairs);

  // Partial words: the hole letter is related to every letter.
  static LetterRelation partial_words(std::size_t k, Letter hole);

  std::size_t alphabet_size() const noexcept { return k_; }
  bool related(Letter a, Letter b) const;

  friend bool operator==(const LetterRelation&, const LetterRelation&) = default;

 private:
  std::size_t k_;
  std::vector<bool> table_;
};

enum class RelationKind {
  Equality,
  HammingAtMost,
  Abelian,
  LAbelian,
  KBinomial,
  MEquivalence,
  GeneralizedParikh,
  Additive,
  Simon,
  RSimilarity,
};

class Relation {
 public:
  static Relation equality();
  static Relation hamming_at_most(std::size_t k);
  static Relation abelian();
  static Relation l_abelian(std::size_t l);
  static Relation k_binomial(std::size_t k);
  // Same Parikh matrix psi_k over an ordered alphabet of size k.
  static Relation m_equivalence(std::size_t alphabet_size);
  static Relation generalized_parikh(Word index);
  // Same length and same sum of letter values.
  static Relation additive(std::vector<std::int64_t> letter_values);
  // Same set of scattered subwords; restricted to lengths <= k when k is given.
  static Relation simon(std::optional<std::size_t> k = std::nullopt);
  static Relation r_similarity(LetterRelation letters);

  RelationKind kind() const noexcept { return kind_; }
  std::size_t parameter() const noexcept { return param_; }
  std::string name() const;

  bool is_equivalence() const noexcept;
  bool is_congruence() const noexcept;
  // Pairs of unequal length are rejected outright.
  bool is_length_restricted() const noexcept;
  // Related words always have equal length.
  bool is_length_preserving() const noexcept;

  // Length-restricted kinds throw DomainError on unequal lengths.
  bool equivalent(WordView u, WordView v) const;
  // Only for equivalence kinds; key(u) == key(v) iff equivalent(u, v).
  Key canonical_key(WordView w) const;

  const Word& index_word() const noexcept { return index_; }
  const std::vector<std::int64_t>& letter_values() const noexcept { return values_; }
  const std::optional<LetterRelation>& letter_relation() const noexcept { return letters_; }

 private:
  explicit Relation(RelationKind kind, std::size_t param = 0) : kind_(kind), param_(param) {}

  RelationKind kind_;
  std::size_t param_;  // k, l, or the Simon length bound (0 = unbounded)
  Word index_;
  std::vector<std::int64_t> values_;
  std::optional<LetterRelation> letters_;
};

bool equivalent(const Relation& rel, WordView u, WordView v);
Key canonical_key(const Relation& rel, WordView w);

std::size_t hamming_distance(WordView u, WordView v);

bool similar(const LetterRelation& r, WordView u, WordView v);

// Largest l (resp. k) with u related to v; infinite exactly when u == v.
struct EquivIndex {
  bool infinite = false;
  std::size_t value = 0;

  static EquivIndex infinity() { return {true, 0}; }
  friend bool operator==(const EquivIndex&, const EquivIndex&) = default;
};

enum class RelationFamily { LAbelian, KBinomial };

EquivIndex largest_equiv_index(RelationFamily family, WordView u, WordView v);

// Minimal DFA of the subwords of w of length <= max_length (all lengths when nullopt),
// serialized canonically. Equal serializations iff equal subword sets.
Key subword_automaton_key(WordView w, std::optional<std::size_t> max_length);

}  // namespace wordrel
