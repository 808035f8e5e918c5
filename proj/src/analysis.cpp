#include "wordrel/analysis.hpp"

#include "subword_dfs.hpp"
#include "wordrel/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace wordrel {

std::size_t default_window(std::size_t n) { return std::max<std::size_t>(4096, 64 * n); }

namespace {

std::string_view as_bytes(WordView w) { return {reinterpret_cast<const char*>(w.data()), w.size()}; }

bool is_abelian(const Relation& rel) {
  return rel.kind() == RelationKind::Abelian ||
         (rel.kind() == RelationKind::LAbelian && rel.parameter() == 1);
}

// Calls visit(i, counts) for each length-n window of w, counts indexed like `letters`.
template <class Visit>
void sliding_counts(WordView w, std::size_t n, const std::vector<Letter>& letters, Visit&& visit) {
  std::array<std::size_t, kMaxAlphabetSize> slot{};
  for (std::size_t c = 0; c < letters.size(); ++c) slot[letters[c]] = c;
  std::vector<std::uint64_t> counts(letters.size(), 0);
  for (std::size_t i = 0; i < n; ++i) ++counts[slot[w[i]]];
  for (std::size_t i = 0;; ++i) {
    visit(i, counts);
    if (i + n >= w.size()) break;
    --counts[slot[w[i]]];
    ++counts[slot[w[i + n]]];
  }
}

Key counts_key(const std::vector<Letter>& letters, const std::vector<std::uint64_t>& counts) {
  Key key;
  for (std::size_t c = 0; c < letters.size(); ++c)
    if (counts[c] != 0) key.push(letters[c]).push(counts[c]);
  return key;
}

void require_equivalence(const Relation& rel) {
  if (!rel.is_equivalence()) throw DomainError("relation " + rel.name() + " is not an equivalence");
}

}  // namespace

WindowCount complexity(WordView w, const Relation& rel, std::size_t n) {
  require_equivalence(rel);
  WindowCount result;
  result.window = w.size();
  if (n == 0) {
    result.value = 1;
    return result;
  }
  if (n > w.size()) return result;

  if (rel.kind() == RelationKind::Equality) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
      if (seen.insert(as_bytes(w.subspan(i, n))).second) result.last_new_position = i;
    result.value = seen.size();
    return result;
  }

  std::unordered_set<Key, KeyHash> seen;
  if (is_abelian(rel)) {
    const auto letters = detail::letters_present(w);
    sliding_counts(w, n, letters, [&](std::size_t i, const std::vector<std::uint64_t>& counts) {
      if (seen.insert(counts_key(letters, counts)).second) result.last_new_position = i;
    });
  } else {
    for (std::size_t i = 0; i + n <= w.size(); ++i)
      if (seen.insert(rel.canonical_key(w.subspan(i, n))).second) result.last_new_position = i;
  }
  result.value = seen.size();
  return result;
}

WindowCount complexity(const InfiniteWord& gen, const Relation& rel, std::size_t n,
                       std::optional<std::size_t> window) {
  const Word w = gen.prefix(window.value_or(default_window(n)));
  return complexity(w, rel, n);
}

std::vector<WindowCount> complexity_profile(const InfiniteWord& gen, const Relation& rel, std::size_t first,
                                            std::size_t last, std::optional<std::size_t> window) {
  require_equivalence(rel);
  std::vector<WindowCount> out;
  if (first > last) return out;
  const Word w = gen.prefix(window.value_or(default_window(last)));
  for (std::size_t n = first; n <= last; ++n) out.push_back(complexity(w, rel, n));
  return out;
}

std::uint64_t growth(const Relation& rel, std::size_t alphabet_size, std::size_t n, std::uint64_t cap) {
  require_equivalence(rel);
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize) throw DomainError("alphabet size out of range");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / alphabet_size) throw CapExceeded("too many words to enumerate for growth");
    total *= alphabet_size;
  }
  std::unordered_set<Key, KeyHash> classes;
  std::vector<Letter> current(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    classes.insert(rel.canonical_key(current));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++current[pos] < alphabet_size) break;
      current[pos] = 0;
    }
  }
  return classes.size();
}

std::uint64_t balance_coefficient(WordView w, std::size_t n) {
  if (n == 0 || n > w.size()) return 0;
  const auto letters = detail::letters_present(w);
  std::vector<std::uint64_t> lo(letters.size(), UINT64_MAX), hi(letters.size(), 0);
  sliding_counts(w, n, letters, [&](std::size_t, const std::vector<std::uint64_t>& counts) {
    for (std::size_t c = 0; c < counts.size(); ++c) {
      lo[c] = std::min(lo[c], counts[c]);
      hi[c] = std::max(hi[c], counts[c]);
    }
  });
  std::uint64_t best = 0;
  for (std::size_t c = 0; c < letters.size(); ++c) best = std::max(best, hi[c] - lo[c]);
  return best;
}

std::uint64_t balance_coefficient(const InfiniteWord& gen, std::size_t n, std::optional<std::size_t> window) {
  return balance_coefficient(gen.prefix(window.value_or(default_window(n))), n);
}

// ---------------------------------------------------------------------------

OccurrenceSet occurrences(WordView w, const Relation& rel, const Word& u) {
  OccurrenceSet occ{u, w.size(), {}};
  const std::size_t m = u.size();
  if (m > w.size()) return occ;
  if (m == 0) {
    for (std::size_t i = 0; i <= w.size(); ++i) occ.positions.push_back(i);
    return occ;
  }
  if (is_abelian(rel)) {
    const auto letters = detail::letters_present(w);
    for (Letter a : u)
      if (!std::binary_search(letters.begin(), letters.end(), a)) return occ;
    const Key target = rel.canonical_key(u);
    sliding_counts(w, m, letters, [&](std::size_t i, const std::vector<std::uint64_t>& counts) {
      if (counts_key(letters, counts) == target) occ.positions.push_back(i);
    });
    return occ;
  }
  if (rel.is_equivalence()) {
    const Key target = rel.canonical_key(u);
    for (std::size_t i = 0; i + m <= w.size(); ++i)
      if (rel.canonical_key(w.subspan(i, m)) == target) occ.positions.push_back(i);
    return occ;
  }
  for (std::size_t i = 0; i + m <= w.size(); ++i)
    if (rel.equivalent(w.subspan(i, m), u)) occ.positions.push_back(i);
  return occ;
}

OccurrenceSet occurrences(const InfiniteWord& gen, const Relation& rel, const Word& u,
                          std::optional<std::size_t> window) {
  const Word w = gen.prefix(window.value_or(default_window(u.size())));
  return occurrences(w, rel, u);
}

std::size_t max_gap(const OccurrenceSet& occ) {
  if (occ.positions.size() < 2) throw DomainError("max_gap needs at least two occurrences");
  std::size_t gap = 0;
  for (std::size_t j = 1; j < occ.positions.size(); ++j)
    gap = std::max(gap, occ.positions[j] - occ.positions[j - 1]);
  return gap;
}

DerivedSequence derived_sequence(const OccurrenceSet& occ, WordView w) {
  const auto& pos = occ.positions;
  if (pos.size() < 2) throw DomainError("return words need at least two occurrences");
  if (pos.back() > w.size()) throw DomainError("occurrences lie outside the word");
  DerivedSequence out;
  out.start = pos.front();
  std::map<Word, std::size_t> number;
  for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
    Word block(w.subspan(pos[j], pos[j + 1] - pos[j]));
    auto [it, inserted] = number.emplace(block, out.dictionary.size() + 1);
    if (inserted) out.dictionary.push_back(std::move(block));
    out.code.push_back(it->second);
  }
  return out;
}

DerivedSequence derived_sequence(const InfiniteWord& gen, const Relation& rel, const Word& u,
                                 std::optional<std::size_t> window) {
  const Word w = gen.prefix(window.value_or(default_window(u.size())));
  return derived_sequence(occurrences(w, rel, u), w);
}

std::set<Word, ShortLex> return_words(const OccurrenceSet& occ, WordView w) {
  const auto derived = derived_sequence(occ, w);
  return {derived.dictionary.begin(), derived.dictionary.end()};
}

std::set<Word, ShortLex> return_words(const InfiniteWord& gen, const Relation& rel, const Word& u,
                                      std::optional<std::size_t> window) {
  const Word w = gen.prefix(window.value_or(default_window(u.size())));
  return return_words(occurrences(w, rel, u), w);
}

// ---------------------------------------------------------------------------

namespace {

bool pairwise_related(const Relation& rel, const std::vector<Word>& blocks) {
  if (rel.is_equivalence()) {
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (!rel.equivalent(blocks[0], blocks[i])) return false;
    return true;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!rel.equivalent(blocks[i], blocks[j])) return false;
  return true;
}

bool related_to_all(const Relation& rel, WordView v, const std::vector<Word>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(), [&](const Word& b) { return rel.equivalent(v, b); });
}

bool has_common_witness(const Relation& rel, const std::vector<Word>& blocks, std::size_t alphabet_size,
                        std::size_t l, std::uint64_t witness_cap) {
  if (rel.is_equivalence()) return pairwise_related(rel, blocks);
  for (const Word& v : blocks)
    if (related_to_all(rel, v, blocks)) return true;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (total > witness_cap / alphabet_size) return false;
    total *= alphabet_size;
  }
  std::vector<Letter> v(l, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (related_to_all(rel, v, blocks)) return true;
    for (std::size_t pos = l; pos-- > 0;) {
      if (++v[pos] < alphabet_size) break;
      v[pos] = 0;
    }
  }
  return false;
}

}  // namespace

bool detect_period(WordView w, std::size_t alphabet_size, const Relation& rel, std::size_t p, std::size_t l,
                   PeriodMode mode, std::uint64_t witness_cap) {
  if (p < 1 || l < 1) throw DomainError("period parameters must be at least 1");
  const std::size_t m = w.size() / l;
  auto block = [&](std::size_t i) { return w.subspan(i * l, l); };

  if (mode == PeriodMode::Local) {
    for (std::size_t i = 0; i + p < m; ++i)
      if (!rel.equivalent(block(i), block(i + p))) return false;
    return true;
  }
  for (std::size_t r = 0; r < p && r < m; ++r) {
    std::set<Word> distinct;
    for (std::size_t i = r; i < m; i += p) distinct.emplace(block(i));
    const std::vector<Word> blocks(distinct.begin(), distinct.end());
    const bool ok = mode == PeriodMode::Global ? pairwise_related(rel, blocks)
                                               : has_common_witness(rel, blocks, alphabet_size, l, witness_cap);
    if (!ok) return false;
  }
  return true;
}

bool detect_period(const InfiniteWord& gen, const Relation& rel, std::size_t p, std::size_t l, PeriodMode mode,
                   std::optional<std::size_t> window) {
  const Word w = gen.prefix(window.value_or(default_window(p * l)));
  return detect_period(w, gen.alphabet_size(), rel, p, l, mode);
}

bool period_upgrade_check(const Relation& rel, WordView w, std::size_t alphabet_size, std::size_t p,
                          std::size_t l, PeriodMode mode) {
  if (!rel.is_congruence()) throw DomainError("period upgrade needs a congruence, got " + rel.name());
  if (!detect_period(w, alphabet_size, rel, p, l, mode)) return true;
  return detect_period(w, alphabet_size, rel, 1, p * l, mode);
}

// ---------------------------------------------------------------------------

MorseHedlundVerdict morse_hedlund_scan(WordView w, std::size_t max_n) {
  MorseHedlundVerdict verdict;
  const auto eq = Relation::equality();
  for (std::size_t n = 0; n <= max_n && n <= w.size(); ++n) {
    verdict.complexities.push_back(complexity(w, eq, n).value);
    if (n > 0 && verdict.complexities[n] == verdict.complexities[n - 1]) {
      verdict.bounded = true;
      verdict.plateau = n - 1;
      break;
    }
  }
  if (!verdict.bounded) return verdict;

  // Smallest q such that w_i = w_{i+q} on a tail covering half the window and two periods.
  const std::size_t N = w.size();
  for (std::size_t q = 1; 2 * q <= N; ++q) {
    std::size_t start = 0;
    for (std::size_t i = N - q; i-- > 0;) {
      if (w[i] != w[i + q]) {
        start = i + 1;
        break;
      }
    }
    const std::size_t tail = N - start;
    if (2 * tail >= N && tail >= 2 * q) {
      verdict.preperiod = start;
      verdict.period = q;
      break;
    }
  }
  return verdict;
}

MorseHedlundVerdict morse_hedlund_scan(const InfiniteWord& gen, std::size_t window,
                                       std::optional<std::size_t> max_n) {
  const auto n = max_n.value_or(static_cast<std::size_t>(std::sqrt(static_cast<double>(window))));
  return morse_hedlund_scan(gen.prefix(window), n);
}

}  // namespace wordrel
