#include "wordrel/avoidance.hpp"

#include "wordrel/error.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <string_view>
#include <unordered_set>

namespace wordrel {

Pattern::Pattern(std::vector<std::size_t> symbols, std::vector<std::string> names) {
  if (symbols.empty()) throw DomainError("a pattern needs at least one variable");
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t s : symbols) {
    auto [it, inserted] = renumber.emplace(s, renumber.size());
    symbols_.push_back(it->second);
  }
  if (names.empty()) {
    static const std::string defaults = "XYZUVWABCDEFGHIJKLMNOPQRST";
    for (std::size_t v = 0; v < renumber.size(); ++v)
      names.push_back(v < defaults.size() ? std::string(1, defaults[v]) : "V" + std::to_string(v));
  }
  if (names.size() != renumber.size()) throw DomainError("pattern variable names do not match the variables");
  names_ = std::move(names);
}

Pattern Pattern::parse(std::string_view text) {
  const auto points = split_code_points(text);
  if (points.empty()) throw ParseError("empty pattern", 1);
  std::vector<std::string> names;
  std::vector<std::size_t> symbols;
  for (const auto& cp : points) {
    auto it = std::find(names.begin(), names.end(), cp);
    symbols.push_back(static_cast<std::size_t>(it - names.begin()));
    if (it == names.end()) names.push_back(cp);
  }
  return Pattern(std::move(symbols), std::move(names));
}

Pattern Pattern::power(std::size_t n) {
  if (n < 1) throw DomainError("power pattern needs exponent >= 1");
  return Pattern(std::vector<std::size_t>(n, 0));
}

std::string Pattern::to_string() const {
  std::string out;
  for (std::size_t s : symbols_) out += names_[s];
  return out;
}

std::optional<Pattern::Periodic> Pattern::periodic_form() const {
  const std::size_t m = symbols_.size();
  for (std::size_t q = 1; q < m; ++q) {
    bool periodic = true;
    for (std::size_t i = 0; i + q < m && periodic; ++i) periodic = symbols_[i] == symbols_[i + q];
    if (!periodic) continue;
    // Variables are numbered by first appearance, so Q is distinct iff it reads 0..q-1.
    for (std::size_t i = 0; i < q; ++i)
      if (symbols_[i] != i) return std::nullopt;
    return Periodic{q, m / q, m % q};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool forced_lengths(const Relation& rel) { return rel.is_length_preserving() || rel.is_length_restricted(); }

// Decides rel on pairs of factors of a growing word, using prefix letter and letter-pair
// counts where those determine the relation.
class BlockOracle {
 public:
  BlockOracle(const Relation& rel, std::size_t alphabet_size) : rel_(rel), k_(alphabet_size) {
    switch (rel.kind()) {
      case RelationKind::Abelian: mode_ = Mode::Counts; break;
      case RelationKind::LAbelian: mode_ = rel.parameter() == 1 ? Mode::Counts : Mode::Generic; break;
      case RelationKind::KBinomial:
        mode_ = rel.parameter() == 1 ? Mode::Counts : rel.parameter() == 2 ? Mode::Pairs : Mode::Generic;
        break;
      case RelationKind::Equality: mode_ = Mode::Letters; break;
      default: mode_ = Mode::Generic;
    }
    counts_.assign(k_, 0);
    if (mode_ == Mode::Pairs) pairs_.assign(k_ * k_, 0);
  }

  static BlockOracle over(const Relation& rel, WordView w, std::size_t alphabet_size = 0) {
    std::size_t k = std::max<std::size_t>(alphabet_size, 1);
    for (Letter a : w) k = std::max<std::size_t>(k, a + 1);
    BlockOracle oracle(rel, k);
    for (Letter a : w) oracle.push(a);
    return oracle;
  }

  std::size_t size() const noexcept { return w_.size(); }
  WordView word() const noexcept { return w_; }

  void push(Letter a) {
    if (a >= k_) throw DomainError("letter outside the search alphabet");
    const std::size_t n = w_.size();
    w_.push_back(a);
    if (mode_ == Mode::Counts || mode_ == Mode::Pairs) {
      counts_.insert(counts_.end(), counts_.begin() + static_cast<std::ptrdiff_t>(n * k_),
                     counts_.begin() + static_cast<std::ptrdiff_t>((n + 1) * k_));
      if (mode_ == Mode::Pairs) {
        pairs_.insert(pairs_.end(), pairs_.begin() + static_cast<std::ptrdiff_t>(n * k_ * k_),
                      pairs_.begin() + static_cast<std::ptrdiff_t>((n + 1) * k_ * k_));
        for (std::size_t x = 0; x < k_; ++x) pairs_[(n + 1) * k_ * k_ + x * k_ + a] += counts_[n * k_ + x];
      }
      ++counts_[(n + 1) * k_ + a];
    }
  }

  void pop() {
    w_.pop_back();
    if (mode_ == Mode::Counts || mode_ == Mode::Pairs) counts_.resize(counts_.size() - k_);
    if (mode_ == Mode::Pairs) pairs_.resize(pairs_.size() - k_ * k_);
  }

  bool related(std::size_t s1, std::size_t l1, std::size_t s2, std::size_t l2) const {
    if (l1 != l2 && forced_lengths(rel_)) return false;
    switch (mode_) {
      case Mode::Letters: return std::memcmp(w_.data() + s1, w_.data() + s2, l1) == 0;
      case Mode::Counts: return same_counts(s1, s2, l1);
      case Mode::Pairs: return same_counts(s1, s2, l1) && same_pairs(s1, s2, l1);
      case Mode::Generic: break;
    }
    const WordView w(w_);
    return rel_.equivalent(w.subspan(s1, l1), w.subspan(s2, l2));
  }

 private:
  enum class Mode { Letters, Counts, Pairs, Generic };

  std::uint64_t count(std::size_t pos, std::size_t a) const { return counts_[pos * k_ + a]; }

  bool same_counts(std::size_t s1, std::size_t s2, std::size_t len) const {
    for (std::size_t a = 0; a < k_; ++a)
      if (count(s1 + len, a) - count(s1, a) != count(s2 + len, a) - count(s2, a)) return false;
    return true;
  }

  // binom(w[i, j), xy) = P_xy(j) - P_xy(i) - C_x(i) (C_y(j) - C_y(i)); exact modulo 2^64.
  std::uint64_t pair_count(std::size_t i, std::size_t j, std::size_t x, std::size_t y) const {
    return pairs_[j * k_ * k_ + x * k_ + y] - pairs_[i * k_ * k_ + x * k_ + y] -
           count(i, x) * (count(j, y) - count(i, y));
  }

  bool same_pairs(std::size_t s1, std::size_t s2, std::size_t len) const {
    for (std::size_t x = 0; x < k_; ++x)
      for (std::size_t y = 0; y < k_; ++y)
        if (pair_count(s1, s1 + len, x, y) != pair_count(s2, s2 + len, x, y)) return false;
    return true;
  }

  const Relation& rel_;
  std::size_t k_;
  Mode mode_ = Mode::Generic;
  std::vector<Letter> w_;
  std::vector<std::uint64_t> counts_;  // row i: letter counts of the length-i prefix
  std::vector<std::uint64_t> pairs_;   // row i: letter-pair subword counts of the length-i prefix
};

// Backtracking over block boundaries for occurrences starting at a fixed position.
class Matcher {
 public:
  Matcher(const Pattern& p, const BlockOracle& oracle, const Relation& rel)
      : p_(p),
        oracle_(oracle),
        transitive_(rel.is_equivalence()),
        forced_(forced_lengths(rel)),
        starts_(p.size()),
        lengths_(p.size()),
        first_block_(p.variable_count(), kNone) {}

  // Calls on_match for each occurrence starting at `start` (ending at `end` when given),
  // in lexicographic order of block lengths, until on_match returns true.
  template <class OnMatch>
  bool run(std::size_t start, std::optional<std::size_t> end, OnMatch&& on_match) {
    end_ = end;
    std::fill(first_block_.begin(), first_block_.end(), kNone);
    return dfs(0, start, on_match);
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;

  template <class OnMatch>
  bool dfs(std::size_t j, std::size_t pos, OnMatch& on_match) {
    const std::size_t m = p_.size();
    if (j == m) {
      if (end_ && pos != *end_) return false;
      PatternMatch match{starts_[0], pos - starts_[0], starts_, lengths_};
      return on_match(match);
    }
    const std::size_t limit_end = end_ ? *end_ : oracle_.size();
    if (pos + (m - j) > limit_end) return false;
    const std::size_t max_len = limit_end - pos - (m - j - 1);
    const std::size_t v = p_[j];
    const bool seen = first_block_[v] != kNone;

    std::size_t lo = 1, hi = max_len;
    if (seen && forced_) lo = hi = lengths_[first_block_[v]];
    if (end_ && j + 1 == m) lo = std::max(lo, max_len);
    for (std::size_t len = lo; len <= hi && len <= max_len; ++len) {
      if (!fits(j, pos, len)) continue;
      starts_[j] = pos;
      lengths_[j] = len;
      if (!seen) first_block_[v] = j;
      if (dfs(j + 1, pos + len, on_match)) return true;
      if (!seen) first_block_[v] = kNone;
    }
    return false;
  }

  bool fits(std::size_t j, std::size_t pos, std::size_t len) const {
    const std::size_t v = p_[j];
    if (first_block_[v] == kNone) return true;
    if (transitive_) {
      const std::size_t f = first_block_[v];
      return oracle_.related(starts_[f], lengths_[f], pos, len);
    }
    for (std::size_t i = first_block_[v]; i < j; ++i)
      if (p_[i] == v && !oracle_.related(starts_[i], lengths_[i], pos, len)) return false;
    return true;
  }

  const Pattern& p_;
  const BlockOracle& oracle_;
  bool transitive_;
  bool forced_;
  std::optional<std::size_t> end_;
  std::vector<std::size_t> starts_;
  std::vector<std::size_t> lengths_;
  std::vector<std::size_t> first_block_;
};

// Blocks of one variable repeated n times, all of length len, starting at s.
bool power_blocks_related(const BlockOracle& oracle, bool transitive, std::size_t s, std::size_t len,
                          std::size_t n) {
  for (std::size_t j = 1; j < n; ++j) {
    if (transitive) {
      if (!oracle.related(s, len, s + j * len, len)) return false;
    } else {
      for (std::size_t i = 0; i < j; ++i)
        if (!oracle.related(s + i * len, len, s + j * len, len)) return false;
    }
  }
  return true;
}

PatternMatch periodic_match(const Pattern& p, const Pattern::Periodic& form, std::size_t start, std::size_t L) {
  // Lexicographically smallest variable lengths (1, ..., 1, L - q + 1).
  std::vector<std::size_t> var_len(form.root, 1);
  var_len.back() = L - form.root + 1;
  PatternMatch match;
  match.position = start;
  std::size_t pos = start;
  for (std::size_t j = 0; j < p.size(); ++j) {
    match.block_starts.push_back(pos);
    match.block_lengths.push_back(var_len[p[j]]);
    pos += var_len[p[j]];
  }
  match.length = pos - start;
  return match;
}

// run[i] = number of consecutive t >= i with w_t = w_{t+L}.
std::vector<std::size_t> period_runs(WordView w, std::size_t L) {
  const std::size_t N = w.size();
  std::vector<std::size_t> run(N + 1, 0);
  for (std::size_t i = N - L; i-- > 0;) run[i] = w[i] == w[i + L] ? run[i + 1] + 1 : 0;
  return run;
}

// Equality with P = Q^e Q': an occurrence with |h(Q)| = L is a factor of period L and
// length e·L + r, r in [t, L - q + t] (r = 0 when t = 0).
std::optional<PatternMatch> find_periodic_equal(WordView w, const Pattern& p, const Pattern::Periodic& form) {
  const std::size_t N = w.size();
  const std::size_t q = form.root, e = form.exponent, t = form.tail;
  std::optional<std::pair<std::size_t, std::size_t>> best;  // (start, L)
  for (std::size_t L = q; e * L + t <= N; ++L) {
    const std::size_t need = (e - 1) * L + t;
    std::size_t streak = 0;
    for (std::size_t i = 0; i + L < N; ++i) {
      if (best && i >= best->first + need) break;
      streak = w[i] == w[i + L] ? streak + 1 : 0;
      if (streak == need) {
        const std::size_t start = i + 1 - need;
        if (!best || start < best->first) best = {start, L};
        break;
      }
    }
  }
  if (!best) return std::nullopt;
  return periodic_match(p, form, best->first, best->second);
}

bool suffix_occurrence(const BlockOracle& oracle, const Pattern& p, const Relation& rel) {
  const std::size_t N = oracle.size();
  if (p.variable_count() == 1 && forced_lengths(rel)) {
    const std::size_t n = p.size();
    for (std::size_t L = 1; n * L <= N; ++L)
      if (power_blocks_related(oracle, rel.is_equivalence(), N - n * L, L, n)) return true;
    return false;
  }
  Matcher matcher(p, oracle, rel);
  for (std::size_t start = 0; start + p.size() <= N; ++start)
    if (matcher.run(start, N, [](const PatternMatch&) { return true; })) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<PatternMatch> find_pattern(WordView w, const Pattern& p, const Relation& rel) {
  if (rel.kind() == RelationKind::Equality)
    if (auto form = p.periodic_form()) return find_periodic_equal(w, p, *form);
  const auto oracle = BlockOracle::over(rel, w);
  Matcher matcher(p, oracle, rel);
  std::optional<PatternMatch> found;
  for (std::size_t start = 0; start + p.size() <= w.size() && !found; ++start)
    matcher.run(start, std::nullopt, [&](const PatternMatch& m) {
      found = m;
      return true;
    });
  return found;
}

bool is_P_free(WordView w, const Pattern& p, const Relation& rel) { return !find_pattern(w, p, rel); }

std::vector<PatternMatch> find_powers(WordView w, std::size_t n, const Relation& rel) {
  if (n < 2) throw DomainError("powers need exponent >= 2");
  const auto p = Pattern::power(n);
  const std::size_t N = w.size();
  std::vector<PatternMatch> out;
  auto emit = [&](std::size_t start, std::size_t L) {
    PatternMatch m{start, n * L, {}, std::vector<std::size_t>(n, L)};
    for (std::size_t j = 0; j < n; ++j) m.block_starts.push_back(start + j * L);
    out.push_back(std::move(m));
  };

  if (rel.kind() == RelationKind::Equality) {
    for (std::size_t L = 1; n * L <= N; ++L) {
      const auto run = period_runs(w, L);
      for (std::size_t i = 0; i + n * L <= N; ++i)
        if (run[i] >= (n - 1) * L) emit(i, L);
    }
  } else {
    const auto oracle = BlockOracle::over(rel, w);
    if (forced_lengths(rel)) {
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t L = 1; i + n * L <= N; ++L)
          if (power_blocks_related(oracle, rel.is_equivalence(), i, L, n)) emit(i, L);
    } else {
      Matcher matcher(p, oracle, rel);
      for (std::size_t i = 0; i + n <= N; ++i)
        matcher.run(i, std::nullopt, [&](const PatternMatch& m) {
          out.push_back(m);
          return false;
        });
    }
  }
  std::sort(out.begin(), out.end(), [](const PatternMatch& a, const PatternMatch& b) {
    return std::tie(a.position, a.block_lengths) < std::tie(b.position, b.block_lengths);
  });
  return out;
}

bool is_strong_power(WordView u, std::size_t n, const Relation& rel, std::size_t alphabet_size,
                     std::uint64_t cap) {
  if (n < 1) throw DomainError("strong powers need exponent >= 1");
  if (!rel.is_equivalence() || !rel.is_length_preserving())
    throw DomainError("strong power search needs a length-preserving equivalence");
  if (u.size() % n != 0) return false;
  const std::size_t m = u.size() / n;
  if (rel.kind() == RelationKind::Equality) {
    for (std::size_t i = m; i < u.size(); ++i)
      if (u[i] != u[i - m]) return false;
    return true;
  }
  if (rel.kind() == RelationKind::Abelian || (rel.kind() == RelationKind::LAbelian && rel.parameter() == 1)) {
    std::array<std::size_t, kMaxAlphabetSize> counts{};
    for (Letter a : u) ++counts[a];
    return std::all_of(counts.begin(), counts.end(), [n](std::size_t c) { return c % n == 0; });
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > cap / alphabet_size) throw CapExceeded("too many candidate roots");
    total *= alphabet_size;
  }
  const Key target = rel.canonical_key(u);
  std::vector<Letter> v(m, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (rel.canonical_key(power(v, n)) == target) return true;
    for (std::size_t pos = m; pos-- > 0;) {
      if (++v[pos] < alphabet_size) break;
      v[pos] = 0;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

AvoidanceSearch longest_avoiding(std::size_t alphabet_size, const Pattern& p, const Relation& rel, std::size_t cap,
                                 std::uint64_t node_budget) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize) throw DomainError("alphabet size out of range");
  AvoidanceSearch result;
  BlockOracle oracle(rel, alphabet_size);
  bool reached = false;
  auto dfs = [&](auto&& self) -> void {
    if (++result.nodes > node_budget) throw CapExceeded("avoidance search exceeded its node budget");
    const std::size_t n = oracle.size();
    if (n > result.max_length || result.nodes == 1) {
      result.max_length = n;
      result.witness = Word(oracle.word());
    }
    if (n == cap) {
      reached = true;
      return;
    }
    for (std::size_t a = 0; a < alphabet_size && !reached; ++a) {
      oracle.push(static_cast<Letter>(a));
      if (!suffix_occurrence(oracle, p, rel)) self(self);
      oracle.pop();
    }
  };
  dfs(dfs);
  result.exhausted = !reached;
  return result;
}

std::uint64_t count_P_free(std::size_t alphabet_size, const Pattern& p, const Relation& rel, std::size_t n,
                           std::uint64_t node_budget) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize) throw DomainError("alphabet size out of range");
  BlockOracle oracle(rel, alphabet_size);
  std::uint64_t nodes = 0, count = 0;
  auto dfs = [&](auto&& self) -> void {
    if (++nodes > node_budget) throw CapExceeded("P-free count exceeded its node budget");
    if (oracle.size() == n) {
      ++count;
      return;
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      oracle.push(static_cast<Letter>(a));
      if (!suffix_occurrence(oracle, p, rel)) self(self);
      oracle.pop();
    }
  };
  dfs(dfs);
  return count;
}

// ---------------------------------------------------------------------------

std::set<Word, ShortLex> bounded_pattern_census(WordView w, const Pattern& p, const Relation& rel) {
  const std::size_t N = w.size();
  std::unordered_set<std::string_view> distinct;
  auto add = [&](std::size_t start, std::size_t len) {
    distinct.emplace(reinterpret_cast<const char*>(w.data()) + start, len);
  };

  const auto form = p.periodic_form();
  if (rel.kind() == RelationKind::Equality && form) {
    const std::size_t q = form->root, e = form->exponent, t = form->tail;
    for (std::size_t L = q; e * L + t <= N; ++L) {
      const auto run = period_runs(w, L);
      const std::size_t r_lo = t, r_hi = t == 0 ? 0 : L - q + t;
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t r = r_lo; r <= r_hi && (e - 1) * L + r <= run[i]; ++r) add(i, e * L + r);
    }
  } else {
    const auto oracle = BlockOracle::over(rel, w);
    Matcher matcher(p, oracle, rel);
    for (std::size_t i = 0; i + p.size() <= N; ++i)
      matcher.run(i, std::nullopt, [&](const PatternMatch& m) {
        add(m.position, m.length);
        return false;
      });
  }

  std::set<Word, ShortLex> factors;
  for (auto sv : distinct) factors.emplace(WordView(reinterpret_cast<const Letter*>(sv.data()), sv.size()));
  if (!rel.is_equivalence() || rel.kind() == RelationKind::Equality) return factors;
  std::set<Word, ShortLex> representatives;
  std::unordered_set<Key, KeyHash> classes;
  for (const auto& x : factors)
    if (classes.insert(rel.canonical_key(x)).second) representatives.insert(x);
  return representatives;
}

std::set<Word, ShortLex> bounded_pattern_census(const InfiniteWord& gen, const Pattern& p, const Relation& rel,
                                                std::size_t window) {
  return bounded_pattern_census(gen.prefix(window), p, rel);
}

FreenessCheck morphism_freeness_check(const Morphism& f, const Pattern& p, const Relation& rel,
                                      std::size_t bound) {
  FreenessCheck check;
  const std::size_t k = f.domain_size();
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0;; ++len) {
    for (const Word& u : level) {
      ++check.tested;
      if (!is_P_free(f.apply(u), p, rel)) {
        check.passed = false;
        check.counterexample = u;
        return check;
      }
    }
    if (len == bound) break;
    std::vector<Word> next;
    for (const Word& u : level) {
      for (std::size_t a = 0; a < k; ++a) {
        auto oracle = BlockOracle::over(rel, u, k);
        oracle.push(static_cast<Letter>(a));
        if (!suffix_occurrence(oracle, p, rel)) next.push_back(Word(oracle.word()));
      }
    }
    level = std::move(next);
  }
  return check;
}

}  // namespace wordrel
