#include "wordrel/binomial.hpp"

#include "subword_dfs.hpp"
#include "wordrel/error.hpp"
#include "wordrel/relation.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>
#include <unordered_set>

namespace wordrel {

BigInt binom(WordView w, WordView x) {
  if (x.size() > w.size()) return 0;
  // dp[j] = binom(w_1..w_i, x_1..x_j), updated right to left per letter of w.
  std::vector<BigInt> dp(x.size() + 1, BigInt(0));
  dp[0] = 1;
  for (Letter c : w) {
    for (std::size_t j = x.size(); j > 0; --j) {
      if (x[j - 1] == c) dp[j] += dp[j - 1];
    }
  }
  return dp[x.size()];
}

std::uint64_t factor_count(WordView w, WordView x) {
  if (x.empty()) throw DomainError("factor_count needs a non-empty factor");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + x.size() <= w.size(); ++i) {
    if (std::equal(x.begin(), x.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  }
  return count;
}

std::uint64_t position_sum(WordView w, Letter a) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == a) sum += i + 1;
  return sum;
}

void for_each_subword(WordView w, std::size_t k,
                      const std::function<void(WordView, const BigInt&)>& visit) {
  detail::subword_dfs<BigInt>(w, k, visit);
}

// ---------------------------------------------------------------------------

BigInt Spectrum::coefficient(WordView x) const {
  if (x.size() > degree_) throw DomainError("word longer than the spectrum degree");
  auto it = terms_.find(x);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Spectrum::Terms Spectrum::terms_of_length(std::size_t length) const {
  Terms out;
  for (const auto& [x, c] : terms_)
    if (x.size() == length) out.emplace(x, c);
  return out;
}

std::string Spectrum::to_text(const Alphabet& alphabet) const {
  std::string out;
  for (const auto& [x, c] : terms_) {
    out += alphabet.render(x);
    out += ':';
    out += c.str();
    out += '\n';
  }
  return out;
}

Spectrum spectrum(WordView w, std::size_t k) {
  Spectrum::Terms terms;
  detail::subword_dfs<BigInt>(w, k, [&](WordView x, const BigInt& c) { terms.emplace(Word(x), c); });
  return Spectrum(k, std::move(terms));
}

namespace {

void require_binary(WordView w) {
  for (Letter a : w)
    if (a > 1) throw DomainError("binary alphabet required");
}

}  // namespace

std::vector<BigInt> spectrum_poly_encode(WordView w, std::size_t k) {
  require_binary(w);
  if (k > 24) throw CapExceeded("polynomial encoding limited to degree 24");
  std::vector<BigInt> coeffs(std::size_t{1} << (k + 1), BigInt(0));
  detail::subword_dfs<BigInt>(w, k, [&](WordView x, const BigInt& c) {
    std::size_t index = 0;
    if (!x.empty()) {
      index = 1;
      for (Letter a : x) index = 2 * index + a;
    }
    coeffs[index] = c;
  });
  return coeffs;
}

// ---------------------------------------------------------------------------

std::size_t CountingAutomaton::transition_count() const noexcept {
  std::size_t total = 0;
  for (const auto& t : transitions_) total += t.size();
  return total;
}

CountingAutomaton build_counting_automaton(WordView w, std::size_t k) {
  if (k < 1) throw DomainError("counting automaton needs degree >= 1");
  const std::size_t n = w.size();
  CountingAutomaton automaton;
  automaton.degree_ = k;
  automaton.transitions_.resize((n + 1) * (k + 1));
  auto state = [k](std::size_t position, std::size_t consumed) { return position * (k + 1) + consumed; };
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // (0, 0) is initial; elsewhere at least one letter was consumed at position i >= 1.
      if ((i == 0) != (j == 0) || j > i) continue;
      auto& out = automaton.transitions_[state(i, j)];
      for (std::size_t next = i + 1; next <= n; ++next)
        out.push_back({w[next - 1], state(next, j + 1)});
    }
  }
  return automaton;
}

BigInt CountingAutomaton::count_paths(WordView x) const {
  if (x.size() > degree_) return 0;
  std::vector<BigInt> weight(transitions_.size(), BigInt(0));
  weight[initial_state()] = 1;
  for (Letter a : x) {
    std::vector<BigInt> next(transitions_.size(), BigInt(0));
    for (std::size_t s = 0; s < transitions_.size(); ++s) {
      if (weight[s] == 0) continue;
      for (const auto& t : transitions_[s])
        if (t.letter == a) next[t.target] += weight[s];
    }
    weight = std::move(next);
  }
  BigInt total = 0;
  for (const auto& v : weight) total += v;
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct Mod64 {
  std::uint64_t p;
  std::uint64_t reduce(const BigInt& x) const { return static_cast<std::uint64_t>(x % p); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto s = static_cast<unsigned __int128>(a) + b;
    return static_cast<std::uint64_t>(s % p);
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  BigInt lift(std::uint64_t a) const { return BigInt(a); }
};

struct ModBig {
  BigInt p;
  BigInt reduce(const BigInt& x) const { return x % p; }
  BigInt add(const BigInt& a, const BigInt& b) const { return (a + b) % p; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return (a * b) % p; }
  BigInt lift(const BigInt& a) const { return a; }
};

template <class Field, class Elem>
Elem pow_small(const Field& f, Elem base, std::uint64_t e) {
  Elem result = f.reduce(1);
  while (e > 0) {
    if (e & 1) result = f.mul(result, base);
    base = f.mul(base, base);
    e >>= 1;
  }
  return result;
}

template <class Field>
BigInt eval_encoded(const Field& f, WordView w, std::size_t k, std::size_t base, const BigInt& point) {
  using Elem = decltype(f.reduce(point));
  const Elem r = f.reduce(point);
  // radix[m] = r^(base^m); the letter c at weight base^m contributes radix[m]^c.
  std::vector<Elem> radix(k + 1);
  radix[0] = r;
  for (std::size_t m = 1; m <= k; ++m) radix[m] = pow_small(f, radix[m - 1], base);

  Elem total = f.reduce(1);  // epsilon sits at exponent 0
  for (std::size_t len = 1; len <= k && len <= w.size(); ++len) {
    // weight[j][c] = r^(c · base^(len - j)) for the j-th letter (1-based) of a length-len subword.
    std::vector<std::vector<Elem>> weight(len + 1, std::vector<Elem>(base));
    for (std::size_t j = 1; j <= len; ++j)
      for (std::size_t c = 0; c < base; ++c) weight[j][c] = pow_small(f, radix[len - j], c);
    std::vector<Elem> sums(len + 1, f.reduce(0));
    sums[0] = f.reduce(1);
    for (Letter c : w) {
      for (std::size_t j = len; j > 0; --j) sums[j] = f.add(sums[j], f.mul(sums[j - 1], weight[j][c]));
    }
    total = f.add(total, f.mul(sums[len], radix[len]));  // leading digit 1 at base^len
  }
  return f.lift(total);
}

std::size_t encoding_base(std::size_t alphabet_size) { return std::max<std::size_t>(alphabet_size, 2); }

void require_alphabet(WordView w, std::size_t alphabet_size) {
  for (Letter a : w)
    if (a >= alphabet_size) throw DomainError("letter outside the declared alphabet");
}

bool is_probable_prime(const BigInt& n) {
  std::mt19937 gen(12345);
  return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

}  // namespace

BigInt spectrum_poly_eval(WordView w, std::size_t k, std::size_t alphabet_size, const BigInt& point,
                          const BigInt& prime) {
  require_alphabet(w, alphabet_size);
  const std::size_t base = encoding_base(alphabet_size);
  if (prime < (BigInt(1) << 62)) return eval_encoded(Mod64{static_cast<std::uint64_t>(prime)}, w, k, base, point);
  return eval_encoded(ModBig{prime}, w, k, base, point);
}

BigInt spectrum_field_prime(std::size_t n, std::size_t k, std::size_t alphabet_size) {
  const std::size_t base = encoding_base(alphabet_size);
  const BigInt exponents = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(k + 1));
  const BigInt coefficient_bound =
      boost::multiprecision::pow(BigInt(std::max<std::size_t>(n, 1)), static_cast<unsigned>(k)) + 1;
  BigInt candidate = 2 * exponents * coefficient_bound + 1;
  while (!is_probable_prime(candidate)) ++candidate;
  return candidate;
}

bool randomized_spectrum_equiv(WordView u, WordView v, std::size_t k, std::size_t alphabet_size,
                               std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("randomized test needs at least one trial");
  require_alphabet(u, alphabet_size);
  require_alphabet(v, alphabet_size);
  const BigInt prime = spectrum_field_prime(std::max(u.size(), v.size()), k, alphabet_size);
  std::mt19937_64 rng(seed);
  auto random_point = [&] {
    BigInt x = 0;
    for (std::size_t bits = 0; bits < boost::multiprecision::msb(prime) + 64; bits += 64) {
      x <<= 64;
      x += rng();
    }
    return BigInt(x % prime);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const BigInt point = random_point();
    if (spectrum_poly_eval(u, k, alphabet_size, point, prime) !=
        spectrum_poly_eval(v, k, alphabet_size, point, prime))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::size_t reconstruction_min_k(std::size_t n, std::size_t alphabet_size, std::uint64_t cap) {
  if (alphabet_size < 1) throw DomainError("alphabet must be non-empty");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / alphabet_size) throw CapExceeded("too many words to enumerate");
    total *= alphabet_size;
  }
  if (total > cap) throw CapExceeded("too many words to enumerate");

  std::vector<Word> words;
  words.reserve(total);
  std::vector<Letter> current(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    words.emplace_back(current);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++current[pos] < alphabet_size) break;
      current[pos] = 0;
    }
  }

  if (total == 1) return 0;
  for (std::size_t k = 1;; ++k) {
    const auto rel = Relation::k_binomial(k);
    std::unordered_set<Key, KeyHash> seen;
    bool injective = true;
    for (const auto& w : words) {
      if (!seen.insert(rel.canonical_key(w)).second) {
        injective = false;
        break;
      }
    }
    if (injective) return k;
  }
}

}  // namespace wordrel
