#include "oracle.hpp"
#include "support.hpp"

#include "wordrel/binomial.hpp"
#include "wordrel/error.hpp"

#include <doctest.h>

#include <random>

using namespace wordrel;
using testing_support::S;
using testing_support::W;

TEST_CASE("binomial coefficients from the paper") {
  CHECK(binom(W("aabbab"), W("ab")) == 7);
  CHECK(binom(W("ababbba"), W("aab")) == 3);
  CHECK(binom(W("abbabab"), W("aab")) == 4);
  CHECK(binom(W("abc"), Word{}) == 1);
  CHECK(binom(W("ab"), W("abc")) == 0);
}

TEST_CASE("binom agrees with subsequence enumeration") {
  for (std::size_t n = 0; n <= 10; ++n)
    for (const auto& w : oracle::words("ab", n))
      for (const auto& x : oracle::words_up_to("ab", 4)) REQUIRE(binom(W(w), W(x)) == oracle::binom(w, x));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::string w, x;
    for (int i = 0; i < 12; ++i) w += static_cast<char>('a' + rng() % 3);
    for (std::size_t i = 0, m = rng() % 5; i < m; ++i) x += static_cast<char>('a' + rng() % 3);
    CHECK(binom(W(w), W(x)) == oracle::binom(w, x));
  }
}

TEST_CASE("binom of a^n against a^k is the ordinary binomial coefficient") {
  for (std::uint64_t n = 0; n <= 40; ++n)
    for (std::uint64_t k = 0; k <= n + 1; ++k)
      CHECK(binom(Word(std::vector<Letter>(n, 0)), Word(std::vector<Letter>(k, 0))) == choose(n, k));
  CHECK(choose(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("convolution identity over concatenations") {
  for (const auto& s : oracle::words_up_to("ab", 4))
    for (const auto& w : oracle::words_up_to("ab", 4))
      for (const auto& t : oracle::words_up_to("ab", 3)) {
        BigInt sum = 0;
        for (std::size_t cut = 0; cut <= t.size(); ++cut)
          sum += binom(W(s), W(t.substr(0, cut))) * binom(W(w), W(t.substr(cut)));
        REQUIRE(binom(W(s + w), W(t)) == sum);
      }
}

TEST_CASE("Cauchy inequality") {
  const auto small = oracle::words_up_to("ab", 2);
  for (const auto& w : oracle::words("ab", 8))
    for (const auto& x : small)
      for (const auto& y : small)
        for (const auto& z : small) {
          const Word ww = W(w);
          REQUIRE(binom(ww, W(y)) * binom(ww, W(x + y + z)) <= binom(ww, W(x + y)) * binom(ww, W(y + z)));
        }
}

TEST_CASE("Dudik identity") {
  // C(|u|-|x|, k-|x|) binom(u, x) = sum over t in A^k of binom(u, t) binom(t, x)
  for (const auto& u : oracle::words("abc", 5))
    for (std::size_t k = 0; k <= 3; ++k)
      for (const auto& x : oracle::words_up_to("abc", k)) {
        BigInt rhs = 0;
        for (const auto& t : oracle::words("abc", k)) rhs += binom(W(u), W(t)) * oracle::binom(t, x);
        REQUIRE(choose(u.size() - x.size(), k - x.size()) * binom(W(u), W(x)) == rhs);
      }
}

TEST_CASE("row sums are ordinary binomial coefficients") {
  for (const auto& w : oracle::words_up_to("abc", 6))
    for (std::size_t n = 0; n <= 4; ++n) {
      BigInt sum = 0;
      for (const auto& x : oracle::words("abc", n)) sum += binom(W(w), W(x));
      REQUIRE(sum == choose(w.size(), n));
    }
}

TEST_CASE("factor counts and position sums") {
  for (const auto& w : oracle::words_up_to("ab", 8))
    for (const auto& x : oracle::words_up_to("ab", 3)) {
      if (x.empty()) continue;
      REQUIRE(factor_count(W(w), W(x)) == oracle::factor_count(w, x));
    }
  CHECK(position_sum(W("abacbcaba"), 1) == 15);
  CHECK(position_sum(Word{}, 0) == 0);
  CHECK(position_sum(W("aaa"), 0) == 6);
}

TEST_CASE("2-spectrum of abbab") {
  const auto s = spectrum(W("abbab"), 2);
  CHECK(s.coefficient(W("a")) == 2);
  CHECK(s.coefficient(W("b")) == 3);
  CHECK(s.coefficient(W("aa")) == 1);
  CHECK(s.coefficient(W("ab")) == 4);
  CHECK(s.coefficient(W("ba")) == 2);
  CHECK(s.coefficient(W("bb")) == 3);
  CHECK(s.terms().size() == 7);
  CHECK(s.to_text(Alphabet::latin(2)) == ":1\na:2\nb:3\naa:1\nab:4\nba:2\nbb:3\n");
  CHECK_THROWS_AS((void)s.coefficient(W("aaa")), DomainError);

  const auto p = spectrum_poly_encode(W("abbab"), 2);
  const std::vector<BigInt> want{1, 0, 2, 3, 1, 4, 2, 3};
  CHECK(p == want);
}

TEST_CASE("spectrum terms match brute-force coefficients") {
  for (const auto& w : oracle::words_up_to("abc", 7)) {
    const auto s = spectrum(W(w), 3);
    for (const auto& x : oracle::words_up_to("abc", 3)) REQUIRE(s.coefficient(W(x)) == oracle::binom(w, x));
  }
}

TEST_CASE("counting automaton path counts equal binomial coefficients") {
  for (const auto& w : oracle::words_up_to("ab", 9)) {
    if (w.empty()) continue;
    const auto aut = build_counting_automaton(W(w), 4);
    for (const auto& x : oracle::words_up_to("ab", 4)) REQUIRE(aut.count_paths(W(x)) == oracle::binom(w, x));
  }
}

TEST_CASE("randomized spectrum test on exhaustive pairs") {
  const auto all = oracle::words("ab", 6);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); j += 3) {
      const bool truth = oracle::k_binomial(all[i], all[j], 2, "ab");
      const bool test = randomized_spectrum_equiv(W(all[i]), W(all[j]), 2, 2, 8, 17 + i * 64 + j);
      if (truth) REQUIRE(test);
      else REQUIRE_FALSE(test);
    }
}

TEST_CASE("randomized test is reproducible for a fixed seed") {
  const auto u = W("abbabaabba"), v = W("baababbaab");
  CHECK(randomized_spectrum_equiv(u, v, 3, 2, 5, 42) == randomized_spectrum_equiv(u, v, 3, 2, 5, 42));
}

TEST_CASE("reconstruction index") {
  // Brute force: least k with k-spectra pairwise distinct on A^n.
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = oracle::words("ab", n);
    std::size_t want = 0;
    for (std::size_t k = 1; k <= n && !want; ++k) {
      std::set<std::vector<std::uint64_t>> seen;
      for (const auto& w : all) {
        std::vector<std::uint64_t> v;
        for (const auto& x : oracle::words_up_to("ab", k)) v.push_back(oracle::binom(w, x));
        seen.insert(v);
      }
      if (seen.size() == all.size()) want = k;
    }
    CHECK(reconstruction_min_k(n, 2) == want);
    CHECK(reconstruction_min_k(n, 2) <= n / 2 + 1);
  }
  CHECK_THROWS_AS(reconstruction_min_k(30, 2, 1000), CapExceeded);
}
