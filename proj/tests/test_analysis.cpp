#include "oracle.hpp"
#include "support.hpp"

#include "wordrel/analysis.hpp"
#include "wordrel/error.hpp"
#include "wordrel/specs.hpp"

#include <doctest.h>

#include <random>

using namespace wordrel;
using testing_support::S;
using testing_support::W;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::string w;
  for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('a' + rng() % k);
  return w;
}

}  // namespace

TEST_CASE("complexity agrees with pairwise class counting") {
  std::mt19937_64 rng(5);
  const std::string letters = "abc";
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = random_word(rng, 30, 2 + trial % 2);
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto fs = oracle::distinct_factors(w, n);
      CHECK(complexity(W(w), Relation::equality(), n).value == fs.size());
      CHECK(complexity(W(w), Relation::abelian(), n).value == oracle::class_count(fs, oracle::abelian));
      CHECK(complexity(W(w), Relation::l_abelian(2), n).value ==
            oracle::class_count(fs, [](const auto& u, const auto& v) { return oracle::l_abelian(u, v, 2); }));
      CHECK(complexity(W(w), Relation::k_binomial(2), n).value ==
            oracle::class_count(fs, [&](const auto& u, const auto& v) { return oracle::k_binomial(u, v, 2, letters); }));
    }
  }
}

TEST_CASE("complexity rejects non-equivalences") {
  CHECK_THROWS_AS((void)complexity(W("abab"), Relation::hamming_at_most(1), 2), DomainError);
}

TEST_CASE("Tribonacci abelian complexity drops from 4 to 3") {
  const auto t = InfiniteWord::tribonacci();
  CHECK(complexity(t, Relation::abelian(), 7).value == 4);
  CHECK(complexity(t, Relation::abelian(), 8).value == 3);
  const auto profile = complexity_profile(t, Relation::abelian(), 1, 10);
  REQUIRE(profile.size() == 10);
  CHECK(profile[6].value == 4);
  CHECK(profile[7].value == 3);
  for (const auto& c : profile) CHECK(c.settled());
}

TEST_CASE("golden rotation is Sturmian in every sense checked") {
  const auto f = InfiniteWord::golden_rotation();
  const auto eq = complexity_profile(f, Relation::equality(), 0, 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(eq[n].value == n + 1);
  const auto ab = complexity_profile(f, Relation::abelian(), 1, 40);
  for (const auto& c : ab) CHECK(c.value == 2);
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto lab = complexity_profile(f, Relation::l_abelian(l), 0, 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(lab[n].value == (n < 2 * l ? n + 1 : 2 * l));
  }
  CHECK(balance_coefficient(f, 10) == 1);
}

TEST_CASE("abelian growth is the number of compositions") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 0; n <= 6; ++n) CHECK(growth(Relation::abelian(), k, n) == choose(n + k - 1, k - 1));
  CHECK(growth(Relation::abelian(), 2, 0) == 1);
  CHECK(growth(Relation::equality(), 2, 10) == 1024);
  CHECK_THROWS_AS((void)growth(Relation::equality(), 2, 30, 1000), CapExceeded);
}

TEST_CASE("growth agrees with class counting on A^n") {
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = oracle::words("ab", n);
    CHECK(growth(Relation::k_binomial(2), 2, n) ==
          oracle::class_count(all, [](const auto& u, const auto& v) { return oracle::k_binomial(u, v, 2, "ab"); }));
    CHECK(growth(Relation::l_abelian(2), 2, n) ==
          oracle::class_count(all, [](const auto& u, const auto& v) { return oracle::l_abelian(u, v, 2); }));
  }
}

TEST_CASE("congruence complexity is submultiplicative") {
  for (const auto* spec : {"thue-morse", "tribonacci", "sumdigits:2,3"}) {
    const auto w = parse_generator(spec).prefix(3000);
    for (const auto& rel : {Relation::equality(), Relation::abelian(), Relation::k_binomial(2), Relation::l_abelian(2)})
      for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t n = 1; n <= 5; ++n)
          CHECK(complexity(w, rel, m + n).value <= complexity(w, rel, m).value * complexity(w, rel, n).value);
  }
}

TEST_CASE("balance coefficient against brute force") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = random_word(rng, 25, 3);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::uint64_t want = 0;
      const auto fs = oracle::distinct_factors(w, n);
      for (char a : std::string("abc"))
        for (const auto& u : fs)
          for (const auto& v : fs) {
            const auto cu = std::count(u.begin(), u.end(), a), cv = std::count(v.begin(), v.end(), a);
            if (cu > cv) want = std::max<std::uint64_t>(want, cu - cv);
          }
      CHECK(balance_coefficient(W(w), n) == want);
    }
  }
  CHECK(balance_coefficient(InfiniteWord::thue_morse(), 2) == 2);
  CHECK(balance_coefficient(InfiniteWord::thue_morse(), 5) == 1);
}

TEST_CASE("abelian return words and derived sequence of Thue-Morse") {
  const auto tm = InfiniteWord::thue_morse();
  const Word u{0, 1, 1, 0, 1};
  const auto d = derived_sequence(tm, Relation::abelian(), u);
  std::string code;
  for (std::size_t i = 0; i < 21; ++i) code += std::to_string(d.code.at(i));
  CHECK(code == "123214151646123216461");

  std::set<std::string> returns;
  for (const auto& r : return_words(tm, Relation::abelian(), u)) returns.insert(S(r, '0'));
  CHECK(returns == std::set<std::string>{"0", "1", "10", "100", "110", "11010"});
}

TEST_CASE("occurrences and return words against a direct scan") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = random_word(rng, 40, 2);
    const auto u = w.substr(rng() % 30, 3);
    const auto occ = occurrences(W(w), Relation::abelian(), W(u));
    std::vector<std::size_t> want;
    for (std::size_t i = 0; i + 3 <= w.size(); ++i)
      if (oracle::abelian(w.substr(i, 3), u)) want.push_back(i);
    REQUIRE(occ.positions == want);
    if (want.size() < 2) {
      CHECK_THROWS_AS((void)max_gap(occ), DomainError);
      continue;
    }
    std::set<std::string> rw;
    std::size_t gap = 0;
    for (std::size_t i = 0; i + 1 < want.size(); ++i) {
      rw.insert(w.substr(want[i], want[i + 1] - want[i]));
      gap = std::max(gap, want[i + 1] - want[i]);
    }
    CHECK(max_gap(occ) == gap);
    std::set<std::string> got;
    for (const auto& r : return_words(occ, W(w))) got.insert(S(r));
    CHECK(got == rw);
    const auto d = derived_sequence(occ, W(w));
    CHECK(d.start == want.front());
    REQUIRE(d.code.size() == want.size() - 1);
    for (std::size_t i = 0; i < d.code.size(); ++i)
      CHECK(S(d.dictionary.at(d.code[i] - 1)) == w.substr(want[i], want[i + 1] - want[i]));
  }
}

TEST_CASE("Hamming external period of the coded sum-of-digits word") {
  const auto w = parse_generator("image:0->aaaa;1->abaa;2->abba|sumdigits:3,3");
  const auto h = Relation::hamming_at_most(1);
  CHECK(detect_period(w, h, 1, 4, PeriodMode::External, std::size_t{10000}));
  // aaaa and abba sit at distance two, so the global version fails.
  CHECK_FALSE(detect_period(w, h, 1, 4, PeriodMode::Global, std::size_t{10000}));
  CHECK_FALSE(detect_period(w, h, 1, 4, PeriodMode::Local, std::size_t{10000}));
}

TEST_CASE("periods of ultimately periodic words") {
  const auto w = parse_generator("ultper:,abc");
  for (auto mode : {PeriodMode::Global, PeriodMode::External, PeriodMode::Local}) {
    CHECK(detect_period(w, Relation::equality(), 1, 3, mode));
    CHECK_FALSE(detect_period(w, Relation::equality(), 1, 2, mode));
    CHECK(detect_period(w, Relation::abelian(), 1, 3, mode));
    CHECK(detect_period(w, Relation::equality(), 3, 1, mode));
  }
}

TEST_CASE("equality periods agree with a direct block check") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    // Mostly periodic words with an occasional defect.
    const std::size_t q = 1 + rng() % 4;
    const auto root = random_word(rng, q, 2);
    std::string w;
    while (w.size() < 24) w += root;
    if (rng() % 3 == 0) {
      char& c = w[rng() % w.size()];
      c = c == 'a' ? 'b' : 'a';
    }
    for (std::size_t p = 1; p <= 3; ++p)
      for (std::size_t l = 1; l <= 3; ++l) {
        std::vector<std::string> blocks;
        for (std::size_t i = 0; i + l <= w.size(); i += l) blocks.push_back(w.substr(i, l));
        bool want = true;
        for (std::size_t i = 0; i + p < blocks.size(); ++i) want = want && blocks[i] == blocks[i + p];
        for (auto mode : {PeriodMode::Global, PeriodMode::External, PeriodMode::Local})
          REQUIRE(detect_period(W(w), 2, Relation::equality(), p, l, mode) == want);
      }
  }
}

TEST_CASE("period upgrade lemma for congruences") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_word(rng, 36, 2);
    for (const auto& rel : {Relation::abelian(), Relation::k_binomial(2), Relation::l_abelian(2)})
      for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t l = 1; l <= 3; ++l) REQUIRE(period_upgrade_check(rel, W(w), 2, p, l));
  }
  CHECK_THROWS_AS((void)period_upgrade_check(Relation::hamming_at_most(1), W("abab"), 2, 1, 2), DomainError);
}

TEST_CASE("Morse-Hedlund scan") {
  const auto up = morse_hedlund_scan(parse_generator("ultper:ab,abb"), 4096);
  CHECK(up.bounded);
  CHECK(up.period == std::optional<std::size_t>{3});
  CHECK(up.preperiod == std::optional<std::size_t>{1});
  const auto tm = morse_hedlund_scan(InfiniteWord::thue_morse(), 4096);
  CHECK_FALSE(tm.bounded);
  for (std::size_t n = 0; n + 1 < tm.complexities.size(); ++n) CHECK(tm.complexities[n] < tm.complexities[n + 1]);
}

TEST_CASE("default window") {
  CHECK(default_window(1) == 4096);
  CHECK(default_window(100) == 6400);
}
