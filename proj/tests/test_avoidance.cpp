#include "oracle.hpp"
#include "support.hpp"

#include "wordrel/avoidance.hpp"
#include "wordrel/error.hpp"
#include "wordrel/specs.hpp"

#include <doctest.h>

#include <map>
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

oracle::Rel bin2 = [](const std::string& u, const std::string& v) { return oracle::k_binomial(u, v, 2, "abc"); };

// First match in the documented order: smallest start, then lexicographically smallest
// block lengths. Returns (start, lengths) or nothing.
std::optional<std::pair<std::size_t, std::vector<std::size_t>>> first_match(const std::string& w,
                                                                            const std::string& p,
                                                                            const oracle::Rel& rel) {
  std::vector<std::size_t> lens(p.size());
  for (std::size_t start = 0; start < w.size(); ++start) {
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t pos) -> bool {
      if (i == p.size()) {
        std::vector<std::size_t> starts;
        std::size_t s = start;
        for (auto l : lens) {
          starts.push_back(s);
          s += l;
        }
        for (std::size_t a = 0; a < p.size(); ++a)
          for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] == p[b] && !rel(w.substr(starts[a], lens[a]), w.substr(starts[b], lens[b]))) return false;
        return true;
      }
      for (std::size_t l = 1; pos + l + (p.size() - i - 1) <= w.size(); ++l) {
        lens[i] = l;
        if (place(i + 1, pos + l)) return true;
      }
      return false;
    };
    if (place(0, start)) return std::make_pair(start, lens);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("pattern parsing renumbers variables by first appearance") {
  const auto p = Pattern::parse("YXYXY");
  CHECK(p.symbols() == std::vector<std::size_t>{0, 1, 0, 1, 0});
  CHECK(p.variable_count() == 2);
  CHECK(p.to_string() == "YXYXY");
  CHECK(Pattern::power(3).to_string() == "XXX");
  CHECK_THROWS_AS(Pattern::parse(""), ParseError);
}

TEST_CASE("periodic forms") {
  const auto f = Pattern::parse("XYXYX").periodic_form();
  REQUIRE(f);
  CHECK(f->root == 2);
  CHECK(f->exponent == 2);
  CHECK(f->tail == 1);
  CHECK(Pattern::parse("XX").periodic_form()->root == 1);
  CHECK_FALSE(Pattern::parse("XYYX").periodic_form());
  CHECK_FALSE(Pattern::parse("XY").periodic_form());
}

TEST_CASE("find_pattern returns the first match in the documented order") {
  std::mt19937_64 rng(2);
  const std::vector<std::string> patterns{"XX", "XXX", "XYX", "XYXYX", "XYYX", "XYXZ"};
  const std::vector<std::pair<Relation, oracle::Rel>> rels{
      {Relation::equality(), oracle::eq}, {Relation::abelian(), oracle::abelian}, {Relation::k_binomial(2), bin2}};
  for (int trial = 0; trial < 120; ++trial) {
    const auto w = random_word(rng, 4 + trial % 9, 2 + trial % 2);
    for (const auto& ptext : patterns)
      for (const auto& [rel, ref] : rels) {
        CAPTURE(w);
        CAPTURE(ptext);
        CAPTURE(rel.name());
        const auto got = find_pattern(W(w), Pattern::parse(ptext), rel);
        const auto want = first_match(w, ptext, ref);
        REQUIRE(got.has_value() == want.has_value());
        if (!got) continue;
        CHECK(got->position == want->first);
        CHECK(got->block_lengths == want->second);
        std::size_t total = 0;
        for (auto l : got->block_lengths) total += l;
        CHECK(got->length == total);
      }
  }
}

TEST_CASE("pattern freeness agrees with the language definition") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_word(rng, 3 + trial % 8, 3);
    CHECK(is_P_free(W(w), Pattern::parse("XX"), Relation::abelian()) ==
          !oracle::contains_pattern(w, "XX", oracle::abelian));
    CHECK(is_P_free(W(w), Pattern::parse("XYX"), Relation::equality()) ==
          !oracle::contains_pattern(w, "XYX", oracle::eq));
  }
}

TEST_CASE("power occurrences against enumeration") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 80; ++trial) {
    const auto w = random_word(rng, 14, 2);
    for (std::size_t n : {2, 3})
      for (const auto& [rel, ref] :
           std::vector<std::pair<Relation, oracle::Rel>>{{Relation::equality(), oracle::eq},
                                                         {Relation::abelian(), oracle::abelian},
                                                         {Relation::k_binomial(2), bin2}}) {
        std::vector<std::pair<std::size_t, std::size_t>> want;
        for (std::size_t i = 0; i < w.size(); ++i)
          for (std::size_t L = 1; i + n * L <= w.size(); ++L) {
            bool ok = true;
            for (std::size_t j = 1; j < n; ++j) ok = ok && ref(w.substr(i, L), w.substr(i + j * L, L));
            if (ok) want.emplace_back(i, L);
          }
        std::vector<std::pair<std::size_t, std::size_t>> got;
        for (const auto& m : find_powers(W(w), n, rel)) got.emplace_back(m.position, m.block_lengths.front());
        REQUIRE(got == want);
      }
  }
  CHECK_THROWS_AS((void)find_powers(W("abab"), 1, Relation::equality()), DomainError);
}

TEST_CASE("strong powers") {
  const auto u = W("abba");
  CHECK(is_strong_power(u, 2, Relation::abelian(), 2));
  CHECK_FALSE(is_strong_power(u, 2, Relation::equality(), 2));
  CHECK(is_strong_power(W("abab"), 2, Relation::equality(), 2));
  CHECK_FALSE(is_strong_power(W("abb"), 2, Relation::abelian(), 2));
  CHECK_THROWS_AS((void)is_strong_power(u, 2, Relation::hamming_at_most(1), 2), DomainError);
  for (const auto& w : oracle::words("ab", 6)) {
    bool want = false;
    for (const auto& v : oracle::words("ab", 3)) want = want || bin2(w, v + v);
    REQUIRE(is_strong_power(W(w), 2, Relation::k_binomial(2), 2) == want);
  }
}

TEST_CASE("binary square-free words stop at length 3") {
  const auto r = longest_avoiding(2, Pattern::parse("XX"), Relation::equality(), 50);
  CHECK(r.max_length == 3);
  CHECK(r.exhausted);
  CHECK(S(r.witness) == "aba");
}

TEST_CASE("ternary square-free search reaches the cap") {
  const auto r = longest_avoiding(3, Pattern::parse("XX"), Relation::equality(), 60);
  CHECK(r.max_length == 60);
  CHECK_FALSE(r.exhausted);
  CHECK(is_P_free(r.witness, Pattern::parse("XX"), Relation::equality()));
}

TEST_CASE("ternary abelian squares are unavoidable") {
  const auto r = longest_avoiding(3, Pattern::parse("XX"), Relation::abelian(), 100);
  CHECK(r.exhausted);
  CHECK(r.max_length == 7);
  CHECK(!oracle::contains_pattern(S(r.witness), "XX", oracle::abelian));
}

TEST_CASE("node budget raises CapExceeded") {
  CHECK_THROWS_AS((void)longest_avoiding(3, Pattern::parse("XX"), Relation::equality(), 1000, 50), CapExceeded);
}

TEST_CASE("counts of P-free words against enumeration") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::uint64_t sq = 0, absq = 0, ov = 0;
    for (const auto& w : oracle::words("abc", n)) {
      sq += !oracle::contains_pattern(w, "XX", oracle::eq);
      absq += !oracle::contains_pattern(w, "XX", oracle::abelian);
    }
    for (const auto& w : oracle::words("ab", n)) ov += !oracle::contains_pattern(w, "XYXYX", oracle::eq);
    CHECK(count_P_free(3, Pattern::parse("XX"), Relation::equality(), n) == sq);
    CHECK(count_P_free(3, Pattern::parse("XX"), Relation::abelian(), n) == absq);
    CHECK(count_P_free(2, Pattern::parse("XYXYX"), Relation::equality(), n) == ov);
  }
}

TEST_CASE("Thue-Morse avoids overlaps and cubes") {
  const auto t = InfiniteWord::thue_morse().prefix(2000);
  CHECK(is_P_free(t, Pattern::parse("XYXYX"), Relation::equality()));
  CHECK(find_powers(t, 3, Relation::equality()).empty());
  CHECK_FALSE(find_powers(t, 2, Relation::equality()).empty());
}

TEST_CASE("pattern census on a finite word") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = random_word(rng, 12, 2);
    std::set<std::string> want;
    for (std::size_t n = 1; n <= w.size(); ++n)
      for (const auto& f : oracle::distinct_factors(w, n))
        if (oracle::in_pattern_language(f, "XX", oracle::eq)) want.insert(f);
    std::set<std::string> got;
    for (const auto& f : bounded_pattern_census(W(w), Pattern::parse("XX"), Relation::equality())) got.insert(S(f));
    CHECK(got == want);

    // Abelian: one shortlex-least representative per class.
    std::vector<std::string> ab;
    for (std::size_t n = 1; n <= w.size(); ++n)
      for (const auto& f : oracle::distinct_factors(w, n))
        if (oracle::in_pattern_language(f, "XX", oracle::abelian)) ab.push_back(f);
    const auto census = bounded_pattern_census(W(w), Pattern::parse("XX"), Relation::abelian());
    CHECK(census.size() == oracle::class_count(ab, oracle::abelian));
    for (const auto& rep : census)
      for (const auto& f : ab)
        if (oracle::abelian(f, S(rep))) CHECK_FALSE(ShortLex{}(W(f), rep));
  }
}

TEST_CASE("morphism freeness check reports the shortlex-least counterexample") {
  const auto doubling = parse_morphism("a->aa;b->b");
  const auto r = morphism_freeness_check(doubling.f, Pattern::parse("XX"), Relation::equality(), 5);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample);
  CHECK(S(*r.counterexample) == "a");

  struct Case {
    const char* rules;
    std::map<char, std::string> images;
    const char* pattern;
  };
  const std::vector<Case> cases{{"a->abc;b->ac;c->b", {{'a', "abc"}, {'b', "ac"}, {'c', "b"}}, "XX"},
                                {"a->ab;b->ba", {{'a', "ab"}, {'b', "ba"}}, "XYXYX"},
                                {"a->ab;b->ba", {{'a', "ab"}, {'b', "ba"}}, "XXX"}};
  for (const auto& c : cases) {
    CAPTURE(c.rules);
    CAPTURE(c.pattern);
    std::string letters;
    for (const auto& [a, img] : c.images) letters += a;
    std::optional<std::string> want;
    for (std::size_t n = 0; n <= 6 && !want; ++n)
      for (const auto& u : oracle::words(letters, n)) {
        if (oracle::contains_pattern(u, c.pattern, oracle::eq)) continue;
        std::string img;
        for (char a : u) img += c.images.at(a);
        if (oracle::contains_pattern(img, c.pattern, oracle::eq)) {
          want = u;
          break;
        }
      }
    const auto m = parse_morphism(c.rules);
    const auto r = morphism_freeness_check(m.f, Pattern::parse(c.pattern), Relation::equality(), 6);
    CHECK(r.passed == !want);
    if (want) CHECK(S(*r.counterexample) == *want);
    CHECK(r.tested > 0);
  }
}
