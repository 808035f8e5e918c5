#include "wordrel/specs.hpp"

#include "wordrel/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <string>
#include <vector>

namespace wordrel {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) return parts;
    begin = end + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view text, std::string_view what) {
  text = trim(text);
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("expected " + std::string(what) + ", got '" + std::string(text) + "'", 1);
  return value;
}

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected an integer, got '" + std::string(text) + "'", 1);
  return BigInt(std::string(text));
}

struct Rule {
  std::string lhs;
  std::vector<std::string> rhs;
};

std::vector<Rule> parse_rules(std::string_view text) {
  std::vector<Rule> rules;
  for (auto part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    const auto arrow = part.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("morphism rule '" + std::string(part) + "' lacks '->'", 1);
    const auto lhs = split_code_points(trim(part.substr(0, arrow)));
    if (lhs.size() != 1) throw ParseError("morphism rule needs a single letter before '->'", 1);
    rules.push_back({lhs[0], split_code_points(trim(part.substr(arrow + 2)))});
  }
  if (rules.empty()) throw ParseError("empty morphism", 1);
  return rules;
}

Morphism build_morphism(const std::vector<Rule>& rules, const Alphabet& domain, const Alphabet& codomain) {
  std::vector<Word> images(domain.size());
  std::vector<bool> seen(domain.size(), false);
  for (const auto& rule : rules) {
    const auto a = domain.find(rule.lhs);
    if (!a) throw ParseError("rule for unknown letter '" + rule.lhs + "'", 1);
    if (seen[*a]) throw ParseError("two rules for letter '" + rule.lhs + "'", 1);
    seen[*a] = true;
    std::vector<Letter> image;
    for (const auto& s : rule.rhs) {
      const auto b = codomain.find(s);
      if (!b) throw ParseError("image letter '" + s + "' outside the codomain", 1);
      image.push_back(*b);
    }
    images[*a] = Word(std::move(image));
  }
  for (std::size_t a = 0; a < domain.size(); ++a)
    if (!seen[a]) throw ParseError("no rule for letter '" + domain.symbol(static_cast<Letter>(a)) + "'", 1);
  return Morphism(domain.size(), codomain.size(), std::move(images));
}

InfiniteWord parse_morphic(std::string_view body) {
  const auto parts = split(body, '|');
  if (parts.size() != 3) throw ParseError("morphic generator needs <rules>|<coding>|<seed>", 1);
  auto [domain, codomain, f] = parse_morphism(parts[0]);
  if (!(domain == codomain)) throw ParseError("morphic generator needs an endomorphism", 1);
  const auto seed_points = split_code_points(trim(parts[2]));
  if (seed_points.size() != 1) throw ParseError("seed must be one letter", 1);
  const auto seed = domain.find(seed_points[0]);
  if (!seed) throw ParseError("seed letter '" + seed_points[0] + "' is not in the alphabet", 1);
  const auto coding_text = trim(parts[1]);
  if (coding_text == "id") return InfiniteWord::morphic(f, Morphism::identity(domain.size()), *seed, domain);
  const auto rules = parse_rules(coding_text);
  std::vector<std::string> symbols;
  for (const auto& r : rules)
    for (const auto& s : r.rhs)
      if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) symbols.push_back(s);
  std::sort(symbols.begin(), symbols.end());
  Alphabet out(symbols);
  auto coding = build_morphism(rules, domain, out);
  if (!coding.is_coding()) throw ParseError("coding images must be single letters", 1);
  return InfiniteWord::morphic(std::move(f), std::move(coding), *seed, std::move(out));
}

}  // namespace

ParsedMorphism parse_morphism(std::string_view text) {
  const auto rules = parse_rules(text);
  std::vector<std::string> domain_symbols;
  for (const auto& r : rules) {
    if (std::find(domain_symbols.begin(), domain_symbols.end(), r.lhs) != domain_symbols.end())
      throw ParseError("two rules for letter '" + r.lhs + "'", 1);
    domain_symbols.push_back(r.lhs);
  }
  Alphabet domain(domain_symbols);
  std::vector<std::string> codomain_symbols;
  bool endo = true;
  for (const auto& r : rules)
    for (const auto& s : r.rhs) {
      if (!domain.find(s)) endo = false;
      if (std::find(codomain_symbols.begin(), codomain_symbols.end(), s) == codomain_symbols.end())
        codomain_symbols.push_back(s);
    }
  Alphabet codomain = endo ? domain : Alphabet(codomain_symbols.empty() ? domain_symbols : codomain_symbols);
  auto f = build_morphism(rules, domain, codomain);
  return {std::move(domain), std::move(codomain), std::move(f)};
}

Morphism parse_morphism(std::string_view text, const Alphabet& domain, const Alphabet& codomain) {
  return build_morphism(parse_rules(text), domain, codomain);
}

InfiniteWord parse_generator(std::string_view text) {
  text = trim(text);
  if (text == "thue-morse") return InfiniteWord::thue_morse();
  if (text == "tribonacci") return InfiniteWord::tribonacci();
  if (text == "fibonacci") return InfiniteWord::golden_rotation();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown generator '" + std::string(text) + "'", 1);
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "morphic") return parse_morphic(body);
  if (kind == "rotation") {
    const auto parts = split(body, ',');
    if (parts.size() != 4) throw ParseError("rotation needs <p>,<q>,<d>,<r>", colon + 2);
    QuadraticNumber alpha{parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2]),
                          parse_bigint(parts[3])};
    return InfiniteWord::rotation(std::move(alpha));
  }
  if (kind == "sumdigits") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) throw ParseError("sumdigits needs <k>,<m>", colon + 2);
    return InfiniteWord::sum_of_digits(parse_int<unsigned>(parts[0], "a base"),
                                       parse_int<unsigned>(parts[1], "a modulus"));
  }
  if (kind == "ultper") {
    const auto parts = split(body, ',');
    if (parts.size() != 2) throw ParseError("ultper needs <u>,<v>", colon + 2);
    auto alphabet = alphabet_of({parts[0], parts[1]});
    return InfiniteWord::ultimately_periodic(alphabet.parse(parts[0]), alphabet.parse(parts[1]), alphabet);
  }
  if (kind == "image") {
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) throw ParseError("image needs <rules>|<generator>", colon + 2);
    auto base = parse_generator(body.substr(bar + 1));
    const auto rules = parse_rules(body.substr(0, bar));
    std::vector<std::string> symbols;
    for (const auto& r : rules)
      for (const auto& s : r.rhs) symbols.push_back(s);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    Alphabet out(symbols);
    auto f = build_morphism(rules, base.alphabet(), out);
    return InfiniteWord::image(std::move(base), std::move(f), std::move(out));
  }
  throw ParseError("unknown generator kind '" + std::string(kind) + "'", 1);
}

Relation parse_relation(std::string_view text, const Alphabet& alphabet) {
  text = trim(text);
  if (text == "eq") return Relation::equality();
  if (text == "ab") return Relation::abelian();
  if (text == "matrix") return Relation::m_equivalence(alphabet.size());
  if (text == "simon") return Relation::simon();
  if (text.starts_with("hamming<="))
    return Relation::hamming_at_most(parse_int<std::size_t>(text.substr(9), "a distance"));
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown relation '" + std::string(text) + "'", 1);
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "ab") return Relation::l_abelian(parse_int<std::size_t>(body, "a level"));
  if (kind == "bin") return Relation::k_binomial(parse_int<std::size_t>(body, "a degree"));
  if (kind == "simon") return Relation::simon(parse_int<std::size_t>(body, "a length bound"));
  if (kind == "gparikh") return Relation::generalized_parikh(alphabet.parse(trim(body)));
  if (kind == "additive") {
    std::vector<std::int64_t> values;
    for (auto part : split(body, ',')) values.push_back(parse_int<std::int64_t>(part, "a letter value"));
    return Relation::additive(std::move(values));
  }
  if (kind == "similar") {
    std::vector<std::pair<Letter, Letter>> pairs;
    for (auto part : split(body, ',')) {
      part = trim(part);
      if (part.empty()) continue;
      const Word pair = alphabet.parse(part);
      if (pair.size() != 2) throw ParseError("similarity pairs are two letters, got '" + std::string(part) + "'", 1);
      pairs.emplace_back(pair[0], pair[1]);
    }
    return Relation::r_similarity(LetterRelation(alphabet.size(), pairs));
  }
  if (kind == "partial") {
    const Word hole = alphabet.parse(trim(body));
    if (hole.size() != 1) throw ParseError("partial needs one hole letter", colon + 2);
    return Relation::r_similarity(LetterRelation::partial_words(alphabet.size(), hole[0]));
  }
  throw ParseError("unknown relation kind '" + std::string(kind) + "'", 1);
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto n = parse_int<std::size_t>(text, "a number");
    return {n, n};
  }
  const auto lo = parse_int<std::size_t>(text.substr(0, dots), "a range start");
  const auto hi = parse_int<std::size_t>(text.substr(dots + 2), "a range end");
  if (lo > hi) throw ParseError("empty range '" + std::string(text) + "'", 1);
  return {lo, hi};
}

Alphabet parse_alphabet(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() != '0' && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto k = parse_int<std::size_t>(text, "an alphabet size");
    if (k < 1 || k > 36) throw DomainError("numeric alphabet sizes run from 1 to 36");
    return Alphabet::digits(k);
  }
  return Alphabet::from_string(text);
}

Alphabet alphabet_of(std::initializer_list<std::string_view> texts) {
  std::set<std::string> symbols;
  for (auto t : texts)
    for (auto& cp : split_code_points(t)) symbols.insert(std::move(cp));
  if (symbols.empty()) symbols.insert("a");
  return Alphabet(std::vector<std::string>(symbols.begin(), symbols.end()));
}

}  // namespace wordrel
