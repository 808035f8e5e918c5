#include "wordrel/cli.hpp"

#include "wordrel/analysis.hpp"
#include "wordrel/avoidance.hpp"
#include "wordrel/binomial.hpp"
#include "wordrel/error.hpp"
#include "wordrel/parikh.hpp"
#include "wordrel/specs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>

namespace wordrel::cli {

namespace {

using nlohmann::json;

constexpr const char* kFooter = R"(Output
  tsv (default): tables start with a header row; scalar results print bare.
    complexity   n  value  settled      (settled = last new class seen in the first half of the window)
    growth       n  value
    balance      n  value
    reconstruct  n  min_k
    avoid count  n  value
    avoid search max_length  exhausted  witness
  json: the same field names.
Errors: one record on stderr, exit 2 (parse or domain), 3 (cap exceeded), 4 (internal).
Windows default to max(4096, 64 n).)";

json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

struct Globals {
  std::string format = "tsv";
  std::uint64_t seed = 0x5eed;
  std::optional<std::size_t> window;
  std::optional<std::uint64_t> cap;

  bool json() const { return format == "json"; }
};

// Collects one table and prints it as TSV or as a JSON array of objects.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<json> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json arr = json::array();
      for (const auto& row : rows_) {
        json obj = json::object();
        for (std::size_t c = 0; c < columns_.size(); ++c) obj[columns_[c]] = row[c];
        arr.push_back(std::move(obj));
      }
      out << arr.dump() << '\n';
      return;
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "\t" : "") << columns_[c];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "\t" : "");
        if (row[c].is_string()) {
          out << row[c].get<std::string>();
        } else if (row[c].is_boolean()) {
          out << (row[c].get<bool>() ? 1 : 0);
        } else {
          out << row[c].dump();
        }
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
};

void print_scalar(std::ostream& out, const Globals& g, const std::string& name, const json& value) {
  if (g.json()) {
    out << json{{name, value}}.dump() << '\n';
  } else if (value.is_string()) {
    out << value.get<std::string>() << '\n';
  } else if (value.is_boolean()) {
    out << (value.get<bool>() ? "true" : "false") << '\n';
  } else {
    out << value.dump() << '\n';
  }
}

PeriodMode parse_mode(const std::string& text) {
  if (text == "global") return PeriodMode::Global;
  if (text == "external") return PeriodMode::External;
  if (text == "local") return PeriodMode::Local;
  throw ParseError("mode must be global, external or local", 1);
}

Alphabet word_alphabet(const std::string& given, std::initializer_list<std::string_view> words) {
  return given.empty() ? alphabet_of(words) : parse_alphabet(given);
}

void print_error(std::ostream& err, const Globals& g, const std::string& kind, const std::string& message,
                 std::size_t position = 0) {
  if (g.json()) {
    json record{{"error", kind}, {"message", message}};
    if (position) record["position"] = position;
    err << record.dump() << '\n';
  } else {
    err << "error\t" << kind << '\t' << message;
    if (position) err << "\tposition=" << position;
    err << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word equivalence relations: binomial coefficients, Parikh matrices, complexity, avoidance",
               "wordrel"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized tests");
  app.add_option("--window", g.window, "prefix length N for infinite-word analyses");
  app.add_option("--cap", g.cap, "enumeration cap (length cap for avoid search)");

  std::function<void()> action;
  auto on = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&action, f] { action = f; }); };

  // binom
  std::string w, x, u, v, alphabet_text, rel_text, gen_text, range_text, index_text, pattern_text = "XX";
  std::size_t k = 2;
  auto* binom_cmd = app.add_subcommand("binom", "binomial coefficient of words binom(w, x)");
  binom_cmd->add_option("--w", w, "word")->required();
  binom_cmd->add_option("--x", x, "subword")->required();
  binom_cmd->add_option("--alphabet", alphabet_text, "alphabet (default: letters of the words)");
  on(binom_cmd, [&] {
    const auto a = word_alphabet(alphabet_text, {w, x});
    print_scalar(out, g, "binom", big_json(binom(a.parse(w), a.parse(x))));
  });

  bool poly = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "k-spectrum as word:count lines in shortlex order");
  spectrum_cmd->add_option("--w", w, "word")->required();
  spectrum_cmd->add_option("--k", k, "degree")->required();
  spectrum_cmd->add_option("--alphabet", alphabet_text, "alphabet (default: letters of the word)");
  spectrum_cmd->add_flag("--poly", poly, "binary words: exponent and coefficient of the encoding polynomial");
  on(spectrum_cmd, [&] {
    const auto a = word_alphabet(alphabet_text, {w});
    const Word word = a.parse(w);
    if (poly) {
      const auto coeffs = spectrum_poly_encode(word, k);
      Table t({"exponent", "coefficient"});
      for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0) t.add({e, big_json(coeffs[e])});
      t.print(out, g.json());
      return;
    }
    const auto s = spectrum(word, k);
    if (g.json()) {
      json terms = json::array();
      for (const auto& [y, c] : s.terms()) terms.push_back({{"word", a.render(y)}, {"count", big_json(c)}});
      out << json{{"degree", k}, {"terms", terms}}.dump() << '\n';
    } else {
      out << s.to_text(a);
    }
  });

  auto* parikh_cmd = app.add_subcommand("parikh", "Parikh matrix psi_k(w), or psi_u(w) with --index u");
  parikh_cmd->add_option("--word", w, "word")->required();
  parikh_cmd->add_option("--index", index_text, "index word u");
  parikh_cmd->add_option("--alphabet", alphabet_text, "ordered alphabet (default: sorted letters)");
  on(parikh_cmd, [&] {
    const auto a = word_alphabet(alphabet_text, {w, index_text});
    const Word word = a.parse(w);
    const auto m = index_text.empty() ? parikh_matrix(word, a.size()) : generalized_parikh(word, a.parse(index_text));
    if (g.json()) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(big_json(m.at(i, j)));
        rows.push_back(row);
      }
      out << json{{"matrix", rows}}.dump() << '\n';
    } else {
      out << m.to_text();
    }
  });

  bool randomized = false;
  std::size_t trials = 20;
  auto* equiv_cmd = app.add_subcommand("equiv", "whether u ~ v");
  equiv_cmd->add_option("--rel", rel_text, "relation spec")->required();
  equiv_cmd->add_option("--u", u, "first word")->required();
  equiv_cmd->add_option("--v", v, "second word")->required();
  equiv_cmd->add_option("--alphabet", alphabet_text, "alphabet (default: letters of the words)");
  equiv_cmd->add_flag("--randomized", randomized, "Monte Carlo test for bin:K (uses --seed)");
  equiv_cmd->add_option("--trials", trials, "trials for --randomized");
  on(equiv_cmd, [&] {
    const auto a = word_alphabet(alphabet_text, {u, v});
    const auto rel = parse_relation(rel_text, a);
    const Word uw = a.parse(u), vw = a.parse(v);
    bool result;
    if (randomized) {
      if (rel.kind() != RelationKind::KBinomial) throw DomainError("--randomized applies to bin:K only");
      result = randomized_spectrum_equiv(uw, vw, rel.parameter(), a.size(), trials, g.seed);
    } else {
      result = rel.equivalent(uw, vw);
    }
    print_scalar(out, g, "equivalent", result);
  });

  std::string family = "ab";
  auto* largest_cmd = app.add_subcommand("largest-k", "largest l (family ab) or k (family bin) with u ~ v");
  largest_cmd->add_option("--family", family, "ab or bin")->check(CLI::IsMember({"ab", "bin"}));
  largest_cmd->add_option("--u", u, "first word")->required();
  largest_cmd->add_option("--v", v, "second word")->required();
  largest_cmd->add_option("--alphabet", alphabet_text, "alphabet (default: letters of the words)");
  on(largest_cmd, [&] {
    const auto a = word_alphabet(alphabet_text, {u, v});
    const auto r = largest_equiv_index(family == "ab" ? RelationFamily::LAbelian : RelationFamily::KBinomial,
                                       a.parse(u), a.parse(v));
    print_scalar(out, g, "index", r.infinite ? json("inf") : json(r.value));
  });

  auto* complexity_cmd = app.add_subcommand("complexity", "number of classes of length-n factors");
  complexity_cmd->add_option("--gen", gen_text, "generator spec")->required();
  complexity_cmd->add_option("--rel", rel_text, "relation spec (an equivalence)")->required();
  complexity_cmd->add_option("--n", range_text, "n or a..b")->required();
  on(complexity_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto rel = parse_relation(rel_text, gen.alphabet());
    const auto [lo, hi] = parse_range(range_text);
    const auto profile = complexity_profile(gen, rel, lo, hi, g.window);
    Table t({"n", "value", "settled"});
    for (std::size_t n = lo; n <= hi; ++n) t.add({n, profile[n - lo].value, profile[n - lo].settled()});
    t.print(out, g.json());
  });

  auto* growth_cmd = app.add_subcommand("growth", "number of classes of A^n");
  growth_cmd->add_option("--rel", rel_text, "relation spec (an equivalence)")->required();
  growth_cmd->add_option("--alphabet", alphabet_text, "size or symbols")->required();
  growth_cmd->add_option("--n", range_text, "n or a..b")->required();
  on(growth_cmd, [&] {
    const auto a = parse_alphabet(alphabet_text);
    const auto rel = parse_relation(rel_text, a);
    const auto [lo, hi] = parse_range(range_text);
    Table t({"n", "value"});
    for (std::size_t n = lo; n <= hi; ++n) t.add({n, growth(rel, a.size(), n, g.cap.value_or(1u << 22))});
    t.print(out, g.json());
  });

  auto* balance_cmd = app.add_subcommand("balance", "largest letter imbalance between length-n factors");
  balance_cmd->add_option("--gen", gen_text, "generator spec")->required();
  balance_cmd->add_option("--n", range_text, "n or a..b")->required();
  on(balance_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto [lo, hi] = parse_range(range_text);
    const Word prefix = gen.prefix(g.window.value_or(default_window(hi)));
    Table t({"n", "value"});
    for (std::size_t n = lo; n <= hi; ++n) t.add({n, balance_coefficient(prefix, n)});
    t.print(out, g.json());
  });

  auto* returns_cmd = app.add_subcommand("returns", "return words to u, shortlex order");
  returns_cmd->add_option("--gen", gen_text, "generator spec")->required();
  returns_cmd->add_option("--rel", rel_text, "relation spec")->required();
  returns_cmd->add_option("--u", u, "factor")->required();
  on(returns_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto& a = gen.alphabet();
    const auto rel = parse_relation(rel_text, a);
    const Word uw = a.parse(u);
    const Word prefix = gen.prefix(g.window.value_or(default_window(uw.size())));
    const auto occ = occurrences(prefix, rel, uw);
    Table t({"return_word"});
    for (const auto& r : return_words(occ, prefix)) t.add({a.render(r)});
    t.print(out, g.json());
  });

  std::size_t limit = 0;
  auto* derived_cmd = app.add_subcommand("derived", "derived sequence: dictionary, then the code");
  derived_cmd->add_option("--gen", gen_text, "generator spec")->required();
  derived_cmd->add_option("--rel", rel_text, "relation spec")->required();
  derived_cmd->add_option("--u", u, "factor")->required();
  derived_cmd->add_option("--limit", limit, "print at most this many code symbols (0 = all)");
  on(derived_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto& a = gen.alphabet();
    const auto rel = parse_relation(rel_text, a);
    const auto d = derived_sequence(gen, rel, a.parse(u), g.window);
    std::vector<std::size_t> code = d.code;
    if (limit && code.size() > limit) code.resize(limit);
    if (g.json()) {
      json dict = json::array();
      for (const auto& r : d.dictionary) dict.push_back(a.render(r));
      out << json{{"dictionary", dict}, {"code", code}, {"start", d.start}}.dump() << '\n';
      return;
    }
    out << "index\tword\n";
    for (std::size_t i = 0; i < d.dictionary.size(); ++i) out << i + 1 << '\t' << a.render(d.dictionary[i]) << '\n';
    out << "code";
    const bool compact = d.dictionary.size() < 10;
    for (std::size_t i = 0; i < code.size(); ++i) out << (i == 0 ? "\t" : compact ? "" : ",") << code[i];
    out << '\n';
  });

  std::size_t p = 1, l = 1;
  std::string mode_text = "global";
  bool upgrade = false;
  auto* period_cmd = app.add_subcommand("period", "whether (p, l) is a period of the window");
  period_cmd->add_option("--gen", gen_text, "generator spec")->required();
  period_cmd->add_option("--rel", rel_text, "relation spec")->required();
  period_cmd->add_option("--p", p, "number of blocks")->required();
  period_cmd->add_option("--l", l, "block length")->required();
  period_cmd->add_option("--mode", mode_text, "global, external or local");
  period_cmd->add_flag("--upgrade", upgrade, "check that (p, l) implies (1, p l) instead (congruences only)");
  on(period_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto rel = parse_relation(rel_text, gen.alphabet());
    const auto mode = parse_mode(mode_text);
    if (upgrade) {
      const Word prefix = gen.prefix(g.window.value_or(default_window(p * l)));
      print_scalar(out, g, "upgrade_holds", period_upgrade_check(rel, prefix, gen.alphabet_size(), p, l, mode));
    } else {
      print_scalar(out, g, "periodic", detect_period(gen, rel, p, l, mode, g.window));
    }
  });

  std::string reconstruct_range;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "least k with k-spectra injective on A^n");
  reconstruct_cmd->add_option("--n", reconstruct_range, "n or a..b")->required();
  reconstruct_cmd->add_option("--alphabet", alphabet_text, "size or symbols")->required();
  on(reconstruct_cmd, [&] {
    const auto a = parse_alphabet(alphabet_text);
    const auto [lo, hi] = parse_range(reconstruct_range);
    Table t({"n", "min_k"});
    for (std::size_t n = lo; n <= hi; ++n) t.add({n, reconstruction_min_k(n, a.size(), g.cap.value_or(1u << 20))});
    t.print(out, g.json());
  });

  std::size_t prefix_len = 0;
  auto* prefix_cmd = app.add_subcommand("prefix", "prefix of a generated infinite word");
  prefix_cmd->add_option("--gen", gen_text, "generator spec")->required();
  prefix_cmd->add_option("--n", prefix_len, "length")->required();
  on(prefix_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    print_scalar(out, g, "prefix", gen.alphabet().render(gen.prefix(prefix_len)));
  });

  std::optional<std::size_t> max_n;
  auto* mh_cmd = app.add_subcommand("morse-hedlund", "scan factor complexity for a plateau");
  mh_cmd->add_option("--gen", gen_text, "generator spec")->required();
  mh_cmd->add_option("--max-n", max_n, "largest n scanned (default sqrt(window))");
  on(mh_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto verdict = morse_hedlund_scan(gen, g.window.value_or(4096), max_n);
    Table t({"verdict", "plateau", "preperiod", "period"});
    auto opt = [](const std::optional<std::size_t>& o) { return o ? json(*o) : json("-"); };
    t.add({verdict.bounded ? "bounded" : "increasing", verdict.bounded ? json(verdict.plateau) : json("-"),
           opt(verdict.preperiod), opt(verdict.period)});
    t.print(out, g.json());
  });

  // avoid ...
  auto* avoid_cmd = app.add_subcommand("avoid", "pattern avoidance");
  avoid_cmd->require_subcommand(1);
  auto add_pattern_opts = [&](CLI::App* sub) {
    sub->add_option("--pattern", pattern_text, "pattern such as XX, XXX, XYXYX (default XX)");
    sub->add_option("--rel", rel_text, "relation spec (default eq)");
  };

  auto* search_cmd = avoid_cmd->add_subcommand("search", "longest P-free word by lexicographic DFS");
  add_pattern_opts(search_cmd);
  search_cmd->add_option("--alphabet", alphabet_text, "size or symbols")->required();
  on(search_cmd, [&] {
    const auto a = parse_alphabet(alphabet_text);
    const auto rel = parse_relation(rel_text.empty() ? "eq" : rel_text, a);
    const auto r = longest_avoiding(a.size(), Pattern::parse(pattern_text), rel, g.cap.value_or(200));
    Table t({"max_length", "exhausted", "witness"});
    t.add({r.max_length, r.exhausted, a.render(r.witness)});
    t.print(out, g.json());
  });

  auto* count_cmd = avoid_cmd->add_subcommand("count", "number of P-free words of length n");
  add_pattern_opts(count_cmd);
  count_cmd->add_option("--alphabet", alphabet_text, "size or symbols")->required();
  count_cmd->add_option("--n", range_text, "n or a..b")->required();
  on(count_cmd, [&] {
    const auto a = parse_alphabet(alphabet_text);
    const auto rel = parse_relation(rel_text.empty() ? "eq" : rel_text, a);
    const auto pat = Pattern::parse(pattern_text);
    const auto [lo, hi] = parse_range(range_text);
    Table t({"n", "value"});
    for (std::size_t n = lo; n <= hi; ++n)
      t.add({n, count_P_free(a.size(), pat, rel, n, g.cap.value_or(std::uint64_t{1} << 26))});
    t.print(out, g.json());
  });

  auto* census_cmd = avoid_cmd->add_subcommand("census", "distinct factors in the pattern language");
  add_pattern_opts(census_cmd);
  census_cmd->add_option("--gen", gen_text, "generator spec")->required();
  on(census_cmd, [&] {
    const auto gen = parse_generator(gen_text);
    const auto rel = parse_relation(rel_text.empty() ? "eq" : rel_text, gen.alphabet());
    const auto found = bounded_pattern_census(gen, Pattern::parse(pattern_text), rel, g.window.value_or(4096));
    Table t({"factor"});
    for (const auto& f : found) t.add({gen.alphabet().render(f)});
    t.print(out, g.json());
  });

  std::string morphism_text;
  std::size_t bound = 8;
  auto* check_cmd = avoid_cmd->add_subcommand("check-morphism", "whether f maps P-free words to P-free words");
  add_pattern_opts(check_cmd);
  check_cmd->add_option("--morphism", morphism_text, "rules such as a->ab;b->ba")->required();
  check_cmd->add_option("--bound", bound, "largest |u| tested");
  on(check_cmd, [&] {
    const auto m = parse_morphism(morphism_text);
    const auto rel = parse_relation(rel_text.empty() ? "eq" : rel_text, m.codomain);
    const auto r = morphism_freeness_check(m.f, Pattern::parse(pattern_text), rel, bound);
    Table t({"result", "counterexample", "tested"});
    t.add({r.passed ? "pass" : "fail", r.counterexample ? m.domain.render(*r.counterexample) : "-", r.tested});
    t.print(out, g.json());
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, g, "usage", e.what());
    return kParseOrDomain;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const ParseError& e) {
    print_error(err, g, "parse", e.what(), e.position());
    return kParseOrDomain;
  } catch (const DomainError& e) {
    print_error(err, g, "domain", e.what());
    return kParseOrDomain;
  } catch (const CapExceeded& e) {
    print_error(err, g, "cap", e.what());
    return kCapExceeded;
  } catch (const std::exception& e) {
    print_error(err, g, "internal", e.what());
    return kInternal;
  }
}

}  // namespace wordrel::cli
