#include "wordrel/analysis.hpp"
#include "wordrel/avoidance.hpp"
#include "wordrel/binomial.hpp"
#include "wordrel/error.hpp"
#include "wordrel/parikh.hpp"
#include "wordrel/relation.hpp"
#include "wordrel/specs.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wordrel;

namespace {

// Words cross the boundary as strings; an empty alphabet means "letters of the arguments".
Alphabet resolve(const std::string& given, std::initializer_list<std::string_view> words) {
  return given.empty() ? alphabet_of(words) : parse_alphabet(given);
}

py::int_ to_py(const BigInt& n) {
  const auto text = n.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::object optional_size(const std::optional<std::size_t>& v) {
  return v ? py::object(py::int_(*v)) : py::none();
}

}  // namespace

PYBIND11_MODULE(_wordrel, m) {
  m.doc() = "Combinatorics on words: binomial coefficients, word relations, Parikh matrices, avoidance";

  auto base = py::register_exception<Error>(m, "WordrelError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def(
      "binom",
      [](const std::string& w, const std::string& x, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w, x});
        return to_py(binom(a.parse(w), a.parse(x)));
      },
      py::arg("w"), py::arg("x"), py::arg("alphabet") = "", "Number of occurrences of x as a scattered subword of w.");

  m.def(
      "spectrum",
      [](const std::string& w, std::size_t k, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w});
        const auto s = spectrum(a.parse(w), k);
        py::dict out;
        for (const auto& [x, c] : s.terms()) out[py::str(a.render(x))] = to_py(c);
        return out;
      },
      py::arg("w"), py::arg("k"), py::arg("alphabet") = "", "Non-zero binom(w, x) for |x| <= k, keyed by x.");

  m.def(
      "parikh_vector",
      [](const std::string& w, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w});
        return parikh_vector(a.parse(w), a.size());
      },
      py::arg("w"), py::arg("alphabet") = "");

  m.def(
      "parikh_matrix",
      [](const std::string& w, const std::string& index, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w, index});
        const auto pm = index.empty() ? parikh_matrix(a.parse(w), a.size()) : generalized_parikh(a.parse(w), a.parse(index));
        py::list rows;
        for (std::size_t i = 0; i < pm.dimension(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < pm.dimension(); ++j) row.append(to_py(pm.at(i, j)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("w"), py::arg("index") = "", py::arg("alphabet") = "",
      "Upper triangular Parikh matrix; the index word defaults to the alphabet in order.");

  m.def(
      "equivalent",
      [](const std::string& u, const std::string& v, const std::string& relation, const std::string& alphabet) {
        const auto a = resolve(alphabet, {u, v});
        return parse_relation(relation, a).equivalent(a.parse(u), a.parse(v));
      },
      py::arg("u"), py::arg("v"), py::arg("relation"), py::arg("alphabet") = "");

  m.def(
      "largest_index",
      [](const std::string& u, const std::string& v, const std::string& family) -> py::object {
        const auto a = alphabet_of({u, v});
        RelationFamily f;
        if (family == "ab")
          f = RelationFamily::LAbelian;
        else if (family == "bin")
          f = RelationFamily::KBinomial;
        else
          throw DomainError("family must be ab or bin");
        const auto r = largest_equiv_index(f, a.parse(u), a.parse(v));
        return r.infinite ? py::none() : py::object(py::int_(r.value));
      },
      py::arg("u"), py::arg("v"), py::arg("family") = "bin",
      "Largest k with u ~k v; None when the words are equal.");

  m.def(
      "prefix",
      [](const std::string& generator, std::size_t n) {
        const auto g = parse_generator(generator);
        return g.alphabet().render(g.prefix(n));
      },
      py::arg("generator"), py::arg("n"));

  m.def(
      "complexity",
      [](const std::string& generator, const std::string& relation, std::size_t n, std::size_t window) {
        const auto g = parse_generator(generator);
        const auto r = complexity(g, parse_relation(relation, g.alphabet()), n,
                                  window ? std::optional<std::size_t>(window) : std::nullopt);
        return py::make_tuple(r.value, r.settled());
      },
      py::arg("generator"), py::arg("relation"), py::arg("n"), py::arg("window") = 0,
      "Number of classes of length-n factors on a prefix window, with the settled flag.");

  m.def(
      "word_complexity",
      [](const std::string& w, const std::string& relation, std::size_t n, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w});
        return complexity(a.parse(w), parse_relation(relation, a), n).value;
      },
      py::arg("w"), py::arg("relation"), py::arg("n"), py::arg("alphabet") = "");

  m.def(
      "growth",
      [](const std::string& relation, std::size_t k, std::size_t n) {
        return growth(parse_relation(relation, Alphabet::latin(k)), k, n);
      },
      py::arg("relation"), py::arg("alphabet_size"), py::arg("n"), "Number of classes of all words of length n.");

  m.def(
      "balance",
      [](const std::string& w, std::size_t n, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w});
        return balance_coefficient(a.parse(w), n);
      },
      py::arg("w"), py::arg("n"), py::arg("alphabet") = "");

  m.def(
      "find_pattern",
      [](const std::string& w, const std::string& pattern, const std::string& relation,
         const std::string& alphabet) -> py::object {
        const auto a = resolve(alphabet, {w});
        const auto hit = find_pattern(a.parse(w), Pattern::parse(pattern), parse_relation(relation, a));
        if (!hit) return py::none();
        return py::make_tuple(hit->position, hit->block_lengths);
      },
      py::arg("w"), py::arg("pattern"), py::arg("relation") = "eq", py::arg("alphabet") = "",
      "First occurrence as (position, block lengths), or None when w is free.");

  m.def(
      "longest_avoiding",
      [](std::size_t k, const std::string& pattern, const std::string& relation, std::size_t cap) {
        const auto a = Alphabet::latin(k);
        const auto r = longest_avoiding(k, Pattern::parse(pattern), parse_relation(relation, a), cap);
        return py::make_tuple(r.max_length, a.render(r.witness), r.exhausted);
      },
      py::arg("alphabet_size"), py::arg("pattern"), py::arg("relation") = "eq", py::arg("cap") = 200,
      "(max_length, witness, exhausted) for the lexicographic search over a, b, ...");

  m.def(
      "count_free",
      [](std::size_t k, const std::string& pattern, const std::string& relation, std::size_t n) {
        return count_P_free(k, Pattern::parse(pattern), parse_relation(relation, Alphabet::latin(k)), n);
      },
      py::arg("alphabet_size"), py::arg("pattern"), py::arg("relation"), py::arg("n"));

  m.def(
      "check_morphism",
      [](const std::string& rules, const std::string& pattern, const std::string& relation, std::size_t bound) {
        const auto pm = parse_morphism(rules);
        const auto r =
            morphism_freeness_check(pm.f, Pattern::parse(pattern), parse_relation(relation, pm.domain), bound);
        py::object cex = r.counterexample ? py::object(py::str(pm.domain.render(*r.counterexample))) : py::none();
        return py::make_tuple(r.passed, cex, r.tested);
      },
      py::arg("rules"), py::arg("pattern"), py::arg("relation") = "eq", py::arg("bound") = 6,
      "(passed, counterexample, tested) over P-free words of length <= bound.");

  m.def(
      "morse_hedlund",
      [](const std::string& w, std::size_t max_n, const std::string& alphabet) {
        const auto a = resolve(alphabet, {w});
        const auto v = morse_hedlund_scan(a.parse(w), max_n);
        py::dict out;
        out["bounded"] = v.bounded;
        out["plateau"] = v.plateau;
        out["complexities"] = v.complexities;
        out["preperiod"] = optional_size(v.preperiod);
        out["period"] = optional_size(v.period);
        return out;
      },
      py::arg("w"), py::arg("max_n"), py::arg("alphabet") = "");
}
