#pragma once

// Text formats shared by the CLI and the Python bindings.
//
//   morphism    a->ab;b->ba        one rule per domain letter, rules separated by ';'
//   generator   morphic:<rules>|<coding>|<seed>   coding is `id` or rules
//               rotation:<p>,<q>,<d>,<r>         alpha = (p + q sqrt d) / r, x0 = 0
//               sumdigits:<k>,<m>
//               ultper:<u>,<v>                    u v v v ...
//               image:<rules>|<generator>
//               thue-morse | tribonacci | fibonacci
//   relation    eq, hamming<=K, ab, ab:L, bin:K, matrix, gparikh:<u>,
//               additive:<v0,v1,...>, simon, simon:K, similar:<xy,...>, partial:<hole>
//   range       a..b (inclusive) or a single number

#include "wordrel/generator.hpp"
#include "wordrel/relation.hpp"
#include "wordrel/words.hpp"

#include <cstddef>
#include <string_view>
#include <utility>

namespace wordrel {

struct ParsedMorphism {
  Alphabet domain;
  Alphabet codomain;
  Morphism f;
};

// Domain letters in rule order; codomain equals the domain when every image letter is
// a domain letter, otherwise image letters in order of first appearance.
ParsedMorphism parse_morphism(std::string_view text);

// Rules over a fixed domain alphabet; image letters must belong to `codomain`.
Morphism parse_morphism(std::string_view text, const Alphabet& domain, const Alphabet& codomain);

InfiniteWord parse_generator(std::string_view text);

// Letter-dependent relations (matrix, gparikh, additive, similar, partial) resolve
// symbols against `alphabet`.
Relation parse_relation(std::string_view text, const Alphabet& alphabet);

std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

// A decimal number k without leading zero gives the digit alphabet 0..k-1; anything
// else is the list of its code points (so "01" is {0, 1}).
Alphabet parse_alphabet(std::string_view text);

// Sorted distinct code points of the given texts.
Alphabet alphabet_of(std::initializer_list<std::string_view> texts);

}  // namespace wordrel
