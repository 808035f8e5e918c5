#pragma once

#include "wordrel/words.hpp"

#include <string>
#include <string_view>

namespace testing_support {

// Letters a, b, c, ... map to 0, 1, 2, ...; digits map to their value.
inline wordrel::Word W(std::string_view s) {
  std::vector<wordrel::Letter> letters;
  for (char c : s) letters.push_back(static_cast<wordrel::Letter>(c >= 'a' ? c - 'a' : c - '0'));
  return wordrel::Word(std::move(letters));
}

inline std::string S(wordrel::WordView w, char base = 'a') {
  std::string s;
  for (auto a : w) s += static_cast<char>(base + a);
  return s;
}

}  // namespace testing_support
