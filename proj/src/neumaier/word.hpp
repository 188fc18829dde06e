#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neumaier/group.hpp"

namespace neumaier {

// A product of generator powers, read left to right.
struct ElementWord {
  std::vector<std::pair<std::string, long long>> factors;

  ElementWord inverse() const;
  friend ElementWord operator*(ElementWord lhs, const ElementWord& rhs);
  friend bool operator==(const ElementWord&, const ElementWord&) = default;
};

// Grammar: word := factor ('*' factor)* ; factor := atom ('^' int)? ;
// atom := name | 'e' | '(' word ')'. Whitespace is ignored.
ElementWord parse_word(std::string_view text);

Element resolve_word(const GroupTable& g, const ElementWord& w);

// Parses cycle notation like "(1,3)(2,4)" into a one-line image array,
// with point labels offset by `base`.
Permutation parse_cycles(std::string_view text, std::size_t degree, unsigned base);

// Resolves either a word or, for permutation groups, cycle notation.
Element resolve_element(const GroupTable& g, std::string_view text);
ElementSet resolve_elements(const GroupTable& g, const std::vector<std::string>& texts);

}  // namespace neumaier
