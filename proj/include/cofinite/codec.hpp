#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cofinite/partial_bijection.hpp"

#include "json.hpp"

namespace cofinite {

// Textual form of an element:
//
//   element := "{" pairs? "|" INT "=>" sign INT "}"
//   pairs   := pair ("," pair)*
//   pair    := INT "->" INT
//   sign    := "+" | "-"
//
// The part after "|" reads "N => +d" and means n |-> n + d for all n >= N;
// the pairs list the exceptional points. Whitespace is ignored between
// tokens. decode() additionally accepts the named constants "I" (identity),
// "p" (the up-shift n |-> n + 1) and "q" (the down-shift n |-> n - 1 on
// n > 1), and always returns the canonical representative.
std::string encode(const PartialBijection& a);
PartialBijection decode(std::string_view text);

std::ostream& operator<<(std::ostream& os, const PartialBijection& a);

// JSON form used by the CLI: {"exceptions":[[k,v],...],"tail":N,"shift":d}.
nlohmann::json element_to_json(const PartialBijection& a);
PartialBijection element_from_json(const nlohmann::json& j);

namespace detail {
// Parses one element literal starting at text[pos]; advances pos past it.
PartialBijection parse_element(std::string_view text, std::size_t& pos);
}  // namespace detail

}  // namespace cofinite
