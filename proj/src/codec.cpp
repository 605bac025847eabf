#include "cofinite/codec.hpp"

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace cofinite {

namespace {

constexpr Nat kMaxLiteral = 1'000'000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(pos, std::string("expected ") + what);
  }

  Nat integer() {
    skip_ws();
    const std::size_t begin = pos;
    Nat value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxLiteral) throw ParseError(begin, "number out of range");
      ++pos;
    }
    if (pos == begin) throw ParseError(pos, "expected a number");
    return value;
  }
};

PartialBijection parse_element_body(Cursor& cur) {
  cur.expect('{', "'{'");
  std::map<Nat, Nat> pairs;
  if (cur.peek() != '|') {
    for (;;) {
      cur.skip_ws();
      const std::size_t key_at = cur.pos;
      const Nat key = cur.integer();
      cur.expect('-', "'->'");
      cur.expect('>', "'->'");
      const Nat value = cur.integer();
      if (!pairs.emplace(key, value).second)
        throw ParseError(key_at, "duplicate exception key");
      if (!cur.eat(',')) break;
    }
  }
  cur.expect('|', "'|'");
  const Nat tail_start = cur.integer();
  cur.expect('=', "'=>'");
  cur.expect('>', "'=>'");
  Nat sign;
  if (cur.eat('+'))
    sign = 1;
  else if (cur.eat('-'))
    sign = -1;
  else
    throw ParseError(cur.pos, "expected '+' or '-'");
  const Nat magnitude = cur.integer();
  cur.expect('}', "'}'");
  return PartialBijection::canonicalize(pairs, tail_start, sign * magnitude);
}

}  // namespace

namespace detail {

PartialBijection parse_element(std::string_view text, std::size_t& pos) {
  Cursor cur{text, pos};
  PartialBijection out = parse_element_body(cur);
  pos = cur.pos;
  return out;
}

}  // namespace detail

std::string encode(const PartialBijection& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : a.exceptions()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(key);
    out += "->";
    out += std::to_string(value);
  }
  out += '|';
  out += std::to_string(a.tail_start());
  out += "=>";
  const Nat shift = a.shift();
  out += shift < 0 ? '-' : '+';
  out += std::to_string(shift < 0 ? -shift : shift);
  out += '}';
  return out;
}

PartialBijection decode(std::string_view text) {
  Cursor cur{text, 0};
  PartialBijection out;
  switch (cur.peek()) {
    case 'I':
      ++cur.pos;
      break;
    case 'p':
      ++cur.pos;
      out = PartialBijection::canonicalize({}, 1, 1);
      break;
    case 'q':
      ++cur.pos;
      out = PartialBijection::canonicalize({}, 2, -1);
      break;
    default:
      out = parse_element_body(cur);
  }
  if (!cur.at_end()) throw ParseError(cur.pos, "trailing input");
  return out;
}

std::ostream& operator<<(std::ostream& os, const PartialBijection& a) {
  return os << encode(a);
}

nlohmann::json element_to_json(const PartialBijection& a) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, value] : a.exceptions())
    pairs.push_back({key, value});
  return {{"exceptions", std::move(pairs)},
          {"tail", a.tail_start()},
          {"shift", a.shift()}};
}

PartialBijection element_from_json(const nlohmann::json& j) {
  std::map<Nat, Nat> pairs;
  for (const auto& entry : j.at("exceptions"))
    pairs.emplace(entry.at(0).get<Nat>(), entry.at(1).get<Nat>());
  return PartialBijection::canonicalize(pairs, j.at("tail").get<Nat>(),
                                        j.at("shift").get<Nat>());
}

}  // namespace cofinite
