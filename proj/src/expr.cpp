#include "cofinite/expr.hpp"

#include <cctype>
#include <utility>

#include "cofinite/codec.hpp"

namespace cofinite {

Expr Expr::literal(PartialBijection value) {
  Expr e;
  e.op_ = Op::literal;
  e.value_ = std::move(value);
  return e;
}

Expr Expr::composed(Expr lhs, Expr rhs) {
  Expr e;
  e.op_ = Op::compose;
  e.lhs_ = std::make_shared<Expr>(std::move(lhs));
  e.rhs_ = std::make_shared<Expr>(std::move(rhs));
  return e;
}

Expr Expr::inverted(Expr inner) {
  Expr e;
  e.op_ = Op::invert;
  e.lhs_ = std::make_shared<Expr>(std::move(inner));
  return e;
}

PartialBijection Expr::eval() const {
  switch (op_) {
    case Op::literal:
      return value_;
    case Op::compose:
      return lhs_->eval().compose(rhs_->eval());
    case Op::invert:
      return lhs_->eval().invert();
  }
  return value_;
}

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Expr atom() {
    switch (peek()) {
      case '(': {
        ++pos;
        Expr inner = expression();
        if (peek() != ')') throw ParseError(pos, "expected ')'");
        ++pos;
        return inner;
      }
      case '{':
        return Expr::literal(detail::parse_element(text, pos));
      case 'I':
        ++pos;
        return Expr::literal(identity());
      case 'p':
        ++pos;
        return Expr::literal(PartialBijection::canonicalize({}, 1, 1));
      case 'q':
        ++pos;
        return Expr::literal(PartialBijection::canonicalize({}, 2, -1));
      default:
        throw ParseError(pos, "expected an element");
    }
  }

  Expr factor() {
    Expr node = atom();
    while (peek() == '^') {
      ++pos;
      if (pos >= text.size() || text[pos] != '-')
        throw ParseError(pos, "expected '^-1'");
      ++pos;
      if (pos >= text.size() || text[pos] != '1')
        throw ParseError(pos, "expected '^-1'");
      ++pos;
      node = Expr::inverted(std::move(node));
    }
    return node;
  }

  Expr expression() {
    Expr node = factor();
    while (peek() == '*') {
      ++pos;
      node = Expr::composed(std::move(node), factor());
    }
    return node;
  }
};

}  // namespace

Expr parse_expr(std::string_view text) {
  ExprParser parser{text, 0};
  Expr root = parser.expression();
  if (parser.peek() != '\0') throw ParseError(parser.pos, "trailing input");
  return root;
}

}  // namespace cofinite
