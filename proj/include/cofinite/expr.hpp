#pragma once

#include <memory>
#include <string_view>

#include "cofinite/partial_bijection.hpp"

namespace cofinite {

// Expression over element literals and the named constants I, p, q, with
// left-associative `*` for composition and postfix `^-1` for inversion,
// which binds tighter than `*`.
class Expr {
 public:
  static Expr literal(PartialBijection value);
  static Expr composed(Expr lhs, Expr rhs);
  static Expr inverted(Expr inner);

  PartialBijection eval() const;

 private:
  Expr() = default;

  enum class Op { literal, compose, invert };
  Op op_ = Op::literal;
  PartialBijection value_;
  std::shared_ptr<const Expr> lhs_;
  std::shared_ptr<const Expr> rhs_;
};

Expr parse_expr(std::string_view text);

inline PartialBijection eval_expr(std::string_view text) {
  return parse_expr(text).eval();
}

}  // namespace cofinite
