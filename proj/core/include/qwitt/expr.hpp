#pragma once

// Text front-end for Laurent polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' int)?
//   atom   := integer | 'q' | 't' | '(' expr ')' | '-' atom
//   int    := '-'? digits | '(' '-'? digits ')'
//
// Rational literals such as 2/3 are the quotient of two integer atoms.
// Division requires an exact quotient in A; negative powers require a unit.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "qwitt/laurent.hpp"

namespace qwitt {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class Expr {
 public:
  enum class Kind { integer, q, t, add, sub, mul, div, neg, pow };

  Kind kind() const { return node_->kind; }
  const Expr& lhs() const { return *node_->lhs; }
  const Expr& rhs() const { return *node_->rhs; }

  /// Evaluates with q bound to `q_value` (the formal q by default).
  LaurentPoly evaluate(const QRational& q_value = QRational::q()) const;
  /// Fully parenthesized debug form.
  std::string to_string() const;

  static Expr integer(mpz_class v);
  static Expr variable(Kind k);
  static Expr unary(Kind k, Expr operand);
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr power(Expr base, long exponent);

 private:
  struct Node {
    Kind kind;
    mpz_class value;
    long exponent = 0;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws ParseError with the byte offset of the problem.
Expr parse_expr(std::string_view text);

inline LaurentPoly parse_laurent(std::string_view text, const QRational& q_value = QRational::q()) {
  return parse_expr(text).evaluate(q_value);
}

}  // namespace qwitt
