#include "qwitt/expr.hpp"

#include <cctype>
#include <limits>

namespace qwitt {

Expr Expr::integer(mpz_class v) {
  return Expr(std::make_shared<const Node>(Node{Kind::integer, std::move(v), 0, nullptr, nullptr}));
}

Expr Expr::variable(Kind k) { return Expr(std::make_shared<const Node>(Node{k, 0, 0, nullptr, nullptr})); }

Expr Expr::unary(Kind k, Expr operand) {
  return Expr(std::make_shared<const Node>(Node{k, 0, 0, std::make_shared<const Expr>(std::move(operand)), nullptr}));
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{k, 0, 0, std::make_shared<const Expr>(std::move(lhs)),
                                                std::make_shared<const Expr>(std::move(rhs))}));
}

Expr Expr::power(Expr base, long exponent) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::pow, 0, exponent, std::make_shared<const Expr>(std::move(base)), nullptr}));
}

namespace {

LaurentPoly power_of(const LaurentPoly& base, long e) {
  if (e < 0) {
    if (!base.is_monomial()) throw Error("negative power of a non-unit");
    const auto& [k, c] = *base.terms().begin();
    return LaurentPoly::monomial(c.pow(e), static_cast<int>(k * e));
  }
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

}  // namespace

LaurentPoly Expr::evaluate(const QRational& q_value) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::integer: return LaurentPoly(QRational(Rational(n.value)));
    case Kind::q: return LaurentPoly(q_value);
    case Kind::t: return LaurentPoly::t_power(1);
    case Kind::add: return n.lhs->evaluate(q_value) + n.rhs->evaluate(q_value);
    case Kind::sub: return n.lhs->evaluate(q_value) - n.rhs->evaluate(q_value);
    case Kind::mul: return n.lhs->evaluate(q_value) * n.rhs->evaluate(q_value);
    case Kind::div: {
      const LaurentPoly divisor = n.rhs->evaluate(q_value);
      if (divisor.is_zero()) throw Error("zero divisor");
      return lp_exact_div(n.lhs->evaluate(q_value), divisor);
    }
    case Kind::neg: return -n.lhs->evaluate(q_value);
    case Kind::pow: return power_of(n.lhs->evaluate(q_value), n.exponent);
  }
  throw std::logic_error("Expr::evaluate: bad node");
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::integer: return n.value.get_str();
    case Kind::q: return "q";
    case Kind::t: return "t";
    case Kind::add: return "(" + n.lhs->to_string() + " + " + n.rhs->to_string() + ")";
    case Kind::sub: return "(" + n.lhs->to_string() + " - " + n.rhs->to_string() + ")";
    case Kind::mul: return "(" + n.lhs->to_string() + " * " + n.rhs->to_string() + ")";
    case Kind::div: return "(" + n.lhs->to_string() + " / " + n.rhs->to_string() + ")";
    case Kind::neg: return "(-" + n.lhs->to_string() + ")";
    case Kind::pow: return "(" + n.lhs->to_string() + "^" + std::to_string(n.exponent) + ")";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) lhs = Expr::binary(Expr::Kind::add, lhs, term());
      else if (accept('-')) lhs = Expr::binary(Expr::Kind::sub, lhs, term());
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) lhs = Expr::binary(Expr::Kind::mul, lhs, factor());
      else if (accept('/')) lhs = Expr::binary(Expr::Kind::div, lhs, factor());
      else return lhs;
    }
  }

  // Unary minus binds looser than '^', so -q^2 is -(q^2).
  Expr factor() {
    if (accept('-')) return Expr::unary(Expr::Kind::neg, factor());
    Expr base = atom();
    if (accept('^')) return Expr::power(base, exponent());
    return base;
  }

  long exponent() {
    const bool paren = accept('(');
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("integer exponent required");
    const std::size_t end = pos_;
    skip_ws();
    // "t^(1/2)" and "t^1.5" are rejected; "t^2/3" is (t^2)/3.
    if (pos_ < text_.size() && (text_[pos_] == '.' || (paren && text_[pos_] == '/'))) fail("integer exponent required");
    if (end - start > 9) {
      pos_ = start;
      fail("exponent out of range");
    }
    long v = std::stol(std::string(text_.substr(start, end - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return Expr::integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'q') {
      ++pos_;
      return Expr::variable(Expr::Kind::q);
    }
    if (c == 't') {
      ++pos_;
      return Expr::variable(Expr::Kind::t);
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace qwitt
