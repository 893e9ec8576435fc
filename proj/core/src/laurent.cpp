#include "qwitt/laurent.hpp"

#include <stdexcept>

namespace qwitt {

namespace {

// c^n where c = r*q^k; avoids generic repeated squaring for the common case.
QRational monomial_power(const QRational& c, int n) {
  if (!c.is_q_monomial()) return c.pow(n);
  const int k = c.numerator().valuation() - c.denominator().valuation();
  Rational r = c.numerator().coeff(c.numerator().valuation()) /
               c.denominator().coeff(c.denominator().valuation());
  Rational rn(1);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  rn = n >= 0 ? Rational(num, den) : Rational(den, num);
  rn.canonicalize();
  return QRational::q_power(k * n) * QRational(rn);
}

bool is_simple(const QRational& c) { return c.denominator().is_one() && c.numerator().is_monomial(); }

}  // namespace

LaurentPoly LaurentPoly::monomial(const QRational& c, int e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

int LaurentPoly::valuation() const {
  if (is_zero()) throw Error("valuation of zero");
  return terms_.begin()->first;
}

int LaurentPoly::degree() const {
  if (is_zero()) throw Error("degree of zero");
  return terms_.rbegin()->first;
}

QRational LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QRational() : it->second;
}

void LaurentPoly::add_term(int e, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (k == 0) return *this;
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string var;
    if (e == 1) var = "t";
    else if (e != 0) var = "t^" + std::to_string(e);

    // A single-term numerator carries its sign outside: "1 - (1)/(q)*t".
    const bool neg = c.numerator().is_monomial() && c.numerator().leading() < 0;
    const QRational mag = neg ? -c : c;
    std::string cs = mag.to_string();
    if (!is_simple(mag) && mag.denominator().is_one()) cs = "(" + cs + ")";
    std::string term;
    if (var.empty()) term = cs;
    else if (mag.is_one()) term = var;
    else term = cs + "*" + var;
    if (first) {
      out = neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error("zero divisor");
  if (f.is_zero()) return LaurentPoly();
  // Division from the low end: g's lowest coefficient is 1 for every
  // normalized gcd, so the leading-term division is usually free.
  const int gv = g.valuation();
  const int max_exp = f.degree() - g.degree();
  const QRational& glow = g.lowest_coeff();
  const bool unit_low = glow.is_one();
  LaurentPoly quotient;
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const int e = rem.valuation() - gv;
    if (e > max_exp) return std::nullopt;
    const QRational c = unit_low ? rem.lowest_coeff() : rem.lowest_coeff() / glow;
    quotient.add_term(e, c);
    for (const auto& [ge, gc] : g.terms()) rem.add_term(ge + e, -(c * gc));
  }
  return quotient;
}

LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  auto r = try_exact_div(f, g);
  if (!r) throw Error("not divisible");
  return *std::move(r);
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) { return try_exact_div(f, g).has_value(); }

EuclidResult lp_euclid_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw Error("zero divisor");
  if (g.valuation() < 0 || (!f.is_zero() && f.valuation() < 0)) throw Error("not a polynomial");
  EuclidResult out{LaurentPoly(), f};
  const int gd = g.degree();
  const QRational& glead = g.leading_coeff();
  while (!out.remainder.is_zero() && out.remainder.degree() >= gd) {
    const int e = out.remainder.degree() - gd;
    const QRational c = out.remainder.leading_coeff() / glead;
    out.quotient.add_term(e, c);
    for (const auto& [ge, gc] : g.terms()) out.remainder.add_term(ge + e, -(c * gc));
  }
  return out;
}

namespace {

LaurentPoly strip_t_power(const LaurentPoly& f) { return f.shifted(-f.valuation()); }

LaurentPoly normalize_gcd(const LaurentPoly& f) {
  LaurentPoly p = strip_t_power(f);
  return p * p.lowest_coeff().inverse();
}

}  // namespace

LaurentPoly lp_gcd(std::span<const LaurentPoly> fs) {
  std::optional<LaurentPoly> acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    LaurentPoly p = strip_t_power(f);
    if (!acc) {
      acc = std::move(p);
    } else {
      LaurentPoly a = std::move(*acc);
      LaurentPoly b = std::move(p);
      while (!b.is_zero()) {
        LaurentPoly r = lp_euclid_div(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : strip_t_power(r);
      }
      acc = std::move(a);
    }
    if (acc->is_constant()) break;  // already a unit
  }
  if (!acc) throw Error("gcd of zeros");
  return normalize_gcd(*acc);
}

LaurentPoly lp_substitute(const LaurentPoly& f, const QRational& c, int e) {
  if (c.is_zero()) throw Error("unit must map to unit");
  LaurentPoly r;
  for (const auto& [n, a] : f.terms()) r.add_term(n * e, a * monomial_power(c, n));
  return r;
}

}  // namespace qwitt
