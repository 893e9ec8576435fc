#include "qwitt/scalars.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace qwitt {

QPoly::QPoly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Rational c, int degree) {
  QPoly p;
  if (c == 0) return p;
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_monomial() const { return term_count() == 1; }

std::size_t QPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

int QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  QPoly r;
  if (k > 0) {
    r.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
  }
  if (valuation() < -k) throw std::invalid_argument("QPoly::shifted: result is not a polynomial");
  r.coeffs_.assign(coeffs_.begin() + (-k), coeffs_.end());
  return r;
}

void QPoly::divmod(const QPoly& dividend, const QPoly& divisor, QPoly& quotient, QPoly& remainder) {
  if (divisor.is_zero()) throw Error("zero divisor");
  remainder = dividend;
  quotient = QPoly();
  const int dd = divisor.degree();
  if (remainder.degree() < dd) return;
  quotient.coeffs_.assign(static_cast<std::size_t>(remainder.degree() - dd) + 1, Rational(0));
  const Rational inv_lead = 1 / divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    const int shift = remainder.degree() - dd;
    const Rational c = remainder.leading() * inv_lead;
    quotient.coeffs_[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= dd; ++i) {
      const auto& dc = divisor.coeffs_[static_cast<std::size_t>(i)];
      if (dc != 0) remainder.coeffs_[static_cast<std::size_t>(i + shift)] -= c * dc;
    }
    remainder.coeffs_.back() = 0;  // exact cancellation of the leading term
    remainder.trim();
  }
  quotient.trim();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly quot, rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  return a.monic();
}

Rational QPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = mag.get_str();
    } else {
      std::string var = i == 1 ? "q" : "q^" + std::to_string(i);
      term = mag == 1 ? var : mag.get_str() + "*" + var;
    }
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

// ---------------------------------------------------------------------------

QRational::QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("zero divisor");
  normalize();
}

QRational QRational::q_power(int k) {
  if (k >= 0) return QRational(QPoly::monomial(Rational(1), k));
  return QRational(QPoly(Rational(1)), QPoly::monomial(Rational(1), -k), Unchecked{});
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ *= 1 / den_.leading();
      den_ = QPoly(Rational(1));
    }
    return;
  }
  if (den_.is_monomial()) {
    // Only a power of q can be shared.
    const int common = std::min(num_.valuation(), den_.degree());
    if (common > 0) {
      num_ = num_.shifted(-common);
      den_ = den_.shifted(-common);
    }
  } else {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly quot, rem;
      QPoly::divmod(num_, g, quot, rem);
      num_ = std::move(quot);
      QPoly::divmod(den_, g, quot, rem);
      den_ = std::move(quot);
    }
  }
  if (den_.leading() != 1) {
    const Rational inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_one()) den_ = QPoly(Rational(1));
}

QRational QRational::operator-() const { return QRational(-num_, den_, Unchecked{}); }

QRational QRational::inverse() const {
  if (is_zero()) throw Error("zero divisor");
  return QRational(den_, num_);
}

QRational QRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QRational result(1);
  QRational base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QRational operator+(const QRational& a, const QRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return QRational(a.num_ + b.num_);
    return QRational(a.num_ + b.num_, a.den_);
  }
  return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }

QRational operator*(const QRational& a, const QRational& b) {
  if (a.is_zero() || b.is_zero()) return QRational();
  if (a.den_.is_one() && b.den_.is_one()) return QRational(a.num_ * b.num_);
  return QRational(a.num_ * b.num_, a.den_ * b.den_);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw Error("zero divisor");
  if (b.is_one()) return a;
  if (a.is_zero()) return QRational();
  return QRational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational QRational::evaluate(const Rational& q0) const {
  if (q0 == 0) throw Error("q must be nonzero");
  const Rational d = den_.evaluate(q0);
  if (d == 0) throw Error("pole");
  return num_.evaluate(q0) / d;
}

std::string QRational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational qr_arith(const QRational& a, const QRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("qr_arith: bad op");
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw Error("invalid rational '" + text + "'");
  if (r.get_den() == 0) throw Error("invalid rational '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace qwitt
