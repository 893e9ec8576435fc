#pragma once

// Exact scalars: univariate polynomials in q over Q, and the rational
// function field Q(q) built on top of them.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwitt {

/// Base class for every user-facing error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// Dense polynomial in q with rational coefficients, lowest degree first.
/// The coefficient vector never has a trailing zero; zero is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational c);
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(Rational c, int degree);
  static QPoly q() { return monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// Exactly one nonzero coefficient.
  bool is_monomial() const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest exponent with nonzero coefficient; -1 for zero.
  int valuation() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::size_t term_count() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiply by q^k (k may be negative when the result stays a polynomial).
  QPoly shifted(int k) const;

  /// Euclidean division over Q; `divisor` must be nonzero.
  static void divmod(const QPoly& dividend, const QPoly& divisor, QPoly& quotient, QPoly& remainder);
  /// Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b);

  QPoly monic() const;
  Rational evaluate(const Rational& at) const;

  /// Ascending terms, e.g. "1 - q^2", "2/3*q".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(q): a reduced fraction with monic denominator.
/// Zero is 0/1. Values are immutable once built through the public API.
class QRational {
 public:
  QRational() : den_(Rational(1)) {}
  QRational(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT(implicit)
  QRational(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT(implicit)
  explicit QRational(QPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  QRational(QPoly num, QPoly den);

  /// The formal parameter q.
  static QRational q() { return QRational(QPoly::q()); }
  /// q^k for any integer k.
  static QRational q_power(int k);

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// c*q^k with c rational, k any integer.
  bool is_q_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  QRational operator-() const;
  QRational inverse() const;
  QRational pow(long e) const;

  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b);
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at q = q0. Throws "q must be nonzero" or "pole".
  Rational evaluate(const Rational& q0) const;
  /// Same element with q replaced by the constant q0.
  QRational specialize(const Rational& q0) const { return QRational(evaluate(q0)); }

  /// "(1 - q^2)/(q)"; plain numerator when the denominator is 1.
  std::string to_string() const;

 private:
  struct Unchecked {};
  QRational(QPoly num, QPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QPoly num_;
  QPoly den_;
};

enum class ArithOp { add, sub, mul, div };

/// Field operation by tag; div by zero throws "zero divisor".
QRational qr_arith(const QRational& a, const QRational& b, ArithOp op);

/// Exact value at a nonzero rational q0.
inline Rational qr_eval(const QRational& a, const Rational& q0) { return a.evaluate(q0); }

/// Parses "p/q" or "p" into an exact rational; throws Error on junk.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

}  // namespace qwitt
