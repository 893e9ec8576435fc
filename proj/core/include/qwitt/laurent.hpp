#pragma once

// The algebra A = Q(q)[t, t^-1] of Laurent polynomials in t.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "qwitt/scalars.hpp"

namespace qwitt {

class LaurentPoly {
 public:
  using Terms = std::map<int, QRational>;

  LaurentPoly() = default;
  LaurentPoly(const QRational& c) { add_term(0, c); }  // NOLINT(implicit)
  LaurentPoly(long c) : LaurentPoly(QRational(c)) {}    // NOLINT(implicit)

  /// c * t^e.
  static LaurentPoly monomial(const QRational& c, int e);
  static LaurentPoly t_power(int e) { return monomial(QRational(1), e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  std::size_t size() const { return terms_.size(); }

  /// Least exponent. Undefined (throws) on zero.
  int valuation() const;
  /// Greatest exponent. Undefined (throws) on zero.
  int degree() const;

  QRational coeff(int e) const;
  const QRational& lowest_coeff() const { return terms_.begin()->second; }
  const QRational& leading_coeff() const { return terms_.rbegin()->second; }
  const Terms& terms() const { return terms_; }

  void add_term(int e, const QRational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const QRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const QRational& c) { return a *= c; }
  friend LaurentPoly operator*(const QRational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// Apply a scalar map coefficient-wise (used for q specialization).
  template <typename F>
  LaurentPoly map_coeffs(F&& f) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  /// Canonical rendering, e.g. "1 - q*t^2", "t^-3 + 2*t".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// f / g when g divides f in A; std::nullopt otherwise. g must be nonzero.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g);
/// f / g, throwing "not divisible" when g does not divide f.
LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g);
/// Divisibility in A, i.e. up to unit monomials.
bool divides(const LaurentPoly& g, const LaurentPoly& f);

/// Gcd in A, normalized to a polynomial with constant term 1.
/// Throws "gcd of zeros" if every input is zero.
LaurentPoly lp_gcd(std::span<const LaurentPoly> fs);

struct EuclidResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
};
/// Euclidean division in Q(q)[t]; both inputs need valuation >= 0.
EuclidResult lp_euclid_div(const LaurentPoly& f, const LaurentPoly& g);

/// Image of f under the endomorphism t -> c*t^e. Throws if c is zero.
LaurentPoly lp_substitute(const LaurentPoly& f, const QRational& c, int e);

inline LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

}  // namespace qwitt
