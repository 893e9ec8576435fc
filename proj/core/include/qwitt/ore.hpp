#pragma once

// The Ore extension A[X; sigma, D] for a sigma-derivation D = c*Delta, with
// elements kept in left normal form sum_i a_i X^i and the rule
// X a = sigma(a) X + D(a).

#include <map>
#include <string>

#include "qwitt/derivation.hpp"

namespace qwitt {

class OrePoly {
 public:
  using Coeffs = std::map<int, LaurentPoly>;

  /// Zero of the extension twisted by `twist`.
  explicit OrePoly(SigmaDerivation twist) : twist_(std::move(twist)) {}
  OrePoly(SigmaDerivation twist, Coeffs coeffs);

  /// a * X^k.
  static OrePoly term(const SigmaDerivation& twist, const LaurentPoly& a, int k);
  /// The untwisted ring A[Y; sigma] over ctx.
  static OrePoly untwisted_zero(const TwistPtr& ctx) { return OrePoly(SigmaDerivation{ctx, LaurentPoly()}); }

  const SigmaDerivation& twist() const { return twist_; }
  const TwistContext& ctx() const { return *twist_.ctx; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest power of X; -1 for zero.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  LaurentPoly coeff(int k) const;

  OrePoly& operator+=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator*(const OrePoly& u, const OrePoly& v);
  friend bool operator==(const OrePoly& a, const OrePoly& b) {
    return a.twist_ == b.twist_ && a.coeffs_ == b.coeffs_;
  }

  /// X * this.
  OrePoly left_mul_x() const;

  std::string to_string(char var = 'X') const;

 private:
  void add_term(int k, const LaurentPoly& a);

  SigmaDerivation twist_;
  Coeffs coeffs_;
};

inline OrePoly ore_mul(const OrePoly& u, const OrePoly& v) { return u * v; }

/// Image under the A-linear map X -> Y + p into A[Y; sigma], where the twist
/// is the inner derivation p*(id - sigma). Throws "not an inner twist".
OrePoly ore_untwist(const OrePoly& u);

}  // namespace qwitt
