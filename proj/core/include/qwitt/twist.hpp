#pragma once

// The endomorphism sigma(t) = q*t^s of A and everything derived from it:
// the normalized gcd g = 1 - lambda*t^d of (id - sigma)(A), the canonical
// generator (id - sigma)/g of the sigma-derivations, the grading monomial
// q*t^(s-1) and the twist factor sigma(g)/g.

#include <memory>
#include <optional>
#include <string>

#include "qwitt/laurent.hpp"

namespace qwitt {

/// How the deformation parameter is treated: as the formal variable q, or
/// specialized to a nonzero rational.
struct QMode {
  std::optional<Rational> value;

  static QMode formal() { return {}; }
  static QMode specialized(Rational v) { return {std::move(v)}; }

  bool is_formal() const { return !value.has_value(); }
  QRational q() const { return value ? QRational(*value) : QRational::q(); }
  /// "formal" or "specialized:3/2".
  std::string to_string() const;

  friend bool operator==(const QMode&, const QMode&) = default;
};

class TwistContext;
using TwistPtr = std::shared_ptr<const TwistContext>;

class TwistContext {
 public:
  /// Throws "sigma is identity" for s = 1, q = 1 and "q must be nonzero"
  /// for a zero specialization.
  static TwistPtr create(int s, QMode mode = QMode::formal());

  int s() const { return s_; }
  const QMode& qmode() const { return mode_; }
  const QRational& q() const { return q_; }

  /// g, with g(0) = 1.
  const LaurentPoly& image_gcd() const { return g_; }
  /// Degree |s - 1| of g; the number of free directions modulo inner derivations.
  int free_rank() const { return d_; }
  /// The scalar in g = 1 - lambda*t^d.
  const QRational& gcd_coefficient() const { return lambda_; }
  /// q*t^(s-1).
  const LaurentPoly& grading_monomial() const { return T_; }
  /// sigma(g)/g; the generator satisfies Delta(sigma(f)) = factor*sigma(Delta(f)).
  const LaurentPoly& twist_factor() const { return delta_; }

  LaurentPoly sigma(const LaurentPoly& f) const { return lp_substitute(f, q_, s_); }
  /// The canonical generator applied to f: (f - sigma(f))/g.
  LaurentPoly generator(const LaurentPoly& f) const;
  /// {n}_T = (T^n - 1)/(T - 1) as a geometric sum in the grading monomial.
  LaurentPoly t_integer(int n) const;

  bool same_as(const TwistContext& o) const { return this == &o || (s_ == o.s_ && mode_ == o.mode_); }

 private:
  TwistContext(int s, QMode mode);

  int s_;
  QMode mode_;
  QRational q_;
  LaurentPoly g_;
  int d_ = 0;
  QRational lambda_;
  LaurentPoly T_;
  LaurentPoly delta_;
};

inline LaurentPoly sigma_apply(const TwistContext& ctx, const LaurentPoly& f) { return ctx.sigma(f); }
inline LaurentPoly delta_apply(const TwistContext& ctx, const LaurentPoly& f) { return ctx.generator(f); }

}  // namespace qwitt
