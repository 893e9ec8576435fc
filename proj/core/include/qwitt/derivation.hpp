#pragma once

// sigma-derivations of A. Every sigma-derivation is a*Delta for a unique
// a in A, where Delta is the canonical generator of the twist context, so a
// derivation is stored as that coefficient.

#include <optional>

#include "qwitt/twist.hpp"

namespace qwitt {

struct SigmaDerivation {
  TwistPtr ctx;
  LaurentPoly coeff;

  /// Value on f: coeff * Delta(f).
  LaurentPoly operator()(const LaurentPoly& f) const { return coeff * ctx->generator(f); }

  friend bool operator==(const SigmaDerivation& a, const SigmaDerivation& b) {
    return a.ctx->same_as(*b.ctx) && a.coeff == b.coeff;
  }
};

/// Throws "context mismatch" unless both derivations live over the same twist.
void require_same_context(const TwistContext& a, const TwistContext& b);

SigmaDerivation operator+(const SigmaDerivation& a, const SigmaDerivation& b);
SigmaDerivation operator-(const SigmaDerivation& a, const SigmaDerivation& b);
SigmaDerivation operator*(const LaurentPoly& a, const SigmaDerivation& D);

inline LaurentPoly der_apply(const SigmaDerivation& D, const LaurentPoly& f) { return D(f); }

/// d_n = -t^n Delta.
SigmaDerivation basis_d(const TwistPtr& ctx, int n);

/// [a Delta, b Delta] = (sigma(a) Delta(b) - sigma(b) Delta(a)) Delta.
SigmaDerivation der_bracket(const SigmaDerivation& D1, const SigmaDerivation& D2);

/// The bracket by its composition definition,
/// (sigma(a) Delta) o (b Delta) - (sigma(b) Delta) o (a Delta), evaluated at f.
LaurentPoly bracket_by_composition(const SigmaDerivation& D1, const SigmaDerivation& D2, const LaurentPoly& f);

/// Witness p with D = p*(id - sigma) when D is inner (g divides the coefficient).
std::optional<LaurentPoly> der_is_inner(const SigmaDerivation& D);

/// The inner derivation f -> p*(f - sigma(f)), i.e. coefficient p*g.
SigmaDerivation der_inner_from(const TwistPtr& ctx, const LaurentPoly& p);

/// c with [Delta_p, Delta_r] = c*(id - sigma), from the witnesses directly:
/// c = Delta(b) p - Delta(a) r for a = g p, b = g r.
LaurentPoly inner_bracket_witness(const TwistContext& ctx, const LaurentPoly& p, const LaurentPoly& r);
/// Same c through the factored form sigma(g) (Delta(r) p - Delta(p) r).
LaurentPoly inner_bracket_witness_factored(const TwistContext& ctx, const LaurentPoly& p, const LaurentPoly& r);

/// ({n}_T - {m}_T) d_{n+m}. Only valid for s >= 1; throws otherwise.
SigmaDerivation bracket_closed_form(const TwistPtr& ctx, int n, int m);

/// [d_n, d_m] from the four sign-case sums of the deformed Witt algebra
/// structure constants, with (alpha, k) = (1, 0) for s >= 1 and (-q, 1 - s) for s <= 0.
SigmaDerivation bracket_four_case(const TwistPtr& ctx, int n, int m);

bool check_skew(const SigmaDerivation& D1, const SigmaDerivation& D2);

/// Six-term (sigma, delta)-twisted Jacobi sum for a Delta, b Delta, c Delta.
LaurentPoly twisted_jacobi_sum(const TwistPtr& ctx, const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c);
inline bool check_twisted_jacobi(const TwistPtr& ctx, const LaurentPoly& a, const LaurentPoly& b,
                                 const LaurentPoly& c) {
  return twisted_jacobi_sum(ctx, a, b, c).is_zero();
}

}  // namespace qwitt
