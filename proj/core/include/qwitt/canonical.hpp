#pragma once

// Decomposition of sigma-derivations as  C d_0 + ... + C d_{d-1} + Inn,
// reduction modulo inner derivations, and the Z/dZ grading with
// coefficients in Laurent polynomials of the grading monomial T = q*t^(s-1).

#include <map>
#include <vector>

#include "qwitt/derivation.hpp"

namespace qwitt {

/// coeff = sum_i alphas[i] * t^i + inner_witness * g.
struct CanonicalForm {
  std::vector<QRational> alphas;
  LaurentPoly inner_witness;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Modular reduction using t^d = lambda^-1 modulo g, then exact division for h.
CanonicalForm canonical_form(const SigmaDerivation& D);
/// Valuation-raising subtraction of multiples of g followed by Euclidean
/// division; slower, kept as an independent route.
CanonicalForm canonical_form_by_division(const SigmaDerivation& D);
/// The coefficient encoded by a canonical form.
LaurentPoly reassemble(const TwistContext& ctx, const CanonicalForm& cf);

/// g divides coeff(D1) - coeff(D2).
bool congruent_mod_inner(const SigmaDerivation& D1, const SigmaDerivation& D2);

/// d_m congruent to factor * d_index with 0 <= index < d.
struct ScaledBasis {
  QRational factor;
  int index = 0;

  friend bool operator==(const ScaledBasis&, const ScaledBasis&) = default;
};
ScaledBasis reduce_basis(const TwistContext& ctx, int m);

/// Coordinates over d_0, ..., d_{d-1} of the free part of a derivation.
using ReducedForm = std::vector<QRational>;
ReducedForm reduce_mod_inner(const SigmaDerivation& D);

/// Free part of [d_n, d_m].
ReducedForm mod_inner_bracket(const TwistPtr& ctx, int n, int m);
/// Free part of [d_n, g d_m] for 0 <= n < d.
ReducedForm mod_inner_bracket_g(const TwistPtr& ctx, int n, int m);

/// components[k] = p_k with coeff = sum_k t^k p_k(T). For d = 0 the keys are
/// plain t-exponents and each p_k is constant.
struct GradedSplit {
  int modulus = 0;
  std::map<int, LaurentPoly> components;
};
GradedSplit graded_split(const SigmaDerivation& D);
LaurentPoly reassemble(const TwistContext& ctx, const GradedSplit& split);

/// floor(a / b) for b > 0.
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace qwitt
