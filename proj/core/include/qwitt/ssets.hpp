#pragma once

// The derived space S^1 = Span[Inn, Inn] and the stabilizer-like sets
//   S~_1 = { D : [D, S^1] in Inn },   S_1 = { D : [D, S^1] in S^1 },
// checked over finite windows of monomial generators.

#include "qwitt/derivation.hpp"
#include "qwitt/report.hpp"

namespace qwitt {

/// [Delta_p, Delta_r]; always divisible by g*sigma(g).
SigmaDerivation s1_generator(const TwistPtr& ctx, const LaurentPoly& p, const LaurentPoly& r);

/// Necessary condition for membership in S^1: g*sigma(g) divides the
/// coefficient. When s = 0 (sigma(g) = 0) this is D == 0.
bool in_s1_bound(const SigmaDerivation& D);

struct SSetReport {
  int s = 0;
  Window window;
  Report report;
};

/// One claim per applicable statement of the S-set characterization:
///   s = 1        every derivation is inner (a.*)
///   s = 0        S^1 = 0, both stabilizers are everything (b.*)
///   s != 0, 1    S^1 strictly inside Inn, S~_1 everything (c.*)
///   s != 0, +-1  S_1 = Inn (d.*); for s = -1 the check only runs in report mode.
SSetReport verify_theorem_ssets(const TwistPtr& ctx, Window window);

/// S^1 in Inn, and [Inn, S^1] inside the S^1 bound, over the window.
bool check_inclusion_chain(const TwistPtr& ctx, Window window);

}  // namespace qwitt
