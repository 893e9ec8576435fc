#include "qwitt/ssets.hpp"

#include "qwitt/canonical.hpp"

#include <string>
#include <vector>

namespace qwitt {

SigmaDerivation s1_generator(const TwistPtr& ctx, const LaurentPoly& p, const LaurentPoly& r) {
  return der_bracket(der_inner_from(ctx, p), der_inner_from(ctx, r));
}

bool in_s1_bound(const SigmaDerivation& D) {
  const TwistContext& ctx = *D.ctx;
  const LaurentPoly bound = ctx.image_gcd() * ctx.sigma(ctx.image_gcd());
  if (bound.is_zero()) return D.coeff.is_zero();
  return divides(bound, D.coeff);
}

namespace {

struct Generator {
  int i;
  int j;
  SigmaDerivation D;
};

std::vector<Generator> monomial_generators(const TwistPtr& ctx, Window w) {
  std::vector<Generator> out;
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = i + 1; j <= w.hi; ++j)
      out.push_back({i, j, s1_generator(ctx, LaurentPoly::t_power(i), LaurentPoly::t_power(j))});
  return out;
}

std::string pair_name(const Generator& g) {
  return "[Delta_{t^" + std::to_string(g.i) + "}, Delta_{t^" + std::to_string(g.j) + "}]";
}

std::string derivation_text(const LaurentPoly& coeff) { return "(" + coeff.to_string() + ")*Delta"; }

// S_1 exclusion: no nonzero P in span{1, t, ..., t^(d-1)} keeps the test
// element [Delta_1, Delta_t] inside the S^1 bound.
Claim stabilizer_claim(const TwistPtr& ctx) {
  const TwistContext& tc = *ctx;
  const int d = tc.free_rank();
  const SigmaDerivation probe = s1_generator(ctx, LaurentPoly(1), LaurentPoly::t_power(1));
  const LaurentPoly bound = tc.image_gcd() * tc.sigma(tc.image_gcd());

  Claim claim{"d.stabilizer_equals_inner", ClaimStatus::verified, ""};
  if (!in_s1_bound(probe)) {
    claim.status = ClaimStatus::refuted;
    claim.evidence = "test element " + derivation_text(probe.coeff) + " violates the S^1 bound";
    return claim;
  }

  std::vector<LaurentPoly> candidates;
  for (int i = 0; i < d; ++i) candidates.push_back(LaurentPoly::t_power(i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) candidates.push_back(LaurentPoly::t_power(i) + LaurentPoly::t_power(j));
  LaurentPoly dense;
  for (int i = 0; i < d; ++i) dense.add_term(i, QRational(i + 1));
  if (d > 1) candidates.push_back(dense);

  for (const auto& P : candidates) {
    const SigmaDerivation b = der_bracket(SigmaDerivation{ctx, P}, probe);
    if (divides(bound, b.coeff)) {
      claim.status = ClaimStatus::refuted;
      claim.evidence = "P = " + P.to_string() + " stabilizes the test element: [P*Delta, c] = " +
                       derivation_text(b.coeff);
      return claim;
    }
  }
  claim.evidence = std::to_string(candidates.size()) + " free-part directions excluded against test element " +
                   derivation_text(probe.coeff);
  return claim;
}

}  // namespace

SSetReport verify_theorem_ssets(const TwistPtr& ctx, Window window) {
  const TwistContext& tc = *ctx;
  const int s = tc.s();
  SSetReport out{s, window, {}};
  Report& rep = out.report;
  const auto gens = monomial_generators(ctx, window);
  const std::string wtext = " over window " + window.to_string();

  if (s == 1) {
    ClaimStatus st = ClaimStatus::verified;
    std::string ev = "every d_n is inner" + wtext;
    for (int n = window.lo; n <= window.hi && st == ClaimStatus::verified; ++n) {
      if (!der_is_inner(basis_d(ctx, n))) {
        st = ClaimStatus::refuted;
        ev = "d_" + std::to_string(n) + " is not inner";
      }
    }
    rep.add("a.all_inner", st, ev);

    st = ClaimStatus::verified;
    ev = std::to_string(gens.size()) + " generators of S^1 inner" + wtext;
    for (const auto& g : gens) {
      if (!der_is_inner(g.D)) {
        st = ClaimStatus::refuted;
        ev = pair_name(g) + " = " + derivation_text(g.D.coeff) + " is not inner";
        break;
      }
    }
    rep.add("a.generators_inner", st, ev);

    const LaurentPoly bound = tc.image_gcd() * tc.sigma(tc.image_gcd());
    const bool unit = bound.is_monomial() && bound.is_constant();
    rep.add("a.s1_bound_trivial", unit ? ClaimStatus::verified : ClaimStatus::refuted,
            "g*sigma(g) = " + bound.to_string());
    return out;
  }

  if (s == 0) {
    ClaimStatus st = tc.sigma(tc.image_gcd()).is_zero() ? ClaimStatus::verified : ClaimStatus::refuted;
    std::string ev = "sigma(g) = 0 and all " + std::to_string(gens.size()) + " generators vanish" + wtext;
    for (const auto& g : gens) {
      if (!g.D.coeff.is_zero()) {
        st = ClaimStatus::refuted;
        ev = pair_name(g) + " = " + derivation_text(g.D.coeff) + " is nonzero";
        break;
      }
    }
    rep.add("b.s1_zero", st, ev);

    st = ClaimStatus::verified;
    ev = "[t^n*Delta, c] = 0 for every generator c" + wtext;
    for (int n = window.lo; n <= window.hi && st == ClaimStatus::verified; ++n) {
      const SigmaDerivation D{ctx, LaurentPoly::t_power(n)};
      for (const auto& g : gens) {
        if (!der_bracket(D, g.D).coeff.is_zero()) {
          st = ClaimStatus::refuted;
          ev = "[t^" + std::to_string(n) + "*Delta, " + pair_name(g) + "] is nonzero";
          break;
        }
      }
    }
    rep.add("b.stabilizers_full", st, ev);

    st = ClaimStatus::verified;
    ev = "D = C d_0 + Inn: d_0 not inner, every d_n decomposes" + wtext;
    if (tc.free_rank() != 1 || der_is_inner(basis_d(ctx, 0))) {
      st = ClaimStatus::refuted;
      ev = "free rank " + std::to_string(tc.free_rank()) + ", d_0 inner: " +
           (der_is_inner(basis_d(ctx, 0)) ? "yes" : "no");
    }
    for (int n = window.lo; n <= window.hi && st == ClaimStatus::verified; ++n) {
      const SigmaDerivation D = basis_d(ctx, n);
      if (reassemble(tc, canonical_form(D)) != D.coeff) {
        st = ClaimStatus::refuted;
        ev = "decomposition of d_" + std::to_string(n) + " does not reassemble";
      }
    }
    rep.add("b.decomposition", st, ev);
    return out;
  }

  {
    const SigmaDerivation inner_g{ctx, tc.image_gcd()};
    const bool inner = der_is_inner(inner_g).has_value();
    const bool bounded = in_s1_bound(inner_g);
    const bool sigma_g_unit = tc.sigma(tc.image_gcd()).is_monomial();
    rep.add("c.strict_inclusion", inner && !bounded && !sigma_g_unit ? ClaimStatus::verified : ClaimStatus::refuted,
            "g*Delta is inner and outside g*sigma(g)*A*Delta; sigma(g) = " + tc.sigma(tc.image_gcd()).to_string());
  }

  {
    ClaimStatus st = ClaimStatus::verified;
    std::string ev;
    std::size_t checked = 0;
    for (int n = window.lo; n <= window.hi && st == ClaimStatus::verified; ++n) {
      const SigmaDerivation D{ctx, LaurentPoly::t_power(n)};
      for (const auto& g : gens) {
        const SigmaDerivation b = der_bracket(D, g.D);
        ++checked;
        if (!der_is_inner(b)) {
          st = ClaimStatus::refuted;
          ev = "[t^" + std::to_string(n) + "*Delta, " + pair_name(g) + "] = " + derivation_text(b.coeff) +
               " is not inner";
          break;
        }
      }
    }
    if (st == ClaimStatus::verified) ev = std::to_string(checked) + " brackets [t^n*Delta, c] inner" + wtext;
    rep.add("c.tilde_s1_full", st, ev);
  }

  Claim stab = stabilizer_claim(ctx);
  if (s == -1) {
    stab.evidence = "open case s=-1 (s^2 = 1), not asserted; report-mode outcome " +
                    std::string(to_string(stab.status)) + ": " + stab.evidence;
    stab.status = ClaimStatus::skipped;
  }
  rep.claims.push_back(std::move(stab));
  return out;
}

bool check_inclusion_chain(const TwistPtr& ctx, Window window) {
  const auto gens = monomial_generators(ctx, window);
  for (const auto& g : gens)
    if (!der_is_inner(g.D) || !in_s1_bound(g.D)) return false;
  for (int n = window.lo; n <= window.hi; ++n) {
    const SigmaDerivation inner = der_inner_from(ctx, LaurentPoly::t_power(n));
    for (const auto& g : gens) {
      const SigmaDerivation b = der_bracket(inner, g.D);
      if (!in_s1_bound(b) || !der_is_inner(b)) return false;
    }
  }
  return true;
}

}  // namespace qwitt
