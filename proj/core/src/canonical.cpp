#include "qwitt/canonical.hpp"

namespace qwitt {

namespace {

CanonicalForm all_inner(const TwistContext& ctx, const LaurentPoly& coeff) {
  // d = 0: g is the unit 1 - q.
  return {{}, lp_exact_div(coeff, ctx.image_gcd())};
}

}  // namespace

CanonicalForm canonical_form(const SigmaDerivation& D) {
  const TwistContext& ctx = *D.ctx;
  const int d = ctx.free_rank();
  if (d == 0) return all_inner(ctx, D.coeff);

  const QRational inv_lambda = ctx.gcd_coefficient().inverse();
  CanonicalForm cf;
  cf.alphas.assign(static_cast<std::size_t>(d), QRational());
  for (const auto& [j, c] : D.coeff.terms()) {
    const int p = floor_div(j, d);
    cf.alphas[static_cast<std::size_t>(j - p * d)] += c * inv_lambda.pow(p);
  }
  LaurentPoly free_part;
  for (int i = 0; i < d; ++i) free_part.add_term(i, cf.alphas[static_cast<std::size_t>(i)]);
  cf.inner_witness = lp_exact_div(D.coeff - free_part, ctx.image_gcd());
  return cf;
}

CanonicalForm canonical_form_by_division(const SigmaDerivation& D) {
  const TwistContext& ctx = *D.ctx;
  const int d = ctx.free_rank();
  if (d == 0) return all_inner(ctx, D.coeff);

  const LaurentPoly& g = ctx.image_gcd();
  LaurentPoly f = D.coeff;
  LaurentPoly h;
  while (!f.is_zero() && f.valuation() < 0) {
    const LaurentPoly lowest = LaurentPoly::monomial(f.lowest_coeff(), f.valuation());
    h += lowest;
    f -= lowest * g;
  }
  CanonicalForm cf;
  cf.alphas.assign(static_cast<std::size_t>(d), QRational());
  if (!f.is_zero()) {
    auto [quotient, remainder] = lp_euclid_div(f, g);
    h += quotient;
    for (const auto& [e, c] : remainder.terms()) cf.alphas[static_cast<std::size_t>(e)] = c;
  }
  cf.inner_witness = std::move(h);
  return cf;
}

LaurentPoly reassemble(const TwistContext& ctx, const CanonicalForm& cf) {
  LaurentPoly r = cf.inner_witness * ctx.image_gcd();
  for (std::size_t i = 0; i < cf.alphas.size(); ++i) r.add_term(static_cast<int>(i), cf.alphas[i]);
  return r;
}

bool congruent_mod_inner(const SigmaDerivation& D1, const SigmaDerivation& D2) {
  require_same_context(*D1.ctx, *D2.ctx);
  return divides(D1.ctx->image_gcd(), D1.coeff - D2.coeff);
}

ScaledBasis reduce_basis(const TwistContext& ctx, int m) {
  const int d = ctx.free_rank();
  if (d == 0) throw Error("no free part");
  const int p = floor_div(m, d);
  return {ctx.gcd_coefficient().pow(-p), m - p * d};
}

ReducedForm reduce_mod_inner(const SigmaDerivation& D) {
  if (D.ctx->free_rank() == 0) throw Error("no free part");
  ReducedForm out = canonical_form(D).alphas;
  for (auto& a : out) a = -a;  // d_i = -t^i Delta
  return out;
}

ReducedForm mod_inner_bracket(const TwistPtr& ctx, int n, int m) {
  if (ctx->free_rank() == 0) throw Error("no free part");
  return reduce_mod_inner(der_bracket(basis_d(ctx, n), basis_d(ctx, m)));
}

ReducedForm mod_inner_bracket_g(const TwistPtr& ctx, int n, int m) {
  const int d = ctx->free_rank();
  if (d == 0) throw Error("no free part");
  if (n < 0 || n >= d) throw Error("n must satisfy 0<=n<d");
  return reduce_mod_inner(der_bracket(basis_d(ctx, n), ctx->image_gcd() * basis_d(ctx, m)));
}

GradedSplit graded_split(const SigmaDerivation& D) {
  const TwistContext& ctx = *D.ctx;
  const int d = ctx.free_rank();
  GradedSplit split;
  split.modulus = d;
  if (d == 0) {
    for (const auto& [j, c] : D.coeff.terms()) split.components[j] = LaurentPoly(c);
    return split;
  }
  // s > 1: t^d = q^-1 T.  s < 1: t^d = q T^-1.
  const int dir = ctx.s() > 1 ? 1 : -1;
  const QRational& q = ctx.q();
  for (const auto& [j, c] : D.coeff.terms()) {
    const int p = floor_div(j, d);
    split.components[j - p * d].add_term(dir * p, c * q.pow(-dir * p));
  }
  for (auto it = split.components.begin(); it != split.components.end();) {
    it = it->second.is_zero() ? split.components.erase(it) : std::next(it);
  }
  return split;
}

LaurentPoly reassemble(const TwistContext& ctx, const GradedSplit& split) {
  LaurentPoly r;
  for (const auto& [k, p] : split.components) r += lp_substitute(p, ctx.q(), ctx.s() - 1).shifted(k);
  return r;
}

}  // namespace qwitt
