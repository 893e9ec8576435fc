#include "qwitt/derivation.hpp"

#include <algorithm>
#include <stdexcept>

namespace qwitt {

void require_same_context(const TwistContext& a, const TwistContext& b) {
  if (!a.same_as(b)) throw Error("context mismatch");
}

SigmaDerivation operator+(const SigmaDerivation& a, const SigmaDerivation& b) {
  require_same_context(*a.ctx, *b.ctx);
  return {a.ctx, a.coeff + b.coeff};
}

SigmaDerivation operator-(const SigmaDerivation& a, const SigmaDerivation& b) {
  require_same_context(*a.ctx, *b.ctx);
  return {a.ctx, a.coeff - b.coeff};
}

SigmaDerivation operator*(const LaurentPoly& a, const SigmaDerivation& D) { return {D.ctx, a * D.coeff}; }

SigmaDerivation basis_d(const TwistPtr& ctx, int n) { return {ctx, LaurentPoly::monomial(QRational(-1), n)}; }

namespace {

LaurentPoly bracket_coeff(const TwistContext& ctx, const LaurentPoly& a, const LaurentPoly& b) {
  return ctx.sigma(a) * ctx.generator(b) - ctx.sigma(b) * ctx.generator(a);
}

}  // namespace

SigmaDerivation der_bracket(const SigmaDerivation& D1, const SigmaDerivation& D2) {
  require_same_context(*D1.ctx, *D2.ctx);
  return {D1.ctx, bracket_coeff(*D1.ctx, D1.coeff, D2.coeff)};
}

LaurentPoly bracket_by_composition(const SigmaDerivation& D1, const SigmaDerivation& D2, const LaurentPoly& f) {
  require_same_context(*D1.ctx, *D2.ctx);
  const TwistContext& ctx = *D1.ctx;
  const SigmaDerivation left1{D1.ctx, ctx.sigma(D1.coeff)};
  const SigmaDerivation left2{D1.ctx, ctx.sigma(D2.coeff)};
  return left1(D2(f)) - left2(D1(f));
}

std::optional<LaurentPoly> der_is_inner(const SigmaDerivation& D) {
  return try_exact_div(D.coeff, D.ctx->image_gcd());
}

SigmaDerivation der_inner_from(const TwistPtr& ctx, const LaurentPoly& p) { return {ctx, p * ctx->image_gcd()}; }

LaurentPoly inner_bracket_witness(const TwistContext& ctx, const LaurentPoly& p, const LaurentPoly& r) {
  const LaurentPoly a = ctx.image_gcd() * p;
  const LaurentPoly b = ctx.image_gcd() * r;
  return ctx.generator(b) * p - ctx.generator(a) * r;
}

LaurentPoly inner_bracket_witness_factored(const TwistContext& ctx, const LaurentPoly& p, const LaurentPoly& r) {
  return ctx.sigma(ctx.image_gcd()) * (ctx.generator(r) * p - ctx.generator(p) * r);
}

SigmaDerivation bracket_closed_form(const TwistPtr& ctx, int n, int m) {
  if (ctx->s() < 1) throw Error("closed form undefined for s<1");
  const LaurentPoly factor = ctx->t_integer(n) - ctx->t_integer(m);
  return {ctx, factor * LaurentPoly::monomial(QRational(-1), n + m)};
}

SigmaDerivation bracket_four_case(const TwistPtr& ctx, int n, int m) {
  const int s = ctx->s();
  const QRational& q = ctx->q();
  const QRational alpha = s >= 1 ? QRational(1) : -q;
  const int k = s >= 1 ? 0 : 1 - s;

  // Accumulates c * d_j, i.e. -c * t^j in coefficient form.
  LaurentPoly coeff;
  auto add = [&](const QRational& c, int j) { coeff.add_term(j, -c); };
  auto sign = [](int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };

  if (n >= 0 && m >= 0) {
    const QRational a = alpha * QRational(sign(n - m));
    for (int l = std::min(n, m); l <= std::max(n, m) - 1; ++l)
      add(a * q.pow(n + m - 1 - l), s * (n + m - 1) - (k - 1) - l * (s - 1));
  } else if (n >= 0 && m < 0) {
    for (int l = 0; l <= -m - 1; ++l) add(alpha * q.pow(n + m + l), (m + l) * (s - 1) + n * s + m - k);
    for (int l = 0; l <= n - 1; ++l) add(alpha * q.pow(m + l), (s - 1) * l + n + m * s - k);
  } else if (m >= 0 && n < 0) {
    for (int l1 = 0; l1 <= m - 1; ++l1) add(-alpha * q.pow(n + l1), (s - 1) * l1 + m + n * s - k);
    for (int l2 = 0; l2 <= -n - 1; ++l2) add(-alpha * q.pow(m + n + l2), (n + l2) * (s - 1) + n + m * s - k);
  } else {
    const QRational a = alpha * QRational(sign(n - m));
    for (int l = std::min(-n, -m); l <= std::max(-n, -m) - 1; ++l)
      add(a * q.pow(n + m + l), (m + n) * s + (s - 1) * l - k);
  }
  return {ctx, coeff};
}

bool check_skew(const SigmaDerivation& D1, const SigmaDerivation& D2) {
  return (der_bracket(D1, D2).coeff + der_bracket(D2, D1).coeff).is_zero();
}

LaurentPoly twisted_jacobi_sum(const TwistPtr& ctx, const LaurentPoly& a, const LaurentPoly& b,
                               const LaurentPoly& c) {
  const TwistContext& tc = *ctx;
  const LaurentPoly& factor = tc.twist_factor();
  LaurentPoly sum;
  auto cyclic_term = [&](const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) {
    const LaurentPoly inner = bracket_coeff(tc, y, z);
    sum += bracket_coeff(tc, tc.sigma(x), inner);
    sum += factor * bracket_coeff(tc, x, inner);
  };
  cyclic_term(a, b, c);
  cyclic_term(b, c, a);
  cyclic_term(c, a, b);
  return sum;
}

}  // namespace qwitt
