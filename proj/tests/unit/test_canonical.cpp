#include <gtest/gtest.h>

#include "qwitt/canonical.hpp"
#include "qwitt/random.hpp"
#include "support/parse_helpers.hpp"

using namespace qwitt;
using qwitt::testing::L;
using qwitt::testing::Q;

namespace {

SigmaDerivation D(const TwistPtr& ctx, std::string_view coeff) { return {ctx, L(coeff)}; }

ReducedForm R(std::initializer_list<std::string_view> xs) {
  ReducedForm r;
  for (auto x : xs) r.push_back(Q(x));
  return r;
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Canonical, Decompositions) {
  const TwistPtr ctx = TwistContext::create(2);
  const CanonicalForm t = canonical_form(D(ctx, "t"));
  EXPECT_EQ(t.alphas, R({"1/q"}));
  EXPECT_EQ(t.inner_witness, L("-1/q"));
  const CanonicalForm g = canonical_form(SigmaDerivation{ctx, ctx->image_gcd()});
  EXPECT_EQ(g.alphas, R({"0"}));
  EXPECT_EQ(g.inner_witness, LaurentPoly(1));
  const CanonicalForm d1 = canonical_form(basis_d(ctx, 1));
  EXPECT_EQ(d1.alphas, R({"-1/q"}));
  EXPECT_EQ(d1.inner_witness, L("1/q"));
}

TEST(Canonical, DegenerateContext) {
  const TwistPtr ctx = TwistContext::create(1);
  const SigmaDerivation x = D(ctx, "t^-2 + q*t");
  for (const CanonicalForm& cf : {canonical_form(x), canonical_form_by_division(x)}) {
    EXPECT_TRUE(cf.alphas.empty());
    EXPECT_EQ(cf.inner_witness, lp_exact_div(x.coeff, L("1 - q")));
  }
}

TEST(Canonical, BothRoutesAgreeAndReassemble) {
  for (int s : {-3, -2, -1, 0, 2, 3, 4}) {
    const TwistPtr ctx = TwistContext::create(s);
    SampleSource src(static_cast<std::uint64_t>(s + 17));
    for (int i = 0; i < 30; ++i) {
      const SigmaDerivation x{ctx, src.laurent({-8, 8}, 5)};
      const CanonicalForm cf = canonical_form(x);
      EXPECT_EQ(cf, canonical_form_by_division(x));
      EXPECT_EQ(reassemble(*ctx, cf), x.coeff);
      EXPECT_EQ(static_cast<int>(cf.alphas.size()), ctx->free_rank());
    }
    const CanonicalForm zero = canonical_form(SigmaDerivation{ctx, LaurentPoly()});
    EXPECT_TRUE(zero.inner_witness.is_zero());
    for (const auto& a : zero.alphas) EXPECT_TRUE(a.is_zero());
  }
}

TEST(Canonical, Congruences) {
  const TwistPtr two = TwistContext::create(2);
  EXPECT_TRUE(congruent_mod_inner(basis_d(two, 1), LaurentPoly(two->q().inverse()) * basis_d(two, 0)));
  EXPECT_FALSE(congruent_mod_inner(basis_d(two, 0), SigmaDerivation{two, LaurentPoly()}));
  const TwistPtr zero = TwistContext::create(0);
  EXPECT_TRUE(congruent_mod_inner(basis_d(zero, 1), LaurentPoly(zero->q()) * basis_d(zero, 0)));
}

TEST(Canonical, ReduceBasis) {
  const QRational q = QRational::q();
  EXPECT_EQ(reduce_basis(*TwistContext::create(2), 3), (ScaledBasis{q.pow(-3), 0}));
  EXPECT_EQ(reduce_basis(*TwistContext::create(3), 1), (ScaledBasis{QRational(1), 1}));
  EXPECT_EQ(reduce_basis(*TwistContext::create(0), 2), (ScaledBasis{q.pow(2), 0}));
  EXPECT_EQ(error_of([] { reduce_basis(*TwistContext::create(1), 2); }), "no free part");
  for (int s : {-2, 0, 3}) {
    const TwistPtr ctx = TwistContext::create(s);
    for (int m = -7; m <= 7; ++m) {
      const ScaledBasis b = reduce_basis(*ctx, m);
      EXPECT_TRUE(congruent_mod_inner(basis_d(ctx, m), LaurentPoly(b.factor) * basis_d(ctx, b.index)));
    }
  }
}

TEST(Canonical, GradedSplit) {
  const TwistPtr ctx = TwistContext::create(3);
  const SigmaDerivation x = D(ctx, "t + t^2 + t^3");
  const GradedSplit split = graded_split(x);
  EXPECT_EQ(split.modulus, 2);
  ASSERT_EQ(split.components.size(), 2u);
  // Components are Laurent polynomials in T, written in the variable t.
  EXPECT_EQ(split.components.at(0), L("1/q*t"));
  EXPECT_EQ(split.components.at(1), L("1 + 1/q*t"));
  EXPECT_EQ(reassemble(*ctx, split), x.coeff);

  const GradedSplit mono = graded_split(D(ctx, "t"));
  ASSERT_EQ(mono.components.size(), 1u);
  EXPECT_EQ(mono.components.at(1), LaurentPoly(1));

  for (int s : {-2, -1, 0, 1, 4}) {
    const TwistPtr c = TwistContext::create(s);
    const SigmaDerivation y = D(c, "t^-5 + q*t^-1 + 2*t^2 - t^7");
    EXPECT_EQ(reassemble(*c, graded_split(y)), y.coeff) << "s = " << s;
  }
}

TEST(Canonical, ModInnerBracket) {
  EXPECT_EQ(mod_inner_bracket(TwistContext::create(5), 1, 2), R({"0", "0", "0", "-1"}));
  EXPECT_EQ(mod_inner_bracket(TwistContext::create(3), 1, 2), R({"0", "-1/q"}));
  EXPECT_EQ(mod_inner_bracket(TwistContext::create(0), 0, 1), R({"q"}));
  EXPECT_EQ(error_of([] { mod_inner_bracket(TwistContext::create(1), 0, 1); }), "no free part");
}

TEST(Canonical, ModInnerBracketWithG) {
  EXPECT_EQ(mod_inner_bracket_g(TwistContext::create(2), 0, 0), R({"1"}));
  const TwistPtr two = TwistContext::create(2);
  EXPECT_EQ(der_bracket(basis_d(two, 0), two->image_gcd() * basis_d(two, 0)).coeff, L("-q*t"));
  EXPECT_EQ(mod_inner_bracket_g(TwistContext::create(3), 1, 0), R({"0", "2"}));
  // [d_n, g Delta] is congruent to d*d_n up to sign, for each 0 <= n < d.
  for (int s : {-2, 3, 4}) {
    const TwistPtr ctx = TwistContext::create(s);
    const int d = ctx->free_rank();
    for (int n = 0; n < d; ++n) {
      const ReducedForm r = reduce_mod_inner(der_bracket(basis_d(ctx, n), SigmaDerivation{ctx, ctx->image_gcd()}));
      ReducedForm want(static_cast<std::size_t>(d), QRational());
      want[static_cast<std::size_t>(n)] = QRational(d);
      ReducedForm neg = want;
      neg[static_cast<std::size_t>(n)] = QRational(-d);
      EXPECT_TRUE(r == want || r == neg) << "s=" << s << " n=" << n;
    }
  }
  EXPECT_EQ(error_of([] { mod_inner_bracket_g(TwistContext::create(3), 2, 0); }), "n must satisfy 0<=n<d");
}
