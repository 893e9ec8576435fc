#include <gtest/gtest.h>

#include "qwitt/ore.hpp"
#include "qwitt/random.hpp"
#include "support/parse_helpers.hpp"

using namespace qwitt;
using qwitt::testing::L;

namespace {

OrePoly X(const SigmaDerivation& twist) { return OrePoly::term(twist, LaurentPoly(1), 1); }
OrePoly A(const SigmaDerivation& twist, std::string_view a) { return OrePoly::term(twist, L(a), 0); }

}  // namespace

TEST(Ore, RewriteRule) {
  const TwistPtr ctx = TwistContext::create(2);
  const SigmaDerivation delta{ctx, LaurentPoly(1)};
  EXPECT_EQ(ore_mul(X(delta), A(delta, "t")), OrePoly::term(delta, L("q*t^2"), 1) + A(delta, "t"));
  const OrePoly u = X(delta) + A(delta, "t^-1 - q");
  EXPECT_EQ(u * A(delta, "1"), u);
  EXPECT_EQ(A(delta, "1") * u, u);
}

TEST(Ore, AssociativityOnXXt) {
  const TwistPtr ctx = TwistContext::create(2);
  const SigmaDerivation delta{ctx, LaurentPoly(1)};
  const OrePoly lhs = (X(delta) * X(delta)) * A(delta, "t");
  const OrePoly rhs = X(delta) * (X(delta) * A(delta, "t"));
  EXPECT_EQ(lhs, rhs);
  // X^2 t = q^3 t^4 X^2 + (2q t^2 + q^2 t^3) X + t.
  EXPECT_EQ(lhs.coeff(2), L("q^3*t^4"));
  EXPECT_EQ(lhs.coeff(1), L("2*q*t^2 + q^2*t^3"));
  EXPECT_EQ(lhs.coeff(0), L("t"));
}

TEST(Ore, Untwist) {
  const TwistPtr ctx = TwistContext::create(2);
  const SigmaDerivation inner = der_inner_from(ctx, L("t"));
  const OrePoly xt = X(inner) * A(inner, "t");
  EXPECT_EQ(xt, OrePoly::term(inner, L("q*t^2"), 1) + A(inner, "t^2 - q*t^3"));
  const OrePoly image = ore_untwist(xt);
  const OrePoly expected = OrePoly::term(image.twist(), L("q*t^2"), 1) + OrePoly::term(image.twist(), L("t^2"), 0);
  EXPECT_EQ(image, expected);
  EXPECT_EQ(ore_untwist(X(inner)) * ore_untwist(A(inner, "t")), expected);
  EXPECT_EQ(ore_untwist(A(inner, "t^-2 + 3")), OrePoly::term(image.twist(), L("t^-2 + 3"), 0));
  EXPECT_EQ(ore_untwist(A(inner, "1")), OrePoly::term(image.twist(), LaurentPoly(1), 0));
  EXPECT_TRUE(image.twist().coeff.is_zero());
}

TEST(Ore, UntwistRejectsNonInnerTwist) {
  const TwistPtr ctx = TwistContext::create(2);
  const SigmaDerivation delta{ctx, LaurentPoly(1)};
  try {
    ore_untwist(X(delta));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "not an inner twist");
  }
}

TEST(Ore, MismatchedTwists) {
  const TwistPtr ctx = TwistContext::create(2);
  const SigmaDerivation a{ctx, LaurentPoly(1)};
  const SigmaDerivation b{ctx, L("t")};
  try {
    X(a) * X(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "context mismatch");
  }
}

TEST(Ore, RandomizedAssociativity) {
  for (int s : {-2, 0, 3}) {
    const TwistPtr ctx = TwistContext::create(s);
    for (const SigmaDerivation& twist :
         {SigmaDerivation{ctx, LaurentPoly(1)}, SigmaDerivation{ctx, ctx->image_gcd()}, SigmaDerivation{ctx, L("t")}}) {
      SampleSource src(static_cast<std::uint64_t>(s + 1000));
      for (int i = 0; i < 10; ++i) {
        auto draw = [&] {
          OrePoly::Coeffs cs;
          const int deg = src.uniform(0, 2);
          for (int k = 0; k <= deg; ++k) cs[k] = src.laurent({-2, 2}, 2);
          return OrePoly(twist, cs);
        };
        const OrePoly u = draw(), v = draw(), w = draw();
        EXPECT_EQ((u * v) * w, u * (v * w));
      }
    }
  }
}
