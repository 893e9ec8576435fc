#include <benchmark/benchmark.h>

#include "qwitt/canonical.hpp"
#include "qwitt/derivation.hpp"
#include "qwitt/ore.hpp"
#include "qwitt/random.hpp"

using namespace qwitt;

namespace {

void BM_RationalArithmetic(benchmark::State& state) {
  const QRational a = QRational(QPoly(std::vector<Rational>{1, 2, 3})) / QRational(QPoly(std::vector<Rational>{0, 1, 1}));
  const QRational b = QRational::q().pow(-3) + QRational(Rational(5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RationalArithmetic);

void BM_Generator(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  const LaurentPoly f = LaurentPoly::t_power(8) + LaurentPoly::t_power(-8);
  for (auto _ : state) benchmark::DoNotOptimize(ctx->generator(f));
}
BENCHMARK(BM_Generator)->Arg(-3)->Arg(2)->Arg(4);

void BM_BasisBracket(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int n = -8; n <= 8; ++n) benchmark::DoNotOptimize(der_bracket(basis_d(ctx, n), basis_d(ctx, 8 - n)));
}
BENCHMARK(BM_BasisBracket)->Arg(-3)->Arg(2)->Arg(4);

void BM_FourCase(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (int n = -8; n <= 8; ++n) benchmark::DoNotOptimize(bracket_four_case(ctx, n, 8 - n));
}
BENCHMARK(BM_FourCase)->Arg(-3)->Arg(2)->Arg(4);

void BM_TwistedJacobi(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        twisted_jacobi_sum(ctx, LaurentPoly::t_power(-4), LaurentPoly::t_power(3), LaurentPoly::t_power(4)));
}
BENCHMARK(BM_TwistedJacobi)->Arg(-3)->Arg(2)->Arg(4);

// Production modular reduction against the valuation-raising division route.
void BM_CanonicalModular(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  SampleSource src(1);
  const SigmaDerivation D{ctx, src.nonzero_laurent({-8, 8}, 6)};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(D));
}
BENCHMARK(BM_CanonicalModular)->Arg(-3)->Arg(2)->Arg(4);

void BM_CanonicalDivision(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  SampleSource src(1);
  const SigmaDerivation D{ctx, src.nonzero_laurent({-8, 8}, 6)};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form_by_division(D));
}
BENCHMARK(BM_CanonicalDivision)->Arg(-3)->Arg(2)->Arg(4);

void BM_OreProduct(benchmark::State& state) {
  const TwistPtr ctx = TwistContext::create(static_cast<int>(state.range(0)));
  const SigmaDerivation twist{ctx, LaurentPoly(1)};
  SampleSource src(2);
  auto draw = [&] {
    OrePoly::Coeffs cs;
    for (int k = 0; k <= 2; ++k) cs[k] = src.nonzero_laurent({-2, 2}, 2);
    return OrePoly(twist, cs);
  };
  const OrePoly u = draw(), v = draw();
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
}
BENCHMARK(BM_OreProduct)->Arg(-2)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
