#include <benchmark/benchmark.h>

#include "qeulerian/distribution.hpp"
#include "qeulerian/families.hpp"
#include "qeulerian/qcalculus.hpp"
#include "qeulerian/qnumbers.hpp"
#include "qeulerian/series_builders.hpp"

using namespace qe;

namespace {

const SubstitutionScheme kScheme{Rational(2), Rational(-1, 2), Rational(3),
                                 Rational(1, 3), Rational(5, 2), Rational(-2)};

void BM_qfactorial(benchmark::State& state) {
	for (auto _ : state)
		benchmark::DoNotOptimize(qfactorial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_qfactorial)->Arg(8)->Arg(12);

void BM_multipoly_mul(benchmark::State& state) {
	const MultiPoly a = lhs_family("p", 5);
	const MultiPoly b = lhs_family("stirling-eulerian", 5);
	for (auto _ : state)
		benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_multipoly_mul);

void BM_distribution_weighted(benchmark::State& state) {
	const int n = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(lhs_family("p-q", n));
}
BENCHMARK(BM_distribution_weighted)->Arg(6)->Arg(7);

void BM_qratfunc_mul(benchmark::State& state) {
	const QRatFunc a(qfactorial_qpoly(5), qfactorial_qpoly(3) * qint_qpoly(7));
	const QRatFunc b(qint_qpoly(6), qfactorial_qpoly(4));
	for (auto _ : state)
		benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_qratfunc_mul);

void BM_qpoly_gcd(benchmark::State& state) {
	const QPoly a = qfactorial_qpoly(9);
	const QPoly b = qfactorial_qpoly(7) * qint_qpoly(11);
	for (auto _ : state)
		benchmark::DoNotOptimize(QPoly::gcd(a, b));
}
BENCHMARK(BM_qpoly_gcd);

void BM_f_q_series(benchmark::State& state) {
	const int order = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(f_q_series(kScheme.u4(), kScheme, order));
}
BENCHMARK(BM_f_q_series)->Arg(5)->Arg(7);

void BM_product_expansion(benchmark::State& state) {
	const auto t = TSeries<MultiPoly>::monomial(1, MultiPoly(1), 7);
	for (auto _ : state)
		benchmark::DoNotOptimize(product_expansion(t, 12, 6));
}
BENCHMARK(BM_product_expansion);

void BM_first_bracket_product(benchmark::State& state) {
	const int n = static_cast<int>(state.range(0));
	const int window = n * (n - 1) / 2 + 1;
	for (auto _ : state)
		benchmark::DoNotOptimize(first_bracket_product(kScheme, window, n));
}
BENCHMARK(BM_first_bracket_product)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
