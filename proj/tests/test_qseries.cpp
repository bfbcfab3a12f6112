#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qeulerian/qcalculus.hpp"
#include "qeulerian/qnumbers.hpp"
#include "qeulerian/tseries.hpp"

using namespace qe;

namespace {

std::mt19937_64 rng(777);

QRatFunc inv_qfact(int n) {
	return QRatFunc(QPoly(1), qfactorial_qpoly(n));
}

TSeries<QRatFunc> random_poly_series(int order, bool zero_constant) {
	std::uniform_int_distribution<int> coeff(-3, 3);
	std::uniform_int_distribution<int> deg(0, 2);
	TSeries<QRatFunc> f(order);
	for (int m = zero_constant ? 1 : 0; m <= order; ++m) {
		std::vector<Rational> c(deg(rng) + 1, Rational(0));
		for (auto& v : c)
			v = Rational(coeff(rng));
		f.set(m, QRatFunc(QPoly(std::move(c))));
	}
	return f;
}

Rational eval_q1(const QRatFunc& v) {
	return v.evaluate(Rational(1));
}

} // namespace

TEST_CASE("delta_t monomial action") {
	// t^2/[2]_q! -> t
	TSeries<QRatFunc> f(3);
	f.set(2, inv_qfact(2));
	const TSeries<QRatFunc> d = delta_t(f);
	CHECK(d[1] == QRatFunc(1));
	CHECK(d[0].is_zero());
	CHECK(d.order() == 2);

	// Constants die, t -> 1.
	const auto c5 = TSeries<QRatFunc>::constant(QRatFunc(5), 4);
	CHECK(delta_t(c5).is_zero());
	const auto t = TSeries<QRatFunc>::monomial(1, QRatFunc(1), 2);
	CHECK(delta_t(t)[0] == QRatFunc(1));

	// General monomial rule t^n -> [n]_q t^{n-1}.
	for (int n = 1; n <= 5; ++n) {
		const auto tn = TSeries<QRatFunc>::monomial(n, QRatFunc(1), 6);
		CHECK(delta_t(tn)[n - 1] == QRatFunc(qint_qpoly(n)));
	}

	CHECK_THROWS_AS(delta_t(TSeries<QRatFunc>::constant(QRatFunc(1), 0)), DomainError);
	CHECK_THROWS_AS(delta_t(TSeries<Rational>::monomial(1, Rational(1), 2)),
	                CapabilityError);
}

TEST_CASE("delta_t is linear") {
	const auto f = random_poly_series(5, false);
	const auto g = random_poly_series(5, false);
	CHECK(delta_t(f + g) == delta_t(f) + delta_t(g));
	CHECK(delta_t(f.scaled(QRatFunc(7))) == delta_t(f).scaled(QRatFunc(7)));
}

TEST_CASE("exp_q examples") {
	const auto e = exp_q_series(QRatFunc(1), 2);
	CHECK(e[0] == QRatFunc(1));
	CHECK(e[1] == QRatFunc(1));
	CHECK(e[2] == QRatFunc(QPoly(1), qint_qpoly(2)));
	CHECK(e.str() == "1 + t + (1/(1 + q))*t^2 + O(t^3)");

	CHECK(exp_q_series(QRatFunc(), 5) ==
	      TSeries<QRatFunc>::constant(QRatFunc(1), 5));
	const auto e3 = exp_q_series(QRatFunc(3), 1);
	CHECK(e3[1] == QRatFunc(3));

	// delta_t(exp_q) = exp_q.
	const auto e6 = exp_q_series(QRatFunc(1), 6);
	CHECK(delta_t(e6) == e6.truncated(5));

	CHECK_THROWS_AS(exp_q_series(MultiPoly(1), 3), CapabilityError);
}

TEST_CASE("series calculus") {
	// Geometric series.
	TSeries<QRatFunc> one_minus_t(5);
	one_minus_t.set(0, QRatFunc(1));
	one_minus_t.set(1, QRatFunc(-1));
	const auto geo = invert(one_minus_t);
	for (int m = 0; m <= 5; ++m)
		CHECK(geo[m] == QRatFunc(1));

	// exp(log(1+t)) = 1 + t.
	TSeries<Rational> one_plus_t(6);
	one_plus_t.set(0, Rational(1));
	one_plus_t.set(1, Rational(1));
	CHECK(series_exp(series_log(one_plus_t)) == one_plus_t);

	// Square root squares back, and has the binomial-series coefficients.
	const auto root = pow_rational(one_plus_t, Rational(1, 2));
	CHECK(root * root == one_plus_t);
	CHECK(root[1] == Rational(1, 2));
	CHECK(root[2] == Rational(-1, 8));
	CHECK(root[3] == Rational(1, 16));

	// Scaling by c=1, j=0 is the identity.
	const auto f = random_poly_series(5, false);
	CHECK(scale_argument(f, Rational(1), 0) == f);

	TSeries<MultiPoly> bad(3);
	bad.set(0, MultiPoly::variable(Var::x));
	CHECK_THROWS_AS(invert(bad), DivisionError);
}

TEST_CASE("bracket power") {
	// t^[3] = t^3/[3]_q!.
	const auto t = TSeries<QRatFunc>::monomial(1, QRatFunc(1), 4);
	const auto t3 = bracket_power(t, 3);
	CHECK(t3[3] == inv_qfact(3));
	CHECK(t3[0].is_zero());
	CHECK(t3[1].is_zero());
	CHECK(t3[2].is_zero());

	// f^[0] = 1 regardless of f.
	const auto f = random_poly_series(4, true);
	CHECK(bracket_power(f, 0) == TSeries<QRatFunc>::constant(QRatFunc(1), 4));

	// k = 1 is the identity.
	const auto t2 = TSeries<QRatFunc>::monomial(2, QRatFunc(1), 5);
	CHECK(bracket_power(t2, 1) == t2);

	TSeries<QRatFunc> with_const(3);
	with_const.set(0, QRatFunc(2));
	CHECK_THROWS_AS(bracket_power(with_const, 2), DomainError);
}

TEST_CASE("bracket power satisfies the defining recursion") {
	for (int trial = 0; trial < 5; ++trial) {
		const auto f = random_poly_series(6, true);
		const auto df = delta_t(f);
		auto prev = bracket_power(f, 0);
		for (int k = 1; k <= 6; ++k) {
			const auto cur = bracket_power(f, k);
			CHECK(delta_t(cur) == (df * prev.truncated(5)).truncated(5));
			CHECK(cur[0].is_zero());
			prev = cur;
		}
	}
}

TEST_CASE("q composition") {
	// g[t] = g for random g.
	const auto t = TSeries<QRatFunc>::monomial(1, QRatFunc(1), 5);
	for (int trial = 0; trial < 5; ++trial) {
		const auto g = random_poly_series(5, false);
		CHECK(q_compose(g, t) == g);
	}

	// exp_q[t] = exp_q.
	const auto e = exp_q_series(QRatFunc(1), 5);
	CHECK(q_compose(e, t) == e);

	// exp_q[2t] has t^2 coefficient 4/[2]_q!.
	const auto two_t = TSeries<QRatFunc>::monomial(1, QRatFunc(2), 4);
	const auto e2 = q_compose(exp_q_series(QRatFunc(1), 4), two_t);
	CHECK(e2[2] == QRatFunc(QPoly(4), qint_qpoly(2)));

	CHECK_THROWS_AS(q_compose(e, e), DomainError); // inner constant term nonzero
}

TEST_CASE("product expansion") {
	// f = t reproduces exp_q in q-degrees < K.
	const int window = 12;
	const auto t = TSeries<MultiPoly>::monomial(1, MultiPoly(1), 7);
	const auto prod = product_expansion(t, window, 6);
	for (int n = 0; n <= 6; ++n) {
		const MultiPoly lhs = truncate_q_degrees(prod[n] * qfactorial(n), window);
		CHECK(lhs == truncate_q_degrees(MultiPoly(1), window));
	}

	// f = 0 gives exactly 1.
	const TSeries<MultiPoly> zero(7);
	CHECK(product_expansion(zero, 3, 6) ==
	      TSeries<MultiPoly>::constant(MultiPoly(1), 6));

	// Random cubic against the q-composition oracle.
	std::uniform_int_distribution<int> coeff(-2, 2);
	for (int trial = 0; trial < 3; ++trial) {
		TSeries<MultiPoly> f(9);
		for (int m = 1; m <= 3; ++m)
			f.set(m, MultiPoly(Rational(coeff(rng))) +
			             MultiPoly::variable(Var::q).scaled(Rational(coeff(rng))));
		const auto p = product_expansion(f, window, 8);
		std::vector<MultiPoly> f_egf(10);
		for (int m = 0; m <= 9; ++m)
			f_egf[m] = f[m] * qfactorial(m);
		const auto oracle = exp_q_compose_egf(f_egf);
		for (int n = 0; n <= 8; ++n)
			CHECK(truncate_q_degrees(p[n] * qfactorial(n), window) ==
			      truncate_q_degrees(oracle[n], window));
	}

	CHECK_THROWS_AS(product_expansion(t, 0, 5), DomainError);
	CHECK_THROWS_AS(product_expansion(TSeries<Rational>::monomial(1, Rational(1), 5), 3, 4),
	                CapabilityError);
}

TEST_CASE("q integral") {
	// Monomial actions.
	const auto one = TSeries<QRatFunc>::constant(QRatFunc(1), 2);
	CHECK(q_integral(one, QDirection::q)[1] == QRatFunc(1));

	const auto t = TSeries<QRatFunc>::monomial(1, QRatFunc(1), 2);
	CHECK(q_integral(t, QDirection::q)[2] == QRatFunc(QPoly(1), qint_qpoly(2)));
	CHECK(q_integral(t, QDirection::q_inverse)[2] ==
	      QRatFunc(QPoly::q(1), qint_qpoly(2)));

	// Fundamental theorem: delta after integral is the identity.
	for (int trial = 0; trial < 5; ++trial) {
		const auto f = random_poly_series(5, false);
		CHECK(delta_t(q_integral(f, QDirection::q)) == f);
	}

	CHECK_THROWS_AS(q_integral(TSeries<MultiPoly>::constant(MultiPoly(1), 2),
	                           QDirection::q),
	                CapabilityError);
}

TEST_CASE("ring capabilities") {
	constexpr RingCapabilities rational = ring_capabilities<Rational>();
	CHECK(rational.has_division);
	CHECK_FALSE(rational.has_q_variable);
	CHECK(rational.has_rational_scalars);

	constexpr RingCapabilities poly = ring_capabilities<MultiPoly>();
	CHECK_FALSE(poly.has_division);
	CHECK(poly.has_q_variable);

	constexpr RingCapabilities laurent = ring_capabilities<LaurentPolyQ>();
	CHECK_FALSE(laurent.has_division);
	CHECK(laurent.has_q_variable);

	constexpr RingCapabilities field = ring_capabilities<QRatFunc>();
	CHECK(field.has_division);
	CHECK(field.has_q_variable);
}

TEST_CASE("product expansion over the Laurent ring") {
	// Same contract as the polynomial ring; negative powers are permitted
	// in the coefficients even though none arise for this f.
	const auto t = TSeries<LaurentPolyQ>::monomial(1, LaurentPolyQ(1), 5);
	const auto prod = product_expansion(t, 8, 4);
	for (int n = 0; n <= 4; ++n) {
		const LaurentPolyQ scaled = prod[n] * LaurentPolyQ(qfactorial(n));
		const LaurentPolyQ residual = scaled - LaurentPolyQ(1);
		if (!residual.is_zero())
			CHECK(residual.min_q_degree() >= 8);
	}
}

TEST_CASE("q operations at q = 1 reduce to classical calculus") {
	std::uniform_int_distribution<int> coeff(-3, 3);
	for (int trial = 0; trial < 20; ++trial) {
		// Rational-coefficient series, compared through the q = 1 lens.
		const int order = 5;
		TSeries<QRatFunc> fq(order), gq(order);
		TSeries<Rational> fr(order), gr(order);
		for (int m = 0; m <= order; ++m) {
			const Rational a(coeff(rng)), b(coeff(rng));
			if (m > 0) {
				fq.set(m, QRatFunc(a));
				fr.set(m, a);
			}
			gq.set(m, QRatFunc(b));
			gr.set(m, b);
		}

		// Composition: the EGF normalization cancels at q = 1, so g[f]
		// becomes the ordinary substitution g(f(t)).
		const auto qc = q_compose(gq, fq);
		TSeries<Rational> classical(order);
		{
			TSeries<Rational> fp = TSeries<Rational>::constant(Rational(1), order);
			for (int n = 0; n <= order; ++n) {
				if (n > 0)
					fp = fp * fr;
				classical = classical + fp.scaled(gr[n]);
			}
		}
		for (int m = 0; m <= order; ++m)
			CHECK(eval_q1(qc[m]) == classical[m]);

		// Exponential.
		const auto eq = exp_q_series(QRatFunc(3), order);
		const auto er = series_exp(TSeries<Rational>::monomial(1, Rational(3), order));
		for (int m = 0; m <= order; ++m)
			CHECK(eval_q1(eq[m]) == er[m]);

		// Integration.
		const auto iq = q_integral(fq, QDirection::q);
		const auto ir = integrate_t(fr);
		for (int m = 0; m <= order + 1; ++m)
			CHECK(eval_q1(iq[m]) == ir[m]);
	}
}
