#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qeulerian/laurent.hpp"
#include "qeulerian/multipoly.hpp"
#include "qeulerian/qnumbers.hpp"
#include "qeulerian/qpoly.hpp"
#include "qeulerian/rational.hpp"

using namespace qe;

namespace {

Rational eval_at_q1(const MultiPoly& p) {
	std::array<Rational, kVarCount> point{};
	point[static_cast<std::size_t>(Var::q)] = Rational(1);
	return p.evaluate(point);
}

// Independent oracle: [n choose k]_q as the inversion-weighted sum over
// ordered partitions (A, B) of [n] with |A| = k, where inv(A, B) counts
// pairs a in A, b in B with a > b.
MultiPoly qbinomial_by_partitions(int n, int k) {
	MultiPoly sum;
	for (unsigned mask = 0; mask < (1u << n); ++mask) {
		if (__builtin_popcount(mask) != k)
			continue;
		int invs = 0;
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b)
				if ((mask >> a & 1) && !(mask >> b & 1) && a > b)
					++invs;
		sum.add_term(Monomial::of(Var::q, invs), Rational(1));
	}
	return sum;
}

std::mt19937_64 rng(12345);

MultiPoly random_poly() {
	std::uniform_int_distribution<int> coeff(-4, 4);
	std::uniform_int_distribution<int> var(0, static_cast<int>(kVarCount) - 1);
	std::uniform_int_distribution<int> exp(0, 2);
	std::uniform_int_distribution<int> nterms(0, 3);
	MultiPoly p;
	const int t = nterms(rng);
	for (int i = 0; i < t; ++i) {
		Monomial m = Monomial::of(static_cast<Var>(var(rng)), exp(rng));
		m = m * Monomial::of(static_cast<Var>(var(rng)), exp(rng));
		p.add_term(m, Rational(coeff(rng)));
	}
	return p;
}

QRatFunc random_ratfunc() {
	std::uniform_int_distribution<int> coeff(-4, 4);
	std::uniform_int_distribution<int> deg(0, 2);
	auto poly = [&] {
		std::vector<Rational> c(deg(rng) + 1, Rational(0));
		for (auto& v : c)
			v = Rational(coeff(rng));
		return QPoly(std::move(c));
	};
	QPoly den = poly();
	while (den.is_zero())
		den = poly();
	return QRatFunc(poly(), den);
}

} // namespace

TEST_CASE("rational basics") {
	CHECK(Rational(1, 3) + Rational(2, 5) == Rational(11, 15));
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(-3, 6).str() == "-1/2");
	CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
	CHECK(Rational("7/21") == Rational(1, 3));
	CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionError);
	CHECK(factorial(5) == Rational(120));
	CHECK(binomial(6, 2) == Rational(15));
}

TEST_CASE("qint examples") {
	CHECK(qint(0).is_zero());
	CHECK(qint(1) == MultiPoly(1));
	CHECK(qint(3).str() == "1 + q + q^2");
}

TEST_CASE("qfactorial examples and rendering") {
	CHECK(qfactorial(0) == MultiPoly(1));
	CHECK(qfactorial(2).str() == "1 + q");
	// (1+q)(1+q+q^2) expanded by hand.
	CHECK(qfactorial(3).str() == "1 + 2*q + 2*q^2 + q^3");
	CHECK(qfactorial(4).degree(Var::q) == 6);
}

TEST_CASE("qfactorial and qbinomial specialize to classical values") {
	for (int n = 0; n <= 12; ++n) {
		CHECK(eval_at_q1(qfactorial(n)) == factorial(n));
		for (int k = 0; k <= n; ++k)
			CHECK(eval_at_q1(qbinomial(n, k)) == binomial(n, k));
	}
}

TEST_CASE("qbinomial examples and partition oracle") {
	CHECK(qbinomial(4, 0) == MultiPoly(1));
	CHECK(qbinomial(2, 1).str() == "1 + q");
	CHECK(qbinomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");
	CHECK(qbinomial(2, 1) == qbinomial_by_partitions(2, 1));
	CHECK(qbinomial(4, 2) == qbinomial_by_partitions(4, 2));
	for (int n = 0; n <= 8; ++n)
		for (int k = 0; k <= n; ++k)
			CHECK(qbinomial(n, k) == qbinomial_by_partitions(n, k));
	CHECK_THROWS_AS(qbinomial(3, 4), DomainError);
	CHECK_THROWS_AS(qbinomial(3, -1), DomainError);
}

TEST_CASE("qbinomial symmetry") {
	for (int n = 0; n <= 12; ++n)
		for (int k = 0; k <= n; ++k)
			CHECK(qbinomial(n, k) == qbinomial(n, n - k));
}

TEST_CASE("rising factorial") {
	CHECK(rising_factorial(0) == MultiPoly(1));
	CHECK(rising_factorial(1) == MultiPoly::variable(Var::x));
	// x(x+1)(x+2) = x^3 + 3x^2 + 2x.
	CHECK(rising_factorial(3).str() == "2*x + 3*x^2 + x^3");
	CHECK(rising_factorial(3).coefficient(Monomial::of(Var::x, 2)) == Rational(3));
}

TEST_CASE("polynomial arithmetic") {
	const MultiPoly x = MultiPoly::variable(Var::x);
	const MultiPoly y = MultiPoly::variable(Var::y);
	CHECK((x + y) * (x - y) == x * x - y * y);

	// Substitution into a constant leaves it unchanged.
	const MultiPoly c(Rational(7, 3));
	const MultiPoly replacement = x + MultiPoly::variable(Var::u3) +
	                              MultiPoly::variable(Var::u4) - y;
	CHECK(c.substitute(Var::y, replacement) == c);

	// Coefficient of x^1 y^1 in the bivariate Eulerian for S_3.
	const MultiPoly a3 = x * x + (x * y).scaled(Rational(4)) + y * y;
	CHECK(a3.coefficient(Monomial::of(Var::x, 1) * Monomial::of(Var::y, 1)) == Rational(4));

	CHECK((x * x - y * y).exact_div(x - y) == x + y);
	CHECK_THROWS_AS((x * x + y).exact_div(x - y), DivisionError);
	CHECK_THROWS_AS(Monomial::of(Var::x, -1), DomainError);
}

TEST_CASE("simultaneous substitution differs from sequential") {
	const MultiPoly x = MultiPoly::variable(Var::x);
	const MultiPoly y = MultiPoly::variable(Var::y);
	const MultiPoly p = x - y;
	const MultiPoly swapped =
	    p.substitute_many({{Var::x, y}, {Var::y, x}});
	CHECK(swapped == y - x);
}

TEST_CASE("rendering order matches grading") {
	const MultiPoly p = MultiPoly::variable(Var::x) * MultiPoly::variable(Var::alpha) +
	                    MultiPoly::variable(Var::y) * MultiPoly::variable(Var::beta);
	CHECK(p.str() == "x*alpha + y*beta");
	MultiPoly mixed;
	mixed.add_term(Monomial::of(Var::q, 2), Rational(2));
	mixed.add_term(Monomial::unit(), Rational(1));
	mixed.add_term(Monomial::of(Var::q, 1), Rational(-1));
	CHECK(mixed.str() == "1 - q + 2*q^2");
}

TEST_CASE("ring axioms on random polynomials") {
	for (int trial = 0; trial < 1000; ++trial) {
		const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
	}
}

TEST_CASE("qratfunc examples") {
	const QRatFunc inv2q = QRatFunc(QPoly(1), qint_qpoly(2)); // 1/(1+q)
	CHECK(inv2q * QRatFunc(qint_qpoly(2)) == QRatFunc(1));
	CHECK(inv2q + inv2q == QRatFunc(QPoly(2), qint_qpoly(2)));

	// (1-q^2)/(1-q) reduces to 1+q.
	const QPoly one_minus_q2 = QPoly(1) - QPoly::q(2);
	const QPoly one_minus_q = QPoly(1) - QPoly::q(1);
	const QRatFunc reduced(one_minus_q2, one_minus_q);
	CHECK(reduced.is_polynomial());
	CHECK(reduced.to_qpoly() == qint_qpoly(2));

	CHECK_THROWS_AS(QRatFunc(1) / QRatFunc(), DivisionError);
	CHECK_THROWS_AS(inv2q.evaluate(Rational(-1)), DivisionError);
	CHECK(inv2q.evaluate(Rational(1)) == Rational(1, 2));
}

TEST_CASE("qratfunc outputs stay reduced") {
	for (int trial = 0; trial < 1000; ++trial) {
		const QRatFunc a = random_ratfunc(), b = random_ratfunc(), c = random_ratfunc();
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		for (const QRatFunc& v : {a + b, a * b, a - b}) {
			if (v.is_zero())
				continue;
			CHECK(v.den().leading().is_one());
			CHECK(QPoly::gcd(v.num(), v.den()).degree() == 0);
		}
	}
}

TEST_CASE("qratfunc equality by cross multiplication") {
	for (int trial = 0; trial < 200; ++trial) {
		const QRatFunc a = random_ratfunc(), b = random_ratfunc();
		const bool structural = a == b;
		const bool crossed = a.num() * b.den() == b.num() * a.den();
		CHECK(structural == crossed);
	}
}

TEST_CASE("qpoly gcd via primitive pseudo-remainders") {
	const QPoly a = qfactorial_qpoly(5);
	const QPoly b = qfactorial_qpoly(3) * qint_qpoly(7);
	const QPoly g = QPoly::gcd(a, b);
	// Common part is [3]_q! (as sets of cyclotomic factors [2][3] appear in both).
	CHECK(a.divmod(g).second.is_zero());
	CHECK(b.divmod(g).second.is_zero());
	CHECK(QPoly::gcd(QPoly(), a) == a.monic());
}

TEST_CASE("laurent polynomials carry negative powers") {
	const LaurentPolyQ l = LaurentPolyQ::with_q_inverted(qint(3)); // 1 + 1/q + 1/q^2
	CHECK(l.min_q_degree() == -2);
	CHECK(l.max_q_degree() == 0);
	CHECK_THROWS_AS(l.to_multipoly(), DomainError);
	CHECK(l.shifted_q(2).to_multipoly() == qint(3));

	const LaurentPolyQ p(qfactorial(3));
	CHECK(p.to_multipoly() == qfactorial(3));
	CHECK((l * LaurentPolyQ::q_power(2)).to_multipoly() == qint(3));
}

TEST_CASE("qratfunc laurent expansions") {
	// 1/(1-q) = 1 + q + q^2 + ...
	const QRatFunc geo(QPoly(1), QPoly(1) - QPoly::q(1));
	const auto at0 = geo.expansion_at_zero(0, 5);
	for (const auto& c : at0)
		CHECK(c == Rational(1));
	// At infinity: 1/(1-q) = -q^{-1} - q^{-2} - ...
	const auto atinf = geo.expansion_at_infinity(-3, 1);
	CHECK(atinf[3] == Rational(0));  // q^0
	CHECK(atinf[2] == Rational(-1)); // q^{-1}
	CHECK(atinf[1] == Rational(-1)); // q^{-2}

	// q^{-2}/(1+q): pole order 2 at zero.
	const QRatFunc pole = QRatFunc(QPoly(1), qint_qpoly(2)) * QRatFunc::q(-2);
	CHECK(pole.order_at_zero() == -2);
	const auto exp = pole.expansion_at_zero(-2, 1);
	CHECK(exp[0] == Rational(1));
	CHECK(exp[1] == Rational(-1));
	CHECK(exp[2] == Rational(1));
	CHECK(pole.substitute_q_inverse() == QRatFunc(QPoly::q(3), QPoly(1) + QPoly::q(1)));
}
