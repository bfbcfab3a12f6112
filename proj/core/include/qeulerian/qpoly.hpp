#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qeulerian/multipoly.hpp"
#include "qeulerian/rational.hpp"

namespace qe {

/// Dense univariate polynomial in q over the rationals.
/// Invariant: coefficient vector is empty (zero polynomial) or has a nonzero
/// leading entry.
class QPoly {
public:
	QPoly() = default;
	QPoly(int c) : QPoly(Rational(c)) {}
	QPoly(const Rational& c);
	explicit QPoly(std::vector<Rational> coeffs);

	static QPoly q(int exponent = 1);

	bool is_zero() const { return c_.empty(); }
	bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
	/// Degree; -1 for the zero polynomial.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	/// Order of vanishing at q = 0; -1 for the zero polynomial.
	int low_degree() const;
	const Rational& leading() const;
	Rational coefficient(int k) const;
	const std::vector<Rational>& coefficients() const { return c_; }

	QPoly operator-() const;
	friend QPoly operator+(const QPoly& a, const QPoly& b);
	friend QPoly operator-(const QPoly& a, const QPoly& b);
	friend QPoly operator*(const QPoly& a, const QPoly& b);
	QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
	QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
	QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
	friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

	QPoly scaled(const Rational& c) const;
	QPoly pow(int e) const;
	QPoly shifted(int k) const; // multiply by q^k, k >= 0

	/// Quotient and remainder over the rational field.
	std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
	QPoly exact_div(const QPoly& divisor) const;

	/// Monic gcd, computed by a fraction-free primitive pseudo-remainder
	/// sequence over the integers.
	static QPoly gcd(const QPoly& a, const QPoly& b);

	QPoly monic() const;
	Rational evaluate(const Rational& q) const;
	/// Coefficients reversed: q^deg * p(1/q).
	QPoly reversed() const;

	/// First `count` coefficients of 1/p as a power series in q; requires
	/// p(0) != 0.
	std::vector<Rational> inverse_series(int count) const;

	static QPoly from_multipoly(const MultiPoly& p);
	MultiPoly to_multipoly() const;

	std::string str() const;

private:
	void trim();
	std::vector<Rational> c_;
};

/// Reduced ratio of two q-polynomials: denominator monic and nonzero,
/// gcd(numerator, denominator) = 1. The coefficient field for q-series work.
class QRatFunc {
public:
	QRatFunc() : num_(), den_(1) {}
	QRatFunc(int c) : num_(c), den_(1) {}
	QRatFunc(const Rational& c) : num_(c), den_(1) {}
	QRatFunc(QPoly p) : num_(std::move(p)), den_(1) {}
	QRatFunc(QPoly numerator, QPoly denominator);

	static QRatFunc q(int exponent = 1);

	const QPoly& num() const { return num_; }
	const QPoly& den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_polynomial() const { return den_.is_one(); }
	/// Numerator as a polynomial; requires a trivial denominator.
	QPoly to_qpoly() const;

	QRatFunc operator-() const;
	friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b);
	friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b);
	friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b);
	friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b);
	QRatFunc& operator+=(const QRatFunc& o) { return *this = *this + o; }
	QRatFunc& operator-=(const QRatFunc& o) { return *this = *this - o; }
	QRatFunc& operator*=(const QRatFunc& o) { return *this = *this * o; }
	QRatFunc& operator/=(const QRatFunc& o) { return *this = *this / o; }
	friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
		return a.num_ == b.num_ && a.den_ == b.den_;
	}

	QRatFunc inverse() const;
	QRatFunc pow(int e) const;

	/// Evaluation at a rational point; throws DivisionError at a pole.
	Rational evaluate(const Rational& q) const;

	/// The rational function of 1/q, as a reduced rational function of q.
	QRatFunc substitute_q_inverse() const;

	/// Laurent coefficients at q = 0 for exponents lo..hi-1, ascending.
	std::vector<Rational> expansion_at_zero(int lo, int hi) const;
	/// Laurent coefficients of the expansion at q = infinity for exponents
	/// lo..hi-1, ascending (entry k is the coefficient of q^{lo+k}).
	std::vector<Rational> expansion_at_infinity(int lo, int hi) const;

	/// Valuation at q = 0 (min Laurent exponent); only for nonzero values.
	int order_at_zero() const;
	/// Degree at infinity: deg(num) - deg(den); only for nonzero values.
	int degree_at_infinity() const;

	std::string str() const;

private:
	void reduce();
	QPoly num_, den_;
};

} // namespace qe
