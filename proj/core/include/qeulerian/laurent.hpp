#pragma once

#include <map>
#include <string>

#include "qeulerian/multipoly.hpp"

namespace qe {

/// Laurent polynomial in q whose coefficients are polynomials in the
/// remaining variables. The only type in the library that carries negative
/// q-exponents. Invariant: no stored zero coefficients, and no coefficient
/// involves q itself.
class LaurentPolyQ {
public:
	LaurentPolyQ() = default;
	LaurentPolyQ(int c) : LaurentPolyQ(MultiPoly(c)) {}
	LaurentPolyQ(const Rational& c) : LaurentPolyQ(MultiPoly(c)) {}
	/// Splits the q-powers of an ordinary polynomial.
	LaurentPolyQ(const MultiPoly& p);

	static LaurentPolyQ q_power(int exponent);
	/// Image of p under q -> 1/q (q-exponents negated).
	static LaurentPolyQ with_q_inverted(const MultiPoly& p);

	bool is_zero() const { return terms_.empty(); }
	const std::map<int, MultiPoly>& terms() const { return terms_; }

	int min_q_degree() const;
	int max_q_degree() const;
	MultiPoly coefficient(int q_exponent) const;

	LaurentPolyQ operator-() const;
	LaurentPolyQ& operator+=(const LaurentPolyQ& o);
	LaurentPolyQ& operator-=(const LaurentPolyQ& o);
	friend LaurentPolyQ operator+(LaurentPolyQ a, const LaurentPolyQ& b) { return a += b; }
	friend LaurentPolyQ operator-(LaurentPolyQ a, const LaurentPolyQ& b) { return a -= b; }
	friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
	LaurentPolyQ& operator*=(const LaurentPolyQ& o) { return *this = *this * o; }
	friend bool operator==(const LaurentPolyQ& a, const LaurentPolyQ& b) {
		return a.terms_ == b.terms_;
	}

	LaurentPolyQ scaled(const Rational& c) const;
	LaurentPolyQ shifted_q(int k) const;
	/// Keeps only q-exponents in the closed window [lo, hi].
	LaurentPolyQ truncated(int lo, int hi) const;

	/// Conversion back to an ordinary polynomial; requires min degree >= 0.
	MultiPoly to_multipoly() const;

	void add_term(int q_exponent, const MultiPoly& coeff);

	std::string str() const;

private:
	std::map<int, MultiPoly> terms_;
};

} // namespace qe
