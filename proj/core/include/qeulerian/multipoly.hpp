#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeulerian/rational.hpp"

namespace qe {

/// The fixed variable alphabet. Every multivariate polynomial in the library
/// lives in Q[x, y, u1, u2, u3, u4, alpha, beta, q].
enum class Var : unsigned char { x, y, u1, u2, u3, u4, alpha, beta, q };

inline constexpr std::size_t kVarCount = 9;

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using ExponentVec = std::array<std::int16_t, kVarCount>;

struct Monomial {
	ExponentVec e{};

	int degree() const {
		int d = 0;
		for (auto k : e) d += k;
		return d;
	}
	int exponent(Var v) const { return e[static_cast<std::size_t>(v)]; }

	static Monomial unit() { return {}; }
	static Monomial of(Var v, int k = 1);

	Monomial operator*(const Monomial& o) const;
	bool divides(const Monomial& o) const;
	Monomial divided_by(const Monomial& o) const;

	friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first; within a degree, lexicographically
/// larger exponent vectors come first, so rendering yields e.g.
/// "x*alpha + y*beta" and ascending powers of a single variable.
struct MonomialOrder {
	bool operator()(const Monomial& a, const Monomial& b) const {
		const int da = a.degree(), db = b.degree();
		if (da != db) return da < db;
		return a.e > b.e;
	}
};

/// Sparse exact multivariate polynomial over the fixed alphabet.
/// Invariant: no stored zero coefficients; exponents are nonnegative.
class MultiPoly {
public:
	using TermMap = std::map<Monomial, Rational, MonomialOrder>;

	MultiPoly() = default;
	MultiPoly(int c) : MultiPoly(Rational(c)) {}
	MultiPoly(const Rational& c);

	static MultiPoly variable(Var v, int exponent = 1);
	static MultiPoly monomial(const Monomial& m, const Rational& c);

	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	/// Constant term; the whole value when is_constant().
	Rational constant_value() const;

	const TermMap& terms() const { return terms_; }
	std::size_t term_count() const { return terms_.size(); }

	MultiPoly operator-() const;
	MultiPoly& operator+=(const MultiPoly& o);
	MultiPoly& operator-=(const MultiPoly& o);
	friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
	friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
	friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
	MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
	friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

	MultiPoly scaled(const Rational& c) const;
	MultiPoly pow(int e) const;

	/// Exact quotient; throws DivisionError when the division is not exact.
	MultiPoly exact_div(const MultiPoly& divisor) const;

	void add_term(const Monomial& m, const Rational& c);

	MultiPoly substitute(Var v, const Rational& value) const;
	MultiPoly substitute(Var v, const MultiPoly& value) const;
	/// Simultaneous substitution; variables absent from the map are kept.
	MultiPoly substitute_many(const std::map<Var, MultiPoly>& values) const;

	Rational evaluate(const std::array<Rational, kVarCount>& point) const;

	/// Coefficient of one exact monomial, as a scalar.
	Rational coefficient(const Monomial& m) const;
	/// Collects terms whose exponents match exactly on the listed variables;
	/// returns the polynomial in the remaining variables.
	MultiPoly coefficient_of(std::initializer_list<std::pair<Var, int>> fixed) const;

	int degree(Var v) const;
	int total_degree() const;
	bool involves(Var v) const { return degree(v) > 0; }

	/// True when every coefficient is a nonnegative rational.
	bool has_nonnegative_coefficients() const;
	/// True when every coefficient is an integer.
	bool has_integer_coefficients() const;

	/// Canonical rendering, terms in the graded order above,
	/// e.g. "1 + 2*q + 2*q^2 + q^3".
	std::string str() const;

	friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
	TermMap terms_;
};

} // namespace qe
