#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "qeulerian/errors.hpp"

namespace qe {

/// Exact rational scalar, kept in lowest terms with positive denominator.
/// Backed by GMP; immutable value semantics throughout the library.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(int n) : v_(n) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den) : v_(num, den) {
		if (den == 0)
			throw DivisionError("Rational: zero denominator");
		v_.canonicalize();
	}
	explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }
	explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	const mpq_class& raw() const { return v_; }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	Rational operator-() const { return Rational(mpq_class(-v_)); }
	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
	Rational& operator/=(const Rational& o) {
		if (o.is_zero())
			throw DivisionError("Rational: division by zero");
		v_ /= o.v_;
		return *this;
	}

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

	Rational inverse() const {
		if (is_zero())
			throw DivisionError("Rational: inverse of zero");
		return Rational(mpq_class(1) / v_);
	}

	/// Integer power; negative exponents invert (nonzero base required).
	Rational pow(long e) const {
		if (e == 0)
			return Rational(1);
		const Rational base = e < 0 ? inverse() : *this;
		const unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
		mpq_class r;
		mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
		mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
		return Rational(std::move(r));
	}

	Rational abs() const { return sign() < 0 ? -*this : *this; }

	std::string numerator_str() const { return v_.get_num().get_str(); }
	std::string denominator_str() const { return v_.get_den().get_str(); }
	std::string str() const { return v_.get_str(); }

	friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
	mpq_class v_;
};

Rational factorial(int n);
Rational binomial(int n, int k);

} // namespace qe
