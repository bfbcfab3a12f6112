#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qeulerian/errors.hpp"
#include "qeulerian/laurent.hpp"
#include "qeulerian/multipoly.hpp"
#include "qeulerian/qnumbers.hpp"
#include "qeulerian/qpoly.hpp"
#include "qeulerian/rational.hpp"

namespace qe {

/// What a coefficient ring supports; operations check these before running.
struct RingCapabilities {
	bool has_division = false;
	bool has_q_variable = false;
	bool has_rational_scalars = false;
};

template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
	static constexpr bool kHasDivision = true;
	static constexpr bool kHasQ = false;
	static constexpr const char* kName = "rational";
	static Rational zero() { return Rational(0); }
	static Rational one() { return Rational(1); }
	static Rational from_rational(const Rational& c) { return c; }
	static bool is_zero(const Rational& v) { return v.is_zero(); }
	static std::optional<Rational> invert(const Rational& v) {
		if (v.is_zero())
			return std::nullopt;
		return v.inverse();
	}
	static Rational qint_element(int) {
		throw CapabilityError("rational ring has no q variable");
	}
	static Rational q_power(int) {
		throw CapabilityError("rational ring has no q variable");
	}
	static Rational from_qpoly(const QPoly&) {
		throw CapabilityError("rational ring has no q variable");
	}
	static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct RingTraits<MultiPoly> {
	static constexpr bool kHasDivision = false;
	static constexpr bool kHasQ = true;
	static constexpr const char* kName = "multipoly";
	static MultiPoly zero() { return MultiPoly(); }
	static MultiPoly one() { return MultiPoly(1); }
	static MultiPoly from_rational(const Rational& c) { return MultiPoly(c); }
	static bool is_zero(const MultiPoly& v) { return v.is_zero(); }
	static std::optional<MultiPoly> invert(const MultiPoly& v) {
		if (!v.is_constant() || v.is_zero())
			return std::nullopt;
		return MultiPoly(v.constant_value().inverse());
	}
	static MultiPoly qint_element(int n) { return qint(n); }
	static MultiPoly q_power(int j) {
		if (j < 0)
			throw CapabilityError("multipoly ring rejects negative q powers");
		return MultiPoly::variable(Var::q, j);
	}
	static MultiPoly from_qpoly(const QPoly& p) { return p.to_multipoly(); }
	static std::string str(const MultiPoly& v) { return v.str(); }
};

template <>
struct RingTraits<LaurentPolyQ> {
	static constexpr bool kHasDivision = false;
	static constexpr bool kHasQ = true;
	static constexpr const char* kName = "laurent";
	static LaurentPolyQ zero() { return LaurentPolyQ(); }
	static LaurentPolyQ one() { return LaurentPolyQ(1); }
	static LaurentPolyQ from_rational(const Rational& c) { return LaurentPolyQ(c); }
	static bool is_zero(const LaurentPolyQ& v) { return v.is_zero(); }
	static std::optional<LaurentPolyQ> invert(const LaurentPolyQ& v) {
		// Invertible elements are single terms c*q^j with constant c.
		if (v.terms().size() != 1)
			return std::nullopt;
		const auto& [e, c] = *v.terms().begin();
		if (!c.is_constant())
			return std::nullopt;
		return LaurentPolyQ::q_power(-e).scaled(c.constant_value().inverse());
	}
	static LaurentPolyQ qint_element(int n) { return LaurentPolyQ(qint(n)); }
	static LaurentPolyQ q_power(int j) { return LaurentPolyQ::q_power(j); }
	static LaurentPolyQ from_qpoly(const QPoly& p) { return LaurentPolyQ(p.to_multipoly()); }
	static std::string str(const LaurentPolyQ& v) { return v.str(); }
};

template <>
struct RingTraits<QRatFunc> {
	static constexpr bool kHasDivision = true;
	static constexpr bool kHasQ = true;
	static constexpr const char* kName = "qratfunc";
	static QRatFunc zero() { return QRatFunc(); }
	static QRatFunc one() { return QRatFunc(1); }
	static QRatFunc from_rational(const Rational& c) { return QRatFunc(c); }
	static bool is_zero(const QRatFunc& v) { return v.is_zero(); }
	static std::optional<QRatFunc> invert(const QRatFunc& v) {
		if (v.is_zero())
			return std::nullopt;
		return v.inverse();
	}
	static QRatFunc qint_element(int n) { return QRatFunc(qint_qpoly(n)); }
	static QRatFunc q_power(int j) { return QRatFunc::q(j); }
	static QRatFunc from_qpoly(const QPoly& p) { return QRatFunc(p); }
	static std::string str(const QRatFunc& v) { return v.str(); }
};

template <typename R>
constexpr RingCapabilities ring_capabilities() {
	// Every supported ring is a Q-algebra, so rational scalars always exist.
	return RingCapabilities{RingTraits<R>::kHasDivision, RingTraits<R>::kHasQ, true};
}

/// Truncated formal power series in t. The truncation order N is explicit:
/// coefficients of t^0..t^N are stored and arithmetic truncates to the
/// smaller operand order.
template <typename R>
class TSeries {
public:
	explicit TSeries(int order) : order_(order), c_(order + 1, RingTraits<R>::zero()) {
		if (order < 0)
			throw DomainError("TSeries: negative order");
	}

	static TSeries constant(const R& value, int order) {
		TSeries s(order);
		s.c_[0] = value;
		return s;
	}

	static TSeries monomial(int m, const R& value, int order) {
		TSeries s(order);
		if (m < 0 || m > order)
			throw DomainError("TSeries: monomial degree outside order");
		s.c_[m] = value;
		return s;
	}

	int order() const { return order_; }
	const R& operator[](int m) const { return c_[m]; }
	void set(int m, R value) { c_[m] = std::move(value); }

	bool is_zero() const {
		for (const auto& c : c_)
			if (!RingTraits<R>::is_zero(c))
				return false;
		return true;
	}

	TSeries truncated(int new_order) const {
		if (new_order > order_)
			throw DomainError("TSeries: cannot extend the truncation order");
		TSeries s(new_order);
		for (int m = 0; m <= new_order; ++m)
			s.c_[m] = c_[m];
		return s;
	}

	TSeries operator-() const {
		TSeries s(order_);
		for (int m = 0; m <= order_; ++m)
			s.c_[m] = RingTraits<R>::zero() - c_[m];
		return s;
	}

	friend TSeries operator+(const TSeries& a, const TSeries& b) {
		TSeries s(std::min(a.order_, b.order_));
		for (int m = 0; m <= s.order_; ++m)
			s.c_[m] = a.c_[m] + b.c_[m];
		return s;
	}

	friend TSeries operator-(const TSeries& a, const TSeries& b) {
		TSeries s(std::min(a.order_, b.order_));
		for (int m = 0; m <= s.order_; ++m)
			s.c_[m] = a.c_[m] - b.c_[m];
		return s;
	}

	friend TSeries operator*(const TSeries& a, const TSeries& b) {
		TSeries s(std::min(a.order_, b.order_));
		for (int i = 0; i <= s.order_; ++i) {
			if (RingTraits<R>::is_zero(a.c_[i]))
				continue;
			for (int j = 0; i + j <= s.order_; ++j) {
				if (RingTraits<R>::is_zero(b.c_[j]))
					continue;
				s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
			}
		}
		return s;
	}

	TSeries scaled(const R& value) const {
		TSeries s(order_);
		for (int m = 0; m <= order_; ++m)
			s.c_[m] = c_[m] * value;
		return s;
	}

	friend bool operator==(const TSeries& a, const TSeries& b) {
		return a.order_ == b.order_ && a.c_ == b.c_;
	}

	/// "c0 + c1*t + c2*t^2 + O(t^{N+1})"
	std::string str() const {
		std::ostringstream os;
		bool printed = false;
		for (int m = 0; m <= order_; ++m) {
			if (RingTraits<R>::is_zero(c_[m]))
				continue;
			if (printed)
				os << " + ";
			printed = true;
			const std::string cs = RingTraits<R>::str(c_[m]);
			const bool simple = cs.find_first_of("+-/ ") == std::string::npos;
			if (m == 0) {
				os << (simple ? cs : "(" + cs + ")");
			} else {
				if (cs != "1")
					os << (simple ? cs : "(" + cs + ")") << "*";
				os << "t";
				if (m > 1)
					os << "^" << m;
			}
		}
		if (!printed)
			os << "0";
		os << " + O(t^" << order_ + 1 << ")";
		return os.str();
	}

private:
	int order_;
	std::vector<R> c_;
};

/// First t-degree where the two series differ, up to the smaller order.
template <typename R>
std::optional<int> first_mismatch(const TSeries<R>& a, const TSeries<R>& b) {
	const int n = std::min(a.order(), b.order());
	for (int m = 0; m <= n; ++m)
		if (!(a[m] == b[m]))
			return m;
	return std::nullopt;
}

/// Multiplicative inverse of a series with invertible constant term.
template <typename R>
TSeries<R> invert(const TSeries<R>& f) {
	const auto inv0 = RingTraits<R>::invert(f[0]);
	if (!inv0)
		throw DivisionError("invert: constant term is not invertible");
	TSeries<R> g(f.order());
	g.set(0, *inv0);
	for (int m = 1; m <= f.order(); ++m) {
		R s = RingTraits<R>::zero();
		for (int i = 1; i <= m; ++i)
			s = s + f[i] * g[m - i];
		g.set(m, RingTraits<R>::zero() - s * (*inv0));
	}
	return g;
}

/// log f for a series with constant term 1.
template <typename R>
TSeries<R> series_log(const TSeries<R>& f) {
	if (!(f[0] == RingTraits<R>::one()))
		throw DomainError("series_log: constant term must be 1");
	TSeries<R> h = f;
	h.set(0, RingTraits<R>::zero());
	TSeries<R> result(f.order());
	TSeries<R> hp = h;
	for (int m = 1; m <= f.order(); ++m) {
		const Rational c = Rational(m % 2 == 1 ? 1 : -1, m);
		result = result + hp.scaled(RingTraits<R>::from_rational(c));
		if (m < f.order())
			hp = hp * h;
	}
	return result;
}

/// exp h for a series with zero constant term.
template <typename R>
TSeries<R> series_exp(const TSeries<R>& h) {
	if (!RingTraits<R>::is_zero(h[0]))
		throw DomainError("series_exp: constant term must be 0");
	TSeries<R> result = TSeries<R>::constant(RingTraits<R>::one(), h.order());
	TSeries<R> hp = h;
	Rational inv_fact(1);
	for (int m = 1; m <= h.order(); ++m) {
		inv_fact /= Rational(m);
		result = result + hp.scaled(RingTraits<R>::from_rational(inv_fact));
		if (m < h.order())
			hp = hp * h;
	}
	return result;
}

/// (1+h)^a for rational a, via exp(a log(1+h)); constant term must be 1.
template <typename R>
TSeries<R> pow_rational(const TSeries<R>& f, const Rational& a) {
	return series_exp(series_log(f).scaled(RingTraits<R>::from_rational(a)));
}

/// Argument scaling t -> c * q^j * t.
template <typename R>
TSeries<R> scale_argument(const TSeries<R>& f, const Rational& c, int q_exponent) {
	TSeries<R> s(f.order());
	R factor = RingTraits<R>::one();
	const R step = q_exponent == 0
	                   ? RingTraits<R>::from_rational(c)
	                   : RingTraits<R>::q_power(q_exponent) * RingTraits<R>::from_rational(c);
	for (int m = 0; m <= f.order(); ++m) {
		s.set(m, f[m] * factor);
		if (m < f.order())
			factor = factor * step;
	}
	return s;
}

/// Ordinary derivative d/dt.
template <typename R>
TSeries<R> derivative_t(const TSeries<R>& f) {
	if (f.order() < 1)
		throw DomainError("derivative_t: order must be at least 1");
	TSeries<R> s(f.order() - 1);
	for (int m = 0; m < f.order(); ++m)
		s.set(m, f[m + 1] * RingTraits<R>::from_rational(Rational(m + 1)));
	return s;
}

/// Ordinary integral from 0; output order grows by one.
template <typename R>
TSeries<R> integrate_t(const TSeries<R>& f) {
	TSeries<R> s(f.order() + 1);
	for (int m = 0; m <= f.order(); ++m)
		s.set(m + 1, f[m] * RingTraits<R>::from_rational(Rational(1, m + 1)));
	return s;
}

} // namespace qe
