#include "qeulerian/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qeulerian/errors.hpp"

namespace qe {

namespace {

// Integer polynomial helpers for the fraction-free gcd.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
	while (!p.empty() && p.back() == 0)
		p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
	mpz_class g = 0;
	for (const auto& c : p) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
		if (g == 1)
			break;
	}
	return g;
}

void zmake_primitive(ZPoly& p) {
	ztrim(p);
	if (p.empty())
		return;
	mpz_class g = zcontent(p);
	if (sgn(p.back()) < 0)
		g = -g;
	if (g != 1)
		for (auto& c : p)
			mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder: some lc(b)^k multiple of (a mod b). The scale is
// irrelevant because callers re-normalize to the primitive part.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
	const int db = static_cast<int>(b.size()) - 1;
	const mpz_class& lb = b.back();
	while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
		const int da = static_cast<int>(a.size()) - 1;
		const mpz_class la = a.back();
		for (auto& c : a)
			c *= lb;
		for (int i = 0; i <= db; ++i)
			a[da - db + i] -= la * b[i];
		ztrim(a);
	}
	return a;
}

// Clears denominators and the content; sign-normalized to a positive lead.
ZPoly zprimitive_from(const QPoly& p) {
	mpz_class l = 1;
	for (const auto& c : p.coefficients())
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
	ZPoly z;
	z.reserve(p.coefficients().size());
	for (const auto& c : p.coefficients()) {
		mpq_class scaled = c.raw() * l;
		z.push_back(scaled.get_num());
	}
	zmake_primitive(z);
	return z;
}

} // namespace

QPoly::QPoly(const Rational& c) {
	if (!c.is_zero())
		c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
	trim();
}

QPoly QPoly::q(int exponent) {
	if (exponent < 0)
		throw DomainError("QPoly: negative q exponent");
	std::vector<Rational> c(exponent + 1, Rational(0));
	c.back() = Rational(1);
	return QPoly(std::move(c));
}

void QPoly::trim() {
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

int QPoly::low_degree() const {
	for (std::size_t i = 0; i < c_.size(); ++i)
		if (!c_[i].is_zero())
			return static_cast<int>(i);
	return -1;
}

const Rational& QPoly::leading() const {
	if (c_.empty())
		throw DomainError("QPoly: leading coefficient of zero");
	return c_.back();
}

Rational QPoly::coefficient(int k) const {
	if (k < 0 || k >= static_cast<int>(c_.size()))
		return Rational(0);
	return c_[k];
}

QPoly QPoly::operator-() const {
	QPoly r = *this;
	for (auto& c : r.c_)
		c = -c;
	return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
	std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		c[i] = a.c_[i];
	for (std::size_t i = 0; i < b.c_.size(); ++i)
		c[i] += b.c_[i];
	return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
	return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
	if (a.is_zero() || b.is_zero())
		return QPoly();
	std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
	for (std::size_t i = 0; i < a.c_.size(); ++i) {
		if (a.c_[i].is_zero())
			continue;
		for (std::size_t j = 0; j < b.c_.size(); ++j)
			c[i + j] += a.c_[i] * b.c_[j];
	}
	return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rational& c) const {
	if (c.is_zero())
		return QPoly();
	QPoly r = *this;
	for (auto& k : r.c_)
		k *= c;
	return r;
}

QPoly QPoly::pow(int e) const {
	if (e < 0)
		throw DomainError("QPoly: negative power");
	QPoly r(1);
	QPoly base = *this;
	while (e > 0) {
		if (e & 1)
			r *= base;
		e >>= 1;
		if (e > 0)
			base *= base;
	}
	return r;
}

QPoly QPoly::shifted(int k) const {
	if (k < 0)
		throw DomainError("QPoly: negative shift");
	if (is_zero())
		return QPoly();
	std::vector<Rational> c(c_.size() + k, Rational(0));
	std::copy(c_.begin(), c_.end(), c.begin() + k);
	return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
	if (divisor.is_zero())
		throw DivisionError("QPoly: division by zero");
	QPoly rem = *this;
	const int dd = divisor.degree();
	if (rem.degree() < dd)
		return {QPoly(), rem};
	std::vector<Rational> quot(rem.degree() - dd + 1, Rational(0));
	while (rem.degree() >= dd) {
		const int k = rem.degree() - dd;
		const Rational c = rem.leading() / divisor.leading();
		quot[k] = c;
		for (int i = 0; i <= dd; ++i)
			rem.c_[k + i] -= c * divisor.c_[i];
		rem.trim();
	}
	return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::exact_div(const QPoly& divisor) const {
	auto [q, r] = divmod(divisor);
	if (!r.is_zero())
		throw DivisionError("QPoly: division is not exact");
	return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
	if (a.is_zero())
		return b.monic();
	if (b.is_zero())
		return a.monic();
	ZPoly u = zprimitive_from(a);
	ZPoly v = zprimitive_from(b);
	if (u.size() < v.size())
		std::swap(u, v);
	while (!v.empty()) {
		ZPoly r = zpseudo_rem(u, v);
		zmake_primitive(r);
		u = std::move(v);
		v = std::move(r);
	}
	std::vector<Rational> c;
	c.reserve(u.size());
	for (const auto& z : u)
		c.emplace_back(mpq_class(z));
	return QPoly(std::move(c)).monic();
}

QPoly QPoly::monic() const {
	if (is_zero())
		return QPoly();
	return scaled(leading().inverse());
}

Rational QPoly::evaluate(const Rational& q) const {
	Rational r(0);
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		r = r * q + *it;
	return r;
}

QPoly QPoly::reversed() const {
	std::vector<Rational> c(c_.rbegin(), c_.rend());
	return QPoly(std::move(c));
}

std::vector<Rational> QPoly::inverse_series(int count) const {
	if (is_zero() || c_[0].is_zero())
		throw DivisionError("QPoly: inverse series requires a unit constant term");
	std::vector<Rational> b(std::max(count, 0), Rational(0));
	if (count <= 0)
		return b;
	const Rational inv0 = c_[0].inverse();
	b[0] = inv0;
	for (int k = 1; k < count; ++k) {
		Rational s(0);
		const int top = std::min<int>(k, degree());
		for (int i = 1; i <= top; ++i)
			s += c_[i] * b[k - i];
		b[k] = -(s * inv0);
	}
	return b;
}

QPoly QPoly::from_multipoly(const MultiPoly& p) {
	std::vector<Rational> c;
	for (const auto& [m, coeff] : p.terms()) {
		if (m.degree() != m.exponent(Var::q))
			throw DomainError("QPoly: polynomial involves variables other than q");
		const int k = m.exponent(Var::q);
		if (static_cast<int>(c.size()) <= k)
			c.resize(k + 1, Rational(0));
		c[k] = coeff;
	}
	return QPoly(std::move(c));
}

MultiPoly QPoly::to_multipoly() const {
	MultiPoly p;
	for (std::size_t i = 0; i < c_.size(); ++i)
		p.add_term(Monomial::of(Var::q, static_cast<int>(i)), c_[i]);
	return p;
}

std::string QPoly::str() const {
	return to_multipoly().str();
}

QRatFunc::QRatFunc(QPoly numerator, QPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
	if (den_.is_zero())
		throw DivisionError("QRatFunc: zero denominator");
	reduce();
}

QRatFunc QRatFunc::q(int exponent) {
	if (exponent >= 0)
		return QRatFunc(QPoly::q(exponent));
	return QRatFunc(QPoly(1), QPoly::q(-exponent));
}

void QRatFunc::reduce() {
	if (num_.is_zero()) {
		den_ = QPoly(1);
		return;
	}
	QPoly g = QPoly::gcd(num_, den_);
	if (g.degree() > 0) {
		num_ = num_.exact_div(g);
		den_ = den_.exact_div(g);
	}
	const Rational lead = den_.leading();
	if (!lead.is_one()) {
		const Rational inv = lead.inverse();
		num_ = num_.scaled(inv);
		den_ = den_.scaled(inv);
	}
}

QPoly QRatFunc::to_qpoly() const {
	if (!is_polynomial())
		throw DomainError("QRatFunc: value is not a polynomial");
	return num_;
}

QRatFunc QRatFunc::operator-() const {
	QRatFunc r = *this;
	r.num_ = -r.num_;
	return r;
}

QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	// Henrici's scheme: only the gcd of the two denominators can survive
	// into a common factor of the sum.
	QPoly g = QPoly::gcd(a.den_, b.den_);
	QRatFunc r;
	if (g.degree() == 0) {
		r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
		r.den_ = a.den_ * b.den_;
		if (r.num_.is_zero()) {
			r.den_ = QPoly(1);
			return r;
		}
	} else {
		const QPoly da = a.den_.exact_div(g);
		const QPoly db = b.den_.exact_div(g);
		QPoly num = a.num_ * db + b.num_ * da;
		if (num.is_zero())
			return QRatFunc();
		QPoly h = QPoly::gcd(num, g);
		if (h.degree() > 0) {
			num = num.exact_div(h);
			g = g.exact_div(h);
		}
		r.num_ = std::move(num);
		r.den_ = g * da * db;
	}
	const Rational lead = r.den_.leading();
	if (!lead.is_one()) {
		const Rational inv = lead.inverse();
		r.num_ = r.num_.scaled(inv);
		r.den_ = r.den_.scaled(inv);
	}
	return r;
}

QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) {
	return a + (-b);
}

QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
	if (a.is_zero() || b.is_zero())
		return QRatFunc();
	// Cross-cancel first; the factors stay pairwise coprime afterwards.
	QPoly g1 = QPoly::gcd(a.num_, b.den_);
	QPoly g2 = QPoly::gcd(b.num_, a.den_);
	QPoly na = g1.degree() > 0 ? a.num_.exact_div(g1) : a.num_;
	QPoly nb = g2.degree() > 0 ? b.num_.exact_div(g2) : b.num_;
	QPoly da = g2.degree() > 0 ? a.den_.exact_div(g2) : a.den_;
	QPoly db = g1.degree() > 0 ? b.den_.exact_div(g1) : b.den_;
	QRatFunc r;
	r.num_ = na * nb;
	r.den_ = da * db;
	const Rational lead = r.den_.leading();
	if (!lead.is_one()) {
		const Rational inv = lead.inverse();
		r.num_ = r.num_.scaled(inv);
		r.den_ = r.den_.scaled(inv);
	}
	return r;
}

QRatFunc QRatFunc::inverse() const {
	if (is_zero())
		throw DivisionError("QRatFunc: inverse of zero");
	QRatFunc r;
	r.num_ = den_;
	r.den_ = num_;
	const Rational lead = r.den_.leading();
	if (!lead.is_one()) {
		const Rational inv = lead.inverse();
		r.num_ = r.num_.scaled(inv);
		r.den_ = r.den_.scaled(inv);
	}
	return r;
}

QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) {
	return a * b.inverse();
}

QRatFunc QRatFunc::pow(int e) const {
	if (e < 0)
		return inverse().pow(-e);
	QRatFunc r(1);
	QRatFunc base = *this;
	while (e > 0) {
		if (e & 1)
			r *= base;
		e >>= 1;
		if (e > 0)
			base *= base;
	}
	return r;
}

Rational QRatFunc::evaluate(const Rational& q) const {
	const Rational d = den_.evaluate(q);
	if (d.is_zero())
		throw DivisionError("QRatFunc: evaluation at a pole");
	return num_.evaluate(q) / d;
}

QRatFunc QRatFunc::substitute_q_inverse() const {
	if (is_zero())
		return QRatFunc();
	const int dn = num_.degree();
	const int dd = den_.degree();
	QPoly n = num_.reversed();
	QPoly d = den_.reversed();
	if (dd >= dn)
		n = n.shifted(dd - dn);
	else
		d = d.shifted(dn - dd);
	return QRatFunc(std::move(n), std::move(d));
}

std::vector<Rational> QRatFunc::expansion_at_zero(int lo, int hi) const {
	if (hi <= lo)
		return {};
	std::vector<Rational> out(hi - lo, Rational(0));
	if (is_zero())
		return out;
	const int vd = den_.low_degree();
	// num / den = q^{vn - vd} * (num/q^vn) / (den/q^vd), unit denominator.
	const int vn = num_.low_degree();
	std::vector<Rational> nc(num_.coefficients().begin() + vn, num_.coefficients().end());
	std::vector<Rational> dc(den_.coefficients().begin() + vd, den_.coefficients().end());
	const int shift = vn - vd;
	const int need = hi - shift;
	if (need <= 0)
		return out;
	const std::vector<Rational> dinv = QPoly(dc).inverse_series(need);
	for (int k = 0; k < need; ++k) {
		const int e = k + shift;
		if (e < lo || e >= hi)
			continue;
		Rational s(0);
		const int top = std::min<int>(k, static_cast<int>(nc.size()) - 1);
		for (int i = 0; i <= top; ++i)
			s += nc[i] * dinv[k - i];
		out[e - lo] = s;
	}
	return out;
}

std::vector<Rational> QRatFunc::expansion_at_infinity(int lo, int hi) const {
	// Coefficient of q^e in the expansion at infinity equals the coefficient
	// of q^{-e} in the expansion of f(1/q) at zero.
	const QRatFunc flip = substitute_q_inverse();
	std::vector<Rational> rev = flip.expansion_at_zero(-(hi - 1), -lo + 1);
	std::reverse(rev.begin(), rev.end());
	return rev;
}

int QRatFunc::order_at_zero() const {
	if (is_zero())
		throw DomainError("QRatFunc: order of zero");
	return num_.low_degree() - den_.low_degree();
}

int QRatFunc::degree_at_infinity() const {
	if (is_zero())
		throw DomainError("QRatFunc: degree of zero");
	return num_.degree() - den_.degree();
}

std::string QRatFunc::str() const {
	if (is_polynomial())
		return num_.str();
	const std::string ns = num_.str();
	std::ostringstream os;
	if (ns.find(' ') == std::string::npos)
		os << ns;
	else
		os << "(" << ns << ")";
	os << "/(" << den_.str() << ")";
	return os.str();
}

} // namespace qe
