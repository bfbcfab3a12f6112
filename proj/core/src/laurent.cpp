#include "qeulerian/laurent.hpp"

#include <sstream>

#include "qeulerian/errors.hpp"

namespace qe {

LaurentPolyQ::LaurentPolyQ(const MultiPoly& p) {
	for (const auto& [m, c] : p.terms()) {
		const int k = m.exponent(Var::q);
		Monomial rest = m;
		rest.e[static_cast<std::size_t>(Var::q)] = 0;
		add_term(k, MultiPoly::monomial(rest, c));
	}
}

LaurentPolyQ LaurentPolyQ::q_power(int exponent) {
	LaurentPolyQ r;
	r.terms_.emplace(exponent, MultiPoly(1));
	return r;
}

LaurentPolyQ LaurentPolyQ::with_q_inverted(const MultiPoly& p) {
	LaurentPolyQ r;
	for (const auto& [m, c] : p.terms()) {
		const int k = m.exponent(Var::q);
		Monomial rest = m;
		rest.e[static_cast<std::size_t>(Var::q)] = 0;
		r.add_term(-k, MultiPoly::monomial(rest, c));
	}
	return r;
}

int LaurentPolyQ::min_q_degree() const {
	if (terms_.empty())
		throw DomainError("LaurentPolyQ: degree of zero");
	return terms_.begin()->first;
}

int LaurentPolyQ::max_q_degree() const {
	if (terms_.empty())
		throw DomainError("LaurentPolyQ: degree of zero");
	return terms_.rbegin()->first;
}

MultiPoly LaurentPolyQ::coefficient(int q_exponent) const {
	auto it = terms_.find(q_exponent);
	return it == terms_.end() ? MultiPoly() : it->second;
}

void LaurentPolyQ::add_term(int q_exponent, const MultiPoly& coeff) {
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(q_exponent, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

LaurentPolyQ LaurentPolyQ::operator-() const {
	LaurentPolyQ r;
	for (const auto& [k, c] : terms_)
		r.terms_.emplace(k, -c);
	return r;
}

LaurentPolyQ& LaurentPolyQ::operator+=(const LaurentPolyQ& o) {
	for (const auto& [k, c] : o.terms_)
		add_term(k, c);
	return *this;
}

LaurentPolyQ& LaurentPolyQ::operator-=(const LaurentPolyQ& o) {
	for (const auto& [k, c] : o.terms_)
		add_term(k, -c);
	return *this;
}

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
	LaurentPolyQ r;
	for (const auto& [ka, ca] : a.terms_)
		for (const auto& [kb, cb] : b.terms_)
			r.add_term(ka + kb, ca * cb);
	return r;
}

LaurentPolyQ LaurentPolyQ::scaled(const Rational& c) const {
	LaurentPolyQ r;
	if (c.is_zero())
		return r;
	for (const auto& [k, p] : terms_)
		r.terms_.emplace(k, p.scaled(c));
	return r;
}

LaurentPolyQ LaurentPolyQ::shifted_q(int k) const {
	LaurentPolyQ r;
	for (const auto& [e, p] : terms_)
		r.terms_.emplace(e + k, p);
	return r;
}

LaurentPolyQ LaurentPolyQ::truncated(int lo, int hi) const {
	LaurentPolyQ r;
	for (const auto& [e, p] : terms_)
		if (e >= lo && e <= hi)
			r.terms_.emplace(e, p);
	return r;
}

MultiPoly LaurentPolyQ::to_multipoly() const {
	MultiPoly p;
	for (const auto& [e, coeff] : terms_) {
		if (e < 0)
			throw DomainError("LaurentPolyQ: negative q-exponents remain");
		for (const auto& [m, c] : coeff.terms())
			p.add_term(m * Monomial::of(Var::q, e), c);
	}
	return p;
}

std::string LaurentPolyQ::str() const {
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [e, coeff] : terms_) {
		if (!first)
			os << " + ";
		first = false;
		if (e == 0) {
			os << "(" << coeff.str() << ")";
		} else {
			os << "(" << coeff.str() << ")*q^" << e;
		}
	}
	return os.str();
}

} // namespace qe
