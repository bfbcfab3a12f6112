#include "qeulerian/qnumbers.hpp"

#include "qeulerian/errors.hpp"

namespace qe {

MultiPoly qint(int n) {
	if (n < 0)
		throw DomainError("qint: negative argument");
	MultiPoly p;
	for (int i = 0; i < n; ++i)
		p.add_term(Monomial::of(Var::q, i), Rational(1));
	return p;
}

MultiPoly qfactorial(int n) {
	if (n < 0)
		throw DomainError("qfactorial: negative argument");
	MultiPoly p(1);
	for (int i = 1; i <= n; ++i)
		p *= qint(i);
	return p;
}

MultiPoly qbinomial(int n, int k) {
	if (n < 0 || k < 0 || k > n)
		throw DomainError("qbinomial: arguments out of range");
	return qfactorial(n).exact_div(qfactorial(k) * qfactorial(n - k));
}

MultiPoly rising_factorial(int n) {
	if (n < 0)
		throw DomainError("rising_factorial: negative argument");
	MultiPoly p(1);
	const MultiPoly x = MultiPoly::variable(Var::x);
	for (int i = 0; i < n; ++i)
		p *= x + MultiPoly(i);
	return p;
}

QPoly qint_qpoly(int n) {
	if (n < 0)
		throw DomainError("qint: negative argument");
	std::vector<Rational> c(n, Rational(1));
	return QPoly(std::move(c));
}

QPoly qfactorial_qpoly(int n) {
	if (n < 0)
		throw DomainError("qfactorial: negative argument");
	QPoly p(1);
	for (int i = 1; i <= n; ++i)
		p *= qint_qpoly(i);
	return p;
}

MultiPoly truncate_q_degrees(const MultiPoly& p, int limit) {
	MultiPoly out;
	for (const auto& [m, c] : p.terms())
		if (m.exponent(Var::q) < limit)
			out.add_term(m, c);
	return out;
}

} // namespace qe
