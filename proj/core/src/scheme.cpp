#include "qeulerian/scheme.hpp"

#include <sstream>

#include "qeulerian/errors.hpp"

namespace qe {

SubstitutionScheme::SubstitutionScheme(Rational x_, Rational y_, Rational u3_, Rational u1_,
                                       std::optional<Rational> alpha_,
                                       std::optional<Rational> beta_,
                                       std::optional<Rational> q_)
    : x(std::move(x_)), y(std::move(y_)), u3(std::move(u3_)), u1(std::move(u1_)),
      alpha(std::move(alpha_)), beta(std::move(beta_)), q(std::move(q_)) {
	if (x == y)
		throw DomainError("SubstitutionScheme: x = y is degenerate");
	if (u1.is_zero())
		throw DomainError("SubstitutionScheme: u1 = 0 is degenerate");
}

SubstitutionScheme SubstitutionScheme::random(std::mt19937_64& rng, bool with_alpha_beta,
                                              bool with_q) {
	std::uniform_int_distribution<int> num(-9, 9);
	std::uniform_int_distribution<int> den(1, 4);
	auto draw = [&] { return Rational(num(rng), den(rng)); };
	auto draw_nonzero = [&] {
		Rational r = draw();
		while (r.is_zero())
			r = draw();
		return r;
	};
	const Rational x = draw_nonzero();
	Rational y = draw_nonzero();
	while (y == x)
		y = draw_nonzero();
	const Rational u3 = draw();
	const Rational u1 = draw_nonzero();
	std::optional<Rational> a, b, qv;
	if (with_alpha_beta) {
		a = draw();
		b = draw();
	}
	if (with_q) {
		// Avoid roots of the small q-integers so 1/[n]_q stays finite.
		Rational r = draw();
		while (r.is_zero() || r == Rational(1) || r == Rational(-1))
			r = draw();
		qv = r;
	}
	return SubstitutionScheme(x, y, u3, u1, a, b, qv);
}

MultiPoly SubstitutionScheme::specialize(const MultiPoly& p, bool use_alpha_beta,
                                         bool use_q) const {
	std::map<Var, MultiPoly> values{
	    {Var::x, MultiPoly(x)},   {Var::y, MultiPoly(y)},
	    {Var::u1, MultiPoly(u1)}, {Var::u2, MultiPoly(u2())},
	    {Var::u3, MultiPoly(u3)}, {Var::u4, MultiPoly(u4())},
	};
	if (use_alpha_beta && alpha)
		values.emplace(Var::alpha, MultiPoly(*alpha));
	if (use_alpha_beta && beta)
		values.emplace(Var::beta, MultiPoly(*beta));
	if (use_q && q)
		values.emplace(Var::q, MultiPoly(*q));
	return p.substitute_many(values);
}

std::string SubstitutionScheme::str() const {
	std::ostringstream os;
	os << "x=" << x.str() << " y=" << y.str() << " u3=" << u3.str() << " u4=" << u4().str()
	   << " u1=" << u1.str() << " u2=" << u2().str();
	if (alpha)
		os << " alpha=" << alpha->str();
	if (beta)
		os << " beta=" << beta->str();
	if (q)
		os << " q=" << q->str();
	return os.str();
}

TruncationPolicy TruncationPolicy::defaults_for(int n_max) {
	TruncationPolicy p;
	p.t_order = n_max;
	p.q_window = n_max * (n_max - 1) / 2 + 1;
	return p;
}

} // namespace qe
