#include "qeulerian/series_builders.hpp"

#include <map>
#include <utility>

#include "qeulerian/errors.hpp"
#include "qeulerian/qnumbers.hpp"

namespace qe {

TSeries<Rational> f_classical(const SubstitutionScheme& s, int order) {
	const TSeries<Rational> ex =
	    series_exp(TSeries<Rational>::monomial(1, s.x, order));
	const TSeries<Rational> ey =
	    series_exp(TSeries<Rational>::monomial(1, s.y, order));
	const TSeries<Rational> num = ex - ey;
	const TSeries<Rational> den = ex.scaled(-s.y) + ey.scaled(s.x);
	return num * invert(den);
}

TSeries<QRatFunc> exp_q_ratfunc(const Rational& c, int order, bool inverse_q) {
	if (!inverse_q)
		return exp_q_series(QRatFunc(c), order);
	TSeries<QRatFunc> s(order);
	QRatFunc num(1);
	QRatFunc fact(1);
	const QRatFunc cq(c);
	for (int n = 0; n <= order; ++n) {
		if (n > 0) {
			num = num * cq;
			fact = fact * QRatFunc(qint_qpoly(n)).substitute_q_inverse();
		}
		s.set(n, num / fact);
	}
	return s;
}

TSeries<QRatFunc> f_q_series(const Rational& u, const SubstitutionScheme& s, int order,
                             bool inverse_q) {
	const TSeries<QRatFunc> a = exp_q_ratfunc(s.x - u, order, inverse_q);
	const TSeries<QRatFunc> b = exp_q_ratfunc(s.y - u, order, inverse_q);
	const TSeries<QRatFunc> num = a - b;
	const TSeries<QRatFunc> den = b.scaled(QRatFunc(s.x)) - a.scaled(QRatFunc(s.y));
	return (num * invert(den)).scaled(QRatFunc(s.u1));
}

namespace {

// Inner content of the first bracket of factor k: u3 + u2 F(x,y,u4,q;tq^{k+1}).
TSeries<QRatFunc> first_bracket_content(int k, const SubstitutionScheme& s, int order) {
	TSeries<QRatFunc> f = f_q_series(s.u4(), s, order, false);
	f = scale_argument(f, Rational(1), k + 1);
	return TSeries<QRatFunc>::constant(QRatFunc(s.u3), order) + f.scaled(QRatFunc(s.u2()));
}

// Inner content of the displayed second bracket: u4 + u2 F(x,y,u3,1/q;t/q^k).
TSeries<QRatFunc> second_bracket_content(int k, const SubstitutionScheme& s, int order) {
	TSeries<QRatFunc> f = f_q_series(s.u3, s, order, true);
	f = scale_argument(f, Rational(1), -k);
	return TSeries<QRatFunc>::constant(QRatFunc(s.u4()), order) + f.scaled(QRatFunc(s.u2()));
}

// Geometric inverse [1 - w X]^{-1} = sum_j w^j X^j split by the symbolic
// weight exponent j; X must have zero constant term.
std::vector<std::map<int, QRatFunc>> geometric_by_weight(const TSeries<QRatFunc>& x_series) {
	const int order = x_series.order();
	std::vector<std::map<int, QRatFunc>> out(order + 1);
	out[0].emplace(0, QRatFunc(1));
	TSeries<QRatFunc> power = TSeries<QRatFunc>::constant(QRatFunc(1), order);
	for (int j = 1; j <= order; ++j) {
		power = power * x_series;
		for (int m = j; m <= order; ++m)
			if (!power[m].is_zero())
				out[m].emplace(j, power[m]);
	}
	return out;
}

} // namespace

TSeries<QRatFunc> first_bracket_product(const SubstitutionScheme& s, int factor_count,
                                        int order) {
	if (!s.alpha)
		throw DomainError("first_bracket_product: scheme must pin alpha");
	const QRatFunc one_minus_q = QRatFunc(1) - QRatFunc::q(1);
	const QRatFunc u2v(s.u2()), u3v(s.u3), alpha(*s.alpha);
	const TSeries<QRatFunc> f = f_q_series(s.u4(), s, order, false);
	TSeries<QRatFunc> product = TSeries<QRatFunc>::constant(QRatFunc(1), order);
	for (int k = 0; k < factor_count; ++k) {
		const TSeries<QRatFunc> scaled = scale_argument(f, Rational(1), k + 1);
		const TSeries<QRatFunc> content =
		    TSeries<QRatFunc>::constant(u3v, order) + scaled.scaled(u2v);
		const QRatFunc coeff = alpha * QRatFunc::q(k) * one_minus_q;
		TSeries<QRatFunc> bracket = TSeries<QRatFunc>::constant(QRatFunc(1), order);
		for (int m = 1; m <= order; ++m)
			bracket.set(m, -(content[m - 1] * coeff));
		product = product * invert(bracket);
	}
	return product;
}

TSeries<QRatFunc> second_bracket_inverse(int k, const SubstitutionScheme& s, int order) {
	if (!s.beta)
		throw DomainError("second_bracket_inverse: scheme must pin beta");
	const TSeries<QRatFunc> content = second_bracket_content(k, s, order);
	const QRatFunc coeff =
	    QRatFunc(*s.beta) * QRatFunc::q(-k) * (QRatFunc::q(1) - QRatFunc(1));
	TSeries<QRatFunc> bracket = TSeries<QRatFunc>::constant(QRatFunc(1), order);
	for (int m = 1; m <= order; ++m)
		bracket.set(m, -(content[m - 1] * coeff));
	return invert(bracket);
}

TSeries<QRatFunc> reversal_bracket_inverse(int k, const SubstitutionScheme& s, int order) {
	if (!s.beta)
		throw DomainError("reversal_bracket_inverse: scheme must pin beta");
	TSeries<QRatFunc> f = f_q_series(s.u3, s, order, true);
	f = scale_argument(f, Rational(1), -(k + 1));
	const TSeries<QRatFunc> content =
	    TSeries<QRatFunc>::constant(QRatFunc(s.u4()), order) + f.scaled(QRatFunc(s.u2()));
	const QRatFunc coeff = QRatFunc(*s.beta) * QRatFunc::q(-k) *
	                       (QRatFunc(1) - QRatFunc::q(-1));
	TSeries<QRatFunc> bracket = TSeries<QRatFunc>::constant(QRatFunc(1), order);
	for (int m = 1; m <= order; ++m)
		bracket.set(m, -(content[m - 1] * coeff));
	return invert(bracket);
}

GFactorResult g_factor(int k, const SubstitutionScheme& s, int order, int window_lo,
                       int window_hi) {
	if (k < 0)
		throw DomainError("g_factor: negative index");
	if (window_lo > window_hi)
		throw DomainError("g_factor: empty q-window");

	// X1 = t q^k (1-q) (u3 + u2 F(tq^{k+1})), weight alpha.
	const TSeries<QRatFunc> content1 = first_bracket_content(k, s, order);
	const QRatFunc coeff1 = QRatFunc::q(k) * (QRatFunc(1) - QRatFunc::q(1));
	TSeries<QRatFunc> x1(order);
	for (int m = 1; m <= order; ++m)
		x1.set(m, content1[m - 1] * coeff1);

	// X2 = (t/q^k)(q-1)(u4 + u2 F~(t/q^k)), weight beta.
	const TSeries<QRatFunc> content2 = second_bracket_content(k, s, order);
	const QRatFunc coeff2 = QRatFunc::q(-k) * (QRatFunc::q(1) - QRatFunc(1));
	TSeries<QRatFunc> x2(order);
	for (int m = 1; m <= order; ++m)
		x2.set(m, content2[m - 1] * coeff2);

	const auto inv1 = geometric_by_weight(x1);
	const auto inv2 = geometric_by_weight(x2);

	GFactorResult result{TSeries<LaurentPolyQ>(order), window_lo, window_hi, 0, 0};
	bool saw_first = false, saw_second = false;

	for (int m = 1; m <= order; ++m) {
		for (const auto& [j, c] : inv1[m]) {
			const int lo = c.order_at_zero();
			result.first_bracket_min_degree =
			    saw_first ? std::min(result.first_bracket_min_degree, lo) : lo;
			saw_first = true;
		}
		for (const auto& [j, c] : inv2[m]) {
			const int hi = c.degree_at_infinity() + k * m;
			result.second_bracket_max_offset =
			    saw_second ? std::max(result.second_bracket_max_offset, hi) : hi;
			saw_second = true;
		}
	}

	// Assemble the product exactly per (alpha-, beta-)weight, then expand
	// each rational-function coefficient into the requested window.
	const bool alpha_pinned = s.alpha.has_value();
	const bool beta_pinned = s.beta.has_value();
	for (int n = 0; n <= order; ++n) {
		std::map<std::pair<int, int>, QRatFunc> parts;
		for (int m = 0; m <= n; ++m) {
			for (const auto& [j1, c1] : inv1[m]) {
				for (const auto& [j2, c2] : inv2[n - m]) {
					const QRatFunc prod = c1 * c2;
					if (prod.is_zero())
						continue;
					auto [it, inserted] = parts.emplace(std::make_pair(j1, j2), prod);
					if (!inserted)
						it->second += prod;
				}
			}
		}
		LaurentPolyQ coeff;
		for (const auto& [jj, c] : parts) {
			QRatFunc value = c;
			if (alpha_pinned)
				value *= QRatFunc(s.alpha->pow(jj.first));
			if (beta_pinned)
				value *= QRatFunc(s.beta->pow(jj.second));
			MultiPoly weight(1);
			if (!alpha_pinned)
				weight *= MultiPoly::variable(Var::alpha, jj.first);
			if (!beta_pinned)
				weight *= MultiPoly::variable(Var::beta, jj.second);
			if (value.is_zero())
				continue;
			// Two-sided Laurent expansion: exact because the value is an
			// honest rational function with finite pole order at q = 0.
			const int start = value.order_at_zero();
			const int lo = std::max(window_lo, start);
			const std::vector<Rational> coeffs = value.expansion_at_zero(lo, window_hi + 1);
			for (int e = lo; e <= window_hi; ++e) {
				const Rational& r = coeffs[e - lo];
				if (!r.is_zero())
					coeff.add_term(e, weight.scaled(r));
			}
		}
		result.series.set(n, coeff);
	}
	return result;
}

std::vector<Rational> euler_numbers(int count) {
	if (count < 0 || count > 12)
		throw GuardError("euler_numbers: count out of range");
	const int order = count;
	TSeries<Rational> cos_t(order), sin_t(order);
	Rational fact(1);
	for (int m = 0; m <= order; ++m) {
		if (m > 0)
			fact *= Rational(m);
		const Rational c = fact.inverse() * Rational((m / 2) % 2 == 0 ? 1 : -1);
		if (m % 2 == 0)
			cos_t.set(m, c);
		else
			sin_t.set(m, c);
	}
	const TSeries<Rational> sec_t = invert(cos_t);
	const TSeries<Rational> sum = sec_t + sin_t * sec_t;
	std::vector<Rational> out;
	fact = Rational(1);
	for (int n = 0; n <= count; ++n) {
		if (n > 0)
			fact *= Rational(n);
		out.push_back(sum[n] * fact);
	}
	return out;
}

std::vector<MultiPoly> gamma_extract(const MultiPoly& h) {
	if (h.is_zero())
		return {};
	int d = -1;
	for (const auto& [m, c] : h.terms()) {
		const int e = m.exponent(Var::x) + m.exponent(Var::y);
		if (d == -1)
			d = e;
		else if (e != d)
			throw DomainError("gamma_extract: input is not homogeneous in x, y");
	}
	const MultiPoly swapped = h.substitute_many(
	    {{Var::x, MultiPoly::variable(Var::y)}, {Var::y, MultiPoly::variable(Var::x)}});
	if (!(swapped == h))
		throw DomainError("gamma_extract: input is not symmetric in x, y");

	const MultiPoly xy = MultiPoly::variable(Var::x) * MultiPoly::variable(Var::y);
	const MultiPoly x_plus_y = MultiPoly::variable(Var::x) + MultiPoly::variable(Var::y);
	std::vector<MultiPoly> gamma;
	MultiPoly rem = h;
	for (int k = 0; 2 * k <= d; ++k) {
		const MultiPoly g = rem.coefficient_of({{Var::x, d - k}, {Var::y, k}});
		gamma.push_back(g);
		if (!g.is_zero())
			rem -= g * xy.pow(k) * x_plus_y.pow(d - 2 * k);
	}
	if (!rem.is_zero())
		throw DomainError("gamma_extract: expansion did not terminate");
	return gamma;
}

} // namespace qe
