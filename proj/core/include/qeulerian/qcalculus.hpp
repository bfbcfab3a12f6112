#pragma once

#include <vector>

#include "qeulerian/tseries.hpp"

namespace qe {

/// Eulerian q-derivative: (f(qt) - f(t)) / ((q-1)t). Acts on monomials as
/// t^m -> [m]_q t^{m-1}; at q = 1 it is the ordinary derivative.
template <typename R>
TSeries<R> delta_t(const TSeries<R>& f) {
	if (!RingTraits<R>::kHasQ)
		throw CapabilityError("delta_t: ring has no q variable");
	if (f.order() < 1)
		throw DomainError("delta_t: order must be at least 1");
	TSeries<R> s(f.order() - 1);
	for (int m = 0; m < f.order(); ++m)
		s.set(m, f[m + 1] * RingTraits<R>::qint_element(m + 1));
	return s;
}

/// exp_q(c t) = sum c^n t^n / [n]_q!.
template <typename R>
TSeries<R> exp_q_series(const R& c, int order) {
	if (!RingTraits<R>::kHasDivision || !RingTraits<R>::kHasQ)
		throw CapabilityError("exp_q_series: ring must divide by q-factorials");
	TSeries<R> s(order);
	R num = RingTraits<R>::one();
	R fact = RingTraits<R>::one();
	for (int n = 0; n <= order; ++n) {
		if (n > 0) {
			num = num * c;
			fact = fact * RingTraits<R>::qint_element(n);
		}
		const auto inv = RingTraits<R>::invert(fact);
		if (!inv)
			throw DivisionError("exp_q_series: q-factorial is not invertible");
		s.set(n, num * *inv);
	}
	return s;
}

namespace detail {

/// Rows 0..max_n of the q-binomial triangle, grown by the Pascal recursion
/// [n,i] = [n-1,i-1] + q^i [n-1,i].
template <typename R>
std::vector<std::vector<R>> qbinomial_rows(int max_n) {
	std::vector<std::vector<R>> rows(max_n + 1);
	rows[0] = {RingTraits<R>::one()};
	for (int n = 1; n <= max_n; ++n) {
		rows[n].assign(n + 1, RingTraits<R>::one());
		for (int i = 1; i < n; ++i)
			rows[n][i] = rows[n - 1][i - 1] + RingTraits<R>::q_power(i) * rows[n - 1][i];
	}
	return rows;
}

} // namespace detail

/// Gessel bracket power on coefficient vectors in the t^n/[n]_q! basis:
/// entry n of the argument is the coefficient of t^n/[n]_q!. Works over any
/// ring containing q; no division is used.
template <typename R>
std::vector<R> bracket_power_egf(const std::vector<R>& f_egf, int k) {
	if (!f_egf.empty() && !RingTraits<R>::is_zero(f_egf[0]))
		throw DomainError("bracket_power: nonzero constant term");
	const int order = static_cast<int>(f_egf.size()) - 1;
	const auto rows = detail::qbinomial_rows<R>(std::max(0, order - 1));
	std::vector<R> prev(order + 1, RingTraits<R>::zero());
	prev[0] = RingTraits<R>::one();
	for (int level = 1; level <= k; ++level) {
		std::vector<R> cur(order + 1, RingTraits<R>::zero());
		for (int n = 0; n < order; ++n) {
			R s = RingTraits<R>::zero();
			for (int i = 0; i <= n; ++i) {
				if (RingTraits<R>::is_zero(prev[i]) ||
				    RingTraits<R>::is_zero(f_egf[n - i + 1]))
					continue;
				s = s + rows[n][i] * f_egf[n - i + 1] * prev[i];
			}
			cur[n + 1] = s;
		}
		prev = std::move(cur);
	}
	return prev;
}

/// q-composition on coefficient vectors in the t^n/[n]_q! basis:
/// returns the vector of sum g_n f^{[n]}.
template <typename R>
std::vector<R> q_compose_egf(const std::vector<R>& g_egf, const std::vector<R>& f_egf) {
	if (!f_egf.empty() && !RingTraits<R>::is_zero(f_egf[0]))
		throw DomainError("q_compose: inner series has nonzero constant term");
	const int order = static_cast<int>(f_egf.size()) - 1;
	const auto rows = detail::qbinomial_rows<R>(std::max(0, order - 1));
	std::vector<R> result(order + 1, RingTraits<R>::zero());
	std::vector<R> bp(order + 1, RingTraits<R>::zero());
	bp[0] = RingTraits<R>::one(); // f^{[0]}
	for (int n = 0; n <= order; ++n) {
		if (n > 0) {
			// Advance f^{[n-1]} -> f^{[n]} by the q-binomial convolution.
			std::vector<R> next(order + 1, RingTraits<R>::zero());
			for (int m = 0; m < order; ++m) {
				R s = RingTraits<R>::zero();
				for (int i = 0; i <= m; ++i) {
					if (RingTraits<R>::is_zero(bp[i]) ||
					    RingTraits<R>::is_zero(f_egf[m - i + 1]))
						continue;
					s = s + rows[m][i] * f_egf[m - i + 1] * bp[i];
				}
				next[m + 1] = s;
			}
			bp = std::move(next);
		}
		if (n < static_cast<int>(g_egf.size()) && !RingTraits<R>::is_zero(g_egf[n]))
			for (int m = 0; m <= order; ++m)
				result[m] = result[m] + g_egf[n] * bp[m];
	}
	return result;
}

/// exp_q[f] on coefficient vectors: all EGF coefficients of exp_q are 1.
template <typename R>
std::vector<R> exp_q_compose_egf(const std::vector<R>& f_egf) {
	std::vector<R> ones(f_egf.size(), RingTraits<R>::one());
	return q_compose_egf(ones, f_egf);
}

namespace detail {

template <typename R>
std::vector<R> to_egf(const TSeries<R>& f) {
	std::vector<R> v(f.order() + 1);
	R fact = RingTraits<R>::one();
	for (int n = 0; n <= f.order(); ++n) {
		if (n > 0)
			fact = fact * RingTraits<R>::qint_element(n);
		v[n] = f[n] * fact;
	}
	return v;
}

template <typename R>
TSeries<R> from_egf(const std::vector<R>& v) {
	TSeries<R> s(static_cast<int>(v.size()) - 1);
	R fact = RingTraits<R>::one();
	for (int n = 0; n < static_cast<int>(v.size()); ++n) {
		if (n > 0)
			fact = fact * RingTraits<R>::qint_element(n);
		const auto inv = RingTraits<R>::invert(fact);
		if (!inv)
			throw DivisionError("q-series: q-factorial is not invertible");
		s.set(n, v[n] * *inv);
	}
	return s;
}

} // namespace detail

/// Gessel bracket power f^{[k]} as a plain series; needs a division ring.
template <typename R>
TSeries<R> bracket_power(const TSeries<R>& f, int k) {
	if (!RingTraits<R>::kHasDivision || !RingTraits<R>::kHasQ)
		throw CapabilityError("bracket_power: ring must divide by q-factorials");
	if (k < 0)
		throw DomainError("bracket_power: negative power");
	return detail::from_egf(bracket_power_egf(detail::to_egf(f), k));
}

/// q-composition g[f] as plain series; needs a division ring.
template <typename R>
TSeries<R> q_compose(const TSeries<R>& g, const TSeries<R>& f) {
	if (!RingTraits<R>::kHasDivision || !RingTraits<R>::kHasQ)
		throw CapabilityError("q_compose: ring must divide by q-factorials");
	return detail::from_egf(q_compose_egf(detail::to_egf(g), detail::to_egf(f)));
}

/// Truncation of the infinite product
///   prod_{k>=0} (1 - t q^k (1-q) f'(q^k t))^{-1}
/// to K factors and order N. Factor k only perturbs q-degrees >= k at each
/// t-degree, so the result is exact in q-degrees < K.
template <typename R>
TSeries<R> product_expansion(const TSeries<R>& f, int factor_count, int order) {
	if (!RingTraits<R>::kHasQ)
		throw CapabilityError("product_expansion: ring has no q variable");
	if (factor_count < 1)
		throw DomainError("product_expansion: need at least one factor");
	if (!RingTraits<R>::is_zero(f[0]))
		throw DomainError("product_expansion: f(0) must be 0");
	if (f.order() < order + 1)
		throw DomainError("product_expansion: f must carry order >= N+1");
	const TSeries<R> fprime = delta_t(f).truncated(order);
	TSeries<R> product = TSeries<R>::constant(RingTraits<R>::one(), order);
	const R one_minus_q = RingTraits<R>::one() - RingTraits<R>::q_power(1);
	for (int k = 0; k < factor_count; ++k) {
		const TSeries<R> scaled = scale_argument(fprime, Rational(1), k);
		TSeries<R> factor = TSeries<R>::constant(RingTraits<R>::one(), order);
		const R coeff = RingTraits<R>::q_power(k) * one_minus_q;
		for (int m = 1; m <= order; ++m)
			factor.set(m, RingTraits<R>::zero() - scaled[m - 1] * coeff);
		product = product * invert(factor);
	}
	return product;
}

enum class QDirection { q, q_inverse };

/// Jackson q-integral; monomial action t^m -> t^{m+1}/[m+1]_q for the q
/// direction and t^m -> q^m t^{m+1}/[m+1]_q for the 1/q direction.
template <typename R>
TSeries<R> q_integral(const TSeries<R>& f, QDirection direction) {
	if (!RingTraits<R>::kHasDivision || !RingTraits<R>::kHasQ)
		throw CapabilityError("q_integral: ring must divide by q-integers");
	TSeries<R> s(f.order() + 1);
	for (int m = 0; m <= f.order(); ++m) {
		const auto inv = RingTraits<R>::invert(RingTraits<R>::qint_element(m + 1));
		if (!inv)
			throw DivisionError("q_integral: [m+1]_q is not invertible");
		R c = f[m] * *inv;
		if (direction == QDirection::q_inverse)
			c = c * RingTraits<R>::q_power(m);
		s.set(m + 1, c);
	}
	return s;
}

} // namespace qe
