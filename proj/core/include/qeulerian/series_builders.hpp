#pragma once

#include <vector>

#include "qeulerian/laurent.hpp"
#include "qeulerian/qcalculus.hpp"
#include "qeulerian/scheme.hpp"
#include "qeulerian/tseries.hpp"

namespace qe {

/// F(x,y;t) = (e^{xt} - e^{yt}) / (x e^{yt} - y e^{xt}) at a rational point;
/// requires x != y. Starts t + (x+y)/2 t^2 + ...
TSeries<Rational> f_classical(const SubstitutionScheme& s, int order);

/// The q-analog
///   u1 (exp_Q((x-u)t) - exp_Q((y-u)t)) / (x exp_Q((y-u)t) - y exp_Q((x-u)t))
/// with Q = q, or Q = 1/q when inverse_q is set. x, y, u rational; u1 from
/// the scheme; q symbolic.
TSeries<QRatFunc> f_q_series(const Rational& u, const SubstitutionScheme& s, int order,
                             bool inverse_q = false);

/// exp_Q(c t) with Q = q or 1/q over the rational-function field.
TSeries<QRatFunc> exp_q_ratfunc(const Rational& c, int order, bool inverse_q);

/// One factor of the main infinite product, with its two geometric brackets,
/// as a Laurent-in-q series exact inside the closed q-window [window_lo,
/// window_hi]. alpha and beta stay symbolic unless the scheme pins them.
struct GFactorResult {
	TSeries<LaurentPolyQ> series;
	int window_lo = 0;
	int window_hi = 0;
	/// Min q-degree over t-degrees >= 1 of the first bracket's inverse minus
	/// 1; the factor index k guarantees this is >= k.
	int first_bracket_min_degree = 0;
	/// Max over t-degrees m >= 1 of (max q-degree of the second bracket's
	/// inverse at t^m, plus k*m); the bounded offset of the -k drift.
	int second_bracket_max_offset = 0;
};

GFactorResult g_factor(int k, const SubstitutionScheme& s, int order, int window_lo,
                       int window_hi);

/// Truncated q-adic expansion of the first-bracket product
///   prod_{k<K} [1 - t alpha q^k (1-q) (u3 + u2 F(x,y,u4,q;t q^{k+1}))]^{-1},
/// exact over the rational-function field; alpha comes from the scheme.
TSeries<QRatFunc> first_bracket_product(const SubstitutionScheme& s, int factor_count,
                                        int order);

/// The displayed second bracket of factor k, over the rational-function
/// field (beta from the scheme), at argument t.
TSeries<QRatFunc> second_bracket_inverse(int k, const SubstitutionScheme& s, int order);

/// The proof-side bracket for the reversal series at factor k:
///   [1 - (t beta / q^k)(1 - 1/q)(u4 + u2 F(x,y,u3,1/q; t/q^{k+1}))]^{-1}.
TSeries<QRatFunc> reversal_bracket_inverse(int k, const SubstitutionScheme& s, int order);

/// E_0..E_N from the series of sec + tan; exact rational arithmetic.
std::vector<Rational> euler_numbers(int count);

/// Expansion of a symmetric x,y-homogeneous polynomial of degree d in the
/// basis (xy)^k (x+y)^{d-2k}; returns gamma_0..gamma_{floor(d/2)} in the
/// remaining variables. Reconstruction is exact by construction.
std::vector<MultiPoly> gamma_extract(const MultiPoly& h);

} // namespace qe
