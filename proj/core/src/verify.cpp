#include "qeulerian/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "qeulerian/decompose.hpp"
#include "qeulerian/errors.hpp"
#include "qeulerian/families.hpp"
#include "qeulerian/qcalculus.hpp"
#include "qeulerian/qnumbers.hpp"
#include "qeulerian/series_builders.hpp"

namespace qe {

namespace {

using Clock = std::chrono::steady_clock;

/// Collects the first failure and the elapsed time of one verifier run.
class Run {
public:
	Run(std::string id, int n, const TruncationPolicy& policy) : start_(Clock::now()) {
		rep_.id = std::move(id);
		rep_.n = n;
		rep_.seed = policy.seed;
		rep_.pass = true;
	}

	bool ok() const { return rep_.pass; }

	void fail(int degree, const std::string& residual) {
		if (!rep_.pass)
			return;
		rep_.pass = false;
		rep_.residual_degree = degree;
		rep_.residual = residual;
	}

	template <typename T>
	bool expect(int degree, const T& lhs, const T& rhs) {
		if (lhs == rhs)
			return true;
		fail(degree, "lhs=" + render(lhs) + " rhs=" + render(rhs));
		return false;
	}

	VerificationReport finish(const std::string& params) {
		rep_.params = params;
		rep_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
		                      Clock::now() - start_)
		                      .count();
		return rep_;
	}

private:
	static std::string render(const MultiPoly& v) { return v.str(); }
	static std::string render(const Rational& v) { return v.str(); }
	static std::string render(const QRatFunc& v) { return v.str(); }
	static std::string render(const QPoly& v) { return v.str(); }
	static std::string render(long v) { return std::to_string(v); }

	Clock::time_point start_;
	VerificationReport rep_;
};

std::array<Rational, kVarCount> scheme_point(const SubstitutionScheme& s) {
	std::array<Rational, kVarCount> p{};
	p[static_cast<std::size_t>(Var::x)] = s.x;
	p[static_cast<std::size_t>(Var::y)] = s.y;
	p[static_cast<std::size_t>(Var::u1)] = s.u1;
	p[static_cast<std::size_t>(Var::u2)] = s.u2();
	p[static_cast<std::size_t>(Var::u3)] = s.u3;
	p[static_cast<std::size_t>(Var::u4)] = s.u4();
	if (s.alpha)
		p[static_cast<std::size_t>(Var::alpha)] = *s.alpha;
	if (s.beta)
		p[static_cast<std::size_t>(Var::beta)] = *s.beta;
	if (s.q)
		p[static_cast<std::size_t>(Var::q)] = *s.q;
	return p;
}

QRatFunc qfact_qr(int m) {
	return QRatFunc(qfactorial_qpoly(m));
}

std::vector<SubstitutionScheme> draw_schemes(const TruncationPolicy& policy, bool with_ab,
                                             const std::optional<SubstitutionScheme>& fixed) {
	if (fixed)
		return {*fixed};
	std::mt19937_64 rng(policy.seed);
	std::vector<SubstitutionScheme> out;
	out.reserve(policy.sample_count);
	for (int i = 0; i < policy.sample_count; ++i)
		out.push_back(SubstitutionScheme::random(rng, with_ab));
	return out;
}

/// All-combinations grid over the free scheme variables, sized so that a
/// clean sweep is an interpolation proof for x,y(,alpha,beta)-degrees up to
/// deg_bound; the u1 line is longer because u2 = xy/u1 is rational in u1.
/// Guarded to the small-size regime: the grid volume grows like n^6.
std::vector<SubstitutionScheme> grid_schemes(int deg_bound, bool with_u, bool with_ab) {
	if (deg_bound > 4)
		throw GuardError("exhaustive grid is guarded to n <= 4");
	std::vector<Rational> xs, ys, u3s, u1s, abs_;
	for (int v = 1; v <= deg_bound + 1; ++v) {
		xs.emplace_back(v);
		ys.emplace_back(-v);
		abs_.emplace_back(v - 1);
	}
	if (with_u) {
		for (int v = 0; v <= deg_bound; ++v)
			u3s.emplace_back(v);
		for (int v = 1; v <= 2 * deg_bound + 3; ++v)
			u1s.emplace_back(v);
	} else {
		u3s.emplace_back(0);
		u1s.emplace_back(1);
	}
	if (!with_ab)
		abs_ = {Rational(1)};
	std::vector<SubstitutionScheme> out;
	for (const auto& x : xs)
		for (const auto& y : ys)
			for (const auto& u3 : u3s)
				for (const auto& u1 : u1s)
					for (const auto& a : abs_)
						for (const auto& b : abs_)
							out.emplace_back(x, y, u3, u1, a, b);
	return out;
}

std::vector<Rational> random_rationals(std::uint64_t seed, int count,
                                       const std::function<bool(const Rational&)>& admit) {
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> num(-9, 9);
	std::uniform_int_distribution<int> den(1, 4);
	std::vector<Rational> out;
	while (static_cast<int>(out.size()) < count) {
		Rational r(num(rng), den(rng));
		if (admit(r))
			out.push_back(r);
	}
	return out;
}

/// Checks that the Laurent expansion of `value` at q = 0 agrees with `poly`
/// for all q-degrees below `window`.
bool matches_in_window(const QRatFunc& value, const QPoly& poly, int window) {
	const std::vector<Rational> exp = value.expansion_at_zero(0, window);
	if (!value.is_zero() && value.order_at_zero() < 0)
		return false;
	for (int k = 0; k < window; ++k)
		if (exp[k] != poly.coefficient(k))
			return false;
	return true;
}

std::string scheme_count_params(const TruncationPolicy& policy, std::size_t count,
                                const std::string& extra = "") {
	std::ostringstream os;
	os << "schemes=" << count;
	if (policy.exhaustive_grid)
		os << " grid=on";
	if (!extra.empty())
		os << " " << extra;
	return os.str();
}

// ---------------------------------------------------------------------------
// Individual verifiers
// ---------------------------------------------------------------------------

VerificationReport verify_eulerian_egf(int n, const TruncationPolicy& policy,
                                       const std::optional<SubstitutionScheme>&) {
	Run run("eulerian-egf", n, policy);
	std::vector<MultiPoly> a(n + 1);
	for (int m = 1; m <= n; ++m)
		a[m] = lhs_family("eulerian", m);

	std::vector<Rational> xs;
	if (policy.exhaustive_grid) {
		for (int v = 0; v <= n + 2; ++v)
			if (v != 1)
				xs.emplace_back(v);
	} else {
		xs = {Rational(-3),    Rational(-2),   Rational(-1), Rational(-1, 2),
		      Rational(-1, 3), Rational(1, 3), Rational(1, 2), Rational(2),
		      Rational(3),     Rational(5)};
	}

	for (const Rational& x : xs) {
		if (!run.ok())
			break;
		const TSeries<Rational> e =
		    series_exp(TSeries<Rational>::monomial(1, Rational(1) - x, n));
		const TSeries<Rational> den =
		    TSeries<Rational>::constant(Rational(1), n) - e.scaled(x);
		const TSeries<Rational> rhs = invert(den).scaled(Rational(1) - x);
		std::array<Rational, kVarCount> point{};
		point[static_cast<std::size_t>(Var::x)] = x;
		for (int m = 0; m <= n; ++m) {
			const Rational lhs = m == 0 ? Rational(1) : x * a[m].evaluate(point);
			if (!run.expect(m, lhs, rhs[m] * factorial(m)))
				break;
		}
	}
	return run.finish("x-values=" + std::to_string(xs.size()) +
	                  " x-degree<=" + std::to_string(n + 1));
}

VerificationReport verify_stanley(int n, const TruncationPolicy& policy,
                                  const std::optional<SubstitutionScheme>& scheme) {
	Run run("stanley", n, policy);
	std::vector<MultiPoly> lhs(n + 1);
	for (int m = 1; m <= n; ++m) {
		DistributionSpec spec;
		spec.weights = {{Stat::des, Var::x, -1}, {Stat::inv, Var::q, 0}};
		lhs[m] = distribution(m, spec);
	}

	std::vector<Rational> xs;
	if (scheme) {
		xs = {scheme->x};
	} else if (policy.exhaustive_grid) {
		for (int v = 0; v <= n + 2; ++v)
			if (v != 1)
				xs.emplace_back(v);
	} else {
		xs = random_rationals(policy.seed, policy.sample_count,
		                      [](const Rational& r) { return r != Rational(1); });
	}

	for (const Rational& x : xs) {
		if (!run.ok())
			break;
		const TSeries<QRatFunc> e = exp_q_series(QRatFunc(Rational(1) - x), n);
		const TSeries<QRatFunc> den =
		    TSeries<QRatFunc>::constant(QRatFunc(1), n) - e.scaled(QRatFunc(x));
		const TSeries<QRatFunc> rhs = invert(den).scaled(QRatFunc(Rational(1) - x));
		for (int m = 0; m <= n; ++m) {
			const QRatFunc rv = rhs[m] * qfact_qr(m);
			const QRatFunc lv = m == 0 ? QRatFunc(1)
			                           : QRatFunc(QPoly::from_multipoly(
			                                 lhs[m].substitute(Var::x, x)));
			if (!run.expect(m, lv, rv))
				break;
		}
	}
	return run.finish("x-values=" + std::to_string(xs.size()) +
	                  " x-degree<=" + std::to_string(n + 1));
}

VerificationReport verify_carlitz(int n, const TruncationPolicy& policy,
                                  const std::optional<SubstitutionScheme>& scheme) {
	Run run("carlitz", n, policy);
	const int order = std::max(1, n - 1);
	std::vector<MultiPoly> a(order + 2);
	for (int m = 1; m <= order + 1; ++m)
		a[m] = lhs_family("stirling-eulerian", m);

	const std::vector<SubstitutionScheme> schemes =
	    policy.exhaustive_grid ? grid_schemes(n, false, true)
	                           : draw_schemes(policy, true, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const TSeries<Rational> f = f_classical(s, order);
		const TSeries<Rational> one = TSeries<Rational>::constant(Rational(1), order);
		const TSeries<Rational> rhs = pow_rational(one + f.scaled(s.x), *s.alpha) *
		                              pow_rational(one + f.scaled(s.y), *s.beta);
		const auto point = scheme_point(s);
		for (int m = 0; m <= order; ++m)
			if (!run.expect(m, a[m + 1].evaluate(point), rhs[m] * factorial(m)))
				break;
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "per-var-degree<=" + std::to_string(n)));
}

VerificationReport verify_carlitz2(int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>& scheme) {
	Run run("carlitz2", n, policy);
	std::vector<MultiPoly> lhs(n + 1);
	for (int m = 1; m <= n; ++m)
		lhs[m] = lhs_family("carlitz-quadruple", m);

	const std::vector<SubstitutionScheme> schemes =
	    policy.exhaustive_grid ? grid_schemes(n, true, false)
	                           : draw_schemes(policy, false, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const TSeries<Rational> f = f_classical(s, n);
		const auto point = scheme_point(s);
		if (!run.expect(0, Rational(0), f[0]))
			break;
		for (int m = 1; m <= n; ++m)
			if (!run.expect(m, lhs[m].evaluate(point), f[m] * factorial(m)))
				break;
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "per-var-degree<=" + std::to_string(n)));
}

VerificationReport verify_pan_zeng(int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>& scheme) {
	Run run("pan-zeng", n, policy);
	std::vector<MultiPoly> lhs(n + 1);
	for (int m = 1; m <= n; ++m)
		lhs[m] = lhs_family("pan-zeng", m);

	const std::vector<SubstitutionScheme> schemes =
	    policy.exhaustive_grid ? grid_schemes(n, true, false)
	                           : draw_schemes(policy, false, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const TSeries<QRatFunc> f = f_q_series(s.u4(), s, n);
		if (!run.expect(0, QRatFunc(), f[0]))
			break;
		for (int m = 1; m <= n; ++m) {
			const QRatFunc e = f[m] * qfact_qr(m);
			if (!e.is_polynomial()) {
				run.fail(m, "denominator survives: " + e.str());
				break;
			}
			const QPoly lv = QPoly::from_multipoly(s.specialize(lhs[m], false, false));
			if (!run.expect(m, lv, e.to_qpoly()))
				break;
		}
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "per-var-degree<=" + std::to_string(n)));
}

VerificationReport verify_ji(int n, const TruncationPolicy& policy,
                             const std::optional<SubstitutionScheme>& scheme) {
	Run run("ji", n, policy);
	const int order = std::max(1, n - 1);
	std::vector<MultiPoly> p(order + 2);
	for (int m = 1; m <= order + 1; ++m)
		p[m] = lhs_family("p", m);

	const std::vector<SubstitutionScheme> schemes =
	    policy.exhaustive_grid ? grid_schemes(n, true, true)
	                           : draw_schemes(policy, true, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const Rational half_sum = (*s.alpha + *s.beta) / Rational(2);
		const Rational drift = (*s.beta - *s.alpha) * (s.u4() - s.u3) / Rational(2);
		const TSeries<Rational> f = f_classical(s, order);
		const TSeries<Rational> one = TSeries<Rational>::constant(Rational(1), order);
		const TSeries<Rational> rhs =
		    pow_rational(one + f.scaled(s.y), half_sum) *
		    pow_rational(one + f.scaled(s.x), half_sum) *
		    series_exp(TSeries<Rational>::monomial(1, drift, order));
		const auto point = scheme_point(s);
		for (int m = 0; m <= order; ++m)
			if (!run.expect(m, p[m + 1].evaluate(point), rhs[m] * factorial(m)))
				break;
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "per-var-degree<=" + std::to_string(n)));
}

VerificationReport verify_gessel_product(int n, const TruncationPolicy& policy,
                                         const std::optional<SubstitutionScheme>&) {
	const int order = n > 0 ? n : policy.t_order;
	const int window = policy.q_window;
	Run run("gessel-product", order, policy);

	std::mt19937_64 rng(policy.seed);
	std::uniform_int_distribution<int> coeff(-3, 3);
	std::uniform_int_distribution<int> qdeg(0, 3);

	std::vector<MultiPoly> fact(order + 1);
	fact[0] = MultiPoly(1);
	for (int m = 1; m <= order; ++m)
		fact[m] = fact[m - 1] * qint(m);

	for (int trial = 0; trial < policy.sample_count && run.ok(); ++trial) {
		TSeries<MultiPoly> f(order + 1);
		for (int m = 1; m <= order + 1; ++m) {
			MultiPoly c;
			const int top = qdeg(rng);
			for (int j = 0; j <= top; ++j)
				c.add_term(Monomial::of(Var::q, j), Rational(coeff(rng)));
			f.set(m, c);
		}
		const TSeries<MultiPoly> prod = product_expansion(f, window, order);
		std::vector<MultiPoly> f_egf(order + 2);
		for (int m = 0; m <= order + 1; ++m)
			f_egf[m] = f[m] * (m <= order ? fact[m] : fact[order] * qint(order + 1));
		const std::vector<MultiPoly> oracle = exp_q_compose_egf(f_egf);
		for (int m = 0; m <= order; ++m) {
			const MultiPoly lhs = truncate_q_degrees(prod[m] * fact[m], window);
			const MultiPoly rhs = truncate_q_degrees(oracle[m], window);
			if (!run.expect(m, lhs, rhs))
				break;
		}
	}
	return run.finish("trials=" + std::to_string(policy.sample_count) +
	                  " window=" + std::to_string(window));
}

VerificationReport verify_gessel_multiplicative(int n, const TruncationPolicy& policy,
                                                const std::optional<SubstitutionScheme>&) {
	Run run("gessel-multiplicative", n, policy);
	for (const bool use_omega0 : {false, true}) {
		if (!run.ok())
			break;
		std::vector<MultiPoly> g(n + 1), f_egf(n + 1);
		g[0] = MultiPoly(1);
		for (int m = 1; m <= n; ++m) {
			if (use_omega0) {
				g[m] = lhs_family("l", m);
				f_egf[m] = lhs_family("b", m);
			} else {
				DistributionSpec spec;
				spec.weights = {{Stat::lma, Var::x, 0}, {Stat::inv, Var::q, 0}};
				g[m] = distribution(m, spec);
				spec.basic_only = true;
				f_egf[m] = distribution(m, spec);
			}
		}
		const std::vector<MultiPoly> rhs = exp_q_compose_egf(f_egf);
		for (int m = 0; m <= n; ++m)
			if (!run.expect(m, g[m], rhs[m]))
				break;
	}
	return run.finish("weights=x^lma,omega0");
}

VerificationReport verify_ln_formula(int n, const TruncationPolicy& policy,
                                     const std::optional<SubstitutionScheme>& scheme) {
	Run run("ln-formula", n, policy);
	const int window = n * (n - 1) / 2 + 1;
	std::vector<MultiPoly> l(n + 1);
	for (int m = 0; m <= n; ++m)
		l[m] = lhs_family("l", m);

	const std::vector<SubstitutionScheme> schemes = draw_schemes(policy, true, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const TSeries<QRatFunc> prod = first_bracket_product(s, window, n);
		for (int m = 0; m <= n; ++m) {
			const QRatFunc e = prod[m] * qfact_qr(m);
			const QPoly lv = QPoly::from_multipoly(s.specialize(l[m], true, false));
			if (!matches_in_window(e, lv, window)) {
				run.fail(m, "window mismatch: lhs=" + lv.str() + " rhs=" + e.str());
				break;
			}
		}
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "window=" + std::to_string(window)));
}

VerificationReport verify_rn_formula(int n, const TruncationPolicy& policy,
                                     const std::optional<SubstitutionScheme>&) {
	Run run("rn-formula", n, policy);
	const std::map<Var, MultiPoly> swap_args{
	    {Var::u3, MultiPoly::variable(Var::u4)},
	    {Var::u4, MultiPoly::variable(Var::u3)},
	    {Var::alpha, MultiPoly::variable(Var::beta)},
	};
	for (int m = 0; m <= n && run.ok(); ++m) {
		const MultiPoly r = lhs_family("r", m);
		const MultiPoly l_swapped = lhs_family("l", m).substitute_many(swap_args);
		const LaurentPolyQ flipped = LaurentPolyQ::with_q_inverted(l_swapped);
		const MultiPoly rhs = flipped.shifted_q(m * (m - 1) / 2).to_multipoly();
		run.expect(m, r, rhs);
	}
	return run.finish("symbolic");
}

VerificationReport verify_convolution(int n, const TruncationPolicy& policy,
                                      const std::optional<SubstitutionScheme>&) {
	Run run("convolution", n, policy);
	std::vector<MultiPoly> l(n + 1), r(n + 1);
	for (int m = 0; m <= n; ++m) {
		l[m] = lhs_family("l", m);
		r[m] = lhs_family("r", m);
	}
	DistributionSpec pq;
	pq.boundary = kBoundaryZeroZero;
	pq.weights = {{Stat::valleys, Var::u1, 0},  {Stat::peaks, Var::u2, 1},
	              {Stat::double_ascents, Var::u3, 0}, {Stat::double_descents, Var::u4, 0},
	              {Stat::lma, Var::alpha, 1},   {Stat::rma, Var::beta, 1},
	              {Stat::inv, Var::q, 0}};

	for (int m = 0; m <= n && run.ok(); ++m) {
		// Split S_{m+1} by the position of the maximum letter.
		std::vector<MultiPoly> split(m + 1);
		MultiPoly total;
		for_each_permutation(m + 1, [&](const Permutation& p) {
			int pos = 0;
			for (int i = 1; i <= m + 1; ++i)
				if (p.at(i) == m + 1)
					pos = i;
			const MultiPoly w = weight_monomial(p, pq);
			split[pos - 1] += w;
			total += w;
		});
		for (int k = 0; k <= m; ++k) {
			const MultiPoly rhs = qbinomial(m, k) *
			                      MultiPoly::variable(Var::q, m - k) * l[k] * r[m - k];
			if (!run.expect(m, split[k], rhs))
				break;
		}
		if (run.ok())
			run.expect(m, lhs_family("p-q", m + 1), total);
	}
	return run.finish("symbolic split by max position");
}

VerificationReport verify_main(int n, const TruncationPolicy& policy,
                               const std::optional<SubstitutionScheme>& scheme) {
	Run run("main", n, policy);
	const int window = n * (n - 1) / 2 + 1;

	// The proof's decomposition carries the theorem; run its three parts.
	for (const char* part : {"ln-formula", "rn-formula", "convolution"}) {
		const VerificationReport sub = verify_identity(part, n, policy, scheme);
		if (!sub.pass) {
			run.fail(sub.residual_degree, std::string(part) + ": " + sub.residual);
			return run.finish("composite part failed");
		}
	}

	std::vector<MultiPoly> r(n + 1), p(n + 2);
	for (int m = 0; m <= n; ++m)
		r[m] = lhs_family("r", m);
	for (int m = 1; m <= n + 1; ++m)
		p[m] = lhs_family("p-q", m);

	const std::vector<SubstitutionScheme> schemes = draw_schemes(policy, true, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;

		// Displayed second bracket of G_k vs the reversal-series bracket at
		// argument tq: exact rational-function identity, factor by factor.
		for (int k = 0; k <= std::min(4, n) && run.ok(); ++k) {
			const TSeries<QRatFunc> displayed = second_bracket_inverse(k, s, n);
			const TSeries<QRatFunc> proof =
			    scale_argument(reversal_bracket_inverse(k, s, n), Rational(1), 1);
			if (const auto bad = first_mismatch(displayed, proof)) {
				run.fail(*bad, "factor " + std::to_string(k) + " q-shift: displayed=" +
				                   displayed[*bad].str() + " proof=" + proof[*bad].str());
			}
		}
		if (!run.ok())
			break;

		// Direct comparison, one side truncated: the truncated first-bracket
		// product times the exact reversal series agrees with the enumerated
		// side in all q-degrees below the window.
		const TSeries<QRatFunc> lprod = first_bracket_product(s, window, n);
		TSeries<QRatFunc> rseries(n);
		for (int m = 0; m <= n; ++m) {
			const QPoly rm = QPoly::from_multipoly(s.specialize(r[m], true, false));
			rseries.set(m, QRatFunc(rm.shifted(m)) / qfact_qr(m));
		}
		const TSeries<QRatFunc> direct = lprod * rseries;
		for (int m = 0; m <= n; ++m) {
			const QPoly pm = QPoly::from_multipoly(s.specialize(p[m + 1], true, false));
			const QRatFunc lhs_m = QRatFunc(pm) / qfact_qr(m);
			const QRatFunc diff = lhs_m - direct[m];
			if (!diff.is_zero()) {
				const auto exp = diff.expansion_at_zero(0, window);
				if (diff.order_at_zero() < 0 ||
				    std::any_of(exp.begin(), exp.end(),
				                [](const Rational& c) { return !c.is_zero(); })) {
					run.fail(m, "direct window mismatch: " + diff.str());
					break;
				}
			}
		}
	}
	return run.finish(scheme_count_params(policy, schemes.size(),
	                                      "window=" + std::to_string(window)));
}

VerificationReport verify_main2(int n, const TruncationPolicy& policy,
                                const std::optional<SubstitutionScheme>& scheme) {
	Run run("main2", n, policy);
	std::vector<MultiPoly> p(n + 2);
	for (int m = 1; m <= n + 1; ++m)
		p[m] = lhs_family("p-q", m);

	const QRatFunc one_minus_q = QRatFunc(1) - QRatFunc::q(1);
	const QRatFunc q_minus_one = QRatFunc::q(1) - QRatFunc(1);
	// 1/(1 - 1/q) = q/(q - 1).
	const QRatFunc inv_one_minus_qinv = QRatFunc(QPoly::q(1), QPoly::q(1) - QPoly(1));

	const std::vector<SubstitutionScheme> schemes = draw_schemes(policy, true, scheme);
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const QRatFunc av(*s.alpha), bv(*s.beta);
		const QRatFunc u2v(s.u2()), u3v(s.u3), u4v(s.u4());

		const TSeries<QRatFunc> f_at_zq =
		    scale_argument(f_q_series(s.u4(), s, n, false), Rational(1), 1);
		const TSeries<QRatFunc> content_a =
		    TSeries<QRatFunc>::constant(u3v, n) + f_at_zq.scaled(u2v);
		TSeries<QRatFunc> xa(n);
		for (int m = 1; m <= n; ++m)
			xa.set(m, content_a[m - 1] * one_minus_q * av);
		const TSeries<QRatFunc> log_a =
		    -series_log(TSeries<QRatFunc>::constant(QRatFunc(1), n) - xa);
		TSeries<QRatFunc> integrand_a(n - 1);
		for (int m = 0; m < n; ++m)
			integrand_a.set(m, log_a[m + 1] / one_minus_q);
		const TSeries<QRatFunc> int_a = q_integral(integrand_a, QDirection::q);

		const TSeries<QRatFunc> f_tilde = f_q_series(s.u3, s, n, true);
		const TSeries<QRatFunc> content_b =
		    TSeries<QRatFunc>::constant(u4v, n) + f_tilde.scaled(u2v);
		TSeries<QRatFunc> xb(n);
		for (int m = 1; m <= n; ++m)
			xb.set(m, content_b[m - 1] * q_minus_one * bv);
		const TSeries<QRatFunc> log_b =
		    -series_log(TSeries<QRatFunc>::constant(QRatFunc(1), n) - xb);
		TSeries<QRatFunc> integrand_b(n - 1);
		for (int m = 0; m < n; ++m)
			integrand_b.set(m, log_b[m + 1] * inv_one_minus_qinv);
		const TSeries<QRatFunc> int_b = q_integral(integrand_b, QDirection::q_inverse);

		const TSeries<QRatFunc> rhs = series_exp(int_a + int_b);
		for (int m = 0; m <= n; ++m) {
			const QPoly pm = QPoly::from_multipoly(s.specialize(p[m + 1], true, false));
			if (!run.expect(m, QRatFunc(pm) / qfact_qr(m), rhs[m]))
				break;
		}
	}

	// Closed antiderivative of xy F(x,y;t), checked classically at q = 1.
	for (const auto& s : schemes) {
		if (!run.ok())
			break;
		const int order = 8;
		const TSeries<Rational> lhs =
		    integrate_t(f_classical(s, order - 1).scaled(s.x * s.y));
		const TSeries<Rational> ex =
		    series_exp(TSeries<Rational>::monomial(1, s.x, order));
		const TSeries<Rational> ey =
		    series_exp(TSeries<Rational>::monomial(1, s.y, order));
		const TSeries<Rational> den =
		    (ey.scaled(s.x) - ex.scaled(s.y)).scaled((s.x - s.y).inverse());
		const TSeries<Rational> rhs = -series_log(den);
		if (const auto bad = first_mismatch(lhs, rhs))
			run.fail(*bad, "parint: " + (lhs[*bad] - rhs[*bad]).str());
	}
	return run.finish(scheme_count_params(policy, schemes.size(), "parint-order=8"));
}

MultiPoly half_alpha_beta() {
	return (MultiPoly::variable(Var::alpha) + MultiPoly::variable(Var::beta))
	    .scaled(Rational(1, 2));
}

VerificationReport verify_gamma_ab(int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>&) {
	Run run("gamma-ab", n, policy);
	const MultiPoly a_sym = lhs_family("stirling-eulerian", n);
	const MultiPoly h = a_sym.substitute_many(
	    {{Var::alpha, half_alpha_beta()}, {Var::beta, half_alpha_beta()}});
	const std::vector<MultiPoly> gamma = gamma_extract(h);
	const std::vector<MultiPoly> sums = pnk_sums(n, PnkWeight::lmi_rmi);
	for (std::size_t k = 0; k < gamma.size() && run.ok(); ++k) {
		const MultiPoly expected =
		    k < sums.size()
		        ? sums[k].scaled(Rational(1, 2).pow(n - 2 * static_cast<int>(k) - 1))
		        : MultiPoly();
		if (!run.expect(static_cast<int>(k), gamma[k], expected))
			break;
		// gamma-positivity: nonnegative, and integral after the 2-power scaling.
		if (!gamma[k].has_nonnegative_coefficients())
			run.fail(static_cast<int>(k), "negative coefficient in " + gamma[k].str());
		const MultiPoly scaled =
		    gamma[k].scaled(Rational(2).pow(n - 2 * static_cast<int>(k) - 1));
		if (!scaled.has_integer_coefficients())
			run.fail(static_cast<int>(k), "non-integer scaled gamma " + scaled.str());
	}
	return run.finish("symbolic");
}

VerificationReport verify_gamma_aa(int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>&) {
	Run run("gamma-aa", n, policy);
	const MultiPoly a_sym = lhs_family("stirling-eulerian", n);
	const MultiPoly h = a_sym.substitute(Var::beta, MultiPoly::variable(Var::alpha));
	const std::vector<MultiPoly> gamma = gamma_extract(h);
	const std::vector<MultiPoly> sums = pnk_sums(n, PnkWeight::alpha_only);
	for (std::size_t k = 0; k < gamma.size() && run.ok(); ++k) {
		const MultiPoly expected =
		    k < sums.size()
		        ? sums[k].scaled(Rational(1, 2).pow(n - 2 * static_cast<int>(k) - 1))
		        : MultiPoly();
		run.expect(static_cast<int>(k), gamma[k], expected);
	}
	return run.finish("symbolic");
}

VerificationReport verify_pk_lr(int n, const TruncationPolicy& policy,
                                const std::optional<SubstitutionScheme>&) {
	Run run("pk-lr", n, policy);
	const std::vector<MultiPoly> lhs = pnk_sums(n, PnkWeight::lmi_rmi_doubled);
	const std::vector<MultiPoly> rhs = pnk_sums(n, PnkWeight::sum_exponent);
	for (std::size_t k = 0; k < lhs.size() && run.ok(); ++k)
		run.expect(static_cast<int>(k), lhs[k], rhs[k]);
	return run.finish("symbolic, all k");
}

VerificationReport verify_pk_lr2(int n, const TruncationPolicy& policy,
                                 const std::optional<SubstitutionScheme>&) {
	Run run("pk-lr2", n, policy);
	const std::vector<MultiPoly> lhs = pnk_sums(n, PnkWeight::lmi_rmi);
	const std::vector<MultiPoly> rhs = lnk_sums(n - 1);
	const std::size_t top = std::max(lhs.size(), rhs.size());
	for (std::size_t k = 0; k < top && run.ok(); ++k) {
		const MultiPoly a = k < lhs.size() ? lhs[k] : MultiPoly();
		const MultiPoly b = k < rhs.size() ? rhs[k] : MultiPoly();
		run.expect(static_cast<int>(k), a, b);
	}

	// The pivot bijection sigma -> (sigma_2 - 1)...(sigma_n - 1) between
	// {sigma in P_{n,k} : sigma_1 = 1} and L_{n-1,k}.
	if (run.ok()) {
		std::map<int, long> image_count, class_count;
		for_each_permutation(n, [&](const Permutation& p) {
			if (p.at(1) != 1)
				return;
			std::vector<int> tail;
			for (int i = 2; i <= n; ++i)
				tail.push_back(p.at(i) - 1);
			const Permutation tau{std::move(tail)};
			const int k_src = quadruple_stats(p, kBoundaryInfInf).peaks;
			const int k_img = n == 1 ? 0 : (tau.size() == 0 ? 0 : quadruple_stats(tau, kBoundaryZeroInf).peaks);
			if (k_src != k_img) {
				run.fail(k_src, "pivot bijection changes the peak class on " + p.str());
				return;
			}
			if (classic_stats(p).rmi != classic_stats(tau).rmi + 1) {
				run.fail(k_src, "pivot bijection breaks rmi on " + p.str());
				return;
			}
			image_count[k_src] += 1;
		});
		for_each_permutation(n - 1, [&](const Permutation& t) {
			const int k = n == 1 ? 0 : (t.size() == 0 ? 0 : quadruple_stats(t, kBoundaryZeroInf).peaks);
			class_count[k] += 1;
		});
		if (run.ok() && image_count != class_count)
			run.fail(-1, "pivot bijection is not onto");
	}
	return run.finish("symbolic, all k, with pivot bijection");
}

VerificationReport verify_secant(int n, const TruncationPolicy& policy,
                                 const std::optional<SubstitutionScheme>&) {
	Run run("secant", n, policy);
	const std::vector<Rational> euler = euler_numbers(n);
	for (int m = 0; m <= n && run.ok(); ++m) {
		long count = 0;
		for_each_permutation(m, [&](const Permutation& p) {
			if (is_alternating(p))
				++count;
		});
		run.expect(m, euler[m], Rational(count));
	}

	const MultiPoly half_alpha = MultiPoly::variable(Var::alpha).scaled(Rational(1, 2));
	for (int m = 1; m <= n && run.ok(); m += 2) {
		const int j = (m - 1) / 2;
		const MultiPoly lhs = lhs_family("stirling-eulerian", m)
		                          .substitute_many({{Var::x, MultiPoly(-1)},
		                                            {Var::y, MultiPoly(1)},
		                                            {Var::alpha, half_alpha},
		                                            {Var::beta, half_alpha}});
		MultiPoly rhs;
		for_each_permutation(2 * j, [&](const Permutation& p) {
			if (is_alternating(p))
				rhs.add_term(Monomial::of(Var::alpha, classic_stats(p).rmi), Rational(1));
		});
		rhs = rhs.scaled(Rational(j % 2 == 0 ? 1 : -1));
		run.expect(m, lhs, rhs);
	}
	return run.finish("euler numbers and alpha-secant");
}

using Verifier = VerificationReport (*)(int, const TruncationPolicy&,
                                        const std::optional<SubstitutionScheme>&);

struct Entry {
	IdentityInfo info;
	Verifier fn;
};

const std::vector<Entry>& registry() {
	static const std::vector<Entry> entries = {
	    {{"eulerian-egf", 8, false}, verify_eulerian_egf},
	    {{"stanley", 7, false}, verify_stanley},
	    {{"carlitz", 7, false}, verify_carlitz},
	    {{"carlitz2", 7, false}, verify_carlitz2},
	    {{"pan-zeng", 7, false}, verify_pan_zeng},
	    {{"ji", 7, false}, verify_ji},
	    {{"gessel-product", 8, true}, verify_gessel_product},
	    {{"gessel-multiplicative", 7, false}, verify_gessel_multiplicative},
	    {{"ln-formula", 6, false}, verify_ln_formula},
	    {{"rn-formula", 6, false}, verify_rn_formula},
	    {{"convolution", 6, false}, verify_convolution},
	    {{"main", 6, false}, verify_main},
	    {{"main2", 6, false}, verify_main2},
	    {{"gamma-ab", 8, false}, verify_gamma_ab},
	    {{"gamma-aa", 8, false}, verify_gamma_aa},
	    {{"pk-lr", 8, false}, verify_pk_lr},
	    {{"pk-lr2", 8, false}, verify_pk_lr2},
	    {{"secant", 9, false}, verify_secant},
	};
	return entries;
}

} // namespace

const std::vector<IdentityInfo>& identity_catalog() {
	static const std::vector<IdentityInfo> infos = [] {
		std::vector<IdentityInfo> v;
		for (const auto& e : registry())
			v.push_back(e.info);
		return v;
	}();
	return infos;
}

bool is_known_identity(const std::string& id) {
	for (const auto& e : registry())
		if (e.info.id == id)
			return true;
	return false;
}

VerificationReport verify_identity(const std::string& id, int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>& scheme) {
	for (const auto& e : registry())
		if (e.info.id == id)
			return e.fn(n, policy, scheme);
	throw DomainError("verify_identity: unknown identity '" + id + "'");
}

} // namespace qe
