#include "qeulerian/distribution.hpp"

#include <string>

namespace qe {

const char* stat_name(Stat s) {
	switch (s) {
	case Stat::des: return "des";
	case Stat::asc: return "asc";
	case Stat::exc: return "exc";
	case Stat::inv: return "inv";
	case Stat::maj: return "maj";
	case Stat::cyc: return "cyc";
	case Stat::lma: return "lma";
	case Stat::lmi: return "lmi";
	case Stat::rma: return "rma";
	case Stat::rmi: return "rmi";
	case Stat::valleys: return "valleys";
	case Stat::peaks: return "peaks";
	case Stat::double_ascents: return "double_ascents";
	case Stat::double_descents: return "double_descents";
	}
	return "?";
}

namespace {

bool is_quadruple_stat(Stat s) {
	return s == Stat::valleys || s == Stat::peaks || s == Stat::double_ascents ||
	       s == Stat::double_descents;
}

struct StatContext {
	StatProfile profile;
	Quadruple quad;
	bool has_quad = false;
};

StatContext make_context(const Permutation& p, const DistributionSpec& spec) {
	StatContext ctx;
	ctx.profile = classic_stats(p);
	for (const auto& w : spec.weights) {
		if (is_quadruple_stat(w.stat)) {
			if (!spec.boundary)
				throw DomainError("distribution: quadruple statistic needs a boundary");
			ctx.quad = quadruple_stats(p, *spec.boundary);
			ctx.has_quad = true;
			break;
		}
	}
	return ctx;
}

int value_from(const StatContext& ctx, Stat s) {
	switch (s) {
	case Stat::des: return ctx.profile.des;
	case Stat::asc: return ctx.profile.asc;
	case Stat::exc: return ctx.profile.exc;
	case Stat::inv: return ctx.profile.inv;
	case Stat::maj: return ctx.profile.maj;
	case Stat::cyc: return ctx.profile.cyc;
	case Stat::lma: return ctx.profile.lma;
	case Stat::lmi: return ctx.profile.lmi;
	case Stat::rma: return ctx.profile.rma;
	case Stat::rmi: return ctx.profile.rmi;
	case Stat::valleys: return ctx.quad.valleys;
	case Stat::peaks: return ctx.quad.peaks;
	case Stat::double_ascents: return ctx.quad.double_ascents;
	case Stat::double_descents: return ctx.quad.double_descents;
	}
	return 0;
}

Monomial monomial_for(const StatContext& ctx, const DistributionSpec& spec,
                      const Permutation& p) {
	Monomial m;
	for (const auto& w : spec.weights) {
		const int e = value_from(ctx, w.stat) - w.offset;
		if (e < 0)
			throw DomainError(std::string("distribution: negative exponent for ") +
			                  stat_name(w.stat) + " on " + p.str());
		m.e[static_cast<std::size_t>(w.var)] =
		    static_cast<std::int16_t>(m.exponent(w.var) + e);
	}
	return m;
}

} // namespace

MultiPoly weight_monomial(const Permutation& p, const DistributionSpec& spec) {
	const StatContext ctx = make_context(p, spec);
	return MultiPoly::monomial(monomial_for(ctx, spec, p), Rational(1));
}

int stat_value(const Permutation& p, Stat s, const std::optional<Boundary>& b) {
	if (is_quadruple_stat(s)) {
		if (!b)
			throw DomainError("stat_value: quadruple statistic needs a boundary");
		const Quadruple qd = quadruple_stats(p, *b);
		switch (s) {
		case Stat::valleys: return qd.valleys;
		case Stat::peaks: return qd.peaks;
		case Stat::double_ascents: return qd.double_ascents;
		default: return qd.double_descents;
		}
	}
	StatContext ctx;
	ctx.profile = classic_stats(p);
	return value_from(ctx, s);
}

MultiPoly distribution(int n, const DistributionSpec& spec) {
	MultiPoly total;
	for_each_permutation(n, [&](const Permutation& p) {
		if (spec.basic_only && n > 0 && p.at(1) != n)
			return;
		const StatContext ctx = make_context(p, spec);
		total.add_term(monomial_for(ctx, spec, p), Rational(1));
	});
	return total;
}

} // namespace qe
