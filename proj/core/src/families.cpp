#include "qeulerian/families.hpp"

#include "qeulerian/errors.hpp"

namespace qe {

namespace {

DistributionSpec quadruple_weights(const Boundary& b, int peak_offset) {
	DistributionSpec spec;
	spec.boundary = b;
	spec.weights = {
	    {Stat::valleys, Var::u1, 0},
	    {Stat::peaks, Var::u2, peak_offset},
	    {Stat::double_ascents, Var::u3, 0},
	    {Stat::double_descents, Var::u4, 0},
	};
	return spec;
}

} // namespace

MultiPoly lhs_family(const std::string& family, int n) {
	if (n < 0)
		throw DomainError("lhs_family: negative size");
	if (family == "l" || family == "r") {
		if (n == 0)
			return MultiPoly(1);
	} else if (n == 0) {
		throw DomainError("lhs_family: family '" + family + "' needs n >= 1");
	}

	DistributionSpec spec;
	if (family == "eulerian") {
		spec.weights = {{Stat::des, Var::x, 0}};
	} else if (family == "bivariate-eulerian") {
		spec.weights = {{Stat::asc, Var::x, 0}, {Stat::des, Var::y, 0}};
	} else if (family == "stirling-eulerian") {
		spec.weights = {{Stat::asc, Var::x, 0},
		                {Stat::des, Var::y, 0},
		                {Stat::lma, Var::alpha, 1},
		                {Stat::rma, Var::beta, 1}};
	} else if (family == "stanley") {
		spec.weights = {{Stat::des, Var::x, -1}, {Stat::inv, Var::q, 0}};
	} else if (family == "carlitz-quadruple") {
		spec = quadruple_weights(kBoundaryZeroZero, 1);
	} else if (family == "pan-zeng") {
		spec = quadruple_weights(kBoundaryInfInf, 0);
		spec.weights.push_back({Stat::inv, Var::q, 0});
	} else if (family == "p" || family == "p-q") {
		spec = quadruple_weights(kBoundaryZeroZero, 1);
		spec.weights.push_back({Stat::lma, Var::alpha, 1});
		spec.weights.push_back({Stat::rma, Var::beta, 1});
		if (family == "p-q")
			spec.weights.push_back({Stat::inv, Var::q, 0});
	} else if (family == "l" || family == "b") {
		spec = quadruple_weights(kBoundaryZeroInf, 0);
		spec.weights.push_back({Stat::lma, Var::alpha, 0});
		spec.weights.push_back({Stat::inv, Var::q, 0});
		spec.basic_only = family == "b";
	} else if (family == "r") {
		spec = quadruple_weights(kBoundaryInfZero, 0);
		spec.weights.push_back({Stat::rma, Var::beta, 0});
		spec.weights.push_back({Stat::inv, Var::q, 0});
	} else {
		throw DomainError("lhs_family: unknown family '" + family + "'");
	}
	return distribution(n, spec);
}

std::vector<std::string> lhs_family_names() {
	return {"eulerian", "bivariate-eulerian", "stirling-eulerian", "stanley",
	        "carlitz-quadruple", "pan-zeng", "p", "p-q", "l", "b", "r"};
}

std::vector<MultiPoly> pnk_sums(int n, PnkWeight weight) {
	std::vector<MultiPoly> sums(n / 2 + 1);
	const MultiPoly sum_ab =
	    MultiPoly::variable(Var::alpha) + MultiPoly::variable(Var::beta);
	std::vector<MultiPoly> sum_ab_pow = {MultiPoly(1)};
	for_each_permutation(n, [&](const Permutation& p) {
		const int k = quadruple_stats(p, kBoundaryInfInf).peaks;
		const StatProfile st = classic_stats(p);
		const int a = st.lmi - 1;
		const int b = st.rmi - 1;
		switch (weight) {
		case PnkWeight::lmi_rmi:
			sums[k].add_term(
			    Monomial::of(Var::alpha, a) * Monomial::of(Var::beta, b), Rational(1));
			break;
		case PnkWeight::lmi_rmi_doubled:
			sums[k].add_term(Monomial::of(Var::alpha, a) * Monomial::of(Var::beta, b),
			                 Rational(2).pow(a + b));
			break;
		case PnkWeight::sum_exponent:
			while (static_cast<int>(sum_ab_pow.size()) <= a + b)
				sum_ab_pow.push_back(sum_ab_pow.back() * sum_ab);
			sums[k] += sum_ab_pow[a + b];
			break;
		case PnkWeight::alpha_only:
			sums[k].add_term(Monomial::of(Var::alpha, a + b), Rational(1));
			break;
		}
	});
	return sums;
}

std::vector<MultiPoly> lnk_sums(int n) {
	std::vector<MultiPoly> sums(n / 2 + 2);
	const MultiPoly sum_ab =
	    MultiPoly::variable(Var::alpha) + MultiPoly::variable(Var::beta);
	std::vector<MultiPoly> sum_ab_pow = {MultiPoly(1)};
	for_each_permutation(n, [&](const Permutation& p) {
		const int k = n == 0 ? 0 : quadruple_stats(p, kBoundaryZeroInf).peaks;
		const int r = classic_stats(p).rmi;
		while (static_cast<int>(sum_ab_pow.size()) <= r)
			sum_ab_pow.push_back(sum_ab_pow.back() * sum_ab);
		sums[k] += sum_ab_pow[r];
	});
	return sums;
}

} // namespace qe
