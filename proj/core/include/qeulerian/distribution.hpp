#pragma once

#include <optional>
#include <vector>

#include "qeulerian/multipoly.hpp"
#include "qeulerian/permutation.hpp"

namespace qe {

/// Statistics a distribution can weight by.
enum class Stat {
	des,
	asc,
	exc,
	inv,
	maj,
	cyc,
	lma,
	lmi,
	rma,
	rmi,
	valleys,
	peaks,
	double_ascents,
	double_descents,
};

const char* stat_name(Stat s);

/// One factor of the accumulated monomial: variable^(stat - offset).
/// Offsets encode the ubiquitous lma-1 / rma-1 / M-1 exponents.
struct WeightAssignment {
	Stat stat;
	Var var;
	int offset = 0;
};

struct DistributionSpec {
	std::vector<WeightAssignment> weights;
	/// Required when any quadruple statistic is weighted.
	std::optional<Boundary> boundary;
	/// Restrict the sum to basic permutations (first letter is the maximum).
	bool basic_only = false;
};

/// Exact distribution sum over S_n of the prescribed monomials.
/// A weight whose exponent would go negative raises DomainError.
MultiPoly distribution(int n, const DistributionSpec& spec);

/// The monomial contributed by a single permutation.
MultiPoly weight_monomial(const Permutation& p, const DistributionSpec& spec);

int stat_value(const Permutation& p, Stat s, const std::optional<Boundary>& b);

} // namespace qe
