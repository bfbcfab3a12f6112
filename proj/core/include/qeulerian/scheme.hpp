#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qeulerian/multipoly.hpp"
#include "qeulerian/rational.hpp"

namespace qe {

/// Rational specialization point satisfying the side conditions
/// x + y = u3 + u4 and x*y = u1*u2 exactly: x, y, u3, u1 are free and
/// u4, u2 are derived. Requires x != y and u1 != 0.
struct SubstitutionScheme {
	Rational x;
	Rational y;
	Rational u3;
	Rational u1;
	std::optional<Rational> alpha;
	std::optional<Rational> beta;
	std::optional<Rational> q;

	SubstitutionScheme(Rational x_, Rational y_, Rational u3_, Rational u1_,
	                   std::optional<Rational> alpha_ = std::nullopt,
	                   std::optional<Rational> beta_ = std::nullopt,
	                   std::optional<Rational> q_ = std::nullopt);

	Rational u4() const { return x + y - u3; }
	Rational u2() const { return x * y / u1; }

	/// Small random scheme; keeps x, y nonzero and distinct and u1 nonzero.
	static SubstitutionScheme random(std::mt19937_64& rng, bool with_alpha_beta,
	                                 bool with_q = false);

	/// Substitutes x, y, u1..u4 (always) and alpha/beta/q when present and
	/// requested. Remaining variables stay symbolic.
	MultiPoly specialize(const MultiPoly& p, bool use_alpha_beta = true,
	                     bool use_q = false) const;

	std::string str() const;
};

/// Knobs for the verification engine. By default the q-window covers every
/// q-degree of the compared polynomials, making windowed checks conclusive.
struct TruncationPolicy {
	int t_order = 8;
	int q_window = 29; // n(n-1)/2 + 1 at n = 8
	int sample_count = 25;
	std::uint64_t seed = 20240501ULL;
	bool exhaustive_grid = false;

	static TruncationPolicy defaults_for(int n_max);
};

} // namespace qe
