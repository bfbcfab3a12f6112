#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qeulerian/multipoly.hpp"
#include "qeulerian/permutation.hpp"

namespace qe {

/// Order-isomorphic standardization onto {1..n}; e.g. 8425 -> 4213.
Permutation red(const std::vector<int>& word);

/// Blocks cut before every left-to-right maximum; each block begins with its
/// own maximum and the block count equals lma.
struct BasicDecomposition {
	std::vector<std::vector<int>> blocks;

	std::string str() const;
};

/// Left blocks begin with left-to-right minima (> 1, decreasing), the pivot
/// is the letter 1, right blocks end with right-to-left minima (> 1,
/// increasing).
struct BiBasicDecomposition {
	std::vector<std::vector<int>> left_blocks;
	std::vector<std::vector<int>> right_blocks;

	/// Bar notation including the pivot, e.g.
	/// "5 10 | 2 12 4 13 6 | 1 | 11 3 | 9 8 15 7 | 14".
	std::string str() const;
	Permutation assemble() const;
};

BasicDecomposition basic_decomposition(const Permutation& p);
BiBasicDecomposition bi_basic_decomposition(const Permutation& p);

/// The block-moving involution: a left block led by x is reversed and
/// reinserted among the right blocks (and symmetrically), at the unique gap
/// that keeps the block minima ordered; identity when x leads no block.
Permutation psi_x(const Permutation& p, int x);

/// Composite of psi_x over a set of letters (the psi's commute).
Permutation psi_action(const Permutation& p, const std::set<int>& letters);

/// The orbit representative starting with the letter 1, obtained by moving
/// every left block to the right side.
Permutation orbit_canonicalize(const Permutation& p);

/// A permutation with a subset of its outer minima marked.
struct MarkedPermutation {
	Permutation perm;
	std::set<int> marks;

	MarkedPermutation(Permutation p, std::set<int> s);

	friend bool operator==(const MarkedPermutation&, const MarkedPermutation&) = default;
};

/// Toggles the mark on x and moves its block; identity when x is not an
/// outer minimum.
MarkedPermutation marked_action(const MarkedPermutation& m, int x);

/// The orbit representative with an empty mark set.
MarkedPermutation marked_canonicalize(const MarkedPermutation& m);

/// Product of `base` over the red-standardized blocks of the basic
/// decomposition.
MultiPoly multiplicative_eval(const std::function<MultiPoly(const Permutation&)>& base,
                              const Permutation& p);

} // namespace qe
