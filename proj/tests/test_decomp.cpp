#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qeulerian/decompose.hpp"
#include "qeulerian/distribution.hpp"

using namespace qe;

namespace {

Permutation perm(std::initializer_list<int> w) {
	return Permutation(std::vector<int>(w));
}

// The running example from the bi-basic construction.
const Permutation kBig = perm({5, 10, 2, 12, 4, 13, 6, 1, 11, 3, 9, 8, 15, 7, 14});

MultiPoly omega0(const Permutation& p) {
	DistributionSpec spec;
	spec.boundary = kBoundaryZeroInf;
	spec.weights = {{Stat::valleys, Var::u1, 0},
	                {Stat::peaks, Var::u2, 0},
	                {Stat::double_ascents, Var::u3, 0},
	                {Stat::double_descents, Var::u4, 0},
	                {Stat::lma, Var::alpha, 0}};
	return weight_monomial(p, spec);
}

} // namespace

TEST_CASE("reduction to standard letters") {
	CHECK(red({8, 4, 2, 5}) == perm({4, 2, 1, 3}));
	CHECK(red({1, 2, 3}) == perm({1, 2, 3}));
	CHECK(red({7, 3}) == perm({2, 1}));
	CHECK_THROWS_AS(red({3, 3}), DomainError);
}

TEST_CASE("basic decomposition") {
	const auto d = basic_decomposition(perm({2, 1, 6, 4, 5, 7, 3}));
	REQUIRE(d.blocks.size() == 3);
	CHECK(d.blocks[0] == std::vector<int>{2, 1});
	CHECK(d.blocks[1] == std::vector<int>{6, 4, 5});
	CHECK(d.blocks[2] == std::vector<int>{7, 3});
	CHECK(d.str() == "21 | 645 | 73");

	CHECK(basic_decomposition(Permutation::identity(4)).blocks.size() == 4);
	CHECK(basic_decomposition(perm({4, 3, 2, 1})).blocks.size() == 1);

	for (int n = 1; n <= 8; ++n)
		for_each_permutation(n, [&](const Permutation& p) {
			const auto bd = basic_decomposition(p);
			CHECK(static_cast<int>(bd.blocks.size()) == classic_stats(p).lma);
			for (const auto& block : bd.blocks)
				CHECK(block.front() == *std::max_element(block.begin(), block.end()));
		});
}

TEST_CASE("bi-basic decomposition") {
	const auto d = bi_basic_decomposition(kBig);
	REQUIRE(d.left_blocks.size() == 2);
	REQUIRE(d.right_blocks.size() == 3);
	CHECK(d.left_blocks[0] == std::vector<int>{5, 10});
	CHECK(d.left_blocks[1] == std::vector<int>{2, 12, 4, 13, 6});
	CHECK(d.right_blocks[0] == std::vector<int>{11, 3});
	CHECK(d.right_blocks[1] == std::vector<int>{9, 8, 15, 7});
	CHECK(d.right_blocks[2] == std::vector<int>{14});
	CHECK(d.str() == "5 10 | 2 12 4 13 6 | 1 | 11 3 | 9 8 15 7 | 14");
	CHECK(d.assemble() == kBig);

	const auto solo = bi_basic_decomposition(perm({1}));
	CHECK(solo.left_blocks.empty());
	CHECK(solo.right_blocks.empty());
	CHECK(solo.str() == "1");

	const auto d213 = bi_basic_decomposition(perm({2, 1, 3}));
	REQUIRE(d213.left_blocks.size() == 1);
	CHECK(d213.left_blocks[0] == std::vector<int>{2});
	REQUIRE(d213.right_blocks.size() == 1);
	CHECK(d213.right_blocks[0] == std::vector<int>{3});
}

TEST_CASE("bi-basic round trip and block counts") {
	for (int n = 1; n <= 7; ++n)
		for_each_permutation(n, [&](const Permutation& p) {
			const auto d = bi_basic_decomposition(p);
			CHECK(d.assemble() == p);
			const auto s = classic_stats(p);
			CHECK(static_cast<int>(d.left_blocks.size()) == s.lmi - 1);
			CHECK(static_cast<int>(d.right_blocks.size()) == s.rmi - 1);
			// Block minima sit at the outer ends, decreasing then increasing.
			for (std::size_t i = 0; i < d.left_blocks.size(); ++i) {
				const auto& b = d.left_blocks[i];
				CHECK(b.front() == *std::min_element(b.begin(), b.end()));
				if (i > 0)
					CHECK(b.front() < d.left_blocks[i - 1].front());
			}
			for (std::size_t i = 0; i < d.right_blocks.size(); ++i) {
				const auto& b = d.right_blocks[i];
				CHECK(b.back() == *std::min_element(b.begin(), b.end()));
				if (i > 0)
					CHECK(b.back() > d.right_blocks[i - 1].back());
			}
		});
}

TEST_CASE("psi moves blocks as in the worked examples") {
	const Permutation psi2 = psi_x(kBig, 2);
	CHECK(psi2 == perm({5, 10, 1, 6, 13, 4, 12, 2, 11, 3, 9, 8, 15, 7, 14}));

	const Permutation psi3 = psi_x(kBig, 3);
	CHECK(psi3 == perm({5, 10, 3, 11, 2, 12, 4, 13, 6, 1, 9, 8, 15, 7, 14}));

	// x = 1 and letters that lead no block act trivially.
	CHECK(psi_x(kBig, 1) == kBig);
	CHECK(psi_x(kBig, 10) == kBig);
	CHECK(psi_x(kBig, 9) == kBig);

	// Composing the two worked moves, in either order; the empty set acts
	// trivially.
	CHECK(psi_action(kBig, {2, 3}) == psi_x(psi_x(kBig, 2), 3));
	CHECK(psi_action(kBig, {2, 3}) == psi_x(psi_x(kBig, 3), 2));
	CHECK(psi_action(kBig, {}) == kBig);

	CHECK_THROWS_AS(psi_x(kBig, 16), DomainError);
}

TEST_CASE("psi is a commuting family of involutions") {
	for (int n = 1; n <= 6; ++n)
		for_each_permutation(n, [&](const Permutation& p) {
			for (int x = 1; x <= n; ++x) {
				const Permutation once = psi_x(p, x);
				CHECK(psi_x(once, x) == p);
				for (int y = x + 1; y <= n; ++y)
					CHECK(psi_x(psi_x(p, x), y) == psi_x(psi_x(p, y), x));
			}
		});
}

TEST_CASE("psi converts minima and preserves the interior peak count") {
	for (int n = 1; n <= 6; ++n)
		for_each_permutation(n, [&](const Permutation& p) {
			const auto lmi = ltr_minima_above_one(p);
			const auto rmi = rtl_minima_above_one(p);
			// The two families never overlap: a shared letter would be a
			// global minimum other than 1.
			std::set<int> both(lmi.begin(), lmi.end());
			for (int x : rmi)
				CHECK_FALSE(both.count(x));
			for (int x : lmi) {
				const Permutation moved = psi_x(p, x);
				const auto converted = rtl_minima_above_one(moved);
				CHECK(std::find(converted.begin(), converted.end(), x) != converted.end());
				CHECK(quadruple_stats(moved, kBoundaryInfInf).peaks ==
				      quadruple_stats(p, kBoundaryInfInf).peaks);
			}
			for (int x : rmi) {
				const Permutation moved = psi_x(p, x);
				const auto converted = ltr_minima_above_one(moved);
				CHECK(std::find(converted.begin(), converted.end(), x) != converted.end());
				CHECK(quadruple_stats(moved, kBoundaryInfInf).peaks ==
				      quadruple_stats(p, kBoundaryInfInf).peaks);
			}
		});
}

TEST_CASE("orbit canonicalization") {
	const Permutation already = perm({1, 3, 2});
	CHECK(orbit_canonicalize(already) == already);

	const Permutation c = orbit_canonicalize(perm({2, 1, 3}));
	CHECK(c.at(1) == 1);
	CHECK(classic_stats(c).lmi == 1);
	CHECK(orbit_canonicalize(c) == c);

	for_each_permutation(5, [&](const Permutation& p) {
		const Permutation r = orbit_canonicalize(p);
		CHECK(r.at(1) == 1);
		CHECK(orbit_canonicalize(r) == r);
	});
}

TEST_CASE("marked action") {
	const MarkedPermutation m(perm({2, 1, 3}), {2});
	const MarkedPermutation untouched = marked_action(m, 3); // 3 in RMI: toggles
	CHECK(untouched.marks == std::set<int>{2, 3});

	// A letter outside both minima families does nothing.
	const MarkedPermutation big(kBig, {2, 7});
	CHECK(marked_action(big, 9) == big);

	// Involution.
	CHECK(marked_action(marked_action(big, 2), 2) == big);
	CHECK(marked_action(marked_action(big, 7), 7) == big);

	// Canonical form has no marks left.
	const MarkedPermutation bar = marked_canonicalize(big);
	CHECK(bar.marks.empty());
	CHECK(marked_canonicalize(bar) == bar);

	CHECK_THROWS_AS(MarkedPermutation(perm({2, 1, 3}), {1}), DomainError);
}

TEST_CASE("multiplicative evaluation") {
	// omega(sigma) = x^lma is multiplicative: every block contributes x.
	const auto base_x_lma = [](const Permutation& b) {
		return MultiPoly::variable(Var::x, classic_stats(b).lma);
	};
	for_each_permutation(5, [&](const Permutation& p) {
		CHECK(multiplicative_eval(base_x_lma, p) ==
		      MultiPoly::variable(Var::x, classic_stats(p).lma));
	});

	// A single-block permutation evaluates to the base of its reduction.
	const Permutation block = perm({3, 1, 2});
	CHECK(multiplicative_eval(omega0, block) == omega0(red(block.word())));

	// omega_0 is multiplicative; spot-check the worked permutation and then
	// sweep exhaustively.
	const Permutation w = perm({2, 1, 6, 4, 5, 7, 3});
	CHECK(multiplicative_eval(omega0, w) == omega0(w));
	for (int n = 1; n <= 6; ++n)
		for_each_permutation(n, [&](const Permutation& p) {
			CHECK(multiplicative_eval(omega0, p) == omega0(p));
		});
}
