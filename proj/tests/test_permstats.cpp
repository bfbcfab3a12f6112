#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeulerian/distribution.hpp"
#include "qeulerian/permutation.hpp"
#include "qeulerian/qnumbers.hpp"

using namespace qe;

namespace {

Permutation perm(std::initializer_list<int> w) {
	return Permutation(std::vector<int>(w));
}

} // namespace

TEST_CASE("enumeration") {
	CHECK(all_permutations(0).size() == 1);
	CHECK(all_permutations(0)[0].size() == 0);

	const auto s2 = all_permutations(2);
	REQUIRE(s2.size() == 2);
	CHECK(s2[0] == perm({1, 2}));
	CHECK(s2[1] == perm({2, 1}));

	CHECK(all_permutations(3).size() == 6);
	CHECK_THROWS_AS(all_permutations(11), GuardError);
	CHECK_THROWS_AS(perm({1, 1}), DomainError);
	CHECK_THROWS_AS(perm({2, 3}), DomainError);
}

TEST_CASE("classic statistics") {
	CHECK(classic_stats(perm({2, 1, 6, 4, 5, 7, 3})).lma == 3);

	const auto id5 = classic_stats(Permutation::identity(5));
	CHECK(id5.des == 0);
	CHECK(id5.inv == 0);
	CHECK(id5.lmi == 1);
	CHECK(id5.rmi == 5);

	const auto s321 = classic_stats(perm({3, 2, 1}));
	CHECK(s321.inv == 3);
	CHECK(s321.maj == 3);
	CHECK(s321.cyc == 2);
	CHECK(s321.exc == 1);
}

TEST_CASE("quadruple statistics under the four boundaries") {
	const Permutation p = perm({2, 1, 3});
	const Quadruple zz = quadruple_stats(p, kBoundaryZeroZero);
	CHECK(zz == Quadruple{1, 2, 0, 0});
	const Quadruple ii = quadruple_stats(p, kBoundaryInfInf);
	CHECK(ii == Quadruple{1, 0, 1, 1});

	// sigma = 1 with boundary (0, inf) is a double ascent: the B_1 seed.
	const Quadruple zi = quadruple_stats(perm({1}), kBoundaryZeroInf);
	CHECK(zi == Quadruple{0, 0, 1, 0});
	const Quadruple iz = quadruple_stats(perm({1}), kBoundaryInfZero);
	CHECK(iz == Quadruple{0, 0, 0, 1});

	for (int n = 1; n <= 6; ++n) {
		for_each_permutation(n, [&](const Permutation& s) {
			for (const Boundary& b : {kBoundaryZeroZero, kBoundaryInfInf,
			                          kBoundaryZeroInf, kBoundaryInfZero}) {
				const Quadruple qd = quadruple_stats(s, b);
				CHECK(qd.valleys + qd.peaks + qd.double_ascents + qd.double_descents == n);
			}
			const Quadruple zz2 = quadruple_stats(s, kBoundaryZeroZero);
			CHECK(zz2.peaks == zz2.valleys + 1);
		});
	}
}

TEST_CASE("alternating permutations") {
	CHECK(is_alternating(perm({3, 1, 4, 2})));
	CHECK_FALSE(is_alternating(perm({1, 2, 3})));
	int count = 0;
	for_each_permutation(4, [&](const Permutation& p) {
		if (is_alternating(p))
			++count;
	});
	CHECK(count == 5);
}

TEST_CASE("distribution examples") {
	DistributionSpec des_x;
	des_x.weights = {{Stat::des, Var::x, 0}};
	CHECK(distribution(3, des_x).str() == "1 + 4*x + x^2");

	DistributionSpec lma_x;
	lma_x.weights = {{Stat::lma, Var::x, 0}};
	CHECK(distribution(2, lma_x) == rising_factorial(2));

	DistributionSpec inv_q;
	inv_q.weights = {{Stat::inv, Var::q, 0}};
	CHECK(distribution(3, inv_q) == qfactorial(3));
}

TEST_CASE("distribution error paths") {
	DistributionSpec bad_offset;
	bad_offset.weights = {{Stat::lma, Var::alpha, 2}};
	CHECK_THROWS_AS(distribution(1, bad_offset), DomainError);

	DistributionSpec no_boundary;
	no_boundary.weights = {{Stat::peaks, Var::u2, 0}};
	CHECK_THROWS_AS(distribution(2, no_boundary), DomainError);
}

TEST_CASE("eulerian statistics agree") {
	for (int n = 1; n <= 8; ++n) {
		DistributionSpec des_x, asc_x, exc_x;
		des_x.weights = {{Stat::des, Var::x, 0}};
		asc_x.weights = {{Stat::asc, Var::x, 0}};
		exc_x.weights = {{Stat::exc, Var::x, 0}};
		const MultiPoly d = distribution(n, des_x);
		CHECK(d == distribution(n, asc_x));
		CHECK(d == distribution(n, exc_x));
	}
}

TEST_CASE("stirling statistics agree with the rising factorial") {
	for (int n = 1; n <= 8; ++n) {
		const MultiPoly expected = rising_factorial(n);
		for (Stat s : {Stat::lma, Stat::lmi, Stat::rma, Stat::rmi, Stat::cyc}) {
			DistributionSpec spec;
			spec.weights = {{s, Var::x, 0}};
			CHECK(distribution(n, spec) == expected);
		}
	}
}

TEST_CASE("boundary swap identity") {
	// Sum u1^V u2^M u3^da u4^dd over (0,0) equals
	// sum u1^M u2^V u3^dd u4^da over (inf,inf).
	for (int n = 1; n <= 7; ++n) {
		DistributionSpec zz;
		zz.boundary = kBoundaryZeroZero;
		zz.weights = {{Stat::valleys, Var::u1, 0},
		              {Stat::peaks, Var::u2, 0},
		              {Stat::double_ascents, Var::u3, 0},
		              {Stat::double_descents, Var::u4, 0}};
		DistributionSpec ii;
		ii.boundary = kBoundaryInfInf;
		ii.weights = {{Stat::peaks, Var::u1, 0},
		              {Stat::valleys, Var::u2, 0},
		              {Stat::double_descents, Var::u3, 0},
		              {Stat::double_ascents, Var::u4, 0}};
		CHECK(distribution(n, zz) == distribution(n, ii));
	}
}

TEST_CASE("inversions are Mahonian") {
	for (int n = 1; n <= 8; ++n) {
		DistributionSpec spec;
		spec.weights = {{Stat::inv, Var::q, 0}};
		CHECK(distribution(n, spec) == qfactorial(n));
	}
}

TEST_CASE("reversal symmetry") {
	for (int n = 1; n <= 7; ++n) {
		for_each_permutation(n, [&](const Permutation& p) {
			const auto s = classic_stats(p);
			const auto r = classic_stats(p.reversed());
			CHECK(r.inv == n * (n - 1) / 2 - s.inv);
			CHECK(r.rma == s.lma);
			CHECK(r.lma == s.rma);
		});
	}
}

TEST_CASE("complement swaps the Stirling pairs") {
	for_each_permutation(5, [&](const Permutation& p) {
		const auto s = classic_stats(p);
		const auto c = classic_stats(p.complemented());
		CHECK(c.lma == s.lmi);
		CHECK(c.rmi == s.rma);
		CHECK(c.des == s.asc);
	});
}

TEST_CASE("rendering") {
	CHECK(perm({2, 1, 6, 4, 5, 7, 3}).str() == "2164573");
	CHECK(perm({5, 10, 2, 12, 4, 13, 6, 1, 11, 3, 9, 8, 15, 7, 14}).str() ==
	      "5 10 2 12 4 13 6 1 11 3 9 8 15 7 14");
}
