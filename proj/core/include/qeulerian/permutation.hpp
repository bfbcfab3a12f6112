#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qeulerian/errors.hpp"

namespace qe {

/// Largest size accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationSize = 10;

/// A permutation of {1..n}, stored as its one-line word.
class Permutation {
public:
	Permutation() = default;
	explicit Permutation(std::vector<int> word);

	static Permutation identity(int n);

	int size() const { return static_cast<int>(word_.size()); }
	/// Letter at 1-based position i.
	int at(int i) const { return word_[i - 1]; }
	const std::vector<int>& word() const { return word_; }

	Permutation reversed() const;
	Permutation complemented() const;

	friend bool operator==(const Permutation&, const Permutation&) = default;
	friend bool operator<(const Permutation& a, const Permutation& b) {
		return a.word_ < b.word_;
	}

	/// Letters joined without spaces when all fit in one digit, otherwise
	/// space-separated (matches the usual one-line conventions).
	std::string str() const;

private:
	std::vector<int> word_;
};

/// Classical statistics of one permutation.
struct StatProfile {
	int n = 0;
	int inv = 0;
	int maj = 0;
	int des = 0;
	int asc = 0;
	int exc = 0;
	int cyc = 0;
	int lma = 0;
	int lmi = 0;
	int rma = 0;
	int rmi = 0;
};

enum class Sentinel { Zero, Infinity };

/// Boundary values sigma_0 and sigma_{n+1} used by the peak/valley family.
struct Boundary {
	Sentinel left = Sentinel::Zero;
	Sentinel right = Sentinel::Zero;

	friend bool operator==(const Boundary&, const Boundary&) = default;
};

inline constexpr Boundary kBoundaryZeroZero{Sentinel::Zero, Sentinel::Zero};
inline constexpr Boundary kBoundaryInfInf{Sentinel::Infinity, Sentinel::Infinity};
inline constexpr Boundary kBoundaryZeroInf{Sentinel::Zero, Sentinel::Infinity};
inline constexpr Boundary kBoundaryInfZero{Sentinel::Infinity, Sentinel::Zero};

/// Counts of the four local shapes; every index falls in exactly one class.
struct Quadruple {
	int valleys = 0;
	int peaks = 0;
	int double_ascents = 0;
	int double_descents = 0;

	friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

StatProfile classic_stats(const Permutation& p);
Quadruple quadruple_stats(const Permutation& p, const Boundary& b);

/// Strict down-up pattern from the first position; true for n <= 1.
bool is_alternating(const Permutation& p);

/// Left-to-right minima other than the letter 1, in order of appearance.
std::vector<int> ltr_minima_above_one(const Permutation& p);
/// Right-to-left minima other than the letter 1, in order of appearance.
std::vector<int> rtl_minima_above_one(const Permutation& p);

/// Calls fn for each of the n! permutations in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(int n);

} // namespace qe
