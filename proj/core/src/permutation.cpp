#include "qeulerian/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qe {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
	std::vector<bool> seen(word_.size(), false);
	for (int v : word_) {
		if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
			throw DomainError("Permutation: word is not a bijection on {1..n}");
		seen[v - 1] = true;
	}
}

Permutation Permutation::identity(int n) {
	std::vector<int> w(n);
	std::iota(w.begin(), w.end(), 1);
	return Permutation(std::move(w));
}

Permutation Permutation::reversed() const {
	std::vector<int> w(word_.rbegin(), word_.rend());
	return Permutation(std::move(w));
}

Permutation Permutation::complemented() const {
	const int n = size();
	std::vector<int> w(word_.size());
	for (std::size_t i = 0; i < word_.size(); ++i)
		w[i] = n + 1 - word_[i];
	return Permutation(std::move(w));
}

std::string Permutation::str() const {
	std::ostringstream os;
	const bool compact = size() <= 9;
	for (std::size_t i = 0; i < word_.size(); ++i) {
		if (i > 0 && !compact)
			os << " ";
		os << word_[i];
	}
	return os.str();
}

StatProfile classic_stats(const Permutation& p) {
	const int n = p.size();
	StatProfile s;
	s.n = n;
	if (n == 0)
		return s;

	for (int i = 1; i < n; ++i) {
		if (p.at(i) > p.at(i + 1)) {
			++s.des;
			s.maj += i;
		} else {
			++s.asc;
		}
	}
	for (int i = 1; i <= n; ++i) {
		if (p.at(i) > i)
			++s.exc;
		for (int j = i + 1; j <= n; ++j)
			if (p.at(i) > p.at(j))
				++s.inv;
	}

	int min_so_far = n + 1, max_so_far = 0;
	for (int i = 1; i <= n; ++i) {
		if (p.at(i) > max_so_far) {
			++s.lma;
			max_so_far = p.at(i);
		}
		if (p.at(i) < min_so_far) {
			++s.lmi;
			min_so_far = p.at(i);
		}
	}
	min_so_far = n + 1;
	max_so_far = 0;
	for (int i = n; i >= 1; --i) {
		if (p.at(i) > max_so_far) {
			++s.rma;
			max_so_far = p.at(i);
		}
		if (p.at(i) < min_so_far) {
			++s.rmi;
			min_so_far = p.at(i);
		}
	}

	std::vector<bool> visited(n, false);
	for (int i = 1; i <= n; ++i) {
		if (visited[i - 1])
			continue;
		++s.cyc;
		int j = i;
		while (!visited[j - 1]) {
			visited[j - 1] = true;
			j = p.at(j);
		}
	}
	return s;
}

Quadruple quadruple_stats(const Permutation& p, const Boundary& b) {
	const int n = p.size();
	if (n < 1)
		throw DomainError("quadruple_stats: empty permutation");
	// Sentinels compare below (0) or above (n+1) every letter.
	const int left = b.left == Sentinel::Zero ? 0 : n + 1;
	const int right = b.right == Sentinel::Zero ? 0 : n + 1;
	Quadruple qd;
	for (int i = 1; i <= n; ++i) {
		const int prev = i == 1 ? left : p.at(i - 1);
		const int next = i == n ? right : p.at(i + 1);
		const int cur = p.at(i);
		if (prev < cur && cur > next)
			++qd.peaks;
		else if (prev > cur && cur < next)
			++qd.valleys;
		else if (prev < cur && cur < next)
			++qd.double_ascents;
		else
			++qd.double_descents;
	}
	return qd;
}

bool is_alternating(const Permutation& p) {
	for (int i = 1; i < p.size(); ++i) {
		if (i % 2 == 1 && p.at(i) < p.at(i + 1))
			return false;
		if (i % 2 == 0 && p.at(i) > p.at(i + 1))
			return false;
	}
	return true;
}

std::vector<int> ltr_minima_above_one(const Permutation& p) {
	std::vector<int> out;
	int min_so_far = p.size() + 1;
	for (int i = 1; i <= p.size(); ++i) {
		if (p.at(i) < min_so_far) {
			min_so_far = p.at(i);
			if (p.at(i) != 1)
				out.push_back(p.at(i));
		}
	}
	return out;
}

std::vector<int> rtl_minima_above_one(const Permutation& p) {
	std::vector<int> out;
	int min_so_far = p.size() + 1;
	for (int i = p.size(); i >= 1; --i) {
		if (p.at(i) < min_so_far) {
			min_so_far = p.at(i);
			if (p.at(i) != 1)
				out.push_back(p.at(i));
		}
	}
	std::reverse(out.begin(), out.end());
	return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
	if (n < 0 || n > kMaxEnumerationSize)
		throw GuardError("for_each_permutation: size out of guard range");
	std::vector<int> w(n);
	std::iota(w.begin(), w.end(), 1);
	do {
		fn(Permutation(w));
	} while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n) {
	std::vector<Permutation> out;
	for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
	return out;
}

} // namespace qe
