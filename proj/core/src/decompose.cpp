#include "qeulerian/decompose.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qe {

namespace {

std::string render_word(const std::vector<int>& w, bool compact) {
	std::ostringstream os;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (i > 0 && !compact)
			os << " ";
		os << w[i];
	}
	return os.str();
}

std::string render_blocks(const std::vector<std::vector<int>>& blocks) {
	int max_letter = 0;
	for (const auto& b : blocks)
		for (int v : b)
			max_letter = std::max(max_letter, v);
	const bool compact = max_letter <= 9;
	std::ostringstream os;
	for (std::size_t i = 0; i < blocks.size(); ++i) {
		if (i > 0)
			os << " | ";
		os << render_word(blocks[i], compact);
	}
	return os.str();
}

std::vector<std::vector<int>> with_pivot(const BiBasicDecomposition& d) {
	std::vector<std::vector<int>> all = d.left_blocks;
	all.push_back({1});
	all.insert(all.end(), d.right_blocks.begin(), d.right_blocks.end());
	return all;
}

} // namespace

Permutation red(const std::vector<int>& word) {
	std::vector<int> sorted = word;
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		throw DomainError("red: repeated letters");
	std::map<int, int> rank;
	for (std::size_t i = 0; i < sorted.size(); ++i)
		rank[sorted[i]] = static_cast<int>(i) + 1;
	std::vector<int> out;
	out.reserve(word.size());
	for (int v : word)
		out.push_back(rank[v]);
	return Permutation(std::move(out));
}

std::string BasicDecomposition::str() const {
	return render_blocks(blocks);
}

std::string BiBasicDecomposition::str() const {
	return render_blocks(with_pivot(*this));
}

Permutation BiBasicDecomposition::assemble() const {
	std::vector<int> w;
	for (const auto& b : with_pivot(*this))
		w.insert(w.end(), b.begin(), b.end());
	return Permutation(std::move(w));
}

BasicDecomposition basic_decomposition(const Permutation& p) {
	if (p.size() < 1)
		throw DomainError("basic_decomposition: empty permutation");
	BasicDecomposition d;
	int max_so_far = 0;
	for (int i = 1; i <= p.size(); ++i) {
		if (p.at(i) > max_so_far) {
			max_so_far = p.at(i);
			d.blocks.emplace_back();
		}
		d.blocks.back().push_back(p.at(i));
	}
	return d;
}

BiBasicDecomposition bi_basic_decomposition(const Permutation& p) {
	const int n = p.size();
	if (n < 1)
		throw DomainError("bi_basic_decomposition: empty permutation");
	int pos1 = 0;
	for (int i = 1; i <= n; ++i)
		if (p.at(i) == 1)
			pos1 = i;

	BiBasicDecomposition d;
	int min_so_far = n + 1;
	for (int i = 1; i < pos1; ++i) {
		if (p.at(i) < min_so_far) {
			min_so_far = p.at(i);
			d.left_blocks.emplace_back();
		}
		d.left_blocks.back().push_back(p.at(i));
	}
	// Right blocks close at each right-to-left minimum.
	min_so_far = n + 1;
	std::vector<int> cut_after(n + 2, 0);
	for (int i = n; i > pos1; --i) {
		if (p.at(i) < min_so_far) {
			min_so_far = p.at(i);
			cut_after[i] = 1;
		}
	}
	for (int i = pos1 + 1; i <= n; ++i) {
		if (d.right_blocks.empty() || cut_after[i - 1])
			d.right_blocks.emplace_back();
		d.right_blocks.back().push_back(p.at(i));
	}
	return d;
}

namespace {

// Verifies that moving a block produced exactly the expected structure; the
// insertion gap is the unique one with this property.
void check_structure(const Permutation& result, const BiBasicDecomposition& expected) {
	const BiBasicDecomposition actual = bi_basic_decomposition(result);
	if (actual.left_blocks != expected.left_blocks || actual.right_blocks != expected.right_blocks)
		throw DomainError("psi_x: insertion gap broke the bi-basic structure");
}

} // namespace

Permutation psi_x(const Permutation& p, int x) {
	const int n = p.size();
	if (x < 1 || x > n)
		throw DomainError("psi_x: letter out of range");
	if (x == 1)
		return p;

	BiBasicDecomposition d = bi_basic_decomposition(p);

	auto leads_left = [&](const std::vector<int>& b) { return b.front() == x; };
	auto ends_right = [&](const std::vector<int>& b) { return b.back() == x; };

	auto lit = std::find_if(d.left_blocks.begin(), d.left_blocks.end(), leads_left);
	if (lit != d.left_blocks.end()) {
		std::vector<int> moved(lit->rbegin(), lit->rend()); // now ends with x
		d.left_blocks.erase(lit);
		// Unique gap keeping right-block minima (their final letters) increasing.
		auto pos = d.right_blocks.begin();
		while (pos != d.right_blocks.end() && pos->back() < x)
			++pos;
		d.right_blocks.insert(pos, std::move(moved));
		Permutation result = d.assemble();
		check_structure(result, d);
		return result;
	}

	auto rit = std::find_if(d.right_blocks.begin(), d.right_blocks.end(), ends_right);
	if (rit != d.right_blocks.end()) {
		std::vector<int> moved(rit->rbegin(), rit->rend()); // now begins with x
		d.right_blocks.erase(rit);
		// Unique gap keeping left-block minima (their initial letters) decreasing.
		auto pos = d.left_blocks.begin();
		while (pos != d.left_blocks.end() && pos->front() > x)
			++pos;
		d.left_blocks.insert(pos, std::move(moved));
		Permutation result = d.assemble();
		check_structure(result, d);
		return result;
	}

	return p;
}

Permutation psi_action(const Permutation& p, const std::set<int>& letters) {
	Permutation r = p;
	for (int x : letters)
		r = psi_x(r, x);
	return r;
}

Permutation orbit_canonicalize(const Permutation& p) {
	const std::vector<int> lmi = ltr_minima_above_one(p);
	Permutation r = psi_action(p, std::set<int>(lmi.begin(), lmi.end()));
	if (r.size() >= 1 && r.at(1) != 1)
		throw DomainError("orbit_canonicalize: representative does not start with 1");
	return r;
}

MarkedPermutation::MarkedPermutation(Permutation p, std::set<int> s)
    : perm(std::move(p)), marks(std::move(s)) {
	const std::vector<int> lmi = ltr_minima_above_one(perm);
	const std::vector<int> rmi = rtl_minima_above_one(perm);
	std::set<int> ground(lmi.begin(), lmi.end());
	ground.insert(rmi.begin(), rmi.end());
	for (int x : marks)
		if (!ground.count(x))
			throw DomainError("MarkedPermutation: mark is not an outer minimum");
}

MarkedPermutation marked_action(const MarkedPermutation& m, int x) {
	const std::vector<int> lmi = ltr_minima_above_one(m.perm);
	const std::vector<int> rmi = rtl_minima_above_one(m.perm);
	const bool applicable = std::find(lmi.begin(), lmi.end(), x) != lmi.end() ||
	                        std::find(rmi.begin(), rmi.end(), x) != rmi.end();
	if (!applicable)
		return m;
	std::set<int> marks = m.marks;
	if (!marks.erase(x))
		marks.insert(x);
	return MarkedPermutation(psi_x(m.perm, x), std::move(marks));
}

MarkedPermutation marked_canonicalize(const MarkedPermutation& m) {
	MarkedPermutation r = m;
	const std::set<int> s = m.marks;
	for (int x : s)
		r = marked_action(r, x);
	if (!r.marks.empty())
		throw DomainError("marked_canonicalize: marks remain");
	return r;
}

MultiPoly multiplicative_eval(const std::function<MultiPoly(const Permutation&)>& base,
                              const Permutation& p) {
	MultiPoly result(1);
	for (const auto& block : basic_decomposition(p).blocks)
		result *= base(red(block));
	return result;
}

} // namespace qe
