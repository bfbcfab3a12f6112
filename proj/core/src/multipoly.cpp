#include "qeulerian/multipoly.hpp"

#include <ostream>
#include <sstream>

#include "qeulerian/errors.hpp"

namespace qe {

namespace {

constexpr const char* kVarNames[kVarCount] = {"x", "y", "u1", "u2", "u3", "u4", "alpha", "beta", "q"};

} // namespace

const char* var_name(Var v) {
	return kVarNames[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_name(std::string_view name) {
	for (std::size_t i = 0; i < kVarCount; ++i)
		if (name == kVarNames[i])
			return static_cast<Var>(i);
	return std::nullopt;
}

Monomial Monomial::of(Var v, int k) {
	if (k < 0)
		throw DomainError("Monomial: negative exponent");
	Monomial m;
	m.e[static_cast<std::size_t>(v)] = static_cast<std::int16_t>(k);
	return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
	Monomial r;
	for (std::size_t i = 0; i < kVarCount; ++i)
		r.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
	return r;
}

bool Monomial::divides(const Monomial& o) const {
	for (std::size_t i = 0; i < kVarCount; ++i)
		if (e[i] > o.e[i])
			return false;
	return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
	Monomial r;
	for (std::size_t i = 0; i < kVarCount; ++i) {
		if (e[i] < o.e[i])
			throw DivisionError("Monomial: quotient has negative exponent");
		r.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
	}
	return r;
}

MultiPoly::MultiPoly(const Rational& c) {
	if (!c.is_zero())
		terms_.emplace(Monomial::unit(), c);
}

MultiPoly MultiPoly::variable(Var v, int exponent) {
	return monomial(Monomial::of(v, exponent), Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
	MultiPoly p;
	if (!c.is_zero())
		p.terms_.emplace(m, c);
	return p;
}

bool MultiPoly::is_constant() const {
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial::unit());
}

Rational MultiPoly::constant_value() const {
	auto it = terms_.find(Monomial::unit());
	return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
	MultiPoly r;
	for (const auto& [m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
	for (const auto& [m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
	for (const auto& [m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
	MultiPoly r;
	for (const auto& [ma, ca] : a.terms_)
		for (const auto& [mb, cb] : b.terms_)
			r.add_term(ma * mb, ca * cb);
	return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
	MultiPoly r;
	if (c.is_zero())
		return r;
	for (const auto& [m, k] : terms_)
		r.terms_.emplace(m, k * c);
	return r;
}

MultiPoly MultiPoly::pow(int e) const {
	if (e < 0)
		throw DomainError("MultiPoly: negative power");
	MultiPoly r(Rational(1));
	MultiPoly base = *this;
	while (e > 0) {
		if (e & 1)
			r = r * base;
		e >>= 1;
		if (e > 0)
			base = base * base;
	}
	return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
	if (divisor.is_zero())
		throw DivisionError("MultiPoly: division by zero");
	MultiPoly rem = *this;
	MultiPoly quot;
	const auto& [dm, dc] = *divisor.terms_.rbegin();
	while (!rem.is_zero()) {
		const auto& [rm, rc] = *rem.terms_.rbegin();
		if (!dm.divides(rm))
			throw DivisionError("MultiPoly: division is not exact");
		const Monomial qm = rm.divided_by(dm);
		const Rational qc = rc / dc;
		quot.add_term(qm, qc);
		rem -= divisor * MultiPoly::monomial(qm, qc);
	}
	return quot;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const {
	return substitute(v, MultiPoly(value));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
	return substitute_many({{v, value}});
}

MultiPoly MultiPoly::substitute_many(const std::map<Var, MultiPoly>& values) const {
	// Power tables per substituted variable, built on demand.
	std::map<Var, std::vector<MultiPoly>> powers;
	for (const auto& [v, p] : values)
		powers[v] = {MultiPoly(Rational(1)), p};
	auto power_of = [&](Var v, int k) -> const MultiPoly& {
		auto& table = powers[v];
		while (static_cast<int>(table.size()) <= k)
			table.push_back(table.back() * table[1]);
		return table[k];
	};

	MultiPoly result;
	for (const auto& [m, c] : terms_) {
		Monomial kept;
		MultiPoly factor(c);
		for (std::size_t i = 0; i < kVarCount; ++i) {
			if (m.e[i] == 0)
				continue;
			const Var v = static_cast<Var>(i);
			if (values.count(v))
				factor = factor * power_of(v, m.e[i]);
			else
				kept.e[i] = m.e[i];
		}
		if (kept == Monomial::unit()) {
			result += factor;
		} else {
			for (const auto& [fm, fc] : factor.terms())
				result.add_term(fm * kept, fc);
		}
	}
	return result;
}

Rational MultiPoly::evaluate(const std::array<Rational, kVarCount>& point) const {
	Rational total(0);
	for (const auto& [m, c] : terms_) {
		Rational term = c;
		for (std::size_t i = 0; i < kVarCount; ++i)
			if (m.e[i] != 0)
				term *= point[i].pow(m.e[i]);
		total += term;
	}
	return total;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::coefficient_of(std::initializer_list<std::pair<Var, int>> fixed) const {
	MultiPoly r;
	for (const auto& [m, c] : terms_) {
		bool match = true;
		for (const auto& [v, k] : fixed) {
			if (m.exponent(v) != k) {
				match = false;
				break;
			}
		}
		if (!match)
			continue;
		Monomial rest = m;
		for (const auto& [v, k] : fixed)
			rest.e[static_cast<std::size_t>(v)] = 0;
		r.add_term(rest, c);
	}
	return r;
}

int MultiPoly::degree(Var v) const {
	int d = 0;
	for (const auto& [m, c] : terms_)
		d = std::max(d, m.exponent(v));
	return d;
}

int MultiPoly::total_degree() const {
	int d = 0;
	for (const auto& [m, c] : terms_)
		d = std::max(d, m.degree());
	return d;
}

bool MultiPoly::has_nonnegative_coefficients() const {
	for (const auto& [m, c] : terms_)
		if (c.sign() < 0)
			return false;
	return true;
}

bool MultiPoly::has_integer_coefficients() const {
	for (const auto& [m, c] : terms_)
		if (!c.is_integer())
			return false;
	return true;
}

std::string MultiPoly::str() const {
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		const bool negative = c.sign() < 0;
		const Rational mag = c.abs();
		if (first) {
			if (negative)
				os << "-";
			first = false;
		} else {
			os << (negative ? " - " : " + ");
		}
		std::string vars;
		for (std::size_t i = 0; i < kVarCount; ++i) {
			if (m.e[i] == 0)
				continue;
			if (!vars.empty())
				vars += "*";
			vars += kVarNames[i];
			if (m.e[i] != 1)
				vars += "^" + std::to_string(m.e[i]);
		}
		if (vars.empty()) {
			os << mag.str();
		} else {
			if (!mag.is_one())
				os << mag.str() << "*";
			os << vars;
		}
	}
	return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
	return os << p.str();
}

} // namespace qe
