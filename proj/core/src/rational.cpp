#include "qeulerian/rational.hpp"

#include <ostream>

namespace qe {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
	return os << r.v_;
}

Rational factorial(int n) {
	if (n < 0)
		throw DomainError("factorial: negative argument");
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
	return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
	if (n < 0 || k < 0 || k > n)
		throw DomainError("binomial: arguments out of range");
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Rational(mpq_class(b));
}

} // namespace qe
