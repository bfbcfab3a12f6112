#pragma once

#include "qeulerian/multipoly.hpp"
#include "qeulerian/qpoly.hpp"

namespace qe {

/// [n]_q = 1 + q + ... + q^{n-1}; the zero polynomial for n = 0.
MultiPoly qint(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; 1 for n = 0.
MultiPoly qfactorial(int n);

/// Gaussian binomial [n choose k]_q, by exact division of q-factorials.
MultiPoly qbinomial(int n, int k);

/// Rising factorial x(x+1)...(x+n-1) as a polynomial in x.
MultiPoly rising_factorial(int n);

QPoly qint_qpoly(int n);
QPoly qfactorial_qpoly(int n);

/// Drops every term whose q-exponent is >= limit.
MultiPoly truncate_q_degrees(const MultiPoly& p, int limit);

} // namespace qe
