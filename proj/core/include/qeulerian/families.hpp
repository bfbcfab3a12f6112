#pragma once

#include <string>
#include <vector>

#include "qeulerian/distribution.hpp"
#include "qeulerian/multipoly.hpp"

namespace qe {

/// Named enumeration-side polynomial families.
///
///   eulerian            sum x^des
///   bivariate-eulerian  sum x^asc y^des
///   stirling-eulerian   sum x^asc y^des alpha^{lma-1} beta^{rma-1}
///   stanley             sum x^{des+1} q^inv
///   carlitz-quadruple   sum u1^V u2^{M-1} u3^da u4^dd          (0,0)
///   pan-zeng            sum u1^V u2^M u3^da u4^dd q^inv        (inf,inf)
///   p                   sum u1^V u2^{M-1} u3^da u4^dd alpha^{lma-1} beta^{rma-1}
///   p-q                 the same with q^inv
///   l                   sum u1^V u2^M u3^da u4^dd alpha^lma q^inv   (0,inf)
///   b                   the same restricted to basic permutations
///   r                   sum u1^V u2^M u3^da u4^dd beta^rma q^inv    (inf,0)
MultiPoly lhs_family(const std::string& family, int n);

std::vector<std::string> lhs_family_names();

/// Weights for sums over the peak classes {sigma : peaks = k}.
enum class PnkWeight {
	lmi_rmi,         // alpha^{lmi-1} beta^{rmi-1}
	lmi_rmi_doubled, // (2 alpha)^{lmi-1} (2 beta)^{rmi-1}
	sum_exponent,    // (alpha+beta)^{lmi+rmi-2}
	alpha_only,      // alpha^{lmi+rmi-2}
};

/// Sums over {sigma in S_n : peaks with boundary (inf,inf) = k}, indexed by
/// k from 0 to floor(n/2).
std::vector<MultiPoly> pnk_sums(int n, PnkWeight weight);

/// Sums of (alpha+beta)^rmi over {sigma in S_n : peaks with boundary
/// (0,inf) = k}, indexed by k.
std::vector<MultiPoly> lnk_sums(int n);

} // namespace qe
