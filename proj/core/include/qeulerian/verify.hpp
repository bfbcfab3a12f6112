#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qeulerian/scheme.hpp"

namespace qe {

/// Outcome of one theorem check at one size. pass means every residual in
/// the declared window was exactly zero.
struct VerificationReport {
	std::string id;
	std::string params;
	int n = 0;
	bool pass = false;
	/// First t-degree (or class index k, for the per-class identities) with
	/// a nonzero residual; -1 when everything vanished.
	int residual_degree = -1;
	/// Rendering of the first nonzero residual, empty on pass.
	std::string residual;
	long long elapsed_ms = 0;
	std::uint64_t seed = 0;
};

struct IdentityInfo {
	std::string id;
	/// Largest size the default suite runs this identity at.
	int default_n_max;
	/// Identities checked once (with an internal order) rather than per n.
	bool single_shot;
};

const std::vector<IdentityInfo>& identity_catalog();
bool is_known_identity(const std::string& id);

/// Runs one identity check at size n. Scheme-based identities draw
/// policy.sample_count schemes from policy.seed unless an explicit scheme is
/// given; the polynomial identities run fully symbolically.
VerificationReport verify_identity(const std::string& id, int n, const TruncationPolicy& policy,
                                   const std::optional<SubstitutionScheme>& scheme = std::nullopt);

} // namespace qe
