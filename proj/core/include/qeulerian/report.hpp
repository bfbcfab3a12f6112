#pragma once

#include <string>
#include <vector>

#include "qeulerian/verify.hpp"

namespace qe {

/// Compact JSON object with the stable field order
/// id, params, n, pass, residual_degree, elapsed_ms, seed.
std::string report_json(const VerificationReport& r);

/// Compact JSON array of report objects.
std::string reports_json(const std::vector<VerificationReport>& rs);

/// One human-readable line: "[PASS] id n=3 (12 ms) params".
std::string report_text(const VerificationReport& r);

std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

} // namespace qe
