#include "qeulerian/report.hpp"

#include <cstdio>
#include <sstream>

namespace qe {

namespace {

std::string json_escape(const std::string& s) {
	std::string out;
	out.reserve(s.size() + 2);
	for (char c : s) {
		switch (c) {
		case '"': out += "\\\""; break;
		case '\\': out += "\\\\"; break;
		case '\n': out += "\\n"; break;
		case '\t': out += "\\t"; break;
		default:
			if (static_cast<unsigned char>(c) < 0x20) {
				char buf[8];
				std::snprintf(buf, sizeof(buf), "\\u%04x", c);
				out += buf;
			} else {
				out += c;
			}
		}
	}
	return out;
}

} // namespace

std::string report_json(const VerificationReport& r) {
	std::ostringstream os;
	os << "{\"id\":\"" << json_escape(r.id) << "\""
	   << ",\"params\":\"" << json_escape(r.params) << "\""
	   << ",\"n\":" << r.n
	   << ",\"pass\":" << (r.pass ? "true" : "false")
	   << ",\"residual_degree\":" << r.residual_degree
	   << ",\"elapsed_ms\":" << r.elapsed_ms
	   << ",\"seed\":" << r.seed << "}";
	return os.str();
}

std::string reports_json(const std::vector<VerificationReport>& rs) {
	// Compact form so that a parse/re-serialize round trip is byte-identical.
	std::ostringstream os;
	os << "[";
	for (std::size_t i = 0; i < rs.size(); ++i) {
		if (i > 0)
			os << ",";
		os << report_json(rs[i]);
	}
	os << "]";
	return os.str();
}

std::string report_text(const VerificationReport& r) {
	std::ostringstream os;
	os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " n=" << r.n << " (" << r.elapsed_ms
	   << " ms)";
	if (!r.params.empty())
		os << " " << r.params;
	if (!r.pass) {
		os << " residual_degree=" << r.residual_degree;
		if (!r.residual.empty())
			os << " residual: " << r.residual;
	}
	return os.str();
}

std::string report_csv_header() {
	return "id,params,n,pass,residual_degree,elapsed_ms,seed";
}

std::string report_csv_row(const VerificationReport& r) {
	std::ostringstream os;
	os << r.id << ",\"" << r.params << "\"," << r.n << "," << (r.pass ? 1 : 0) << ","
	   << r.residual_degree << "," << r.elapsed_ms << "," << r.seed;
	return os.str();
}

} // namespace qe
