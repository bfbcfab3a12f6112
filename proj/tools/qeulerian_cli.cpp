// Command-line front end: verification suites, polynomial tables, and
// permutation inspection.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "qeulerian/decompose.hpp"
#include "qeulerian/distribution.hpp"
#include "qeulerian/families.hpp"
#include "qeulerian/report.hpp"
#include "qeulerian/series_builders.hpp"
#include "qeulerian/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;

struct Options {
	std::vector<std::string> ids;
	std::string family;
	int n_max = -1;
	int t_order = 8;
	int q_window = 12;
	std::uint64_t seed = 20240501ULL;
	int samples = 25;
	std::string format = "text";
	std::string out_path;
	bool exhaustive_grid = false;
	std::string word;
	int psi_letter = 0;
};

int thread_budget() {
	if (const char* env = std::getenv("QEULERIAN_THREADS")) {
		const int v = std::atoi(env);
		if (v >= 1)
			return v;
	}
	const unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4u));
}

void emit(const Options& opt, const std::string& body) {
	if (opt.out_path.empty()) {
		std::cout << body;
		if (!body.empty() && body.back() != '\n')
			std::cout << "\n";
		return;
	}
	std::ofstream out(opt.out_path, std::ios::binary);
	out << body;
	if (!body.empty() && body.back() != '\n')
		out << "\n";
}

qe::TruncationPolicy policy_from(const Options& opt) {
	qe::TruncationPolicy p;
	p.t_order = opt.t_order;
	p.q_window = opt.q_window;
	p.sample_count = opt.samples;
	p.seed = opt.seed;
	p.exhaustive_grid = opt.exhaustive_grid;
	return p;
}

int cmd_verify(const Options& opt) {
	if (opt.n_max > qe::kMaxEnumerationSize) {
		std::cerr << "n-max exceeds the enumeration guard (" << qe::kMaxEnumerationSize
		          << ")\n";
		return kExitConfig;
	}
	std::vector<std::string> ids = opt.ids;
	if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
		ids.clear();
		for (const auto& info : qe::identity_catalog())
			ids.push_back(info.id);
	}
	for (const auto& id : ids) {
		if (!qe::is_known_identity(id)) {
			std::cerr << "unknown identity id: " << id << "\n";
			return kExitUsage;
		}
	}

	const qe::TruncationPolicy policy = policy_from(opt);

	struct Task {
		std::string id;
		int n;
	};
	std::vector<Task> tasks;
	for (const auto& id : ids) {
		for (const auto& info : qe::identity_catalog()) {
			if (info.id != id)
				continue;
			if (info.single_shot) {
				tasks.push_back({id, opt.n_max > 0 ? opt.n_max : info.default_n_max});
			} else {
				const int top = opt.n_max > 0 ? opt.n_max : info.default_n_max;
				for (int n = 1; n <= top; ++n)
					tasks.push_back({id, n});
			}
		}
	}

	std::vector<qe::VerificationReport> reports(tasks.size());
	std::vector<std::string> errors(tasks.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (;;) {
			const std::size_t i = next.fetch_add(1);
			if (i >= tasks.size())
				return;
			try {
				reports[i] = qe::verify_identity(tasks[i].id, tasks[i].n, policy);
			} catch (const std::exception& e) {
				errors[i] = e.what();
			}
		}
	};
	const int threads = std::min<int>(thread_budget(), static_cast<int>(tasks.size()));
	if (threads <= 1) {
		worker();
	} else {
		std::vector<std::thread> pool;
		for (int i = 0; i < threads; ++i)
			pool.emplace_back(worker);
		for (auto& t : pool)
			t.join();
	}

	for (std::size_t i = 0; i < tasks.size(); ++i) {
		if (!errors[i].empty()) {
			std::cerr << tasks[i].id << " n=" << tasks[i].n << ": " << errors[i] << "\n";
			return kExitConfig;
		}
	}

	std::ostringstream body;
	if (opt.format == "json") {
		body << qe::reports_json(reports);
	} else if (opt.format == "csv") {
		body << qe::report_csv_header() << "\n";
		for (const auto& r : reports)
			body << qe::report_csv_row(r) << "\n";
	} else {
		for (const auto& r : reports)
			body << qe::report_text(r) << "\n";
	}
	emit(opt, body.str());

	bool all_pass = true;
	for (const auto& r : reports) {
		if (!r.pass) {
			all_pass = false;
			std::cerr << "FAIL " << r.id << " n=" << r.n
			          << " residual_degree=" << r.residual_degree << "\n";
		}
	}
	return all_pass ? kExitPass : kExitVerifyFailure;
}

void csv_poly_rows(std::ostream& os, const std::string& family, int n,
                   const qe::MultiPoly& p) {
	for (const auto& [m, c] : p.terms()) {
		os << family << "," << n;
		for (std::size_t v = 0; v < qe::kVarCount; ++v)
			os << "," << m.e[v];
		os << "," << c.numerator_str() << "," << c.denominator_str() << "\n";
	}
}

int cmd_table(const Options& opt) {
	if (opt.n_max > qe::kMaxEnumerationSize) {
		std::cerr << "n-max exceeds the enumeration guard (" << qe::kMaxEnumerationSize
		          << ")\n";
		return kExitConfig;
	}
	const int top = opt.n_max > 0 ? opt.n_max : 6;
	const auto names = qe::lhs_family_names();
	const bool euler = opt.family == "euler-numbers";
	if (!euler && std::find(names.begin(), names.end(), opt.family) == names.end()) {
		std::cerr << "unknown family: " << opt.family << "\n";
		return kExitUsage;
	}

	std::ostringstream body;
	if (euler) {
		const auto e = qe::euler_numbers(top);
		if (opt.format == "csv") {
			body << "family,n,value\n";
			for (int n = 0; n <= top; ++n)
				body << "euler-numbers," << n << "," << e[n].str() << "\n";
		} else if (opt.format == "json") {
			body << "{\"family\":\"euler-numbers\",\"values\":[";
			for (int n = 0; n <= top; ++n)
				body << (n ? "," : "") << e[n].str();
			body << "]}";
		} else {
			for (int n = 0; n <= top; ++n)
				body << (n ? "," : "") << e[n].str();
		}
		emit(opt, body.str());
		return kExitPass;
	}

	if (opt.format == "csv") {
		body << "family,n";
		for (std::size_t v = 0; v < qe::kVarCount; ++v)
			body << "," << qe::var_name(static_cast<qe::Var>(v));
		body << ",num,den\n";
	} else if (opt.format == "json") {
		body << "[";
	}
	const int start = (opt.family == "l" || opt.family == "r") ? 0 : 1;
	for (int n = start; n <= top; ++n) {
		const qe::MultiPoly p = qe::lhs_family(opt.family, n);
		if (opt.format == "csv") {
			csv_poly_rows(body, opt.family, n, p);
		} else if (opt.format == "json") {
			body << (n > start ? "," : "") << "\n  {\"family\":\"" << opt.family
			     << "\",\"n\":" << n << ",\"text\":\"" << p.str() << "\"}";
		} else {
			body << p.str() << "\n";
		}
	}
	if (opt.format == "json")
		body << "\n]";
	emit(opt, body.str());
	return kExitPass;
}

std::vector<int> parse_word(const std::string& text) {
	std::vector<int> word;
	if (text.find_first_of(", ") != std::string::npos) {
		std::string token;
		std::istringstream in(text);
		while (std::getline(in, token, text.find(',') != std::string::npos ? ',' : ' '))
			if (!token.empty())
				word.push_back(std::stoi(token));
	} else {
		for (char c : text) {
			if (c < '0' || c > '9')
				throw qe::DomainError("inspect: malformed word");
			word.push_back(c - '0');
		}
	}
	return word;
}

int cmd_inspect(const Options& opt) {
	qe::Permutation p;
	try {
		p = qe::Permutation(parse_word(opt.word));
	} catch (const std::exception& e) {
		std::cerr << "malformed permutation: " << e.what() << "\n";
		return kExitUsage;
	}
	const auto st = qe::classic_stats(p);
	const auto basic = qe::basic_decomposition(p);
	const auto bi = qe::bi_basic_decomposition(p);

	struct BoundaryRow {
		const char* name;
		qe::Boundary b;
	};
	const BoundaryRow rows[] = {
	    {"0,0", qe::kBoundaryZeroZero},
	    {"inf,inf", qe::kBoundaryInfInf},
	    {"0,inf", qe::kBoundaryZeroInf},
	    {"inf,0", qe::kBoundaryInfZero},
	};

	std::ostringstream body;
	if (opt.format == "csv") {
		body << "field,value\n";
		body << "word,\"" << p.str() << "\"\n";
		body << "n," << st.n << "\ninv," << st.inv << "\nmaj," << st.maj << "\ndes,"
		     << st.des << "\nasc," << st.asc << "\nexc," << st.exc << "\ncyc," << st.cyc
		     << "\nlma," << st.lma << "\nlmi," << st.lmi << "\nrma," << st.rma
		     << "\nrmi," << st.rmi << "\n";
		for (const auto& row : rows) {
			const auto qd = qe::quadruple_stats(p, row.b);
			body << "quadruple(" << row.name << "),\"" << qd.valleys << "," << qd.peaks
			     << "," << qd.double_ascents << "," << qd.double_descents << "\"\n";
		}
		body << "basic,\"" << basic.str() << "\"\n";
		body << "bi-basic,\"" << bi.str() << "\"\n";
		if (opt.psi_letter > 0)
			body << "psi_" << opt.psi_letter << ",\"" << qe::psi_x(p, opt.psi_letter).str()
			     << "\"\n";
	} else if (opt.format == "json") {
		body << "{\"word\":\"" << p.str() << "\",\"n\":" << st.n << ",\"inv\":" << st.inv
		     << ",\"maj\":" << st.maj << ",\"des\":" << st.des << ",\"asc\":" << st.asc
		     << ",\"exc\":" << st.exc << ",\"cyc\":" << st.cyc << ",\"lma\":" << st.lma
		     << ",\"lmi\":" << st.lmi << ",\"rma\":" << st.rma << ",\"rmi\":" << st.rmi;
		body << ",\"quadruples\":{";
		bool first = true;
		for (const auto& row : rows) {
			const auto qd = qe::quadruple_stats(p, row.b);
			body << (first ? "" : ",") << "\"" << row.name << "\":[" << qd.valleys << ","
			     << qd.peaks << "," << qd.double_ascents << "," << qd.double_descents
			     << "]";
			first = false;
		}
		body << "},\"basic\":\"" << basic.str() << "\",\"bi_basic\":\"" << bi.str()
		     << "\"";
		if (opt.psi_letter > 0)
			body << ",\"psi\":\"" << qe::psi_x(p, opt.psi_letter).str() << "\"";
		body << "}";
	} else {
		body << "word: " << p.str() << "\n";
		body << "n=" << st.n << " inv=" << st.inv << " maj=" << st.maj << " des=" << st.des
		     << " asc=" << st.asc << " exc=" << st.exc << " cyc=" << st.cyc
		     << " lma=" << st.lma << " lmi=" << st.lmi << " rma=" << st.rma
		     << " rmi=" << st.rmi << "\n";
		for (const auto& row : rows) {
			const auto qd = qe::quadruple_stats(p, row.b);
			body << "boundary(" << row.name << "): valleys=" << qd.valleys
			     << " peaks=" << qd.peaks << " double_ascents=" << qd.double_ascents
			     << " double_descents=" << qd.double_descents << "\n";
		}
		body << "basic: " << basic.str() << "\n";
		body << "bi-basic: " << bi.str() << "\n";
		if (opt.psi_letter > 0)
			body << "psi_" << opt.psi_letter << ": " << qe::psi_x(p, opt.psi_letter).str()
			     << "\n";
	}
	emit(opt, body.str());
	return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact verifier and calculator for q-Eulerian and Stirling "
	             "permutation statistics"};
	app.require_subcommand(1);

	Options opt;

	CLI::App* verify = app.add_subcommand("verify", "Run identity verifications");
	verify->add_option("--id", opt.ids, "Identity ids, or 'all'");
	verify->add_option("--n-max,--n", opt.n_max, "Largest size to verify");
	verify->add_option("--t-order", opt.t_order, "Series truncation order");
	verify->add_option("--q-window", opt.q_window, "q-adic comparison window");
	verify->add_option("--seed", opt.seed, "Random scheme seed");
	verify->add_option("--samples", opt.samples, "Random schemes per identity");
	verify->add_option("--format", opt.format, "text | json | csv")
	    ->check(CLI::IsMember({"text", "json", "csv"}));
	verify->add_option("--out", opt.out_path, "Write output to a file");
	verify->add_flag("--exhaustive-grid", opt.exhaustive_grid,
	                 "Replace random schemes by interpolation grids (n <= 4)");

	CLI::App* table = app.add_subcommand("table", "Print a polynomial family");
	table->add_option("--family", opt.family, "Family name or euler-numbers")
	    ->required();
	table->add_option("--n-max,--n", opt.n_max, "Largest size to print");
	table->add_option("--format", opt.format, "text | json | csv")
	    ->check(CLI::IsMember({"text", "json", "csv"}));
	table->add_option("--out", opt.out_path, "Write output to a file");

	CLI::App* inspect = app.add_subcommand("inspect", "Inspect one permutation");
	inspect->add_option("word", opt.word, "Permutation word (digits, or comma/space separated)")
	    ->required();
	inspect->add_option("--psi", opt.psi_letter, "Also print the psi_x image");
	inspect->add_option("--format", opt.format, "text | json")
	    ->check(CLI::IsMember({"text", "json", "csv"}));
	inspect->add_option("--out", opt.out_path, "Write output to a file");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return kExitUsage;
	}

	try {
		if (verify->parsed())
			return cmd_verify(opt);
		if (table->parsed())
			return cmd_table(opt);
		return cmd_inspect(opt);
	} catch (const qe::GuardError& e) {
		std::cerr << "guard violation: " << e.what() << "\n";
		return kExitConfig;
	} catch (const qe::CapabilityError& e) {
		std::cerr << "configuration error: " << e.what() << "\n";
		return kExitConfig;
	} catch (const qe::DomainError& e) {
		std::cerr << "configuration error: " << e.what() << "\n";
		return kExitConfig;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitConfig;
	}
}
