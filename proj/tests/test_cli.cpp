#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct RunResult {
	int exit_code = -1;
	std::string out;
};

RunResult run_cli(const std::string& args) {
	const std::string cmd = std::string(QEULERIAN_CLI_PATH) + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	RunResult r;
	char buf[4096];
	while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
		r.out.append(buf, got);
	const int status = pclose(pipe);
	r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::string last_line(const std::string& text) {
	std::istringstream in(text);
	std::string line, last;
	while (std::getline(in, line))
		if (!line.empty())
			last = line;
	return last;
}

std::string mask_elapsed(const std::string& text) {
	return std::regex_replace(text, std::regex("\"elapsed_ms\":[0-9]+"),
	                          "\"elapsed_ms\":0");
}

} // namespace

TEST_CASE("verify subcommand exit codes") {
	CHECK(run_cli("verify --id pk-lr --n-max 4").exit_code == 0);
	CHECK(run_cli("verify --id no-such").exit_code == 2);
	CHECK(run_cli("verify --id pk-lr --n-max 11").exit_code == 3);
	CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify all ids at small size") {
	const RunResult r =
	    run_cli("verify --id all --n-max 3 --samples 3 --t-order 3 --q-window 6");
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("[PASS]") != std::string::npos);
	CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("table golden outputs") {
	CHECK(last_line(run_cli("table --family eulerian --n 3").out) == "1 + 4*x + x^2");
	CHECK(last_line(run_cli("table --family stirling-eulerian --n 2").out) ==
	      "x*alpha + y*beta");
	CHECK(run_cli("table --family euler-numbers --n 5").out == "1,1,1,2,5,16\n");
	CHECK(run_cli("table --family no-such --n 3").exit_code == 2);
}

TEST_CASE("table csv rows are lossless monomials") {
	const RunResult r = run_cli("table --family eulerian --n 3 --format csv");
	CHECK(r.exit_code == 0);
	std::istringstream in(r.out);
	std::string header;
	std::getline(in, header);
	CHECK(header == "family,n,x,y,u1,u2,u3,u4,alpha,beta,q,num,den");
	// A_3 = 1 + 4x + x^2 contributes a row with coefficient 4 at x-degree 1.
	CHECK(r.out.find("eulerian,3,1,0,0,0,0,0,0,0,0,4,1") != std::string::npos);
}

TEST_CASE("inspect prints decompositions and psi images") {
	const RunResult r = run_cli("inspect 2164573");
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("basic: 21 | 645 | 73") != std::string::npos);
	CHECK(r.out.find("lma=3") != std::string::npos);

	const RunResult big =
	    run_cli("inspect 5,10,2,12,4,13,6,1,11,3,9,8,15,7,14 --psi 2");
	CHECK(big.exit_code == 0);
	CHECK(big.out.find("bi-basic: 5 10 | 2 12 4 13 6 | 1 | 11 3 | 9 8 15 7 | 14") !=
	      std::string::npos);
	CHECK(big.out.find("psi_2: 5 10 1 6 13 4 12 2 11 3 9 8 15 7 14") != std::string::npos);

	CHECK(run_cli("inspect 1").exit_code == 0);
	CHECK(run_cli("inspect 121").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
	const RunResult r = run_cli("verify --id pk-lr --n-max 3 --format json");
	CHECK(r.exit_code == 0);
	std::string body = r.out;
	while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
		body.pop_back();
	const auto parsed = nlohmann::ordered_json::parse(body);
	CHECK(parsed.dump() == body);
	CHECK(parsed.size() == 3);
	CHECK(parsed[0]["id"] == "pk-lr");
	CHECK(parsed[0]["pass"] == true);
	CHECK(parsed[0]["seed"] == 20240501ULL);
}

TEST_CASE("identical configuration gives identical output") {
	const std::string args =
	    "verify --id carlitz --n-max 3 --samples 4 --seed 99 --format json";
	const RunResult a = run_cli(args);
	const RunResult b = run_cli(args);
	CHECK(a.exit_code == 0);
	// Wall-clock timing is the only field allowed to vary.
	CHECK(mask_elapsed(a.out) == mask_elapsed(b.out));

	// Thread budget must not change the rendered output.
	setenv("QEULERIAN_THREADS", "1", 1);
	const RunResult c = run_cli(args);
	unsetenv("QEULERIAN_THREADS");
	CHECK(mask_elapsed(c.out) == mask_elapsed(a.out));
}

TEST_CASE("exhaustive grid flag") {
	const RunResult r = run_cli("verify --id carlitz2 --n-max 3 --exhaustive-grid");
	CHECK(r.exit_code == 0);
	CHECK(r.out.find("grid=on") != std::string::npos);
}
