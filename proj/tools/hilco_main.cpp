// hilco command line: analyze / verify / oracle / identities / generate on
// graded Betti tables. Talks to the shared library exclusively through the
// C interface in hilco.h.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// usage error.

#include <hilco.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct TableHandle {
	hc_table* t = nullptr;
	~TableHandle() { hc_table_free(t); }
};

struct JsonString {
	char* s = nullptr;
	~JsonString() { hc_string_free(s); }
};

int fail_usage(const std::string& message) {
	std::cerr << "error: " << message << "\n";
	return kExitUsage;
}

int fail_api(const char* what) {
	std::cerr << "error: " << what << ": " << hc_last_error() << "\n";
	return kExitUsage;
}

bool load_table(const std::string& path, TableHandle& handle) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cerr << "error: cannot open " << path << "\n";
		return false;
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	std::string text = buf.str();
	if (hc_table_parse_auto(text.c_str(), &handle.t) != HC_OK) {
		std::cerr << "error: " << path << ": " << hc_last_error() << "\n";
		return false;
	}
	return true;
}

bool write_output(const std::string& path, const std::string& content) {
	if (path.empty()) {
		std::cout << content;
		return true;
	}
	std::ofstream out(path, std::ios::binary);
	out << content;
	if (!out) {
		std::cerr << "error: cannot write " << path << "\n";
		return false;
	}
	return true;
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

void print_analyze_text(const json& doc) {
	std::cout << "table: n = " << doc["n"] << ", s = " << doc["s"] << "\n";
	std::cout << "shifts:\n";
	const auto& m = doc["m"];
	const auto& M = doc["M"];
	for (size_t i = 0; i < m.size(); ++i)
		std::cout << "  i=" << (i + 1) << "  m=" << m[i] << "  M=" << M[i] << "\n";
	std::cout << "quasi-pure: " << yesno(doc["quasi_pure"]) << "\n";
	std::cout << "gorenstein symmetric: " << yesno(doc["gorenstein"]);
	if (doc["gorenstein"].get<bool>())
		std::cout << " (socle shift c = " << doc["socle"] << ")";
	std::cout << "\n";
	std::cout << "numerator: " << doc["numerator"].get<std::string>() << "\n";
	if (doc["q"].is_null()) {
		std::cout << "series division failed: "
		          << doc["division_error"].get<std::string>() << "\n";
	} else {
		std::cout << "Q(t): " << doc["q"].get<std::string>() << "\n";
		std::cout << "coefficients:";
		const auto& e = doc["e"];
		for (size_t l = 0; l < e.size(); ++l)
			std::cout << "  e_" << l << " = " << e[l].get<std::string>();
		std::cout << "\n";
	}
	const auto& ps = doc["peskine_szpiro"];
	std::cout << "peskine-szpiro: p = [";
	for (size_t k = 0; k < ps["p"].size(); ++k)
		std::cout << (k ? ", " : "") << ps["p"][k].get<std::string>();
	std::cout << "], p_0 " << (ps["p0_ok"].get<bool>() ? "ok" : "BAD")
	          << ", vanishing " << (ps["vanishing_ok"].get<bool>() ? "ok" : "BAD")
	          << ", e = " << ps["e"].get<std::string>() << "\n";
	for (const auto& w : doc["nonminimal_entries"])
		std::cout << "warning: entry (i=" << w["i"] << ", j=" << w["j"]
		          << ") has shift below its homological degree\n";
}

void print_verify_text(const json& doc) {
	std::cout << "quasi-pure: " << yesno(doc["quasi_pure"]) << "   gorenstein: "
	          << yesno(doc["gorenstein"]);
	if (doc["gorenstein"].get<bool>())
		std::cout << " (c = " << doc["socle"] << ")";
	std::cout << "\nbounds guaranteed: " << yesno(doc["guaranteed"])
	          << "   coefficient routes agree: " << yesno(doc["routes_agree"])
	          << "\n";
	std::cout << "  l  hz_lower  lower  e_l  upper  hz_upper  pass\n";
	for (const auto& row : doc["rows"])
		std::cout << "  " << row["l"] << "  " << row["hz_lower"].get<std::string>()
		          << "  " << row["lower"].get<std::string>() << "  "
		          << row["e"].get<std::string>() << "  "
		          << row["upper"].get<std::string>() << "  "
		          << row["hz_upper"].get<std::string>() << "  "
		          << (row["pass"].get<bool>() ? "ok" : "FAIL") << "\n";
	std::cout << "result: " << (doc["verdict"].get<bool>() ? "PASS" : "FAIL")
	          << "\n";
}

void print_oracle_text(const json& doc) {
	if (doc["mode"] == "artinian") {
		std::cout << "artinian table (n = s): compared H(x) with the "
		             "coefficients of Q at "
		          << doc["points_checked"] << " points\n";
	} else {
		if (doc["truncated"].get<bool>())
			std::cout << "note: requested range truncated to l <= d-1 = "
			          << (doc["d"].get<int>() - 1) << "\n";
		std::cout << "  l  oracle  series  shifts  half-resolution  agree\n";
		for (const auto& row : doc["rows"]) {
			std::cout << "  " << row["l"] << "  " << row["oracle"].get<std::string>()
			          << "  " << row["series"].get<std::string>() << "  "
			          << row["shifts"].get<std::string>() << "  ";
			if (row["half_resolution"].is_null())
				std::cout << "-";
			else
				std::cout << row["half_resolution"].get<std::string>();
			std::cout << "  " << (row["agree"].get<bool>() ? "ok" : "FAIL") << "\n";
		}
	}
	std::cout << "result: " << (doc["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void print_identities_text(const json& doc) {
	std::cout << "sweep: " << doc["sweep"].get<std::string>()
	          << " (seed " << doc["seed"] << ")\n";
	for (const auto& s : doc["suites"])
		std::cout << "  " << s["name"].get<std::string>() << ": "
		          << s["instances"] << " instances, " << s["failures"]
		          << " failures\n";
	std::cout << "total: " << doc["instances"] << " instances, "
	          << doc["failures"] << " failures\n";
	std::cout << "result: " << (doc["ok"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"hilbert coefficients and resolution bounds for graded betti "
	             "tables"};
	app.set_version_flag("--version", std::string(hc_version()));
	app.require_subcommand(1);

	std::string path;
	std::string out_path;
	int max_l = -1;
	bool as_json = false;
	std::uint64_t seed = 1;
	std::string sweep = "small";
	std::vector<int> degrees;
	unsigned ci_vars = 0;
	bool plain_format = false;

	auto* analyze = app.add_subcommand("analyze", "shift profile, flags, "
	                                              "coefficients, power sums");
	analyze->add_option("path", path, "betti table file (JSON or plain)")
	    ->required();
	analyze->add_option("--max-l", max_l, "largest coefficient index");
	analyze->add_flag("--json", as_json, "machine-readable output");

	auto* verify = app.add_subcommand("verify", "evaluate the coefficient "
	                                            "bounds and cross-check routes");
	verify->add_option("path", path, "betti table file (JSON or plain)")
	    ->required();
	verify->add_option("--max-l", max_l, "largest coefficient index");
	verify->add_flag("--json", as_json, "machine-readable output");

	auto* oracle = app.add_subcommand("oracle", "fit the hilbert polynomial "
	                                            "and compare all routes");
	oracle->add_option("path", path, "betti table file (JSON or plain)")
	    ->required();
	oracle->add_option("--max-l", max_l, "largest coefficient index");
	oracle->add_flag("--json", as_json, "machine-readable output");

	auto* identities = app.add_subcommand("identities", "run the binomial and "
	                                                    "determinant sweeps");
	identities->add_option("--sweep", sweep, "small or full")
	    ->check(CLI::IsMember({"small", "full"}));
	identities->add_option("--seed", seed, "sweep seed");
	identities->add_flag("--json", as_json, "machine-readable output");

	auto* generate = app.add_subcommand("generate", "write a test-family table");
	auto* gen_ci = generate->add_subcommand("ci", "koszul table of a complete "
	                                              "intersection");
	gen_ci->add_option("--degrees", degrees, "generator degrees, e.g. 2,3")
	    ->required()
	    ->delimiter(',');
	gen_ci->add_option("--n", ci_vars, "number of ring variables (>= count)")
	    ->required();
	gen_ci->add_option("-o,--output", out_path, "output file (default stdout)");
	gen_ci->add_flag("--plain", plain_format, "write the plain format");
	generate->require_subcommand(1);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? kExitPass : kExitUsage;
	}

	try {
		if (*analyze) {
			TableHandle t;
			if (!load_table(path, t)) return kExitUsage;
			JsonString s;
			if (hc_analyze_json(t.t, max_l, &s.s) != HC_OK)
				return fail_api("analyze");
			if (as_json)
				std::cout << s.s;
			else
				print_analyze_text(json::parse(s.s));
			return kExitPass;
		}
		if (*verify) {
			TableHandle t;
			if (!load_table(path, t)) return kExitUsage;
			JsonString s;
			int pass = 0;
			if (hc_verify_json(t.t, max_l, &s.s, &pass) != HC_OK)
				return fail_api("verify");
			if (as_json)
				std::cout << s.s;
			else
				print_verify_text(json::parse(s.s));
			return pass ? kExitPass : kExitCheckFailed;
		}
		if (*oracle) {
			TableHandle t;
			if (!load_table(path, t)) return kExitUsage;
			JsonString s;
			int pass = 0;
			if (hc_oracle_json(t.t, max_l, &s.s, &pass) != HC_OK)
				return fail_api("oracle");
			if (as_json)
				std::cout << s.s;
			else
				print_oracle_text(json::parse(s.s));
			return pass ? kExitPass : kExitCheckFailed;
		}
		if (*identities) {
			JsonString s;
			int pass = 0;
			if (hc_identities_json(sweep == "full" ? 1 : 0, seed, &s.s, &pass) !=
			    HC_OK)
				return fail_api("identities");
			if (as_json)
				std::cout << s.s;
			else
				print_identities_text(json::parse(s.s));
			return pass ? kExitPass : kExitCheckFailed;
		}
		if (*generate) {
			TableHandle t;
			if (hc_table_generate_ci(degrees.data(), degrees.size(), ci_vars,
			                         &t.t) != HC_OK)
				return fail_api("generate ci");
			JsonString s;
			hc_status rc = plain_format ? hc_table_to_plain(t.t, &s.s)
			                            : hc_table_to_json(t.t, &s.s);
			if (rc != HC_OK) return fail_api("serialize");
			return write_output(out_path, s.s) ? kExitPass : kExitUsage;
		}
	} catch (const std::exception& e) {
		return fail_usage(e.what());
	}
	return kExitUsage;
}
