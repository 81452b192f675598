#include "hilco.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "betti.hpp"
#include "bounds.hpp"
#include "errors.hpp"
#include "reports.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
	char* p = static_cast<char*>(std::malloc(s.size() + 1));
	if (p) std::memcpy(p, s.c_str(), s.size() + 1);
	return p;
}

template <typename F>
hc_status wrap(F&& body) {
	try {
		g_last_error.clear();
		return body();
	} catch (const hilco::parse_error& e) {
		g_last_error = e.what();
		return HC_ERROR_PARSE;
	} catch (const hilco::table_error& e) {
		g_last_error = e.what();
		return HC_ERROR_INVALID;
	} catch (const hilco::math_error& e) {
		g_last_error = e.what();
		return HC_ERROR_MATH;
	} catch (const std::exception& e) {
		g_last_error = e.what();
		return HC_ERROR_USAGE;
	}
}

hc_status require(bool ok, const char* message) {
	if (ok) return HC_OK;
	g_last_error = message;
	return HC_ERROR_USAGE;
}

} // namespace

struct hc_table {
	hilco::BettiTable table;
};

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_last_error(void) { return g_last_error.c_str(); }

hc_status hc_table_parse_json(const char* text, hc_table** out) {
	if (auto rc = require(text && out, "null argument")) return rc;
	return wrap([&] {
		*out = new hc_table{hilco::BettiTable::parse_json(text)};
		return HC_OK;
	});
}

hc_status hc_table_parse_plain(const char* text, hc_table** out) {
	if (auto rc = require(text && out, "null argument")) return rc;
	return wrap([&] {
		*out = new hc_table{hilco::BettiTable::parse_plain(text)};
		return HC_OK;
	});
}

hc_status hc_table_parse_auto(const char* text, hc_table** out) {
	if (auto rc = require(text && out, "null argument")) return rc;
	return wrap([&] {
		*out = new hc_table{hilco::BettiTable::parse_auto(text)};
		return HC_OK;
	});
}

hc_status hc_table_generate_ci(const int* degrees, size_t count, unsigned n,
                               hc_table** out) {
	if (auto rc = require(degrees && out && count > 0,
	                      "need a nonempty degree list"))
		return rc;
	return wrap([&] {
		std::vector<int> d(degrees, degrees + count);
		*out = new hc_table{hilco::generate_ci(d, n)};
		return HC_OK;
	});
}

void hc_table_free(hc_table* t) { delete t; }

hc_status hc_table_to_json(const hc_table* t, char** out) {
	if (auto rc = require(t && out, "null argument")) return rc;
	return wrap([&] {
		*out = dup_string(t->table.to_json());
		return *out ? HC_OK : HC_ERROR_USAGE;
	});
}

hc_status hc_table_to_plain(const hc_table* t, char** out) {
	if (auto rc = require(t && out, "null argument")) return rc;
	return wrap([&] {
		*out = dup_string(t->table.to_plain());
		return *out ? HC_OK : HC_ERROR_USAGE;
	});
}

unsigned hc_table_vars(const hc_table* t) { return t ? t->table.vars() : 0; }

int hc_table_length(const hc_table* t) { return t ? t->table.length() : 0; }

int hc_table_quasi_pure(const hc_table* t) {
	if (!t) return 0;
	try {
		return hilco::is_quasi_pure(hilco::shift_profile(t->table)) ? 1 : 0;
	} catch (const std::exception&) {
		return 0; // gapped tables have no usable profile
	}
}

int hc_table_gorenstein(const hc_table* t, int* socle_out) {
	if (!t) return 0;
	auto socle = hilco::gorenstein_socle(t->table);
	if (socle && socle_out) *socle_out = *socle;
	return socle ? 1 : 0;
}

hc_status hc_analyze_json(const hc_table* t, int max_l, char** json_out) {
	if (auto rc = require(t && json_out, "null argument")) return rc;
	return wrap([&] {
		*json_out = dup_string(hilco::analyze_json(hilco::analyze(t->table, max_l)));
		return *json_out ? HC_OK : HC_ERROR_USAGE;
	});
}

hc_status hc_verify_json(const hc_table* t, int max_l, char** json_out,
                         int* pass_out) {
	if (auto rc = require(t && json_out, "null argument")) return rc;
	return wrap([&] {
		const int d = static_cast<int>(t->table.vars()) - t->table.length();
		const int L = max_l >= 0 ? max_l : std::min(6, d);
		auto report = hilco::verify(t->table, L);
		*json_out = dup_string(hilco::bounds_json(report));
		if (pass_out) *pass_out = report.verdict() ? 1 : 0;
		return *json_out ? HC_OK : HC_ERROR_USAGE;
	});
}

hc_status hc_oracle_json(const hc_table* t, int max_l, char** json_out,
                         int* pass_out) {
	if (auto rc = require(t && json_out, "null argument")) return rc;
	return wrap([&] {
		auto report = hilco::oracle_compare(t->table, max_l);
		*json_out = dup_string(hilco::oracle_json(report));
		if (pass_out) *pass_out = report.ok ? 1 : 0;
		return *json_out ? HC_OK : HC_ERROR_USAGE;
	});
}

hc_status hc_identities_json(int full_sweep, uint64_t seed, char** json_out,
                             int* pass_out) {
	if (auto rc = require(json_out != nullptr, "null argument")) return rc;
	return wrap([&] {
		auto result = hilco::run_identity_sweeps(full_sweep != 0, seed);
		*json_out = dup_string(hilco::sweeps_json(result, full_sweep != 0, seed));
		if (pass_out) *pass_out = result.ok() ? 1 : 0;
		return *json_out ? HC_OK : HC_ERROR_USAGE;
	});
}

void hc_string_free(char* s) { std::free(s); }

} // extern "C"
