#include "reports.hpp"

#include <json.hpp>

#include <algorithm>

namespace hilco {

AnalyzeReport analyze(const BettiTable& t, int max_l) {
	AnalyzeReport r;
	r.n = t.vars();
	r.s = t.length();
	r.profile = shift_profile(t);
	r.quasi_pure = is_quasi_pure(r.profile);
	r.socle = gorenstein_socle(t);
	r.numer = numerator(t);
	r.ps = peskine_szpiro_check(t);
	r.warnings = t.nonminimal_entries();
	try {
		r.q = divide_out(r.numer, r.s);
		int L = max_l >= 0 ? max_l : std::min(6, std::max(r.q->degree(), 0));
		r.e = hilbert_coefficients(*r.q, L);
	} catch (const math_error& err) {
		r.division_error = err.what();
	}
	return r;
}

OracleReport oracle_compare(const BettiTable& t, int max_l) {
	OracleReport r;
	const int s = t.length();
	r.dim = static_cast<int>(t.vars()) - s;
	auto q = divide_out(numerator(t), s);
	if (r.dim == 0) {
		// Artinian: the Hilbert function must literally be the coefficients
		// of Q (and vanish past its degree).
		r.artinian = true;
		const long upto = q.degree() + 2;
		r.ok = true;
		for (long x = 0; x <= upto; ++x) {
			++r.artinian_points;
			if (hilbert_function_value(t, x) != q.coeff(static_cast<int>(x)))
				r.ok = false;
		}
		return r;
	}
	int L = r.dim - 1;
	if (max_l >= 0 && max_l < L) L = max_l;
	r.truncated = (max_l > r.dim - 1);
	auto fitted = oracle_coefficients(t, L);
	auto e_series = hilbert_coefficients(q, L);
	auto e_shifts = coefficients_from_shifts(t, L);
	std::optional<std::vector<mpz_class>> e_half;
	if (gorenstein_socle(t))
		e_half = gorenstein_coefficients(gorenstein_split(t), L);
	r.ok = true;
	for (int l = 0; l <= L; ++l) {
		OracleRow row;
		row.l = l;
		row.oracle = fitted[l];
		row.series = e_series[l];
		row.shifts = e_shifts[l];
		if (e_half) row.half = (*e_half)[l];
		row.agree = (row.oracle == row.series) && (row.oracle == row.shifts) &&
		            (!row.half || row.oracle == *row.half);
		if (!row.agree) r.ok = false;
		r.rows.push_back(std::move(row));
	}
	return r;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_strings(const std::vector<mpz_class>& values) {
	ordered_json arr = ordered_json::array();
	for (const auto& v : values) arr.push_back(v.get_str());
	return arr;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

} // namespace

std::string analyze_json(const AnalyzeReport& r) {
	ordered_json doc;
	doc["n"] = r.n;
	doc["s"] = r.s;
	doc["m"] = r.profile.m;
	doc["M"] = r.profile.M;
	doc["quasi_pure"] = r.quasi_pure;
	doc["gorenstein"] = r.socle.has_value();
	if (r.socle)
		doc["socle"] = *r.socle;
	else
		doc["socle"] = nullptr;
	doc["numerator"] = r.numer.to_string();
	if (r.q) {
		doc["q"] = r.q->to_string();
		doc["e"] = int_strings(r.e);
	} else {
		doc["q"] = nullptr;
		doc["e"] = ordered_json::array();
		doc["division_error"] = r.division_error;
	}
	ordered_json ps;
	ps["p"] = int_strings(r.ps.p);
	ps["p0_ok"] = r.ps.p0_ok;
	ps["vanishing_ok"] = r.ps.vanishing_ok;
	ps["e_integral"] = r.ps.e_integral;
	ps["e"] = r.ps.e.get_str();
	doc["peskine_szpiro"] = std::move(ps);
	ordered_json warn = ordered_json::array();
	for (const auto& w : r.warnings) {
		ordered_json e;
		e["i"] = w.i;
		e["j"] = w.j;
		e["beta"] = w.beta;
		warn.push_back(std::move(e));
	}
	doc["nonminimal_entries"] = std::move(warn);
	return dump(doc);
}

std::string bounds_json(const BoundsReport& r) {
	ordered_json doc;
	doc["quasi_pure"] = r.quasi_pure;
	doc["gorenstein"] = r.gorenstein;
	if (r.gorenstein)
		doc["socle"] = r.socle;
	else
		doc["socle"] = nullptr;
	doc["guaranteed"] = r.guaranteed;
	doc["routes_agree"] = r.routes_agree;
	ordered_json rows = ordered_json::array();
	for (const auto& row : r.rows) {
		ordered_json o;
		o["l"] = row.l;
		o["hz_lower"] = row.hz_lower.get_str();
		o["lower"] = row.lower.get_str();
		o["e"] = row.e.get_str();
		o["upper"] = row.upper.get_str();
		o["hz_upper"] = row.hz_upper.get_str();
		o["pass"] = row.pass;
		o["dominated"] = row.dominated;
		rows.push_back(std::move(o));
	}
	doc["rows"] = std::move(rows);
	doc["all_pass"] = r.all_pass();
	doc["dominance_ok"] = r.dominance_ok();
	doc["verdict"] = r.verdict();
	return dump(doc);
}

std::string oracle_json(const OracleReport& r) {
	ordered_json doc;
	doc["d"] = r.dim;
	doc["mode"] = r.artinian ? "artinian" : "fit";
	doc["truncated"] = r.truncated;
	if (r.artinian) {
		doc["points_checked"] = r.artinian_points;
	} else {
		ordered_json rows = ordered_json::array();
		for (const auto& row : r.rows) {
			ordered_json o;
			o["l"] = row.l;
			o["oracle"] = row.oracle.get_str();
			o["series"] = row.series.get_str();
			o["shifts"] = row.shifts.get_str();
			if (row.half)
				o["half_resolution"] = row.half->get_str();
			else
				o["half_resolution"] = nullptr;
			o["agree"] = row.agree;
			rows.push_back(std::move(o));
		}
		doc["rows"] = std::move(rows);
	}
	doc["ok"] = r.ok;
	return dump(doc);
}

std::string sweeps_json(const SweepResult& r, bool full, std::uint64_t seed) {
	ordered_json doc;
	doc["sweep"] = full ? "full" : "small";
	doc["seed"] = seed;
	ordered_json suites = ordered_json::array();
	for (const auto& s : r.suites) {
		ordered_json o;
		o["name"] = s.name;
		o["instances"] = s.instances;
		o["failures"] = s.failures;
		suites.push_back(std::move(o));
	}
	doc["suites"] = std::move(suites);
	doc["instances"] = r.instances();
	doc["failures"] = r.failures();
	doc["ok"] = r.ok();
	return dump(doc);
}

} // namespace hilco
