#ifndef HILCO_REPORTS_HPP
#define HILCO_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betti.hpp"
#include "bounds.hpp"
#include "coeffs.hpp"
#include "series.hpp"

namespace hilco {

// Everything cmd-analyze prints. Tables failing the exact series division
// still get a report (with the failure message), since the power-sum
// residuals are exactly what diagnoses them.
struct AnalyzeReport {
	unsigned n = 0;
	int s = 0;
	ShiftProfile profile;
	bool quasi_pure = false;
	std::optional<int> socle;
	IntPolynomial numer;
	std::optional<IntPolynomial> q;
	std::vector<mpz_class> e; // series route, empty if division failed
	std::string division_error;
	PeskineSzpiroReport ps;
	std::vector<BettiEntry> warnings; // non-minimal entries (j < i)
};
// max_l < 0 picks min(6, deg Q).
AnalyzeReport analyze(const BettiTable& t, int max_l);

struct OracleRow {
	int l = 0;
	mpz_class oracle, series, shifts;
	std::optional<mpz_class> half; // Gorenstein half-resolution route
	bool agree = false;
};

struct OracleReport {
	int dim = 0;        // d = n - s
	bool artinian = false; // d = 0: H(x) is compared with q_x directly
	bool truncated = false; // requested max_l exceeded d - 1
	std::vector<OracleRow> rows;
	long artinian_points = 0;
	bool ok = false;
};
// max_l < 0 picks d - 1 (every coefficient the fit determines).
OracleReport oracle_compare(const BettiTable& t, int max_l);

std::string analyze_json(const AnalyzeReport& r);
std::string bounds_json(const BoundsReport& r);
std::string oracle_json(const OracleReport& r);
std::string sweeps_json(const SweepResult& r, bool full, std::uint64_t seed);

} // namespace hilco

#endif
