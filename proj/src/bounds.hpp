#ifndef HILCO_BOUNDS_HPP
#define HILCO_BOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "betti.hpp"

namespace hilco {

// f_l(y_1..y_s) = sum over weakly increasing tuples i_1 <= ... <= i_l of
// prod_t (y_{i_t} - (i_t + t - 1)); f_0 = 1. Same functional form as the
// Herzog-Zheng h_i.
mpz_class f_l(int l, const std::vector<int>& y);

struct BoundPair {
	mpq_class lower;
	mpq_class upper;
};

// Gorenstein quasi-pure bounds: the lower argument list takes m below the
// midpoint k = floor(s/2) and M above it, the upper list the other way
// around; each bound is f_l(args) * prod(args) / (s+l)!.
BoundPair main_bounds(const ShiftProfile& profile, int l);

// Herzog-Zheng Cohen-Macaulay bounds: f_l(m) prod(m) / (s+l)! and the same
// with M.
BoundPair hz_bounds(const ShiftProfile& profile, int l);

struct BoundsRow {
	int l = 0;
	mpq_class lower, upper;    // main bounds
	mpq_class hz_lower, hz_upper;
	mpz_class e;               // series route
	bool pass = false;         // lower <= e <= upper
	bool dominated = false;    // hz_lower <= lower and upper <= hz_upper
};

struct BoundsReport {
	bool quasi_pure = false;
	bool gorenstein = false;
	int socle = 0;             // c, meaningful when gorenstein
	bool guaranteed = false;   // quasi_pure && gorenstein: bounds must hold
	bool routes_agree = false; // series vs shifts (vs half-resolution) routes
	std::vector<BoundsRow> rows;

	bool all_pass() const;
	bool dominance_ok() const;
	// False only on a failed mathematical assertion: disagreeing coefficient
	// routes, or a guaranteed table that escapes its bounds.
	bool verdict() const;
};

// Rows for l = 0..min(L, n-s); throws math_error on tables that are not
// consistent with a codimension-s Cohen-Macaulay quotient.
BoundsReport verify(const BettiTable& t, int L);

// Vandermonde determinant whose last row has exponent k-1+t, evaluated via
// the product formula: prod_{j<i} (alpha_i - alpha_j) * h_t(alpha).
mpz_class vandermonde_vt(const std::vector<mpz_class>& alphas, int t);
// Same determinant by Laplace cofactor expansion (reference route).
mpz_class vandermonde_vt_cofactor(const std::vector<mpz_class>& alphas, int t);

// Two-term binomial splitting of (c-a)^n -+ a^n; returns one flag per display.
std::pair<bool, bool> check_binomial_split(long c, long a, int n);

// Generating-function identity collapsing sums over compositions of r into
// 2k+1 slots (odd) to the alternating t-sum over h_t(alpha_i), alpha_i =
// a_i (c-a_i). Both sides enumerated.
bool check_composition_collapse_odd(long c, const std::vector<long>& a, int r);
// Even-parity version: 2k slots, doubled bracket, middle value contributes
// a_k^b + (c-a_k)^b.
bool check_composition_collapse_even(long c, const std::vector<long>& a, int r);

// sum over (k+1)-part compositions gamma of r-t of prod C(gamma_i, beta_i)
// equals C(r-t+k, t+k), for any beta with sum t.
bool check_binomial_sum(int r, int t, int k, const std::vector<int>& betas);

// Picking one shift per column, the nu-weighted composition sums reduce to
// f_l of the induced homological shift tuple (odd) or to the sum of the two
// middle-choice f_l values (even).
bool check_fl_expansion(const GorensteinSplit& split,
                        const std::vector<int>& choice, int l);

struct SweepSuite {
	const char* name;
	long instances = 0;
	long failures = 0;
};

struct SweepResult {
	std::vector<SweepSuite> suites;
	long instances() const;
	long failures() const;
	bool ok() const { return failures() == 0; }
};

// Deterministic identity sweeps over all checkers above; the full sweep
// widens every range.
SweepResult run_identity_sweeps(bool full, std::uint64_t seed);

} // namespace hilco

#endif
