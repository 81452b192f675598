#ifndef HILCO_COEFFS_HPP
#define HILCO_COEFFS_HPP

#include <gmpxx.h>

#include <vector>

#include "betti.hpp"

namespace hilco {

// nu_m = e_m(1, 2, ..., s+l-1) for m = 0..l; nu_0 = 1. These convert the
// falling factorials of the (s+l)-th derivative into plain power sums.
std::vector<mpz_class> nu_table(int s, int l);

// Alternating power sums p_k = sum_{i>=1} (-1)^i sum_j d_{ij}^k, k = 0..s.
// For a Cohen-Macaulay table p_0 = -1, p_k = 0 for 1 <= k < s, and the
// multiplicity is e = (-1)^s p_s / s!.
struct PeskineSzpiroReport {
	std::vector<mpz_class> p;
	bool p0_ok = false;
	bool vanishing_ok = false;
	bool e_integral = false;
	mpq_class e;

	bool consistent() const { return p0_ok && vanishing_ok && e_integral; }
};
PeskineSzpiroReport peskine_szpiro_check(const BettiTable& t);

// e_0..e_L from the shifts alone:
// (-1)^s (s+l)! e_l = sum_r (-1)^{l-r} nu_{l-r} P_{s+r}. Each division must
// be exact; a remainder means the table fails the power-sum equations.
std::vector<mpz_class> coefficients_from_shifts(const BettiTable& t, int L);

// Gorenstein half-resolution power sums. Odd length s = 2k+1:
//   T_t = sum_{i<=k} (-1)^i sum_j a_{ij}^t (c-a_{ij})^t (c-2a_{ij}),
// expected -c at t = 0, zero for 1 <= t < k, and (-1)^k (2k+1)! e at t = k.
// Even length s = 2k drops the (c-2a) factor, runs the middle column over
// its representative half only, expects -1 at t = 0 and (-1)^k (2k)!/2 e at
// t = k. For k = 0 every sum is empty and e is the socle shift itself.
struct SrinivasanReport {
	Parity parity = Parity::odd;
	int k = 0;
	int c = 0;
	std::vector<mpz_class> values; // T_0..T_tmax
	bool t0_ok = false;
	bool vanishing_ok = false;
	bool e_integral = false;
	mpz_class e;

	bool consistent() const { return t0_ok && vanishing_ok && e_integral; }
};
SrinivasanReport srinivasan_power_sums(const GorensteinSplit& g, int tmax);

// e_0..e_L of a Gorenstein table from its half resolution only.
std::vector<mpz_class> gorenstein_coefficients(const GorensteinSplit& g, int L);

} // namespace hilco

#endif
