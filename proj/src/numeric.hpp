#ifndef HILCO_NUMERIC_HPP
#define HILCO_NUMERIC_HPP

#include <gmpxx.h>

#include <vector>

#include "errors.hpp"

namespace hilco {

// C(n, k) with the convention C(n, k) = 0 whenever k < 0 or n < k.
inline mpz_class binom(long n, long k) {
	if (k < 0 || n < k) return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
	             static_cast<unsigned long>(k));
	return r;
}

inline mpz_class factorial(long n) {
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return r;
}

inline mpz_class ipow(const mpz_class& base, long e) {
	mpz_class r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
	return r;
}

inline mpz_class ipow(long base, long e) { return ipow(mpz_class(base), e); }

// num / den, throwing if the division is not exact.
inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
	mpz_class q, r;
	mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
	if (r != 0)
		throw math_error("exact division failed: " + num.get_str() + " / " +
		                 den.get_str());
	return q;
}

// e_0..e_maxdeg of the given values (elementary symmetric polynomials).
inline std::vector<mpz_class> elementary_symmetric(
    const std::vector<mpz_class>& xs, int maxdeg) {
	std::vector<mpz_class> e(maxdeg + 1, 0);
	e[0] = 1;
	for (const auto& x : xs)
		for (int d = maxdeg; d >= 1; --d) e[d] += x * e[d - 1];
	return e;
}

// h_0..h_maxdeg of the given values (complete homogeneous symmetric polynomials).
inline std::vector<mpz_class> complete_homogeneous(
    const std::vector<mpz_class>& xs, int maxdeg) {
	std::vector<mpz_class> h(maxdeg + 1, 0);
	h[0] = 1;
	for (const auto& x : xs)
		for (int d = 1; d <= maxdeg; ++d) h[d] += x * h[d - 1];
	return h;
}

// Visit every tuple of `parts` nonnegative integers summing to `total`.
template <typename F>
void for_each_composition(int total, int parts, F&& visit) {
	std::vector<int> beta(parts, 0);
	auto rec = [&](auto&& self, int pos, int remaining) -> void {
		if (pos == parts - 1) {
			beta[pos] = remaining;
			visit(static_cast<const std::vector<int>&>(beta));
			return;
		}
		for (int v = 0; v <= remaining; ++v) {
			beta[pos] = v;
			self(self, pos + 1, remaining - v);
		}
	};
	if (parts <= 0) return;
	rec(rec, 0, total);
}

} // namespace hilco

#endif
