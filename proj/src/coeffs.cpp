#include "coeffs.hpp"

#include "numeric.hpp"

namespace hilco {

std::vector<mpz_class> nu_table(int s, int l) {
	if (s < 1 || l < 0) throw math_error("nu_table needs s >= 1, l >= 0");
	std::vector<mpz_class> ground;
	for (long x = 1; x <= s + l - 1; ++x) ground.emplace_back(x);
	return elementary_symmetric(ground, l);
}

namespace {

// sum_{i=1..s} (-1)^i sum_j beta_ij * j^m
mpz_class alternating_power_sum(const BettiTable& t, long m) {
	mpz_class p = 0;
	for (const auto& [key, beta] : t.entries()) {
		const auto [i, j] = key;
		if (i == 0) continue;
		mpz_class term = ipow(j, m) * beta;
		if (i % 2 == 0)
			p += term;
		else
			p -= term;
	}
	return p;
}

} // namespace

PeskineSzpiroReport peskine_szpiro_check(const BettiTable& t) {
	const int s = t.length();
	PeskineSzpiroReport rep;
	for (int k = 0; k <= s; ++k) rep.p.push_back(alternating_power_sum(t, k));
	rep.p0_ok = (rep.p[0] == -1);
	rep.vanishing_ok = true;
	for (int k = 1; k < s; ++k)
		if (rep.p[k] != 0) rep.vanishing_ok = false;
	mpz_class num = (s % 2 == 0) ? rep.p[s] : -rep.p[s];
	rep.e = mpq_class(num, factorial(s));
	rep.e.canonicalize();
	rep.e_integral = (rep.e.get_den() == 1);
	return rep;
}

std::vector<mpz_class> coefficients_from_shifts(const BettiTable& t, int L) {
	if (L < 0) throw math_error("coefficients_from_shifts needs L >= 0");
	const int s = t.length();
	std::vector<mpz_class> power(L + 1); // P_{s+r}; the i = 0 shift 0 adds nothing
	for (int r = 0; r <= L; ++r) power[r] = alternating_power_sum(t, s + r);
	std::vector<mpz_class> e;
	for (int l = 0; l <= L; ++l) {
		auto nu = nu_table(s, l);
		mpz_class acc = 0;
		for (int r = 0; r <= l; ++r) {
			mpz_class term = nu[l - r] * power[r];
			if ((l - r) % 2 == 0)
				acc += term;
			else
				acc -= term;
		}
		if (s % 2 != 0) acc = -acc;
		e.push_back(exact_div(acc, factorial(s + l)));
	}
	return e;
}

namespace {

// T_{t} for the split: odd parity uses weight a^t (c-a)^t (c-2a), even parity
// a^t (c-a)^t over the stored (already halved) middle column.
mpz_class split_power_sum(const GorensteinSplit& g, long t) {
	mpz_class total = 0;
	for (int i = 1; i <= g.k; ++i) {
		mpz_class col = 0;
		for (int a : g.columns[i - 1]) {
			mpz_class w = ipow(a, t) * ipow(g.c - a, t);
			if (g.parity == Parity::odd) w *= (g.c - 2 * a);
			col += w;
		}
		if (i % 2 == 0)
			total += col;
		else
			total -= col;
	}
	return total;
}

} // namespace

SrinivasanReport srinivasan_power_sums(const GorensteinSplit& g, int tmax) {
	if (tmax < g.k) throw math_error("srinivasan_power_sums needs tmax >= k");
	SrinivasanReport rep;
	rep.parity = g.parity;
	rep.k = g.k;
	rep.c = g.c;
	for (int t = 0; t <= tmax; ++t) rep.values.push_back(split_power_sum(g, t));
	if (g.k == 0) {
		// Length-one resolution: the sums are empty and the multiplicity is
		// just the socle shift.
		rep.t0_ok = rep.vanishing_ok = rep.e_integral = true;
		rep.e = g.c;
		return rep;
	}
	rep.t0_ok = (rep.values[0] == (g.parity == Parity::odd ? mpz_class(-g.c)
	                                                       : mpz_class(-1)));
	rep.vanishing_ok = true;
	for (int t = 1; t < g.k; ++t)
		if (rep.values[t] != 0) rep.vanishing_ok = false;
	mpz_class num = rep.values[g.k];
	if (g.parity == Parity::even) num *= 2;
	if (g.k % 2 != 0) num = -num;
	mpq_class e(num, factorial(g.s()));
	e.canonicalize();
	rep.e_integral = (e.get_den() == 1);
	if (rep.e_integral) rep.e = e.get_num();
	return rep;
}

std::vector<mpz_class> gorenstein_coefficients(const GorensteinSplit& g, int L) {
	if (L < 0) throw math_error("gorenstein_coefficients needs L >= 0");
	const int s = g.s();
	std::vector<mpz_class> e;
	if (g.k == 0) {
		// Hypersurface 0 -> R(-c) -> R: the alternating power sums collapse to
		// P_{s+r} = -c^{1+r}, so e_l = sum_r (-1)^{l-r} nu_{l-r} c^{r+1} / (1+l)!.
		for (int l = 0; l <= L; ++l) {
			auto nu = nu_table(s, l);
			mpz_class acc = 0;
			for (int r = 0; r <= l; ++r) {
				mpz_class term = nu[l - r] * ipow(g.c, r + 1);
				if ((l - r) % 2 == 0)
					acc += term;
				else
					acc -= term;
			}
			e.push_back(exact_div(acc, factorial(1 + l)));
		}
		return e;
	}
	std::vector<mpz_class> T(L / 2 + 1);
	for (int t = 0; t <= L / 2; ++t) T[t] = split_power_sum(g, g.k + t);
	for (int l = 0; l <= L; ++l) {
		auto nu = nu_table(s, l);
		mpz_class acc = 0;
		for (int r = 0; r <= l; ++r) {
			mpz_class inner = 0;
			for (int t = 0; 2 * t <= r; ++t) {
				mpz_class br = binom(g.k + r - t, g.k + t);
				if (g.parity == Parity::even)
					br += binom(g.k + r - t - 1, g.k + t - 1);
				mpz_class term = br * ipow(g.c, r - 2 * t) * T[t];
				if (t % 2 == 0)
					inner += term;
				else
					inner -= term;
			}
			if ((l - r) % 2 == 0)
				acc += nu[l - r] * inner;
			else
				acc -= nu[l - r] * inner;
		}
		if (g.k % 2 != 0) acc = -acc;
		e.push_back(exact_div(acc, factorial(s + l)));
	}
	return e;
}

} // namespace hilco
