#include "bounds.hpp"

#include <algorithm>
#include <random>

#include "coeffs.hpp"
#include "numeric.hpp"
#include "series.hpp"

namespace hilco {

mpz_class f_l(int l, const std::vector<int>& y) {
	if (l < 0) throw math_error("f_l needs l >= 0");
	if (l == 0) return 1;
	const int s = static_cast<int>(y.size());
	if (s < 1) throw math_error("f_l needs a nonempty tuple");
	// tail[p] = sum over weakly increasing (i_t .. i_l) with i_t >= p of the
	// product of their factors; filled from slot l down to slot 1.
	std::vector<mpz_class> tail(s + 2, 1), cur(s + 2, 0);
	tail[s + 1] = 0;
	for (int t = l; t >= 1; --t) {
		cur.assign(s + 2, 0);
		for (int p = s; p >= 1; --p)
			cur[p] = cur[p + 1] + (mpz_class(y[p - 1]) - (p + t - 1)) * tail[p];
		std::swap(tail, cur);
	}
	return tail[1];
}

namespace {

mpq_class bound_value(const std::vector<int>& args, int l) {
	mpz_class prod = 1;
	for (int v : args) prod *= v;
	mpq_class b(f_l(l, args) * prod,
	            factorial(static_cast<long>(args.size()) + l));
	b.canonicalize();
	return b;
}

} // namespace

BoundPair main_bounds(const ShiftProfile& profile, int l) {
	const int s = profile.length();
	const int k = s / 2;
	std::vector<int> lo, hi;
	for (int i = 0; i < s; ++i) {
		lo.push_back(i < k ? profile.m[i] : profile.M[i]);
		hi.push_back(i < k ? profile.M[i] : profile.m[i]);
	}
	return {bound_value(lo, l), bound_value(hi, l)};
}

BoundPair hz_bounds(const ShiftProfile& profile, int l) {
	return {bound_value(profile.m, l), bound_value(profile.M, l)};
}

bool BoundsReport::all_pass() const {
	return std::all_of(rows.begin(), rows.end(),
	                   [](const BoundsRow& r) { return r.pass; });
}

bool BoundsReport::dominance_ok() const {
	return std::all_of(rows.begin(), rows.end(),
	                   [](const BoundsRow& r) { return r.dominated; });
}

bool BoundsReport::verdict() const {
	if (!routes_agree) return false;
	if (guaranteed && (!all_pass() || !dominance_ok())) return false;
	return true;
}

BoundsReport verify(const BettiTable& t, int L) {
	if (L < 0) throw math_error("verify needs L >= 0");
	BoundsReport rep;
	const int s = t.length();
	const int d = static_cast<int>(t.vars()) - s;
	auto profile = shift_profile(t);
	rep.quasi_pure = is_quasi_pure(profile);
	auto socle = gorenstein_socle(t);
	rep.gorenstein = socle.has_value();
	rep.socle = socle.value_or(0);
	rep.guaranteed = rep.quasi_pure && rep.gorenstein;

	const int rows = std::min(L, d); // the bounds are stated for l <= n-s
	auto q = divide_out(numerator(t), s);
	auto e_series = hilbert_coefficients(q, rows);
	auto e_shifts = coefficients_from_shifts(t, rows);
	rep.routes_agree = (e_series == e_shifts);
	if (rep.gorenstein) {
		auto e_half = gorenstein_coefficients(gorenstein_split(t), rows);
		rep.routes_agree = rep.routes_agree && (e_series == e_half);
	}

	for (int l = 0; l <= rows; ++l) {
		BoundsRow row;
		row.l = l;
		auto main = main_bounds(profile, l);
		auto hz = hz_bounds(profile, l);
		row.lower = main.lower;
		row.upper = main.upper;
		row.hz_lower = hz.lower;
		row.hz_upper = hz.upper;
		row.e = e_series[l];
		row.pass = (row.lower <= row.e && row.e <= row.upper);
		row.dominated = (row.hz_lower <= row.lower && row.upper <= row.hz_upper);
		rep.rows.push_back(std::move(row));
	}
	return rep;
}

mpz_class vandermonde_vt(const std::vector<mpz_class>& alphas, int t) {
	const int k = static_cast<int>(alphas.size());
	if (k < 1 || t < 0) throw math_error("vandermonde_vt needs k >= 1, t >= 0");
	mpz_class diff = 1;
	for (int i = 1; i < k; ++i)
		for (int j = 0; j < i; ++j) diff *= (alphas[i] - alphas[j]);
	return diff * complete_homogeneous(alphas, t)[t];
}

namespace {

mpz_class laplace_det(const std::vector<std::vector<mpz_class>>& m) {
	const int n = static_cast<int>(m.size());
	if (n == 1) return m[0][0];
	mpz_class det = 0;
	for (int col = 0; col < n; ++col) {
		if (m[0][col] == 0) continue;
		std::vector<std::vector<mpz_class>> minor;
		for (int row = 1; row < n; ++row) {
			std::vector<mpz_class> r;
			for (int u = 0; u < n; ++u)
				if (u != col) r.push_back(m[row][u]);
			minor.push_back(std::move(r));
		}
		mpz_class term = m[0][col] * laplace_det(minor);
		if (col % 2 == 0)
			det += term;
		else
			det -= term;
	}
	return det;
}

} // namespace

mpz_class vandermonde_vt_cofactor(const std::vector<mpz_class>& alphas, int t) {
	const int k = static_cast<int>(alphas.size());
	if (k < 1 || t < 0) throw math_error("vandermonde_vt needs k >= 1, t >= 0");
	std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
	for (int row = 0; row < k; ++row) {
		const long expo = (row == k - 1) ? k - 1 + t : row;
		for (int col = 0; col < k; ++col) m[row][col] = ipow(alphas[col], expo);
	}
	return laplace_det(m);
}

std::pair<bool, bool> check_binomial_split(long c, long a, int n) {
	const mpz_class ca = c - a;
	const mpz_class lhs_minus = ipow(ca, n) - ipow(a, n);
	const mpz_class lhs_plus = ipow(ca, n) + ipow(a, n);
	mpz_class rhs_minus = 0, rhs_plus = 0;
	for (int t = 0; 2 * t <= n; ++t) {
		const mpz_class atcat = ipow(a, t) * ipow(ca, t);
		const int sign = (t % 2 == 0) ? 1 : -1;
		mpz_class b = binom(n - t - 1, t);
		if (b != 0) // zero binomial also guards the negative c-exponent at t = n/2
			rhs_minus += sign * b * atcat * (c - 2 * a) * ipow(c, n - 2 * t - 1);
		rhs_plus += sign * binom(n - t, t) * atcat * ipow(c, n - 2 * t);
		if (t >= 1)
			rhs_plus += sign * binom(n - t - 1, t - 1) * atcat * ipow(c, n - 2 * t);
	}
	return {lhs_minus == rhs_minus, lhs_plus == rhs_plus};
}

namespace {

// Left side shared by the two generating-function identities: the inner
// h_t(alpha) is enumerated over compositions rather than computed by the
// symmetric-function recurrence, so the check stays independent.
mpz_class collapse_lhs(long c, const std::vector<mpz_class>& alpha, int r,
                       bool even_bracket) {
	const int k = static_cast<int>(alpha.size());
	mpz_class lhs = 0;
	for (int t = 0; 2 * t <= r; ++t) {
		mpz_class inner = 0;
		for_each_composition(t, k, [&](const std::vector<int>& beta) {
			mpz_class p = 1;
			for (int i = 0; i < k; ++i) p *= ipow(alpha[i], beta[i]);
			inner += p;
		});
		mpz_class br = binom(k + r - t, k + t);
		if (even_bracket) br += binom(k + r - t - 1, k + t - 1);
		mpz_class term = br * ipow(mpz_class(c), r - 2 * t) * inner;
		if (t % 2 == 0)
			lhs += term;
		else
			lhs -= term;
	}
	return lhs;
}

} // namespace

bool check_composition_collapse_odd(long c, const std::vector<long>& a, int r) {
	const int k = static_cast<int>(a.size());
	if (k < 1 || r < 0)
		throw math_error("check_composition_collapse_odd needs k >= 1, r >= 0");
	std::vector<mpz_class> alpha;
	for (long ai : a) alpha.push_back(mpz_class(ai) * (c - ai));
	mpz_class rhs = 0;
	for_each_composition(r, 2 * k + 1, [&](const std::vector<int>& beta) {
		mpz_class p = ipow(mpz_class(c), beta[2 * k]);
		for (int i = 0; i < k; ++i)
			p *= ipow(mpz_class(a[i]), beta[i]) *
			     ipow(mpz_class(c - a[i]), beta[k + i]);
		rhs += p;
	});
	return collapse_lhs(c, alpha, r, false) == rhs;
}

bool check_composition_collapse_even(long c, const std::vector<long>& a, int r) {
	const int k = static_cast<int>(a.size());
	if (k < 1 || r < 0)
		throw math_error("check_composition_collapse_even needs k >= 1, r >= 0");
	std::vector<mpz_class> alpha;
	for (long ai : a) alpha.push_back(mpz_class(ai) * (c - ai));
	mpz_class rhs = 0;
	// slots: beta_0..beta_{k-2} for a_i, beta_{k-1} for the middle pair,
	// beta_k..beta_{2k-2} for c-a_i, beta_{2k-1} for c.
	for_each_composition(r, 2 * k, [&](const std::vector<int>& beta) {
		mpz_class p = ipow(mpz_class(c), beta[2 * k - 1]);
		for (int i = 0; i + 1 < k; ++i)
			p *= ipow(mpz_class(a[i]), beta[i]) *
			     ipow(mpz_class(c - a[i]), beta[k + i]);
		p *= ipow(mpz_class(a[k - 1]), beta[k - 1]) +
		     ipow(mpz_class(c - a[k - 1]), beta[k - 1]);
		rhs += p;
	});
	return collapse_lhs(c, alpha, r, true) == rhs;
}

bool check_binomial_sum(int r, int t, int k, const std::vector<int>& betas) {
	if (t < 0 || t > r || k < 1 || static_cast<int>(betas.size()) != k)
		throw math_error("check_binomial_sum needs 0 <= t <= r and k betas");
	mpz_class lhs = 0;
	for_each_composition(r - t, k + 1, [&](const std::vector<int>& gamma) {
		mpz_class p = 1;
		for (int i = 0; i < k; ++i) p *= binom(gamma[i], betas[i]);
		lhs += p;
	});
	return lhs == binom(r - t + k, t + k);
}

namespace {

// Homological shift tuple (d_1..d_s) induced by one chosen entry per column;
// for even parity the middle slot takes a_k or c-a_k depending on the flag.
std::vector<int> homological_tuple(const GorensteinSplit& g,
                                   const std::vector<int>& chosen,
                                   bool middle_dual) {
	const int k = g.k;
	std::vector<int> d;
	if (g.parity == Parity::odd) {
		for (int i = 0; i < k; ++i) d.push_back(chosen[i]);
		for (int i = k - 1; i >= 0; --i) d.push_back(g.c - chosen[i]);
	} else {
		for (int i = 0; i + 1 < k; ++i) d.push_back(chosen[i]);
		d.push_back(middle_dual ? g.c - chosen[k - 1] : chosen[k - 1]);
		for (int i = k - 2; i >= 0; --i) d.push_back(g.c - chosen[i]);
	}
	d.push_back(g.c);
	return d;
}

} // namespace

bool check_fl_expansion(const GorensteinSplit& split,
                        const std::vector<int>& choice, int l) {
	const int k = split.k;
	if (static_cast<int>(choice.size()) != k)
		throw math_error("check_fl_expansion needs one chosen index per column");
	std::vector<int> chosen;
	for (int i = 0; i < k; ++i) {
		if (choice[i] < 0 || choice[i] >= static_cast<int>(split.columns[i].size()))
			throw math_error("column choice out of range");
		chosen.push_back(split.columns[i][choice[i]]);
	}
	const int s = split.s();
	const long c = split.c;

	mpz_class lhs = 0;
	auto nu = nu_table(s, l);
	for (int r = 0; r <= l; ++r) {
		mpz_class comp_sum = 0;
		if (split.parity == Parity::odd) {
			for_each_composition(r, 2 * k + 1, [&](const std::vector<int>& beta) {
				mpz_class p = ipow(mpz_class(c), beta[2 * k]);
				for (int i = 0; i < k; ++i)
					p *= ipow(mpz_class(chosen[i]), beta[i]) *
					     ipow(mpz_class(c - chosen[i]), beta[k + i]);
				comp_sum += p;
			});
		} else {
			for_each_composition(r, 2 * k, [&](const std::vector<int>& beta) {
				mpz_class p = ipow(mpz_class(c), beta[2 * k - 1]);
				for (int i = 0; i + 1 < k; ++i)
					p *= ipow(mpz_class(chosen[i]), beta[i]) *
					     ipow(mpz_class(c - chosen[i]), beta[k + i]);
				p *= ipow(mpz_class(chosen[k - 1]), beta[k - 1]) +
				     ipow(mpz_class(c - chosen[k - 1]), beta[k - 1]);
				comp_sum += p;
			});
		}
		if ((l - r) % 2 == 0)
			lhs += nu[l - r] * comp_sum;
		else
			lhs -= nu[l - r] * comp_sum;
	}

	mpz_class rhs = f_l(l, homological_tuple(split, chosen, false));
	if (split.parity == Parity::even)
		rhs += f_l(l, homological_tuple(split, chosen, true));
	return lhs == rhs;
}

long SweepResult::instances() const {
	long total = 0;
	for (const auto& s : suites) total += s.instances;
	return total;
}

long SweepResult::failures() const {
	long total = 0;
	for (const auto& s : suites) total += s.failures;
	return total;
}

namespace {

// rng() % span keeps sweeps reproducible across standard libraries.
long uniform_in(std::mt19937_64& rng, long lo, long hi) {
	return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

} // namespace

SweepResult run_identity_sweeps(bool full, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	SweepResult result;

	{
		SweepSuite suite{"binomial_split"};
		const long cmax = full ? 40 : 20;
		const int nmax = full ? 20 : 12;
		for (long c = 2; c <= cmax; ++c)
			for (long a = 1; a < c; ++a)
				for (int n = 1; n <= nmax; ++n) {
					auto [minus_ok, plus_ok] = check_binomial_split(c, a, n);
					suite.instances += 2;
					if (!minus_ok) ++suite.failures;
					if (!plus_ok) ++suite.failures;
				}
		result.suites.push_back(suite);
	}

	for (int even = 0; even <= 1; ++even) {
		SweepSuite suite{even ? "composition_even" : "composition_odd"};
		const int kmax = full ? 4 : 3;
		const int rmax = full ? 8 : 6;
		const int reps = full ? 25 : 10;
		for (int k = 1; k <= kmax; ++k)
			for (int r = 0; r <= rmax; ++r)
				for (int rep = 0; rep < reps; ++rep) {
					long c = uniform_in(rng, 1, 10);
					std::vector<long> a;
					for (int i = 0; i < k; ++i) a.push_back(uniform_in(rng, 1, 10));
					bool ok = even ? check_composition_collapse_even(c, a, r)
					               : check_composition_collapse_odd(c, a, r);
					++suite.instances;
					if (!ok) ++suite.failures;
				}
		result.suites.push_back(suite);
	}

	{
		SweepSuite suite{"binomial_sum"};
		const int rmax = full ? 10 : 8;
		const int kmax = full ? 5 : 4;
		for (int r = 0; r <= rmax; ++r)
			for (int k = 1; k <= kmax; ++k)
				for (int t = 0; t <= r; ++t)
					for_each_composition(t, k, [&](const std::vector<int>& beta) {
						++suite.instances;
						if (!check_binomial_sum(r, t, k, beta)) ++suite.failures;
					});
		result.suites.push_back(suite);
	}

	{
		SweepSuite suite{"fl_expansion"};
		const int reps = full ? 500 : 120;
		for (int rep = 0; rep < reps; ++rep) {
			GorensteinSplit g;
			g.parity = (rng() & 1) ? Parity::odd : Parity::even;
			g.k = static_cast<int>(uniform_in(rng, 1, 3));
			g.c = static_cast<int>(uniform_in(rng, 2 * g.k + 2, full ? 28 : 20));
			std::vector<int> choice;
			for (int i = 0; i < g.k; ++i) {
				int width = static_cast<int>(uniform_in(rng, 1, 3));
				std::vector<int> col;
				for (int u = 0; u < width; ++u)
					col.push_back(static_cast<int>(uniform_in(rng, 1, g.c / 2)));
				std::sort(col.begin(), col.end());
				g.columns.push_back(std::move(col));
				choice.push_back(static_cast<int>(uniform_in(rng, 0, width - 1)));
			}
			int l = static_cast<int>(uniform_in(rng, 0, 4));
			++suite.instances;
			if (!check_fl_expansion(g, choice, l)) ++suite.failures;
		}
		result.suites.push_back(suite);
	}

	{
		SweepSuite suite{"vandermonde"};
		const int reps = full ? 400 : 120;
		for (int rep = 0; rep < reps; ++rep) {
			int k = static_cast<int>(uniform_in(rng, 1, 4));
			std::vector<mpz_class> alphas;
			for (int i = 0; i < k; ++i)
				alphas.emplace_back(uniform_in(rng, 0, 30));
			std::sort(alphas.begin(), alphas.end());
			int t = static_cast<int>(uniform_in(rng, 0, 6));
			mpz_class v = vandermonde_vt(alphas, t);
			++suite.instances;
			if (v != vandermonde_vt_cofactor(alphas, t) || v < 0) ++suite.failures;
		}
		result.suites.push_back(suite);
	}

	return result;
}

} // namespace hilco
