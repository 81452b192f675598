#include "series.hpp"

#include <sstream>

#include "numeric.hpp"

namespace hilco {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
	while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int j) const {
	if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
	return c_[j];
}

mpz_class IntPolynomial::eval_at_one() const {
	mpz_class v = 0;
	for (const auto& c : c_) v += c;
	return v;
}

std::string IntPolynomial::to_string() const {
	if (c_.empty()) return "0";
	std::ostringstream out;
	bool first = true;
	for (int j = 0; j < static_cast<int>(c_.size()); ++j) {
		if (c_[j] == 0) continue;
		mpz_class a = abs(c_[j]);
		if (first) {
			if (c_[j] < 0) out << "-";
			first = false;
		} else {
			out << (c_[j] < 0 ? " - " : " + ");
		}
		if (a != 1 || j == 0) out << a.get_str();
		if (j > 0) {
			if (a != 1) out << "*";
			out << "t";
			if (j > 1) out << "^" << j;
		}
	}
	return out.str();
}

IntPolynomial numerator(const BettiTable& t) {
	std::vector<mpz_class> c(t.max_shift() + 1, 0);
	for (const auto& [key, beta] : t.entries()) {
		const auto [i, j] = key;
		if (i % 2 == 0)
			c[j] += beta;
		else
			c[j] -= beta;
	}
	return IntPolynomial(std::move(c));
}

IntPolynomial divide_out(const IntPolynomial& num, int s) {
	if (s < 0) throw math_error("cannot divide out a negative power of (1-t)");
	std::vector<mpz_class> c = num.coeffs();
	for (int step = 1; step <= s; ++step) {
		// p = q * (1-t) inverts to prefix sums, with total sum as remainder.
		mpz_class run = 0;
		for (auto& v : c) {
			run += v;
			v = run;
		}
		if (run != 0)
			throw math_error("numerator is not divisible by (1-t)^" +
			                 std::to_string(s) + ": remainder " + run.get_str() +
			                 " at stage " + std::to_string(step) +
			                 " (table inconsistent with codimension " +
			                 std::to_string(s) + ")");
		if (!c.empty()) c.pop_back(); // last prefix sum is the checked remainder
	}
	return IntPolynomial(std::move(c));
}

std::vector<mpz_class> hilbert_coefficients(const IntPolynomial& q, int L) {
	if (L < 0) throw math_error("hilbert_coefficients needs L >= 0");
	std::vector<mpz_class> e(L + 1, 0);
	for (int l = 0; l <= L; ++l)
		for (int j = l; j <= q.degree(); ++j) e[l] += binom(j, l) * q.coeff(j);
	return e;
}

mpz_class hilbert_function_value(const BettiTable& t, long x) {
	const long r = static_cast<long>(t.vars()) - 1;
	mpz_class h = 0;
	for (const auto& [key, beta] : t.entries()) {
		const auto [i, j] = key;
		mpz_class term = binom(r + x - j, r) * beta;
		if (i % 2 == 0)
			h += term;
		else
			h -= term;
	}
	return h;
}

namespace {

// Exact Gaussian elimination; a is d x (d+1) augmented, solution appended.
std::vector<mpq_class> solve_exact(std::vector<std::vector<mpq_class>> a) {
	const int d = static_cast<int>(a.size());
	for (int col = 0; col < d; ++col) {
		int pivot = -1;
		for (int row = col; row < d; ++row)
			if (a[row][col] != 0) {
				pivot = row;
				break;
			}
		if (pivot < 0) throw math_error("singular system in the coefficient fit");
		std::swap(a[col], a[pivot]);
		for (int row = 0; row < d; ++row) {
			if (row == col || a[row][col] == 0) continue;
			mpq_class factor = a[row][col] / a[col][col];
			for (int u = col; u <= d; ++u) a[row][u] -= factor * a[col][u];
		}
	}
	std::vector<mpq_class> x(d);
	for (int row = 0; row < d; ++row) {
		x[row] = a[row][d] / a[row][row];
		x[row].canonicalize();
	}
	return x;
}

} // namespace

std::vector<mpz_class> oracle_coefficients(const BettiTable& t, int L) {
	const int d = static_cast<int>(t.vars()) - t.length();
	if (d < 1)
		throw math_error("coefficient fit needs dimension d = n - s >= 1; "
		                 "compare H(x) with the coefficients of Q instead");
	if (L < 0 || L > d - 1)
		throw math_error("requested coefficient index exceeds d - 1 = " +
		                 std::to_string(d - 1));
	// Past the top shift every binomial in H is in its polynomial range, so
	// H agrees with the Hilbert polynomial there.
	const long x0 = t.max_shift() + 1;
	std::vector<std::vector<mpq_class>> sys(d, std::vector<mpq_class>(d + 1, 0));
	for (int p = 0; p < d; ++p) {
		const long x = x0 + p;
		for (int i = 0; i < d; ++i) {
			mpq_class entry(binom(x + d - 1 - i, d - 1 - i));
			sys[p][i] = (i % 2 == 0) ? entry : -entry;
		}
		sys[p][d] = mpq_class(hilbert_function_value(t, x));
	}
	auto sol = solve_exact(std::move(sys));
	std::vector<mpz_class> e;
	for (int l = 0; l <= L; ++l) {
		if (sol[l].get_den() != 1)
			throw math_error("coefficient fit produced the non-integer e_" +
			                 std::to_string(l) + " = " + sol[l].get_str());
		e.push_back(sol[l].get_num());
	}
	return e;
}

} // namespace hilco
