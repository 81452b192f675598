#ifndef HILCO_SERIES_HPP
#define HILCO_SERIES_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "betti.hpp"

namespace hilco {

// Dense univariate polynomial over Z; index = exponent of t. Trailing zero
// coefficients are stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
public:
	IntPolynomial() = default;
	explicit IntPolynomial(std::vector<mpz_class> coeffs);

	int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 if zero
	bool is_zero() const { return c_.empty(); }
	const std::vector<mpz_class>& coeffs() const { return c_; }
	mpz_class coeff(int j) const;
	mpz_class eval_at_one() const;
	std::string to_string() const; // sparse "c*t^j" sum

	bool operator==(const IntPolynomial&) const = default;

private:
	std::vector<mpz_class> c_;
};

// Hilbert numerator: coefficient of t^j is sum_i (-1)^i beta_{ij}.
IntPolynomial numerator(const BettiTable& t);

// Q with num = Q * (1-t)^s, via s synthetic divisions, each of which must be
// exact; a nonzero remainder means the table is not consistent with a
// Cohen-Macaulay quotient of codimension s.
IntPolynomial divide_out(const IntPolynomial& num, int s);

// e_l = sum_j C(j, l) q_j for l = 0..L (the Taylor coefficients of Q at 1).
std::vector<mpz_class> hilbert_coefficients(const IntPolynomial& q, int L);

// H(x) = sum (-1)^i beta_{ij} C(n-1+x-j, n-1), the Hilbert function read off
// the resolution.
mpz_class hilbert_function_value(const BettiTable& t, long x);

// Independent route: evaluate H at d = n-s consecutive points past the top
// shift and solve for the coefficients of the Hilbert polynomial in the
// alternating binomial basis. Requires d >= 1 and L <= d-1.
std::vector<mpz_class> oracle_coefficients(const BettiTable& t, int L);

} // namespace hilco

#endif
