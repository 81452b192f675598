#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "series.hpp"

using namespace hilco;
using namespace hilco::test;

namespace {

// plain convolution, kept separate from the library as a reference route
std::vector<mpz_class> mul(const std::vector<mpz_class>& a,
                           const std::vector<mpz_class>& b) {
	std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
	for (size_t i = 0; i < a.size(); ++i)
		for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
	return out;
}

IntPolynomial koszul_numerator(const std::vector<int>& degrees) {
	std::vector<mpz_class> acc{1};
	for (int d : degrees) {
		std::vector<mpz_class> factor(d + 1, 0); // 1 - t^d
		factor[0] = 1;
		factor[d] = -1;
		acc = mul(acc, factor);
	}
	return IntPolynomial(acc);
}

IntPolynomial koszul_quotient(const std::vector<int>& degrees) {
	std::vector<mpz_class> acc{1};
	for (int d : degrees)
		acc = mul(acc, std::vector<mpz_class>(d, 1)); // 1 + t + ... + t^{d-1}
	return IntPolynomial(acc);
}

} // namespace

TEST_CASE("polynomial basics") {
	IntPolynomial p({mpz_class(1), mpz_class(0), mpz_class(-1), mpz_class(0)});
	CHECK(p.degree() == 2);
	CHECK(p.coeff(0) == 1);
	CHECK(p.coeff(2) == -1);
	CHECK(p.coeff(5) == 0);
	CHECK(p.coeff(-1) == 0);
	CHECK(p.eval_at_one() == 0);
	CHECK(IntPolynomial{}.is_zero());
	CHECK(IntPolynomial{}.to_string() == "0");
	CHECK(p.to_string() == "1 - t^2");
	IntPolynomial q({mpz_class(-2), mpz_class(1), mpz_class(3)});
	CHECK(q.to_string() == "-2 + t + 3*t^2");
}

TEST_CASE("numerator of a table") {
	CHECK(numerator(generate_ci({2, 3}, 2)).to_string() == "1 - t^2 - t^3 + t^5");
	CHECK(numerator(generate_ci({4}, 1)).to_string() == "1 - t^4");
	CHECK(numerator(generate_ci({2, 2, 2}, 3)).to_string() ==
	      "1 - 3*t^2 + 3*t^4 - t^6");
	// colliding shifts cancel in the alternating sum
	auto t = make_table(2, {{0, 0, 1}, {1, 2, 1}, {1, 4, 1}, {2, 4, 1}, {2, 6, 1}});
	CHECK(numerator(t).to_string() == "1 - t^2 + t^6");
}

TEST_CASE("numerator equals the expanded koszul product on the corpus") {
	for (const auto& item : ci_corpus())
		CHECK(numerator(item.table) == koszul_numerator(item.degrees));
}

TEST_CASE("dividing out (1-t)^s") {
	auto q23 = divide_out(numerator(generate_ci({2, 3}, 2)), 2);
	CHECK(q23.coeffs() ==
	      std::vector<mpz_class>{mpz_class(1), mpz_class(2), mpz_class(2),
	                             mpz_class(1)});
	auto q222 = divide_out(numerator(generate_ci({2, 2, 2}, 3)), 3);
	CHECK(q222.coeffs() ==
	      std::vector<mpz_class>{mpz_class(1), mpz_class(3), mpz_class(3),
	                             mpz_class(1)}); // (1+t)^3
	CHECK_THROWS_AS(
	    divide_out(IntPolynomial({mpz_class(1), mpz_class(-1)}), 2),
	    math_error);
	CHECK(divide_out(IntPolynomial({mpz_class(5)}), 0).coeff(0) == 5);
	CHECK(divide_out(IntPolynomial{}, 3).is_zero());
}

TEST_CASE("division matches the closed-form koszul quotient on the corpus") {
	for (const auto& item : ci_corpus()) {
		auto q = divide_out(numerator(item.table),
		                    static_cast<int>(item.degrees.size()));
		CHECK(q == koszul_quotient(item.degrees));
	}
}

TEST_CASE("coefficient extraction from Q") {
	auto q23 = divide_out(numerator(generate_ci({2, 3}, 2)), 2);
	CHECK(hilbert_coefficients(q23, 3) ==
	      std::vector<mpz_class>{mpz_class(6), mpz_class(9), mpz_class(5),
	                             mpz_class(1)});
	auto q222 = divide_out(numerator(generate_ci({2, 2, 2}, 3)), 3);
	CHECK(hilbert_coefficients(q222, 3) ==
	      std::vector<mpz_class>{mpz_class(8), mpz_class(12), mpz_class(6),
	                             mpz_class(1)});
	CHECK(hilbert_coefficients(IntPolynomial({mpz_class(1)}), 4) ==
	      std::vector<mpz_class>{mpz_class(1), mpz_class(0), mpz_class(0),
	                             mpz_class(0), mpz_class(0)});
}

TEST_CASE("e_0 = Q(1) is positive across the corpus") {
	for (const auto& item : ci_corpus()) {
		auto q = divide_out(numerator(item.table),
		                    static_cast<int>(item.degrees.size()));
		auto e = hilbert_coefficients(q, 0);
		CHECK(e[0] == q.eval_at_one());
		CHECK(e[0] > 0);
	}
}

TEST_CASE("hilbert function values") {
	auto h2 = generate_ci({2}, 1); // K[x]/(x^2)
	CHECK(hilbert_function_value(h2, 0) == 1);
	CHECK(hilbert_function_value(h2, 1) == 1);
	CHECK(hilbert_function_value(h2, 2) == 0);
	CHECK(hilbert_function_value(h2, 5) == 0);

	auto ci = generate_ci({2, 3}, 2);
	std::vector<long> expected{1, 2, 2, 1, 0};
	for (long x = 0; x < 5; ++x)
		CHECK(hilbert_function_value(ci, x) == expected[x]);

	// same ideal in a larger ring: values grow but stay exact
	auto ci4 = generate_ci({2, 3}, 4);
	CHECK(hilbert_function_value(ci4, 0) == 1);
	CHECK(hilbert_function_value(ci4, 1) == 4);
}

TEST_CASE("artinian tables: H(x) is the coefficient q_x") {
	for (const auto& item : ci_corpus()) {
		if (item.n != item.degrees.size()) continue;
		auto q = divide_out(numerator(item.table),
		                    static_cast<int>(item.degrees.size()));
		for (long x = 0; x <= q.degree() + 2; ++x)
			CHECK(hilbert_function_value(item.table, x) ==
			      q.coeff(static_cast<int>(x)));
	}
}

TEST_CASE("fitted coefficients for one-dimensional quotients") {
	auto e222 = oracle_coefficients(generate_ci({2, 2, 2}, 4), 0);
	CHECK(e222 == std::vector<mpz_class>{mpz_class(8)});
	auto e23 = oracle_coefficients(generate_ci({2, 3}, 3), 0);
	CHECK(e23 == std::vector<mpz_class>{mpz_class(6)});
}

TEST_CASE("fitted coefficients in higher dimension") {
	auto e = oracle_coefficients(generate_ci({2, 3}, 5), 2);
	CHECK(e == std::vector<mpz_class>{mpz_class(6), mpz_class(9), mpz_class(5)});
}

TEST_CASE("fit preconditions") {
	CHECK_THROWS_AS(oracle_coefficients(generate_ci({2, 3}, 2), 0), math_error);
	CHECK_THROWS_AS(oracle_coefficients(generate_ci({2, 3}, 3), 1), math_error);
	CHECK_THROWS_AS(oracle_coefficients(generate_ci({2, 3}, 3), -1), math_error);
}

TEST_CASE("fit agrees with the series route on the whole corpus") {
	for (const auto& item : ci_corpus()) {
		const int d = static_cast<int>(item.n) -
		              static_cast<int>(item.degrees.size());
		if (d < 1) continue;
		auto q = divide_out(numerator(item.table),
		                    static_cast<int>(item.degrees.size()));
		CHECK(oracle_coefficients(item.table, d - 1) ==
		      hilbert_coefficients(q, d - 1));
	}
}
