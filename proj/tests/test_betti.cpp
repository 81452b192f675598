#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "betti.hpp"
#include "helpers.hpp"

using namespace hilco;
using namespace hilco::test;

TEST_CASE("json parsing accepts the documented schema") {
	auto t = BettiTable::parse_json(R"({"n": 1, "entries": [
	  {"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1}]})");
	CHECK(t.vars() == 1);
	CHECK(t.length() == 1);
	CHECK(t.beta(1, 2) == 1);

	auto ci = BettiTable::parse_json(R"({"n": 2, "entries": [
	  {"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1},
	  {"i": 1, "j": 3, "beta": 1}, {"i": 2, "j": 5, "beta": 1}]})");
	CHECK(ci.length() == 2);
	CHECK(ci == generate_ci({2, 3}, 2));
}

TEST_CASE("json parsing rejects malformed and invalid input") {
	CHECK_THROWS_AS(BettiTable::parse_json("{"), parse_error);
	CHECK_THROWS_AS(BettiTable::parse_json("[1,2]"), parse_error);
	// missing n must carry a usable hint
	try {
		BettiTable::parse_json(R"({"entries": []})");
		FAIL("expected parse_error");
	} catch (const parse_error& e) {
		CHECK(std::string(e.what()).find("n >= s") != std::string::npos);
	}
	// missing the (0,0,1) entry
	CHECK_THROWS_AS(BettiTable::parse_json(
	                    R"({"n": 2, "entries": [{"i": 1, "j": 2, "beta": 1}]})"),
	                table_error);
	// nonpositive multiplicity
	CHECK_THROWS_AS(
	    BettiTable::parse_json(R"({"n": 2, "entries": [
	      {"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 0}]})"),
	    table_error);
	// s > n
	CHECK_THROWS_AS(
	    BettiTable::parse_json(R"({"n": 1, "entries": [
	      {"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1},
	      {"i": 2, "j": 4, "beta": 1}]})"),
	    table_error);
	// beta at (0,0) must be exactly one
	CHECK_THROWS_AS(
	    BettiTable::parse_json(R"({"n": 1, "entries": [
	      {"i": 0, "j": 0, "beta": 2}, {"i": 1, "j": 2, "beta": 1}]})"),
	    table_error);
	// no resolution part at all
	CHECK_THROWS_AS(BettiTable::parse_json(
	                    R"({"n": 1, "entries": [{"i": 0, "j": 0, "beta": 1}]})"),
	                table_error);
}

TEST_CASE("duplicate entries accumulate") {
	auto t = BettiTable::parse_json(R"({"n": 2, "entries": [
	  {"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1},
	  {"i": 1, "j": 2, "beta": 2}, {"i": 2, "j": 4, "beta": 1}]})");
	CHECK(t.beta(1, 2) == 3);
}

TEST_CASE("shifts below the homological degree are warnings, not errors") {
	auto t = make_table(2, {{0, 0, 1}, {1, 1, 1}, {2, 1, 1}});
	auto warn = t.nonminimal_entries();
	REQUIRE(warn.size() == 1);
	CHECK(warn[0].i == 2);
	CHECK(warn[0].j == 1);
	CHECK(generate_ci({2, 3}, 2).nonminimal_entries().empty());
}

TEST_CASE("plain format parses with comments and round-trips") {
	auto t = BettiTable::parse_plain("# a complete intersection\n"
	                                 "n 2\n"
	                                 "0 0 1\n"
	                                 "\n"
	                                 "1 2 1  # quadric\n"
	                                 "1 3 1\n"
	                                 "2 5 1\n");
	CHECK(t == generate_ci({2, 3}, 2));
	CHECK(BettiTable::parse_plain(t.to_plain()) == t);
	CHECK_THROWS_AS(BettiTable::parse_plain("0 0 1\n"), parse_error);
	CHECK_THROWS_AS(BettiTable::parse_plain("n 2\n0 0\n"), parse_error);
	CHECK_THROWS_AS(BettiTable::parse_plain("n 2\n0 0 1 7\n"), parse_error);
}

TEST_CASE("format sniffing picks json for a leading brace") {
	auto j = generate_ci({2, 3}, 2).to_json();
	auto p = generate_ci({2, 3}, 2).to_plain();
	CHECK(BettiTable::parse_auto(j) == BettiTable::parse_auto(p));
	CHECK_THROWS_AS(BettiTable::parse_auto("   \n\t "), parse_error);
}

TEST_CASE("json serialization is stable and lossless") {
	auto t = generate_ci({2, 2, 3}, 4);
	auto text = t.to_json();
	CHECK(BettiTable::parse_json(text) == t);
	CHECK(BettiTable::parse_json(text).to_json() == text);
}

TEST_CASE("shift profile") {
	auto p = shift_profile(generate_ci({2, 3}, 2));
	CHECK(p.m == std::vector<int>{2, 5});
	CHECK(p.M == std::vector<int>{3, 5});

	auto p222 =
	    shift_profile(make_table(3, {{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}}));
	CHECK(p222.m == std::vector<int>{2, 4, 6});
	CHECK(p222.m == p222.M);

	auto ph = shift_profile(generate_ci({7}, 1));
	CHECK(ph.m == std::vector<int>{7});
	CHECK(ph.M == std::vector<int>{7});

	// gaps in the homological degrees are not a usable profile
	CHECK_THROWS_AS(shift_profile(make_table(3, {{0, 0, 1}, {3, 6, 1}})),
	                table_error);
}

TEST_CASE("quasi-purity") {
	CHECK(is_quasi_pure({{2, 5}, {3, 5}}));
	CHECK(is_quasi_pure({{2, 4, 6}, {2, 4, 6}})); // pure
	CHECK_FALSE(is_quasi_pure({{2, 3}, {5, 6}}));
	CHECK(is_quasi_pure({{2, 3}, {3, 4}})); // boundary tie counts
	CHECK_FALSE(is_quasi_pure(shift_profile(generate_ci({2, 2, 6}, 3))));
}

TEST_CASE("quasi-purity is monotone under profile refinement") {
	std::mt19937_64 rng(7);
	auto pick = [&](int lo, int hi) {
		return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
	};
	for (int rep = 0; rep < 200; ++rep) {
		const int s = pick(1, 6);
		ShiftProfile p;
		int base = pick(1, 3);
		for (int i = 0; i < s; ++i) {
			int m = std::max(base, i ? p.M[i - 1] : 0); // keep it quasi-pure
			int M = m + pick(0, 3);
			p.m.push_back(m);
			p.M.push_back(M);
			base = m + pick(0, 2);
		}
		REQUIRE(is_quasi_pure(p));
		ShiftProfile refined;
		for (int i = 0; i < s; ++i) {
			int m = pick(p.m[i], p.M[i]);
			refined.m.push_back(m);
			refined.M.push_back(pick(m, p.M[i]));
		}
		CHECK(is_quasi_pure(refined));
	}
}

TEST_CASE("gorenstein symmetry detection") {
	auto c23 = gorenstein_socle(generate_ci({2, 3}, 2));
	REQUIRE(c23.has_value());
	CHECK(*c23 == 5);

	auto c222 = gorenstein_socle(generate_ci({2, 2, 2}, 3));
	REQUIRE(c222.has_value());
	CHECK(*c222 == 6);

	CHECK(gorenstein_socle(pfaffian_table()) == 5);

	// rank-two socle
	CHECK_FALSE(gorenstein_socle(
	    make_table(2, {{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 2}})));
	// asymmetric middle
	CHECK_FALSE(gorenstein_socle(
	    make_table(2, {{0, 0, 1}, {1, 2, 2}, {1, 3, 1}, {2, 5, 1}})));
	// the table of (x,y)^2: socle rank two
	CHECK_FALSE(gorenstein_socle(make_table(2, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}})));
}

TEST_CASE("gorenstein split") {
	auto g23 = gorenstein_split(generate_ci({2, 3}, 2));
	CHECK(g23.parity == Parity::even);
	CHECK(g23.k == 1);
	CHECK(g23.c == 5);
	CHECK(g23.columns == std::vector<std::vector<int>>{{2}});

	auto g222 = gorenstein_split(generate_ci({2, 2, 2}, 3));
	CHECK(g222.parity == Parity::odd);
	CHECK(g222.k == 1);
	CHECK(g222.c == 6);
	CHECK(g222.columns == std::vector<std::vector<int>>{{2, 2, 2}});

	auto gh = gorenstein_split(generate_ci({4}, 1));
	CHECK(gh.parity == Parity::odd);
	CHECK(gh.k == 0);
	CHECK(gh.c == 4);
	CHECK(gh.columns.empty());

	// middle multiset {2, 2, 4}: odd count cannot be halved
	CHECK_THROWS_AS(gorenstein_split(make_table(
	                    2, {{0, 0, 1}, {1, 2, 2}, {1, 4, 1}, {2, 6, 1}})),
	                table_error);
	// even count but not symmetric about c
	CHECK_THROWS_AS(
	    gorenstein_split(make_table(
	        2, {{0, 0, 1}, {1, 2, 1}, {1, 3, 2}, {1, 5, 1}, {2, 8, 1}})),
	    table_error);
	// rank-two socle is not splittable
	CHECK_THROWS_AS(gorenstein_split(make_table(
	                    2, {{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 2}})),
	                table_error);
}

TEST_CASE("middle ties pair with themselves") {
	auto t = make_table(2, {{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}); // CI(2,2)
	auto g = gorenstein_split(t);
	CHECK(g.columns == std::vector<std::vector<int>>{{2}});
	CHECK(dual_complete(g, 2) == t);
}

TEST_CASE("dual completion inverts the split") {
	GorensteinSplit even1{Parity::even, 1, 5, {{2}}};
	CHECK(dual_complete(even1, 2) == generate_ci({2, 3}, 2));

	GorensteinSplit hyper{Parity::odd, 0, 7, {}};
	CHECK(dual_complete(hyper, 1) == generate_ci({7}, 1));

	GorensteinSplit odd1{Parity::odd, 1, 6, {{2, 2, 2}}};
	CHECK(dual_complete(odd1, 3) == generate_ci({2, 2, 2}, 3));

	CHECK_THROWS_AS(dual_complete(odd1, 2), table_error); // n < s
	// middle shift above c/2 breaks the even-case convention
	CHECK_THROWS_AS(dual_complete(GorensteinSplit{Parity::even, 1, 5, {{3}}}, 2),
	                table_error);
	CHECK_THROWS_AS(
	    dual_complete(GorensteinSplit{Parity::odd, 1, 4, {{2, 1}}}, 3),
	    table_error); // unsorted column
}

TEST_CASE("dual completion followed by a split returns the same half") {
	std::mt19937_64 rng(23);
	auto pick = [&](int lo, int hi) {
		return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
	};
	for (int rep = 0; rep < 200; ++rep) {
		GorensteinSplit g;
		g.k = pick(0, 3);
		g.parity = (g.k >= 1 && (rng() & 1)) ? Parity::even : Parity::odd;
		g.c = pick(2 * g.k + 2, 24);
		// only the middle column of an even split is capped at c/2
		for (int i = 0; i < g.k; ++i) {
			bool capped = (g.parity == Parity::even) && (i == g.k - 1);
			std::vector<int> col;
			int width = pick(1, 3);
			for (int u = 0; u < width; ++u)
				col.push_back(pick(1, capped ? g.c / 2 : g.c - 1));
			std::sort(col.begin(), col.end());
			g.columns.push_back(std::move(col));
		}
		unsigned n = static_cast<unsigned>(g.s()) + pick(0, 2);
		CHECK(gorenstein_split(dual_complete(g, n)) == g);
	}
}

TEST_CASE("split and dual completion round-trip on the corpus") {
	for (const auto& item : ci_corpus()) {
		auto split = gorenstein_split(item.table);
		CHECK(dual_complete(split, item.n) == item.table);
	}
	auto pf = pfaffian_table();
	CHECK(dual_complete(gorenstein_split(pf), 3) == pf);
	auto mixed = tensor_table(pfaffian_table(), generate_ci({2}, 1), 4);
	CHECK(dual_complete(gorenstein_split(mixed), 4) == mixed);
}

TEST_CASE("koszul generator") {
	auto t = generate_ci({2, 3}, 2);
	CHECK(t.entries() == std::map<std::pair<int, int>, long>{
	                         {{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}});
	auto t222 = generate_ci({2, 2, 2}, 3);
	CHECK(t222.entries() ==
	      std::map<std::pair<int, int>, long>{
	          {{0, 0}, 1}, {{1, 2}, 3}, {{2, 4}, 3}, {{3, 6}, 1}});
	CHECK(generate_ci({4}, 1).entries() ==
	      std::map<std::pair<int, int>, long>{{{0, 0}, 1}, {{1, 4}, 1}});
	CHECK_THROWS_AS(generate_ci({2, 2}, 1), table_error); // s > n
	CHECK_THROWS_AS(generate_ci({}, 1), table_error);
	CHECK_THROWS_AS(generate_ci({0}, 1), table_error);
}

TEST_CASE("koszul tables are symmetric with socle = degree sum") {
	for (const auto& item : ci_corpus()) {
		int expected = 0;
		for (int d : item.degrees) expected += d;
		auto socle = gorenstein_socle(item.table);
		REQUIRE(socle.has_value());
		CHECK(*socle == expected);
	}
}

TEST_CASE("equal-degree intersections are pure and quasi-pure") {
	for (int d = 1; d <= 5; ++d)
		for (int s = 1; s <= 5; ++s) {
			std::vector<int> degs(s, d);
			auto p = shift_profile(generate_ci(degs, s));
			CHECK(p.m == p.M);
			CHECK(is_quasi_pure(p));
		}
}

TEST_CASE("betti numbers and shift views") {
	auto t = generate_ci({2, 2, 3}, 3);
	CHECK(t.betti_number(1) == 3);
	CHECK(t.shifts_at(1) == std::vector<int>{2, 2, 3});
	CHECK(t.shifts_at(2) == std::vector<int>{4, 5, 5});
	CHECK(t.max_shift() == 7);
}
