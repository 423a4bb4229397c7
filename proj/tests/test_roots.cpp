#include "e8lie/roots.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace e8lie;

TEST_CASE("root system counts and extremes")
{
	auto const &rs = root_system();
	CHECK(rs.positive().size() == 120);
	CHECK(rs.roots().size() == 240);
	CHECK(rs.highest() == Root{2, 3, 4, 6, 5, 4, 3, 2});
	for (auto const &r : rs.roots()) {
		int h = height(r);
		CHECK(h != 0);
		CHECK(std::abs(h) <= 29);
	}
}

TEST_CASE("coefficients share one sign and negation closure holds")
{
	auto const &rs = root_system();
	for (auto const &r : rs.roots()) {
		bool has_pos = false, has_neg = false;
		for (int c : r) {
			has_pos |= c > 0;
			has_neg |= c < 0;
		}
		CHECK_FALSE((has_pos && has_neg));
		CHECK(rs.is_root(-r));
	}
}

TEST_CASE("construction is deterministic")
{
	RootSystem a, b;
	CHECK(a.positive() == b.positive());
	CHECK(a.roots() == b.roots());
}

TEST_CASE("root addition")
{
	auto const &rs = root_system();
	Root a2 = rs.simple(2), a4 = rs.simple(4), a1 = rs.simple(1);
	CHECK(rs.add_roots(a2, a4).has_value()); // adjacent nodes
	CHECK_FALSE(rs.add_roots(a1, a2).has_value());
	CHECK_FALSE(rs.add_roots(a1, -a1).has_value());
}

TEST_CASE("simple-root coefficients")
{
	auto const &rs = root_system();
	CHECK(coefficient(rs.highest(), 3) == 4);
	CHECK(coefficient(rs.simple(1), 3) == 0);
	CHECK(coefficient(rs.simple(6), 6) == 1);
	CHECK_THROWS_AS(coefficient(rs.simple(1), 0), std::out_of_range);
	CHECK_THROWS_AS(coefficient(rs.simple(1), 9), std::out_of_range);
}

TEST_CASE("cartan matrix shape")
{
	auto const &rs = root_system();
	for (int i = 1; i <= 8; ++i)
		for (int j = 1; j <= 8; ++j) {
			CHECK(rs.cartan(i, j) == rs.cartan(j, i));
			if (i == j)
				CHECK(rs.cartan(i, j) == 2);
			else
				CHECK((rs.cartan(i, j) == 0 || rs.cartan(i, j) == -1));
		}
}

TEST_CASE("pairings and string property over all pairs")
{
	auto const &rs = root_system();
	auto all = rs.roots();
	bool pairings_ok = true, strings_ok = true, extremes_ok = true;
	for (auto const &a : all)
		for (auto const &b : all) {
			int p = rs.pairing(a, b);
			pairings_ok &= std::abs(p) <= 2;
			if (p == 2)
				extremes_ok &= a == b;
			if (p == -2)
				extremes_ok &= a == -b;
			// simply laced: strings have length at most two
			if (a != b && a != -b && rs.is_root(a + b))
				strings_ok &= !rs.is_root(b - a);
		}
	CHECK(pairings_ok);
	CHECK(strings_ok);
	CHECK(extremes_ok);
}
