#include <set>

#include "doctest.h"
#include "gcm3/search.hpp"

using namespace gcm3;

namespace {

std::vector<Int> iv(std::initializer_list<long> ls) {
    std::vector<Int> v;
    for (long l : ls) v.emplace_back(l);
    return v;
}

// direct enumeration over a generous box, for comparison
std::set<std::vector<Int>> brute(long g12, long g13, long g23, long box) {
    std::set<std::vector<Int>> out;
    std::array<std::array<long, 3>, 3> g{};
    g[0][1] = g[1][0] = g12;
    g[0][2] = g[2][0] = g13;
    g[1][2] = g[2][1] = g23;
    for (long x = 1; x <= box; ++x)
        for (long y = 1; y <= box; ++y)
            for (long z = 1; z <= box; ++z) {
                std::array<long, 3> lam{x, y, z};
                if (gcd(gcd(Int(x), Int(y)), Int(z)) != 1) continue;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    for (int j = 0; j < 3 && ok; ++j)
                        if (i != j && !divides(Int(lam[i]), Int(g[i][j] * lam[j]))) ok = false;
                if (ok) out.insert(iv({x, y, z}));
            }
    return out;
}

}  // namespace

TEST_CASE("the Gram triple (2,4,2) has exactly nine solutions") {
    auto sols = solve_twists(2, 4, 2);
    std::vector<std::vector<Int>> expected{
        iv({1, 1, 1}), iv({1, 1, 2}), iv({1, 2, 1}), iv({1, 2, 2}), iv({1, 2, 4}),
        iv({2, 1, 1}), iv({2, 1, 2}), iv({2, 2, 1}), iv({4, 2, 1})};
    REQUIRE(sols.size() == 9);
    for (size_t i = 0; i < 9; ++i) CHECK(sols[i].values() == expected[i]);
}

TEST_CASE("trivial Gram triples") {
    auto sols = solve_twists(1, 1, 1);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].values() == iv({1, 1, 1}));
}

TEST_CASE("the Gram triple (2,2,2) has the seven non-diagonal corners") {
    auto sols = solve_twists(2, 2, 2);
    CHECK(sols.size() == 7);
    std::set<std::vector<Int>> got;
    for (const auto& s : sols) got.insert(s.values());
    CHECK(got == brute(2, 2, 2, 8));
    CHECK(!got.count(iv({2, 2, 2})));  // gcd 2
}

TEST_CASE("solver matches direct enumeration on small Gram values") {
    for (long g12 = 1; g12 <= 4; ++g12)
        for (long g13 = 1; g13 <= 4; ++g13)
            for (long g23 = 1; g23 <= 4; ++g23) {
                auto sols = solve_twists(g12, g13, g23);
                std::set<std::vector<Int>> got;
                for (const auto& s : sols) got.insert(s.values());
                CHECK(got == brute(g12, g13, g23, 20));
            }
}

TEST_CASE("a single zero Gram entry still bounds the search") {
    auto sols = solve_twists(2, 0, 2);
    std::set<std::vector<Int>> got;
    for (const auto& s : sols) got.insert(s.values());
    CHECK(got == brute(2, 0, 2, 16));
    CHECK(got.count(iv({4, 2, 1})));  // needs the product box, not just the lcm
}

TEST_CASE("doubly unconstrained coefficients are reported") {
    try {
        solve_twists(0, 0, 5);
        FAIL("expected UnboundedSearchError");
    } catch (const UnboundedSearchError& e) {
        CHECK(e.index == 0);
    }
    auto sols = solve_twists(0, 0, 5, Int(6));
    std::set<std::vector<Int>> got;
    for (const auto& s : sols) got.insert(s.values());
    for (const auto& s : got) CHECK(s[0] <= 6);
    CHECK(got.count(iv({6, 5, 1})));
}

TEST_CASE("valuation form agrees with the listed examples") {
    CHECK(check_valuations({Int(1), Int(2), Int(4)}, {Int(2), Int(4), Int(2)}));
    CHECK(!check_valuations({Int(1), Int(1), Int(4)}, {Int(2), Int(4), Int(2)}));
    CHECK(check_valuations({Int(1), Int(1), Int(1)}, {Int(5), Int(7), Int(9)}));
    CHECK(check_valuations({Int(3), Int(1), Int(1)}, {Int(0), Int(3), Int(2)}));
}

TEST_CASE("divisibility and valuation forms are equivalent") {
    for (long g12 = 1; g12 <= 4; ++g12)
        for (long g13 = 1; g13 <= 4; ++g13)
            for (long g23 = 1; g23 <= 4; ++g23) {
                auto sols = solve_twists(g12, g13, g23);
                std::set<std::vector<Int>> got;
                for (const auto& s : sols) got.insert(s.values());
                // filter the same divisor boxes through the p-adic conditions
                Int b1 = lcm(g12, g13), b2 = lcm(g12, g23), b3 = lcm(g13, g23);
                std::set<std::vector<Int>> filtered;
                for (const Int& x : positive_divisors(b1))
                    for (const Int& y : positive_divisors(b2))
                        for (const Int& z : positive_divisors(b3)) {
                            if (gcd(gcd(x, y), z) != 1) continue;
                            if (check_valuations({x, y, z},
                                                 {Int(g12), Int(g13), Int(g23)}))
                                filtered.insert({x, y, z});
                        }
                CHECK(got == filtered);
            }
}
