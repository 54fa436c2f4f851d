#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sqfpairs/representation.hpp"

using namespace sqf;

TEST_CASE("representations") {
    auto r9 = representations(9);
    REQUIRE(r9.size() == 2);
    CHECK(r9[0].x == 1);
    CHECK(r9[0].y == 2);
    CHECK(r9[1].x == 1);
    CHECK(r9[1].y == -2);

    auto r3 = representations(3);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].y == 1);
    CHECK(r3[1].y == -1);

    CHECK(representations(4).empty());
    CHECK(representations(1).empty());
    CHECK_THROWS_AS(representations(0), std::invalid_argument);
}

TEST_CASE("representations are complete and valid") {
    for (u64 n = 1; n <= 500; ++n) {
        auto reps = representations(n);
        std::set<std::pair<u64, i64>> got;
        for (const auto& r : reps) {
            CHECK(r.valid());
            got.insert({r.x, r.y});
        }
        // Exhaustive double loop as the oracle.
        std::set<std::pair<u64, i64>> expect;
        for (u64 x = 1; x * x <= n; ++x) {
            for (i64 y = -static_cast<i64>(n); y <= static_cast<i64>(n); ++y) {
                if (y == 0) continue;
                if (x * x + 2 * static_cast<u64>(y * y) == n &&
                    std::gcd(x, static_cast<u64>(y < 0 ? -y : y)) == 1) {
                    expect.insert({x, y});
                }
            }
        }
        CHECK(got == expect);
    }
}

TEST_CASE("beta examples") {
    CHECK(beta({1, 2, 9}) == 5);
    CHECK(beta({1, -2, 9}) == 4);
    CHECK(beta({3, 1, 11}) == 3);
    CHECK_THROWS_AS(beta({2, 1, 9}), std::invalid_argument); // 4+2 != 9
}

TEST_CASE("beta lands on roots for every representation") {
    for (u64 n = 1; n <= 2000; ++n) {
        for (const auto& rep : representations(n)) {
            u64 z = beta(rep);
            CHECK((static_cast<u128>(z) * z + 2) % n == 0);
            CHECK(z >= 1);
            CHECK(z <= n);
        }
    }
}

TEST_CASE("dirichlet_approx examples") {
    auto a = dirichlet_approx(4, 9);
    CHECK(a.a == 1);
    CHECK(a.q == 2);
    auto b = dirichlet_approx(3, 11);
    CHECK(b.a == 1);
    CHECK(b.q == 3);
    auto c = dirichlet_approx(5, 9);
    CHECK(c.a == 1);
    CHECK(c.q == 2);
    CHECK_THROWS_AS(dirichlet_approx(1, 4), std::invalid_argument);
}

TEST_CASE("approximation invariants hold for every root up to 10^4") {
    for (u64 n = 5; n <= 10000; ++n) {
        for (u64 z : roots_mod(2, n).roots) {
            auto ap = dirichlet_approx(z, n);
            CHECK(ap.valid());
            CHECK(static_cast<u128>(ap.q) * ap.q <= n);
        }
    }
}

TEST_CASE("construct_preimage traces match the case analysis") {
    auto t1 = construct_preimage_traced(4, 9);
    CHECK(t1.case_id == 1);
    CHECK(t1.r == -1);
    CHECK(t1.rep.x == 1);
    CHECK(t1.rep.y == -2);

    auto t2 = construct_preimage_traced(3, 11);
    CHECK(t2.case_id == 2);
    CHECK(t2.r == -2);
    CHECK(t2.rep.x == 3);
    CHECK(t2.rep.y == 1);

    auto t3 = construct_preimage_traced(5, 9);
    CHECK(t3.case_id == 1);
    CHECK(t3.r == 1);
    CHECK(t3.rep.x == 1);
    CHECK(t3.rep.y == 2);

    CHECK_THROWS_AS(construct_preimage(1, 9), std::invalid_argument);  // not a root
    CHECK_THROWS_AS(construct_preimage(1, 3), std::invalid_argument);  // below the n >= 5 range
}

TEST_CASE("round trip and case dichotomy up to 2000") {
    u64 case2 = 0;
    for (u64 n = 5; n <= 2000; ++n) {
        for (u64 z : roots_mod(2, n).roots) {
            auto trace = construct_preimage_traced(z, n);
            CHECK(beta(trace.rep) == z);
            i128 s = static_cast<i128>(trace.r) * trace.r + 2 * static_cast<i128>(trace.q) * trace.q;
            if (trace.case_id == 1) {
                CHECK(s == static_cast<i128>(n));
            } else {
                CHECK(s == 2 * static_cast<i128>(n));
                CHECK(trace.r % 2 == 0);
                u64 r0 = static_cast<u64>(trace.r < 0 ? -trace.r : trace.r) / 2;
                CHECK(std::gcd(r0, trace.q) == 1);
                ++case2;
            }
        }
    }
    CHECK(case2 > 0); // n = 11 activates case 2
}

TEST_CASE("verify_surjectivity") {
    auto r = verify_surjectivity(1000);
    CHECK(r.failures.empty());
    CHECK(r.case2_count > 0);
    CHECK(r.n_checked == 996);
    CHECK(r.roots_checked > 0);
}

TEST_CASE("select_bijective_subset") {
    auto f9 = select_bijective_subset(9);
    REQUIRE(f9.size() == 2); // roots {4, 5} both needed
    CHECK(beta(f9[0]) != beta(f9[1]));

    auto f3 = select_bijective_subset(3); // below n >= 5 but well-defined
    REQUIRE(f3.size() == 2);
    CHECK(beta(f3[0]) == 1);
    CHECK(beta(f3[1]) == 2);

    CHECK(select_bijective_subset(4).empty()); // z^2+2 == 0 (mod 4) impossible
    CHECK_THROWS_AS(select_bijective_subset(2), std::invalid_argument);

    // Restriction of beta to F0 is a bijection onto the root set.
    for (u64 n = 5; n <= 2000; ++n) {
        auto f0 = select_bijective_subset(n);
        std::set<u64> image;
        for (const auto& rep : f0) image.insert(beta(rep));
        auto roots = roots_mod(2, n).roots;
        CHECK(image.size() == f0.size());
        CHECK(std::equal(image.begin(), image.end(), roots.begin(), roots.end()));
    }
}
