#include <catch2/catch_amalgamated.hpp>

#include "sqfpairs/singular_series.hpp"

using namespace sqf;

TEST_CASE("local factors") {
    CHECK(local_factor(3) == mpq_class(7, 9));
    CHECK(local_factor(5) == mpq_class(23, 25));
    CHECK(local_factor(7) == 1);
    CHECK_THROWS_AS(local_factor(2), std::invalid_argument);
}

TEST_CASE("local factor Legendre form equals root-count form") {
    for (u32 p : sieve_primes(10000)) {
        if (p == 2) continue;
        CHECK(local_factor(p) == local_factor_from_roots(p));
    }
}

TEST_CASE("sigma product small truncations") {
    CHECK(sigma_product_exact(3) == mpq_class(7, 9));
    CHECK(sigma_product_exact(5) == mpq_class(161, 225));
    CHECK(sigma_product(3).value == Catch::Approx(7.0 / 9).epsilon(1e-15));
    CHECK(sigma_product(5).value == Catch::Approx(161.0 / 225).epsilon(1e-15));

    // Extended-precision accumulation matches the exact rational at P = 1000.
    CHECK(sigma_product(1000).value == Catch::Approx(sigma_product_exact(1000).get_d()).epsilon(1e-14));
}

TEST_CASE("partial products stay in (0,1] and decrease") {
    double prev = 1.0;
    for (u64 P : {3ull, 10ull, 100ull, 1000ull, 10000ull, 100000ull}) {
        auto est = sigma_product(P);
        CHECK(est.plausible());
        CHECK(est.value <= prev + 1e-18);
        prev = est.value;
    }
}

TEST_CASE("product tail bound is honest") {
    auto fine = sigma_product(1000000);
    for (u64 P : {3ull, 10ull, 100ull, 10000ull}) {
        auto coarse = sigma_product(P);
        CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
    }
}

TEST_CASE("sigma sum small truncations") {
    auto one = sigma_sum(1);
    CHECK(one.value == Catch::Approx(1.0));

    // Dmax = 5 assembled by brute force: 1 - lambda(1,9)/9 - lambda(25,1)/25
    // (all other admissible pairs have mu = 0 or lambda = 0): 157/225.
    auto five = sigma_sum(5);
    CHECK(five.value == Catch::Approx(157.0 / 225).epsilon(1e-14));
}

TEST_CASE("sigma sum brute-force cross-check at Dmax = 30") {
    long double expect = 0;
    for (u64 d1 = 1; d1 <= 30; ++d1) {
        for (u64 d2 = 1; d1 * d2 <= 30; ++d2) {
            if (std::gcd(d1, d2) != 1) continue;
            int m1 = mobius(d1), m2 = mobius(d2);
            if (m1 == 0 || m2 == 0) continue;
            u64 lam = lambda_brute(d1 * d1, d2 * d2);
            expect += static_cast<long double>(m1 * m2) * lam /
                      (static_cast<long double>(d1) * d1 * d2 * d2);
        }
    }
    CHECK(sigma_sum(30).value == Catch::Approx(static_cast<double>(expect)).epsilon(1e-13));
}

TEST_CASE("two-method agreement within combined tails") {
    auto prod = sigma_product(100000);
    auto sum = sigma_sum(2000);
    auto cmp = compare_sigma(prod, sum);
    CHECK(cmp.consistent);
    CHECK(cmp.difference < 1e-3); // the real gap is far below the safe tails
    CHECK(prod.value > 0.6);
    CHECK(prod.value < 0.8);
    CHECK(sum.value > 0.6);
    CHECK(sum.value < 0.8);
}

TEST_CASE("comparison flags a corrupted estimate") {
    auto prod = sigma_product(100000);
    auto sum = sigma_sum(2000);
    sum.value += 10 * (prod.tail_bound + sum.tail_bound);
    CHECK(!compare_sigma(prod, sum).consistent);
}

TEST_CASE("sum tail bound is honest") {
    auto fine = sigma_sum(5000);
    for (u64 D : {1ull, 5ull, 50ull, 500ull}) {
        auto coarse = sigma_sum(D);
        CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
    }
}
