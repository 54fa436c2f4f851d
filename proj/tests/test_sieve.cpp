#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sqfpairs/sieve.hpp"

using namespace sqf;

TEST_CASE("is_squarefree oracle") {
    CHECK(!is_squarefree(50));
    CHECK(is_squarefree(37));
    CHECK(is_squarefree(1));
    CHECK(!is_squarefree(27));
    CHECK_THROWS_AS(is_squarefree(0), std::invalid_argument);
}

TEST_CASE("default_prime_bound is the minimal sound bound") {
    for (u64 hi : {1ull, 10ull, 100ull, 12345ull, 10000000ull}) {
        u64 b = default_prime_bound(hi);
        u128 target = static_cast<u128>(hi) * hi + 2;
        CHECK(static_cast<u128>(b) * b * b >= target);
        if (b > 1) CHECK(static_cast<u128>(b - 1) * (b - 1) * (b - 1) < target);
    }
}

TEST_CASE("sieve_flags hand-checked on [1,10]") {
    auto f = sieve_flags(1, 10, 10);
    for (u64 n = 1; n <= 10; ++n) {
        CHECK(f.flag(1, n) == (n != 7));            // 50 = 2 * 5^2
        CHECK(f.flag(2, n) == (n != 4 && n != 5));  // 18 = 2 * 3^2, 27 = 3^3
    }
}

TEST_CASE("sieve_flags on a single point") {
    auto f = sieve_flags(1, 1, 2);
    CHECK(f.flag(1, 1));
    CHECK(f.flag(2, 1));
}

TEST_CASE("sieve_flags rejects an unsound prime bound") {
    CHECK_THROWS_AS(sieve_flags(1, 100, 3), std::invalid_argument);
    CHECK_THROWS_AS(sieve_flags(5, 4, 100), std::invalid_argument);
    CHECK_THROWS_AS(sieve_flags(0, 4, 100), std::invalid_argument);
}

TEST_CASE("sieve agrees with the factorization oracle") {
    const u64 X = 20000;
    auto f = sieve_flags(1, X, default_prime_bound(X));
    for (u64 n = 1; n <= X; ++n) {
        CHECK(f.flag(1, n) == is_squarefree(static_cast<u128>(n) * n + 1));
        CHECK(f.flag(2, n) == is_squarefree(static_cast<u128>(n) * n + 2));
    }

    // Random spot checks further out.
    std::mt19937_64 rng(2024);
    auto g = sieve_flags(1, 100000, default_prime_bound(100000));
    for (int i = 0; i < 400; ++i) {
        u64 n = rng() % 100000 + 1;
        CHECK(g.flag(1, n) == is_squarefree(static_cast<u128>(n) * n + 1));
        CHECK(g.flag(2, n) == is_squarefree(static_cast<u128>(n) * n + 2));
    }
}

TEST_CASE("segment invariance") {
    const u64 X = 5000;
    u64 bound = default_prime_bound(X);
    auto whole = sieve_flags(1, X, bound);
    for (u64 m : {1ull, 999ull, 2500ull, 4999ull}) {
        auto left = sieve_flags(1, m, bound);
        auto right = sieve_flags(m + 1, X, bound);
        for (u64 n = 1; n <= X; ++n) {
            bool w1 = whole.flag(1, n), w2 = whole.flag(2, n);
            bool s1 = n <= m ? left.flag(1, n) : right.flag(1, n);
            bool s2 = n <= m ? left.flag(2, n) : right.flag(2, n);
            CHECK(w1 == s1);
            CHECK(w2 == s2);
        }
    }
}

TEST_CASE("mark count respects the progression cost bound") {
    const u64 lo = 1, hi = 200000;
    u64 bound = default_prime_bound(hi);
    auto f = sieve_flags(lo, hi, bound);
    long double len = static_cast<long double>(hi - lo + 1);
    long double cost = 0;
    for (u32 p : sieve_primes(static_cast<u32>(bound))) {
        if (p == 2) continue;
        for (int a : {1, 2}) {
            if (legendre(-a, p) == 1) {
                cost += 2.0L * len / (static_cast<long double>(p) * p) + 2.0L;
            }
        }
    }
    CHECK(static_cast<long double>(f.mark_count) <= cost);
    CHECK(f.mark_count > 0);
}

TEST_CASE("thread count does not change the result") {
    const u64 X = 3000000; // several segments
    u64 bound = default_prime_bound(X);
    auto serial = sieve_flags(1, X, bound, 1);
    auto parallel = sieve_flags(1, X, bound, 4);
    CHECK(serial.flags1 == parallel.flags1);
    CHECK(serial.flags2 == parallel.flags2);
    CHECK(serial.mark_count == parallel.mark_count);
}
