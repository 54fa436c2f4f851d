#include <catch2/catch_amalgamated.hpp>

#include "sqfpairs/expsum.hpp"

using namespace sqf;

TEST_CASE("phase and psi basics") {
    CHECK(Phase::at(0.3).valid());
    CHECK(std::abs(Phase::at(1.25).value - std::complex<double>(0, 1)) < 1e-12);

    CHECK(psi(0.25) == Catch::Approx(-0.25));
    CHECK(psi(0.5) == Catch::Approx(0.0));
    CHECK(psi(-151.0 / 289.0) == Catch::Approx(-13.0 / 578).epsilon(1e-12));
    CHECK(psi_exact(mpq_class(-151, 289)) == mpq_class(-13, 578));
    CHECK(psi(1.75) == Catch::Approx(0.25));
}

TEST_CASE("psi_truncated") {
    for (u64 M : {2ull, 17ull, 256ull}) {
        CHECK(psi_truncated(0.5, M) == Catch::Approx(0.0).margin(1e-12));
    }
    CHECK(psi_truncated(0.25, 100) == Catch::Approx(-0.25).margin(0.01));
    CHECK_THROWS_AS(psi_truncated(0.3, 1), std::invalid_argument);
}

TEST_CASE("psi truncation error shrinks as M doubles") {
    std::vector<u64> Ms;
    for (u64 M = 32; M <= 4096; M *= 2) Ms.push_back(M);
    auto rows = psi_truncation_study(Ms, 10000, 20240817);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].mean_abs_err < rows[i - 1].mean_abs_err);
    }
    // Scale check at M = 1000: mean error below 5 log(M)/M.
    auto row = psi_truncation_study({1000}, 10000, 7)[0];
    CHECK(row.mean_abs_err <= 5.0 * std::log(1000.0) / 1000.0);
}

TEST_CASE("reciprocity examples") {
    CHECK(reciprocity_check(3, 5));
    CHECK(reciprocity_check(1, 7));
    CHECK(reciprocity_check(-3, 5));
    CHECK(reciprocity_check(1, 1));
    CHECK_THROWS_AS(reciprocity_check(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(reciprocity_check(6, 10), std::invalid_argument);
}

TEST_CASE("reciprocity exhaustive to 100") {
    for (i64 a = 1; a <= 100; ++a) {
        for (i64 b = 1; b <= 100; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(reciprocity_check(a, b));
            CHECK(reciprocity_check(-a, b));
            CHECK(reciprocity_check(a, -b));
            CHECK(reciprocity_check(-a, -b));
        }
    }
}

TEST_CASE("kloosterman_incomplete examples") {
    auto full = kloosterman_incomplete(5, 1, 1, 5);
    CHECK(std::abs(full - std::complex<double>(-1, 0)) < 1e-12);

    auto partial = kloosterman_incomplete(5, 1, 1, 2);
    auto expect = e_phase(1.0 / 5) + e_phase(3.0 / 5);
    CHECK(std::abs(partial - expect) < 1e-12);

    auto even = kloosterman_incomplete(4, 2, 1, 4);
    CHECK(std::abs(even - std::complex<double>(-2, 0)) < 1e-12);

    CHECK_THROWS_AS(kloosterman_incomplete(0, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(kloosterman_incomplete(KloostermanSpec{5, 1, 0, 11}), std::invalid_argument);
}

TEST_CASE("full-period sums are Ramanujan sums") {
    CHECK(ramanujan_max_deviation(200, 1) < 1e-9);
    CHECK(ramanujan_max_deviation(200, 7) < 1e-9);
}

TEST_CASE("weil ratio study stays bounded") {
    auto study = weil_ratio_study(500, 2000, 42);
    CHECK(study.samples == 2000);
    CHECK(study.max_ratio > 0);
    CHECK(study.max_ratio <= 10.0);
}

TEST_CASE("k_vm") {
    // 2 v^2 >= D2 clamps eta1 to 0.
    CHECK(eta1(5, 25.0) == 0.0);
    CHECK(eta2(5, 25.0) == 0.0);
    auto empty = k_vm(5, 1, 0.0, 25.0);
    CHECK(std::abs(empty) < 1e-12);

    CHECK_THROWS_AS(k_vm(5, 1, 10.0, 25.0), std::invalid_argument);
    CHECK_THROWS_AS(k_vm(0, 1, 0.0, 25.0), std::invalid_argument);

    // Matches direct summation on random parameter draws.
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        i64 v = static_cast<i64>(2 + rng() % 40);
        if (rng() & 1) v = -v;
        i64 m = static_cast<i64>(1 + rng() % 10);
        double D2 = 1.0 + static_cast<double>(rng() % 2000) / 2.0;
        double lo = eta1(v, D2), hi = eta2(v, D2);
        if (hi < lo) continue; // |v| outside [sqrt(D2/3), sqrt(D2)): empty u-range
        double t = lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto got = k_vm(v, m, t, D2);
        std::complex<double> expect{0, 0};
        u64 va = static_cast<u64>(v < 0 ? -v : v);
        for (i64 u = static_cast<i64>(std::ceil(lo)); u <= static_cast<i64>(std::floor(t)); ++u) {
            if (std::gcd(static_cast<u64>(u), va) != 1) continue;
            u64 ub = mod_inv(u, va);
            double ph = static_cast<double>(static_cast<u64>((static_cast<i128>(m) * ub % va + va) % va)) /
                        static_cast<double>(va);
            expect += e_phase(v > 0 ? ph : -ph);
        }
        CHECK(std::abs(got - expect) < 1e-9);
    }
}

TEST_CASE("theta_direct") {
    // D2 = 1: single term d = 1, N2(1) = {1}, theta = e(sqrt(X)).
    for (double X : {2.0, 100.0, 1234.5}) {
        auto t = theta_direct(ThetaSpec{1.0, 1, X});
        CHECK(std::abs(t - e_phase(std::sqrt(X))) < 1e-9);
    }

    // Independent brute-force enumeration oracle at D2 = 9, m = 1, X = 100.
    ThetaSpec spec{9.0, 1, 100.0};
    std::complex<double> expect{0, 0};
    for (u64 d = 9; d < 18; ++d) {
        for (u64 n = 1; n <= d; ++n) {
            if ((n * n + 2) % d == 0) {
                expect += e_phase(10.0 / static_cast<double>(d) -
                                  static_cast<double>(n) / static_cast<double>(d));
            }
        }
    }
    CHECK(std::abs(theta_direct(spec) - expect) < 1e-9);

    // Conjugate symmetry under m -> -m.
    auto plus = theta_direct(ThetaSpec{17.0, 3, 500.0});
    auto minus = theta_direct(ThetaSpec{17.0, -3, 500.0});
    CHECK(std::abs(minus - std::conj(plus)) < 1e-12);

    CHECK_THROWS_AS(theta_direct(ThetaSpec{0.4, 1, 100.0}), std::invalid_argument);
}

TEST_CASE("theta transform identity") {
    CHECK(std::abs(theta_via_reps(ThetaSpec{10.0, 1, 100.0}) -
                   theta_direct(ThetaSpec{10.0, 1, 100.0})) < 1e-9);
    CHECK(std::abs(theta_via_reps(ThetaSpec{1.0, 2, 77.0}) -
                   theta_direct(ThetaSpec{1.0, 2, 77.0})) < 1e-9);
    CHECK(std::abs(theta_via_reps(ThetaSpec{2.0, 5, 300.0}) -
                   theta_direct(ThetaSpec{2.0, 5, 300.0})) < 1e-9);

    std::mt19937_64 rng(20250811);
    for (int i = 0; i < 12; ++i) {
        ThetaSpec spec;
        spec.D2 = 0.5 + static_cast<double>(rng() % 399) / 2.0;
        spec.m = static_cast<i64>(1 + rng() % 20);
        if (rng() & 1) spec.m = -spec.m;
        spec.X = 1.0 + static_cast<double>(rng() % 9999);
        auto a = theta_direct(spec);
        auto b = theta_via_reps(spec);
        INFO("D2=" << spec.D2 << " m=" << spec.m << " X=" << spec.X);
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("sawtooth transfer identity, passing cases") {
    auto r13 = prehod_check(13, 100);
    CHECK(r13.equal);
    CHECK(r13.lhs == mpq_class(-138, 169));
    auto r17 = prehod_check(17, 100);
    CHECK(r17.equal);
    CHECK(r17.lhs == mpq_class(-89, 289));

    auto empty = prehod_check(19, 100); // 19 == 3 (mod 4): no roots at all
    CHECK(empty.equal);
    CHECK(empty.lhs == 0);

    CHECK_THROWS_AS(prehod_check(9, 100), std::invalid_argument);
    CHECK_THROWS_AS(prehod_check(13, 101), std::invalid_argument);
}

TEST_CASE("sawtooth transfer equality holds exactly when boundary counts match") {
    // The chain drops an integer per root crossing X (left side) or sqrt(X)
    // (right side); d1 = 29 at X = 100 is the smallest odd mismatch.
    auto r29 = prehod_check(29, 100);
    CHECK(!r29.equal);
    CHECK(r29.lhs - r29.rhs == -1);
    auto d29 = prehod_boundary_defect(29, 100);
    CHECK(d29.above_X == 1);
    CHECK(d29.above_sqrtX == 2);

    for (u64 X : {100ull, 400ull}) {
        u64 sX = static_cast<u64>(*exact_sqrt(X));
        for (u64 d1 = sX + 1; d1 <= 3 * sX; ++d1) {
            if (mobius(d1) == 0) continue;
            if (roots_mod(1, d1).roots.empty()) continue;
            auto res = prehod_check(d1, X);
            auto defect = prehod_boundary_defect(d1, X);
            INFO("X=" << X << " d1=" << d1);
            if (defect.above_X == defect.above_sqrtX &&
                roots_mod(1, d1 * d1).roots.size() == roots_mod(1, d1).roots.size()) {
                CHECK(res.equal);
            } else {
                CHECK(!res.equal);
            }
        }
    }
}

TEST_CASE("float-mode transfer check") {
    auto r = prehod_check_float(13, 100.0);
    CHECK(r.equal);
    CHECK(r.lhs == Catch::Approx(-138.0 / 169).epsilon(1e-9));
}

TEST_CASE("psi_sum_over_roots") {
    // d in {3, 4}: no roots of n^2+1 at all.
    CHECK(psi_sum_over_roots(1, 2.1, 50.0) == 0.0);

    // Cross-check against term-by-term enumeration at (a=1, D=13, X=100).
    double expect = 0;
    for (u64 d = 13; d < 26; ++d) {
        for (u64 n = 1; n <= d; ++n) {
            if ((n * n + 1) % d == 0) {
                expect += psi((10.0 - static_cast<double>(n)) / static_cast<double>(d));
            }
        }
    }
    CHECK(psi_sum_over_roots(1, 13.0, 100.0) == Catch::Approx(expect).margin(1e-12));

    auto rows = psi_sum_study(2, {100.0, 200.0, 400.0}, 10000.0);
    CHECK(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.ratio >= 0);
}
