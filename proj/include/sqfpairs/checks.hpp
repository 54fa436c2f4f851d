#pragma once
// Named end-to-end verification checks shared by the CLI verify-all command
// and the acceptance suite. Each check runs one numbered criterion at either
// smoke scale (seconds) or desk scale (the full stated bounds) and reports a
// single pass/fail with a short detail string.

#include <chrono>
#include <sstream>

#include "sqfpairs/expsum.hpp"
#include "sqfpairs/gamma_census.hpp"

namespace sqf {

enum class Scale { smoke, desk };

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace checks {

// Frozen regression value for sigma_product(10^6), fixed after the first
// verified run and cross-checked against an independent evaluation.
inline constexpr double kSigmaProductReference = 0.671876327683496;

inline CheckResult small_census(Scale) {
    CheckResult r{1, "small census Gamma(10)=7, Gamma(4)=3, Gamma(1)=1", false, "", 0};
    bool ok = gamma_direct(10).gamma == 7 && gamma_direct(4).gamma == 3 && gamma_direct(1).gamma == 1;
    auto flags = sieve_flags(1, 10, default_prime_bound(10));
    std::vector<u64> fail_positions;
    for (u64 n = 1; n <= 10; ++n) {
        if (!(flags.flag(1, n) && flags.flag(2, n))) fail_positions.push_back(n);
    }
    ok = ok && fail_positions == std::vector<u64>{4, 5, 7};
    r.passed = ok;
    std::ostringstream os;
    os << "failure positions at X=10:";
    for (u64 n : fail_positions) os << ' ' << n;
    r.detail = os.str();
    return r;
}

inline CheckResult decomposition_identity(Scale scale) {
    CheckResult r{2, "decomposition Gamma1+Gamma2 equals the direct census", false, "", 0};
    std::vector<u64> xs = scale == Scale::desk ? std::vector<u64>{100, 1000, 10000}
                                               : std::vector<u64>{100, 1000};
    std::ostringstream os;
    bool ok = true;
    for (u64 X : xs) {
        i64 expect = static_cast<i64>(gamma_direct(X).gamma);
        double sq = std::sqrt(static_cast<double>(X));
        double z89 = std::pow(static_cast<double>(X), 8.0 / 9.0);
        std::vector<double> zs{sq, z89, 0.35 * X, 0.7 * X, static_cast<double>(X) - 1};
        if (scale == Scale::smoke) zs = {sq, z89, static_cast<double>(X) - 1};
        for (double z : zs) {
            auto dec = gamma_decomposed(DecompositionPlan{X, z});
            if (dec.total != expect) {
                ok = false;
                os << " MISMATCH X=" << X << " z=" << z << " got " << dec.total
                   << " want " << expect << ';';
            }
        }
        os << " X=" << X << " ok(" << zs.size() << " z);";
    }
    r.passed = ok;
    r.detail = os.str();
    return r;
}

inline CheckResult sigma_two_method(Scale scale) {
    CheckResult r{3, "sigma via Euler product and via lambda double sum agree", false, "", 0};
    auto prod = sigma_product(scale == Scale::desk ? 1000000 : 100000);
    auto sum = sigma_sum(scale == Scale::desk ? 10000 : 2000);
    auto cmp = compare_sigma(prod, sum);
    bool in_range = prod.value > 0.6 && prod.value < 0.8 && sum.value > 0.6 && sum.value < 0.8;
    bool regression = scale != Scale::desk ||
                      std::abs(prod.value - kSigmaProductReference) <= 1e-9;
    r.passed = cmp.consistent && in_range && regression;
    std::ostringstream os;
    os.precision(15);
    os << "product=" << prod.value << " sum=" << sum.value << " |diff|=" << cmp.difference
       << " allowance=" << cmp.allowance << (regression ? "" : " REGRESSION-MISMATCH");
    r.detail = os.str();
    return r;
}

inline CheckResult asymptotic_tracking(Scale scale) {
    CheckResult r{4, "rel_err of Gamma(X) vs sigma X decreases; error slope <= 1", false, "", 0};
    std::vector<u64> xs = scale == Scale::desk
                              ? std::vector<u64>{1000, 10000, 100000, 1000000}
                              : std::vector<u64>{1000, 10000, 100000};
    auto rep = asymptotic_report(xs, std::thread::hardware_concurrency());
    bool decreasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        if (rep.rows[i].rel_err >= rep.rows[i - 1].rel_err) decreasing = false;
    }
    bool final_small = rep.rows.back().rel_err <= 0.01;
    bool slope_ok = !rep.slope_defined || rep.slope <= 1.0;
    r.passed = decreasing && final_small && slope_ok;
    std::ostringstream os;
    os.precision(6);
    os << "rel_err:";
    for (const auto& row : rep.rows) os << ' ' << row.rel_err;
    os << " slope=" << rep.slope;
    r.detail = os.str();
    return r;
}

inline CheckResult surjectivity(Scale scale) {
    CheckResult r{5, "every root of z^2+2 (mod n) has an explicit preimage", false, "", 0};
    auto report = verify_surjectivity(scale == Scale::desk ? 10000 : 500);
    r.passed = report.failures.empty() && report.case2_count > 0;
    std::ostringstream os;
    os << "n checked=" << report.n_checked << " roots=" << report.roots_checked
       << " case2=" << report.case2_count << " failures=" << report.failures.size();
    r.detail = os.str();
    return r;
}

inline CheckResult reciprocity_exhaustive(Scale scale) {
    CheckResult r{6, "modular-inverse reciprocity exact for all coprime pairs", false, "", 0};
    const i64 bound = scale == Scale::desk ? 300 : 60;
    u64 checked = 0, failed = 0;
    for (i64 a = 1; a <= bound; ++a) {
        for (i64 b = 1; b <= bound; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (i64 sa : {1, -1}) {
                for (i64 sb : {1, -1}) {
                    ++checked;
                    if (!reciprocity_check(sa * a, sb * b)) ++failed;
                }
            }
        }
    }
    r.passed = failed == 0;
    std::ostringstream os;
    os << "pairs checked=" << checked << " (|A|,|B| <= " << bound << ", all signs), failures=" << failed;
    r.detail = os.str();
    return r;
}

inline CheckResult theta_transform(Scale scale) {
    CheckResult r{7, "Theta_m via representations equals the direct root sum", false, "", 0};
    const int count = scale == Scale::desk ? 50 : 8;
    std::mt19937_64 rng(0x5eed5eedULL);
    double worst = 0;
    for (int i = 0; i < count; ++i) {
        ThetaSpec spec;
        spec.D2 = 0.5 + static_cast<double>(rng() % 399) / 2.0; // <= 200
        spec.m = static_cast<i64>(1 + rng() % 20);
        if (rng() & 1) spec.m = -spec.m;
        spec.X = 1.0 + static_cast<double>(rng() % 9999);
        worst = std::max(worst, std::abs(theta_direct(spec) - theta_via_reps(spec)));
    }
    r.passed = worst <= 1e-9;
    std::ostringstream os;
    os.precision(3);
    os << count << " seeded specs, max |difference| = " << worst;
    r.detail = os.str();
    return r;
}

inline CheckResult prehod_identity(Scale scale) {
    CheckResult r{8, "sawtooth transfer identity exact for every admissible d1", false, "", 0};
    std::vector<u64> xs = scale == Scale::desk ? std::vector<u64>{100, 400, 10000}
                                               : std::vector<u64>{100};
    bool examples_ok = prehod_check(13, 100).equal && prehod_check(13, 100).lhs == mpq_class(-138, 169) &&
                       prehod_check(17, 100).equal && prehod_check(17, 100).lhs == mpq_class(-89, 289);
    u64 checked = 0;
    std::vector<std::pair<u64, u64>> failures;
    for (u64 X : xs) {
        u64 sX = static_cast<u64>(*exact_sqrt(X));
        for (u64 d1 = sX + 1; d1 <= 3 * sX; ++d1) {
            if (mobius(d1) == 0) continue;
            if (roots_mod(1, d1).roots.empty()) continue;
            ++checked;
            if (!prehod_check(d1, X).equal) failures.emplace_back(X, d1);
        }
    }
    r.passed = examples_ok && failures.empty();
    std::ostringstream os;
    os << "d13/d17 examples " << (examples_ok ? "ok" : "FAIL") << "; " << checked
       << " (X,d1) pairs, " << failures.size() << " inequalities";
    if (!failures.empty()) {
        os << " (first:";
        for (std::size_t i = 0; i < failures.size() && i < 4; ++i) {
            os << " X=" << failures[i].first << ",d1=" << failures[i].second;
        }
        os << "); the transfer drops one unit per root crossing the range bound";
    }
    r.detail = os.str();
    return r;
}

inline CheckResult weil_bound(Scale scale) {
    CheckResult r{9, "incomplete Kloosterman sums stay within the Weil-type ratio", false, "", 0};
    auto study = scale == Scale::desk ? weil_ratio_study(5000, 10000, 0xC0FFEE)
                                      : weil_ratio_study(500, 1000, 0xC0FFEE);
    double ram1 = ramanujan_max_deviation(scale == Scale::desk ? 500 : 100, 1);
    double ram7 = ramanujan_max_deviation(scale == Scale::desk ? 500 : 100, 7);
    r.passed = study.max_ratio <= 10.0 && ram1 <= 1e-9 && ram7 <= 1e-9;
    std::ostringstream os;
    os.precision(4);
    os << study.samples << " samples, max |K|/(r^0.6 gcd^0.5) = " << study.max_ratio
       << "; full-period deviation from mu(r): " << std::max(ram1, ram7);
    r.detail = os.str();
    return r;
}

inline CheckResult root_law(Scale scale) {
    CheckResult r{10, "2^omega root-count law and sieve/oracle equivalence", false, "", 0};
    auto report = root_count_law(scale == Scale::desk ? 10000 : 500);
    const u64 n_max = scale == Scale::desk ? 100000 : 2000;
    auto flags = sieve_flags(1, n_max, default_prime_bound(n_max), std::thread::hardware_concurrency());
    u64 mismatches = 0;
    for (u64 n = 1; n <= n_max; ++n) {
        if (flags.flag(1, n) != is_squarefree(static_cast<u128>(n) * n + 1)) ++mismatches;
        if (flags.flag(2, n) != is_squarefree(static_cast<u128>(n) * n + 2)) ++mismatches;
    }
    r.passed = report.violations.empty() && mismatches == 0;
    std::ostringstream os;
    os << "qualifying d checked=" << report.qualifying_checked
       << " law violations=" << report.violations.size()
       << "; sieve/oracle mismatches over n<=" << n_max << ": " << mismatches;
    r.detail = os.str();
    return r;
}

inline CheckResult lambda_multiplicativity(Scale) {
    CheckResult r{11, "lambda is multiplicative on admissible tuples", false, "", 0};
    auto report = verify_multiplicativity(200);
    r.passed = report.violations.empty();
    std::ostringstream os;
    os << "tuples checked=" << report.tuples_checked << " violations=" << report.violations.size();
    r.detail = os.str();
    return r;
}

} // namespace checks

inline CheckResult run_check(int id, Scale scale) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    switch (id) {
        case 1: r = checks::small_census(scale); break;
        case 2: r = checks::decomposition_identity(scale); break;
        case 3: r = checks::sigma_two_method(scale); break;
        case 4: r = checks::asymptotic_tracking(scale); break;
        case 5: r = checks::surjectivity(scale); break;
        case 6: r = checks::reciprocity_exhaustive(scale); break;
        case 7: r = checks::theta_transform(scale); break;
        case 8: r = checks::prehod_identity(scale); break;
        case 9: r = checks::weil_bound(scale); break;
        case 10: r = checks::root_law(scale); break;
        case 11: r = checks::lambda_multiplicativity(scale); break;
        default: throw std::invalid_argument("run_check: criterion id must be 1..11");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline std::vector<CheckResult> run_all_checks(Scale scale) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_check(id, scale));
    return out;
}

} // namespace sqf
