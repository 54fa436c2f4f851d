#pragma once
// Exact census Gamma(X) of n <= X with n^2+1 and n^2+2 both square-free, the
// threshold decomposition Gamma1 + Gamma2 (an identity for every admissible
// z), progression counts, and the comparison table against sigma*X.
//
// Two independent routes produce the same number: gamma_direct runs the
// segmented sieve; gamma_decomposed combines root-set/CRT progression counts
// for pair products d1*d2 <= z with a per-n factorization census of the
// square divisors above the threshold.

#include <cmath>
#include <cstdint>

#include "sqfpairs/quadroots.hpp"
#include "sqfpairs/sieve.hpp"
#include "sqfpairs/singular_series.hpp"

namespace sqf {

struct PairCensus {
    u64 X = 0;
    u64 gamma = 0;
    double sigma_x = 0;
    double abs_err = 0;
    double rel_err = 0;
};

struct DecompositionPlan {
    u64 X = 0;
    double z = 0;

    bool valid() const {
        return X >= 1 && z >= std::sqrt(static_cast<double>(X)) && z < static_cast<double>(X);
    }
};

struct Decomposition {
    i64 gamma1 = 0;      // signed mu-weighted part over d1 d2 <= z
    i64 gamma2 = 0;      // signed part over d1 d2 > z
    i64 total = 0;
    u64 pairs_below = 0; // pairs with nonzero count on each side
    u64 pairs_above = 0;
};

// #{m <= X : m == n (mod q)} for n in [1, q].
inline u64 count_in_progression(u64 X, u128 q, u128 n) {
    if (n == 0 || n > q) throw std::invalid_argument("count_in_progression: need 1 <= n <= q");
    if (n > X) return 0;
    return static_cast<u64>((X - static_cast<u64>(n)) / q) + 1;
}

// Sigma(X, d1^2, d2^2): exact count of n <= X with d1^2 | n^2+1 and
// d2^2 | n^2+2, assembled from the root sets by CRT.
inline u64 sigma_count(u64 X, u64 d1, u64 d2) {
    if (d1 == 0 || d2 == 0) throw std::invalid_argument("sigma_count: moduli must be positive");
    if (std::gcd(d1, d2) != 1) throw std::invalid_argument("sigma_count: d1, d2 must be coprime");
    RootSet r1 = roots_mod(1, d1 * d1);
    if (r1.roots.empty()) return 0;
    RootSet r2 = roots_mod(2, d2 * d2);
    if (r2.roots.empty()) return 0;
    u128 q1 = static_cast<u128>(d1) * d1, q2 = static_cast<u128>(d2) * d2;
    u128 q = q1 * q2;
    u64 total = 0;
    for (u64 a : r1.roots) {
        for (u64 b : r2.roots) {
            ResidueClass combined = crt(ResidueClass{a % q1, q1}, ResidueClass{b % q2, q2});
            u128 n0 = combined.residue == 0 ? q : combined.residue;
            total += count_in_progression(X, q, n0);
        }
    }
    return total;
}

// Exact Gamma(X) through the sieve.
inline PairCensus gamma_direct(u64 X, unsigned threads = 1) {
    if (X == 0 || X > 10000000) throw std::invalid_argument("gamma_direct: need 1 <= X <= 10^7");
    auto flags = sieve_flags(1, X, default_prime_bound(X), threads);
    u64 gamma = 0;
    for (u64 n = 1; n <= X; ++n) {
        if (flags.flag(1, n) && flags.flag(2, n)) ++gamma;
    }
    PairCensus c;
    c.X = X;
    c.gamma = gamma;
    c.sigma_x = sigma_default().value * static_cast<double>(X);
    c.abs_err = std::abs(static_cast<double>(gamma) - c.sigma_x);
    c.rel_err = c.abs_err / static_cast<double>(X);
    return c;
}

namespace detail {

// Square-free d with every prime factor admitting roots of n^2+a mod p^2:
// p == 1 (mod 4) for a = 1; p == 1 or 3 (mod 8) for a = 2 (and d odd).
struct AdmissibleTables {
    std::vector<signed char> mu;
    std::vector<bool> good1, good2;
};

inline AdmissibleTables admissible_tables(u64 limit) {
    AdmissibleTables t;
    t.mu.assign(limit + 1, 0);
    t.good1.assign(limit + 1, false);
    t.good2.assign(limit + 1, false);
    if (limit == 0) return t;
    auto spf = spf_table(static_cast<u32>(limit));
    t.mu[1] = 1;
    t.good1[1] = t.good2[1] = true;
    for (u64 d = 2; d <= limit; ++d) {
        u64 m = d;
        int k = 0;
        bool squarefree = true, g1 = true, g2 = true;
        while (m > 1) {
            u32 p = spf[m];
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e > 1) squarefree = false;
            ++k;
            if (p == 2 || p % 4 == 3) g1 = false;
            if (p == 2 || (p % 8 != 1 && p % 8 != 3)) g2 = false;
        }
        t.mu[d] = squarefree ? (k % 2 ? -1 : 1) : 0;
        t.good1[d] = squarefree && g1;
        t.good2[d] = squarefree && g2;
    }
    return t;
}

// Primes whose square divides n (the radical of the square-full part).
inline std::vector<u64> square_prime_support(u128 n) {
    std::vector<u64> out;
    for (const auto& [p, e] : factorize(n).factors) {
        if (e >= 2) out.push_back(static_cast<u64>(p));
    }
    return out;
}

} // namespace detail

// Gamma(X) = Gamma1 + Gamma2 split at d1*d2 <= z vs > z. The below-threshold
// side enumerates admissible coprime pairs and counts progressions through
// the root sets; the above-threshold side factorizes n^2+1 and n^2+2 for each
// n <= X and expands the mu-weighted square divisors directly, so the two
// sides cover every pair exactly once.
inline Decomposition gamma_decomposed(const DecompositionPlan& plan) {
    if (!plan.valid()) {
        throw std::invalid_argument("gamma_decomposed: z must satisfy sqrt(X) <= z < X");
    }
    if (plan.X > 1000000) throw std::invalid_argument("gamma_decomposed: X capped at 10^6");
    const u64 X = plan.X;
    const double z = plan.z;
    const u64 z_floor = static_cast<u64>(z);

    Decomposition out;

    // Gamma1: pairs with d1 * d2 <= z.
    auto tables = detail::admissible_tables(z_floor);
    std::map<u64, RootSet> cache1, cache2;
    auto roots1 = [&](u64 d) -> const RootSet& {
        auto it = cache1.find(d);
        if (it == cache1.end()) it = cache1.emplace(d, roots_mod(1, d * d)).first;
        return it->second;
    };
    auto roots2 = [&](u64 d) -> const RootSet& {
        auto it = cache2.find(d);
        if (it == cache2.end()) it = cache2.emplace(d, roots_mod(2, d * d)).first;
        return it->second;
    };
    for (u64 d1 = 1; static_cast<double>(d1) <= z; ++d1) {
        if (!tables.good1[d1]) continue;
        const RootSet& r1 = roots1(d1);
        if (r1.roots.empty()) continue;
        for (u64 d2 = 1; static_cast<double>(d1) * static_cast<double>(d2) <= z; ++d2) {
            if (!tables.good2[d2] || std::gcd(d1, d2) != 1) continue;
            const RootSet& r2 = roots2(d2);
            if (r2.roots.empty()) continue;
            u128 q1 = static_cast<u128>(d1) * d1, q2 = static_cast<u128>(d2) * d2;
            u128 q = q1 * q2;
            u64 count = 0;
            for (u64 a : r1.roots) {
                for (u64 b : r2.roots) {
                    ResidueClass combined = crt(ResidueClass{a % q1, q1}, ResidueClass{b % q2, q2});
                    u128 n0 = combined.residue == 0 ? q : combined.residue;
                    count += count_in_progression(X, q, n0);
                }
            }
            if (count == 0) continue;
            ++out.pairs_below;
            out.gamma1 += static_cast<i64>(tables.mu[d1]) * tables.mu[d2] * static_cast<i64>(count);
        }
    }

    // Gamma2: per-n square-divisor census above the threshold.
    for (u64 n = 1; n <= X; ++n) {
        auto s1 = detail::square_prime_support(static_cast<u128>(n) * n + 1);
        auto s2 = detail::square_prime_support(static_cast<u128>(n) * n + 2);
        if (s1.empty() && s2.empty()) continue; // only (1,1), below threshold
        const std::size_t k1 = s1.size(), k2 = s2.size();
        bool counted = false;
        for (std::size_t m1 = 0; m1 < (1u << k1); ++m1) {
            u64 d1 = 1;
            int sign1 = 1;
            for (std::size_t b = 0; b < k1; ++b) {
                if (m1 >> b & 1) {
                    d1 *= s1[b];
                    sign1 = -sign1;
                }
            }
            for (std::size_t m2 = 0; m2 < (1u << k2); ++m2) {
                u64 d2 = 1;
                int sign2 = 1;
                for (std::size_t b = 0; b < k2; ++b) {
                    if (m2 >> b & 1) {
                        d2 *= s2[b];
                        sign2 = -sign2;
                    }
                }
                if (static_cast<double>(d1) * static_cast<double>(d2) > z) {
                    out.gamma2 += sign1 * sign2;
                    counted = true;
                }
            }
        }
        if (counted) ++out.pairs_above;
    }

    out.total = out.gamma1 + out.gamma2;
    return out;
}

struct AsymptoticReport {
    std::vector<PairCensus> rows;
    double slope = 0;       // least-squares slope of log|err| vs log X
    bool slope_defined = false;
};

// Census table over ascending X values plus the fitted error-growth exponent.
// Rows with X < 100 or zero error are excluded from the fit (small-X noise).
inline AsymptoticReport asymptotic_report(const std::vector<u64>& xs, unsigned threads = 1) {
    AsymptoticReport report;
    u64 prev = 0;
    for (u64 x : xs) {
        if (x < prev) throw std::invalid_argument("asymptotic_report: xs must be ascending");
        prev = x;
        report.rows.push_back(gamma_direct(x, threads));
    }
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : report.rows) {
        if (r.X >= 100 && r.abs_err > 0) {
            pts.emplace_back(std::log(static_cast<double>(r.X)), std::log(r.abs_err));
        }
    }
    if (pts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double n = static_cast<double>(pts.size());
        report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        report.slope_defined = true;
    }
    return report;
}

} // namespace sqf
