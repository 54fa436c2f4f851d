#pragma once
// Root sets of n^2 + a == 0 (mod q) for a in {1,2}, built from factorization,
// Tonelli-Shanks, iterated Hensel lifting and CRT recombination, plus the
// local counting function lambda(q1,q2) and its multiplicativity checks.
//
// Roots use the range convention [1, q]: the residue 0 is reported as q, and
// q = 1 yields the single root {1} (empty congruence).

#include <cstdint>
#include <map>
#include <tuple>

#include "sqfpairs/modmath.hpp"

namespace sqf {

struct RootSet {
    int a = 1;              // polynomial constant: n^2 + a
    u64 modulus = 1;
    std::vector<u64> roots; // ascending, in [1, modulus]

    bool valid() const {
        u64 prev = 0;
        for (u64 r : roots) {
            if (r <= prev || r > modulus) return false;
            prev = r;
            if ((static_cast<u128>(r) * r + static_cast<u128>(a)) % modulus != 0) return false;
        }
        return true;
    }
};

namespace detail {

// Roots of n^2 + a == 0 (mod p^k) as residues in [0, p^k), for odd prime p.
// Tonelli-Shanks at level 1, then one Newton step per additional power.
inline std::vector<u64> prime_power_roots(int a, u64 p, unsigned k) {
    std::vector<u64> base = sqrt_mod_p(-a, p);
    if (base.empty()) return {};
    u64 pk = p;
    for (unsigned level = 1; level < k; ++level) {
        u64 pk_next = pk * p;
        for (u64& s : base) {
            // s' = s - f(s) * inv(2s) mod p^{k+1}
            u128 f = (static_cast<u128>(s) * s + static_cast<u128>(a)) % pk_next;
            u64 fp = static_cast<u64>((f / pk) % p);
            u64 t = mulmod(fp, mod_inv(static_cast<i64>(mulmod(2 % p, s % p, p)), p), p);
            u128 correction = static_cast<u128>(t) * pk % pk_next;
            s = static_cast<u64>((static_cast<u128>(s) + pk_next - correction) % pk_next);
        }
        pk = pk_next;
    }
    std::sort(base.begin(), base.end());
    return base;
}

// p = 2 case table: n^2+1 is odd root 1 mod 2, never 0 mod 4; n^2+2 is even
// root 0 mod 2, never 0 mod 4.
inline std::vector<u64> two_power_roots(int a, unsigned k) {
    if (k >= 2) return {};
    return a == 1 ? std::vector<u64>{1} : std::vector<u64>{0};
}

} // namespace detail

// Complete ascending list of solutions of n^2 + a == 0 (mod q) in [1, q].
inline RootSet roots_mod(int a, u64 q) {
    if (a != 1 && a != 2) throw std::invalid_argument("roots_mod: a must be 1 or 2");
    if (q == 0) throw std::invalid_argument("roots_mod: q must be >= 1");
    if (q > 1000000000000ull) throw std::invalid_argument("roots_mod: q exceeds the 10^12 bound");
    RootSet out{a, q, {}};
    if (q == 1) {
        out.roots = {1};
        return out;
    }
    Factorization f = factorize(q);
    std::vector<ResidueClass> combined{{0, 1}};
    for (const auto& [p128, e] : f.factors) {
        u64 p = static_cast<u64>(p128);
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) pk *= p;
        std::vector<u64> local = (p == 2) ? detail::two_power_roots(a, e)
                                          : detail::prime_power_roots(a, p, e);
        if (local.empty()) return out;
        std::vector<ResidueClass> next;
        next.reserve(combined.size() * local.size());
        for (const auto& rc : combined) {
            for (u64 r : local) {
                next.push_back(crt(rc, ResidueClass{r, pk}));
            }
        }
        combined = std::move(next);
    }
    out.roots.reserve(combined.size());
    for (const auto& rc : combined) {
        u64 r = static_cast<u64>(rc.residue);
        out.roots.push_back(r == 0 ? q : r); // range convention [1, q]
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

struct LocalCount {
    u64 q1 = 1;
    u64 q2 = 1;
    u64 value = 0;
};

// Brute-force lambda: count n in [1, q1*q2] with q1 | n^2+1 and q2 | n^2+2.
inline u64 lambda_brute(u64 q1, u64 q2) {
    u128 span = static_cast<u128>(q1) * q2;
    if (span > 1000000u * 1000000u) throw std::invalid_argument("lambda_brute: range too large");
    u64 count = 0;
    for (u64 n = 1; n <= static_cast<u64>(span); ++n) {
        if ((static_cast<u128>(n) * n + 1) % q1 == 0 && (static_cast<u128>(n) * n + 2) % q2 == 0) ++count;
    }
    return count;
}

// lambda(q1,q2): CRT counting for coprime moduli (the only case the theory
// uses); non-coprime inputs fall back to brute force below 10^6.
inline LocalCount lambda_count(u64 q1, u64 q2) {
    if (q1 == 0 || q2 == 0) throw std::invalid_argument("lambda_count: moduli must be positive");
    if (std::gcd(q1, q2) == 1) {
        u64 c1 = static_cast<u64>(roots_mod(1, q1).roots.size());
        u64 c2 = static_cast<u64>(roots_mod(2, q2).roots.size());
        return LocalCount{q1, q2, c1 * c2};
    }
    if (static_cast<u128>(q1) * q2 > 1000000) {
        throw std::invalid_argument("lambda_count: non-coprime moduli above the brute-force bound");
    }
    return LocalCount{q1, q2, lambda_brute(q1, q2)};
}

struct MultiplicativityReport {
    u64 tuples_checked = 0;
    // (q1, q2, q3, q4, lambda(q1q2,q3q4), lambda(q1,q3)*lambda(q2,q4))
    std::vector<std::array<u64, 6>> violations;
};

// Exhaustive check of lambda(q1 q2, q3 q4) = lambda(q1,q3) lambda(q2,q4) over
// all tuples with (q1q2,q3q4) = (q1,q2) = (q3,q4) = 1 and q1q2q3q4 <= bound,
// every count recomputed by brute force.
inline MultiplicativityReport verify_multiplicativity(u64 bound) {
    MultiplicativityReport report;
    for (u64 q1 = 1; q1 <= bound; ++q1) {
        for (u64 q2 = 1; q1 * q2 <= bound; ++q2) {
            if (std::gcd(q1, q2) != 1) continue;
            for (u64 q3 = 1; q1 * q2 * q3 <= bound; ++q3) {
                for (u64 q4 = 1; q1 * q2 * q3 * q4 <= bound; ++q4) {
                    if (std::gcd(q3, q4) != 1) continue;
                    if (std::gcd(q1 * q2, q3 * q4) != 1) continue;
                    u64 lhs = lambda_brute(q1 * q2, q3 * q4);
                    u64 rhs = lambda_brute(q1, q3) * lambda_brute(q2, q4);
                    ++report.tuples_checked;
                    if (lhs != rhs) report.violations.push_back({q1, q2, q3, q4, lhs, rhs});
                }
            }
        }
    }
    return report;
}

struct RootCountLawReport {
    u64 qualifying_checked = 0;
    std::vector<u64> violations;     // qualifying d where the 2^omega law failed
    std::vector<u64> law_breaks;     // non-qualifying square-free d where the bare formula fails
};

// The 2^omega(d) count law for N1(d) and N1'(d). It holds for odd square-free
// d whose prime factors are all 1 mod 4; law_breaks records the square-free d
// outside that set for which the unconditioned formula would be wrong.
inline RootCountLawReport root_count_law(u64 dmax) {
    RootCountLawReport report;
    for (u64 d = 1; d <= dmax; ++d) {
        Factorization f = factorize(d);
        bool squarefree = true, qualifying = true;
        for (const auto& [p, e] : f.factors) {
            if (e >= 2) squarefree = false;
            if (p == 2 || (p % 4) == 3) qualifying = false;
        }
        if (!squarefree) continue;
        u64 expected = 1ull << f.factors.size();
        u64 c1 = static_cast<u64>(roots_mod(1, d).roots.size());
        u64 c2 = static_cast<u64>(roots_mod(1, d * d).roots.size());
        if (qualifying) {
            ++report.qualifying_checked;
            if (c1 != expected || c2 != expected) report.violations.push_back(d);
        } else if (c1 != expected || c2 != expected) {
            report.law_breaks.push_back(d);
        }
    }
    return report;
}

} // namespace sqf
