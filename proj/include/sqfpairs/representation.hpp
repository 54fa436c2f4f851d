#pragma once
// The surjection between representations x^2 + 2y^2 = n with (x,y) = 1 and
// the roots of z^2 + 2 == 0 (mod n): enumeration of representations, the map
// beta (z y == x mod n), and an explicit preimage construction for any root
// via continued-fraction Dirichlet approximation with a two-case analysis on
// r = z q - a n (r^2 + 2q^2 equals n or 2n). Surjectivity is verifiable
// exhaustively; a canonical bijective subset supports the exponential-sum
// transform.

#include <cstdint>
#include <map>

#include "sqfpairs/quadroots.hpp"

namespace sqf {

struct Representation {
    u64 x = 0; // positive
    i64 y = 0; // nonzero
    u64 n = 0;

    bool valid() const {
        return x >= 1 && y != 0 &&
               static_cast<u128>(x) * x + 2 * static_cast<u128>(y < 0 ? -y : y) * static_cast<u128>(y < 0 ? -y : y) == n &&
               std::gcd(x, static_cast<u64>(y < 0 ? -y : y)) == 1;
    }
};

// Enumeration order (x, |y|, sign) with positive y before negative.
inline bool representation_less(const Representation& a, const Representation& b) {
    u64 ay = static_cast<u64>(a.y < 0 ? -a.y : a.y), by = static_cast<u64>(b.y < 0 ? -b.y : b.y);
    int as = a.y > 0 ? 0 : 1, bs = b.y > 0 ? 0 : 1;
    return std::tie(a.x, ay, as) < std::tie(b.x, by, bs);
}

// All (x, y) with x^2 + 2y^2 = n, x >= 1, y != 0, gcd(x, y) = 1.
inline std::vector<Representation> representations(u64 n) {
    if (n == 0) throw std::invalid_argument("representations: n must be >= 1");
    std::vector<Representation> out;
    for (u64 y = 1; 2 * static_cast<u128>(y) * y < n; ++y) {
        u128 rest = static_cast<u128>(n) - 2 * static_cast<u128>(y) * y;
        auto x = exact_sqrt(rest);
        if (!x || *x == 0) continue;
        u64 xv = static_cast<u64>(*x);
        if (std::gcd(xv, y) != 1) continue;
        out.push_back({xv, static_cast<i64>(y), n});
        out.push_back({xv, -static_cast<i64>(y), n});
    }
    std::sort(out.begin(), out.end(), representation_less);
    return out;
}

// beta(x, y) = the z in [1, n] with z y == x (mod n); lands on a root of
// z^2 + 2 == 0 (mod n) whenever the representation is valid.
inline u64 beta(const Representation& rep) {
    if (!rep.valid()) throw std::invalid_argument("beta: invalid representation");
    u64 n = rep.n;
    if (n == 1) return 1;
    u64 y_mod = static_cast<u64>(((rep.y % static_cast<i64>(n)) + static_cast<i64>(n)) % static_cast<i64>(n));
    if (std::gcd(y_mod, n) != 1) throw std::invalid_argument("beta: gcd(y, n) != 1");
    u64 z = mulmod(rep.x % n, mod_inv(static_cast<i64>(y_mod), n), n);
    if (z == 0) z = n;
    if ((static_cast<u128>(z) * z + 2) % n != 0) throw std::logic_error("beta: image is not a root");
    return z;
}

struct ApproxPair {
    i64 a = 0;
    u64 q = 1;
    u64 z = 0;
    u64 n = 1;

    // gcd(a,q) = 1, 1 <= q <= sqrt(n), |z/n - a/q| < 1/(q sqrt(n));
    // the inequality is equivalent to (z q - a n)^2 < n.
    bool valid() const {
        if (q < 1 || static_cast<u128>(q) * q > n) return false;
        u64 a_abs = static_cast<u64>(a < 0 ? -a : a);
        if (std::gcd(a_abs, q) != 1 && !(a == 0 && q == 1)) return false;
        i128 r = static_cast<i128>(z) * q - static_cast<i128>(a) * n;
        return static_cast<u128>(r < 0 ? -r : r) * static_cast<u128>(r < 0 ? -r : r) < n;
    }
};

// Continued-fraction convergent of z/n with the largest denominator <= sqrt(n).
// Reduces the fraction first, so the Dirichlet inequality holds strictly even
// when z/n itself terminates early.
inline ApproxPair dirichlet_approx(u64 z, u64 n) {
    if (n < 5) throw std::invalid_argument("dirichlet_approx: need n >= 5");
    if (z == 0 || z > n) throw std::invalid_argument("dirichlet_approx: need z in [1, n]");
    u64 bound = isqrt_u64(n);
    u64 g = std::gcd(z, n);
    u64 num = z / g, den = n / g;

    // Convergents p_k / q_k of num/den.
    u64 p_prev = 1, q_prev = 0; // index -1
    u64 p_cur = 0, q_cur = 1;   // value 0 = floor(num/den) handled in loop
    u64 a0 = num / den;
    p_cur = a0;
    q_cur = 1;
    u64 rem_num = num % den, rem_den = den;
    u64 best_p = p_cur, best_q = q_cur;
    while (rem_num != 0 && q_cur <= bound) {
        best_p = p_cur;
        best_q = q_cur;
        u64 a = rem_den / rem_num;
        u64 p_next = a * p_cur + p_prev;
        u64 q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        u64 t = rem_den % rem_num;
        rem_den = rem_num;
        rem_num = t;
    }
    if (q_cur <= bound) {
        best_p = p_cur;
        best_q = q_cur;
    }
    ApproxPair out{static_cast<i64>(best_p), best_q, z, n};
    if (!out.valid()) throw std::logic_error("dirichlet_approx: convergent violates the bound");
    return out;
}

struct PreimageTrace {
    u64 z = 0;
    u64 n = 0;
    i64 a = 0;
    u64 q = 1;
    i64 r = 0;
    int case_id = 0; // 1: r^2+2q^2 = n, 2: r^2+2q^2 = 2n
    Representation rep;
};

// Explicit preimage of a root z of z^2 + 2 == 0 (mod n), n >= 5, following
// the two-case analysis on r = z q - a n.
inline PreimageTrace construct_preimage_traced(u64 z, u64 n) {
    if (n < 5) throw std::invalid_argument("construct_preimage: need n >= 5");
    if (z == 0 || z > n || (static_cast<u128>(z) * z + 2) % n != 0) {
        throw std::invalid_argument("construct_preimage: z is not a root of z^2+2 mod n");
    }
    ApproxPair ap = dirichlet_approx(z, n);
    i128 r = static_cast<i128>(z) * ap.q - static_cast<i128>(ap.a) * n;
    i128 s = r * r + 2 * static_cast<i128>(ap.q) * ap.q;
    if (s <= 0 || s >= 3 * static_cast<i128>(n) || s % n != 0) {
        throw std::logic_error("construct_preimage: dichotomy 0 < r^2+2q^2 < 3n failed");
    }
    if (r == 0) throw std::logic_error("construct_preimage: r = 0 cannot happen for n >= 5");

    PreimageTrace trace;
    trace.z = z;
    trace.n = n;
    trace.a = ap.a;
    trace.q = ap.q;
    trace.r = static_cast<i64>(r);

    Representation rep;
    rep.n = n;
    if (s == static_cast<i128>(n)) {
        trace.case_id = 1;
        if (r > 0) {
            rep.x = static_cast<u64>(r);
            rep.y = static_cast<i64>(ap.q);
        } else {
            rep.x = static_cast<u64>(-r);
            rep.y = -static_cast<i64>(ap.q);
        }
    } else if (s == 2 * static_cast<i128>(n)) {
        trace.case_id = 2;
        if (r % 2 != 0) throw std::logic_error("construct_preimage: case 2 with odd r");
        i64 r0 = static_cast<i64>(r / 2);
        u64 r0_abs = static_cast<u64>(r0 < 0 ? -r0 : r0);
        if (std::gcd(r0_abs, ap.q) != 1) {
            throw std::logic_error("construct_preimage: case 2 with (r0, q) != 1");
        }
        rep.x = ap.q;
        rep.y = -r0;
    } else {
        throw std::logic_error("construct_preimage: r^2+2q^2 is neither n nor 2n");
    }
    if (!rep.valid() || beta(rep) != z) {
        throw std::logic_error("construct_preimage: produced pair fails validation");
    }
    trace.rep = rep;
    return trace;
}

inline Representation construct_preimage(u64 z, u64 n) {
    return construct_preimage_traced(z, n).rep;
}

struct SurjectivityReport {
    u64 n_checked = 0;
    u64 roots_checked = 0;
    u64 case2_count = 0;
    std::vector<std::pair<u64, u64>> failures; // (n, z)
};

// For every n in [5, nmax]: each root must round-trip through
// construct_preimage, and beta over representations(n) must cover the root
// set exactly.
inline SurjectivityReport verify_surjectivity(u64 nmax) {
    if (nmax < 5) throw std::invalid_argument("verify_surjectivity: need nmax >= 5");
    SurjectivityReport report;
    for (u64 n = 5; n <= nmax; ++n) {
        ++report.n_checked;
        auto root_set = roots_mod(2, n).roots;
        std::vector<u64> image;
        for (const auto& rep : representations(n)) image.push_back(beta(rep));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image != root_set) {
            report.failures.emplace_back(n, 0);
            continue;
        }
        for (u64 z : root_set) {
            ++report.roots_checked;
            try {
                auto trace = construct_preimage_traced(z, n);
                if (trace.case_id == 2) ++report.case2_count;
                if (beta(trace.rep) != z) report.failures.emplace_back(n, z);
            } catch (const std::exception&) {
                report.failures.emplace_back(n, z);
            }
        }
    }
    return report;
}

// Canonical bijective subset F0: the enumeration-order smallest preimage of
// each root. Defined for n >= 3; below the n >= 5 surjection guarantee the
// root sets are covered vacuously or by the same rule.
inline std::vector<Representation> select_bijective_subset(u64 n) {
    if (n < 3) throw std::invalid_argument("select_bijective_subset: need n >= 3");
    std::map<u64, Representation> chosen;
    for (const auto& rep : representations(n)) {
        // representations() is already in enumeration order, so the first
        // preimage of each root is the canonical one.
        chosen.emplace(beta(rep), rep);
    }
    auto root_set = roots_mod(2, n).roots;
    if (chosen.size() != root_set.size()) {
        throw std::logic_error("select_bijective_subset: beta image does not cover the root set");
    }
    std::vector<Representation> out;
    out.reserve(chosen.size());
    for (auto& [z, rep] : chosen) out.push_back(rep);
    std::sort(out.begin(), out.end(), representation_less);
    return out;
}

} // namespace sqf
