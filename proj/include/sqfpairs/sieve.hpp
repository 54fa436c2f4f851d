#pragma once
// Batch square-freeness of n^2+1 and n^2+2 over a range, via a segmented
// square-divisor sieve. For every odd prime p <= prime_bound with solvable
// n^2 + a == 0 (mod p), the two progressions mod p^2 are marked (those n have
// p^2 | n^2+a) and one factor p is divided out of each residue along the
// progressions mod p. With prime_bound >= (hi^2+2)^(1/3) a surviving reduced
// cofactor has all prime factors above the bound and at most two of them, so
// it carries a square divisor exactly when it is a perfect square.
//
// p = 2 needs no sieving: n^2+1 and n^2+2 are never divisible by 4, so the
// even part is a single factor 2 determined by the parity of n.

#include <atomic>
#include <cstdint>
#include <thread>

#include "sqfpairs/modmath.hpp"

namespace sqf {

inline bool is_squarefree(u128 n) {
    if (n == 0) throw std::invalid_argument("is_squarefree: n must be >= 1");
    for (const auto& pp : factorize(n).factors) {
        if (pp.exponent >= 2) return false;
    }
    return true;
}

// Minimal prime bound making the perfect-square fallback sound.
inline u64 default_prime_bound(u64 hi) {
    u128 target = static_cast<u128>(hi) * hi + 2;
    u64 b = static_cast<u64>(cbrtl(static_cast<long double>(target)));
    while (static_cast<u128>(b) * b * b < target) ++b;
    while (b > 1 && static_cast<u128>(b - 1) * (b - 1) * (b - 1) >= target) --b;
    return b;
}

struct SquarefreeFlags {
    u64 lo = 1;
    u64 hi = 1;
    std::vector<bool> flags1; // true = n^2+1 square-free
    std::vector<bool> flags2; // true = n^2+2 square-free
    u64 mark_count = 0;       // instrumented count of p^2-progression marks

    bool flag(int a, u64 n) const {
        if (n < lo || n > hi) throw std::out_of_range("SquarefreeFlags::flag");
        return (a == 1 ? flags1 : flags2)[n - lo];
    }
};

namespace detail {

struct SieveEntry {
    u64 p;
    u64 root_p[2];  // roots of n^2+a mod p
    u64 root_p2[2]; // their Hensel lifts mod p^2
};

inline std::vector<SieveEntry> build_sieve_table(int a, u64 prime_bound) {
    std::vector<SieveEntry> table;
    for (u32 p : sieve_primes(static_cast<u32>(prime_bound))) {
        if (p == 2) continue;
        auto roots = sqrt_mod_p(-a, p);
        if (roots.empty()) continue;
        SieveEntry e{p, {roots[0], roots[1]}, {0, 0}};
        e.root_p2[0] = hensel_lift_sq(roots[0], a, p);
        e.root_p2[1] = hensel_lift_sq(roots[1], a, p);
        table.push_back(e);
    }
    return table;
}

inline u64 first_in_progression(u64 lo, u64 target, u64 modulus) {
    u64 t = target % modulus;
    u64 r = lo % modulus;
    return lo + (t >= r ? t - r : modulus - r + t);
}

// One polynomial, one segment [seg_lo, seg_hi]; writes flags (true =
// square-free) and returns the number of p^2 marks.
inline u64 sieve_segment(int a, u64 seg_lo, u64 seg_hi,
                         const std::vector<SieveEntry>& table,
                         std::vector<bool>& flags, std::size_t base_index) {
    const std::size_t len = static_cast<std::size_t>(seg_hi - seg_lo + 1);
    std::vector<u64> cofactor(len);
    std::vector<bool> squarefree(len, true);
    for (std::size_t i = 0; i < len; ++i) {
        u64 n = seg_lo + i;
        u64 value = n * n + static_cast<u64>(a);
        if (value % 2 == 0) value /= 2; // 4 never divides n^2+a
        cofactor[i] = value;
    }

    u64 marks = 0;
    for (const auto& e : table) {
        u64 p2 = e.p * e.p;
        for (u64 s : e.root_p2) {
            for (u64 n = first_in_progression(seg_lo, s, p2); n <= seg_hi; n += p2) {
                squarefree[n - seg_lo] = false;
                ++marks;
            }
        }
        for (u64 r : e.root_p) {
            for (u64 n = first_in_progression(seg_lo, r, e.p); n <= seg_hi; n += e.p) {
                cofactor[n - seg_lo] /= e.p;
            }
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        if (squarefree[i] && cofactor[i] > 1 && is_square(cofactor[i])) {
            squarefree[i] = false;
        }
        flags[base_index + i] = squarefree[i];
    }
    return marks;
}

} // namespace detail

// Square-free flags for both polynomials over [lo, hi]. Segments are
// independent work units; the merged result is identical for any thread count.
inline SquarefreeFlags sieve_flags(u64 lo, u64 hi, u64 prime_bound, unsigned threads = 1) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("sieve_flags: need 1 <= lo <= hi");
    if (hi > 10000000) throw std::invalid_argument("sieve_flags: hi exceeds the 10^7 desk-scale bound");
    if (prime_bound < default_prime_bound(hi)) {
        throw std::invalid_argument("sieve_flags: prime_bound below (hi^2+2)^(1/3)");
    }

    SquarefreeFlags out;
    out.lo = lo;
    out.hi = hi;
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    out.flags1.assign(n, true);
    out.flags2.assign(n, true);

    const auto table1 = detail::build_sieve_table(1, prime_bound);
    const auto table2 = detail::build_sieve_table(2, prime_bound);

    constexpr u64 kSegment = 1ull << 20;
    const u64 segments = (hi - lo) / kSegment + 1;
    std::atomic<u64> next_segment{0};
    std::atomic<u64> marks{0};

    auto worker = [&]() {
        while (true) {
            u64 s = next_segment.fetch_add(1);
            if (s >= segments) break;
            u64 seg_lo = lo + s * kSegment;
            u64 seg_hi = std::min(hi, seg_lo + kSegment - 1);
            std::size_t base = static_cast<std::size_t>(seg_lo - lo);
            u64 m = 0;
            m += detail::sieve_segment(1, seg_lo, seg_hi, table1, out.flags1, base);
            m += detail::sieve_segment(2, seg_lo, seg_hi, table2, out.flags2, base);
            marks.fetch_add(m);
        }
    };

    if (threads <= 1 || segments == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        unsigned count = std::min<u64>(threads, segments);
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    out.mark_count = marks.load();
    return out;
}

} // namespace sqf
