#pragma once
// The density constant sigma computed two independent ways: as an Euler
// product of local factors over odd primes, and as the lambda-weighted double
// sum over square-free coprime pairs (d1,d2). Both carry rigorous truncation
// tails, deliberately generous, so |value - sigma| <= tail_bound holds by
// construction.

#include <gmpxx.h>

#include <cstdint>

#include "sqfpairs/quadroots.hpp"

namespace sqf {

struct SigmaEstimate {
    enum class Method { product, sum };

    double value = 0;
    Method method = Method::product;
    u64 truncation = 0; // prime bound P or pair bound Dmax
    double tail_bound = 0;

    bool plausible() const { return value > 0 && value <= 1 && tail_bound >= 0; }
};

// Local factor 1 - ((-1/p) + (-2/p) + 2) / p^2 as an exact rational.
inline mpq_class local_factor(u64 p) {
    if (p == 2) throw std::invalid_argument("local_factor: the product runs over p > 2");
    long c = legendre(-1, p) + legendre(-2, p) + 2;
    mpq_class f = 1 - mpq_class(c, static_cast<unsigned long>(p) * static_cast<unsigned long>(p));
    f.canonicalize();
    return f;
}

// Same factor from actual root counts mod p^2; must agree with local_factor.
inline mpq_class local_factor_from_roots(u64 p) {
    if (p == 2) throw std::invalid_argument("local_factor_from_roots: p must be odd");
    if (!is_prime_u64(p)) throw std::invalid_argument("local_factor_from_roots: p must be prime");
    u64 c = roots_mod(1, p * p).roots.size() + roots_mod(2, p * p).roots.size();
    mpq_class f = 1 - mpq_class(static_cast<unsigned long>(c),
                                static_cast<unsigned long>(p) * static_cast<unsigned long>(p));
    f.canonicalize();
    return f;
}

// Euler product over odd primes p <= P, ascending, in extended precision.
// Tail: sum_{p > P} 4/p^2 < 4/P.
inline SigmaEstimate sigma_product(u64 P) {
    if (P < 3) throw std::invalid_argument("sigma_product: need P >= 3");
    long double acc = 1.0L;
    for (u32 p : sieve_primes(static_cast<u32>(P))) {
        if (p == 2) continue;
        long c = 0;
        switch (p % 8) {
            case 1: c = 4; break;
            case 3:
            case 5: c = 2; break;
            default: c = 0; break; // p == 7 (mod 8): both symbols are -1
        }
        acc *= 1.0L - static_cast<long double>(c) / (static_cast<long double>(p) * p);
    }
    return SigmaEstimate{static_cast<double>(acc), SigmaEstimate::Method::product, P, 4.0 / static_cast<double>(P)};
}

// Exact rational partial product, for regression tests at small P.
inline mpq_class sigma_product_exact(u64 P) {
    if (P < 3) throw std::invalid_argument("sigma_product_exact: need P >= 3");
    if (P > 2000) throw std::invalid_argument("sigma_product_exact: exact mode capped at P = 2000");
    mpq_class acc = 1;
    for (u32 p : sieve_primes(static_cast<u32>(P))) {
        if (p == 2) continue;
        acc *= local_factor(p);
    }
    acc.canonicalize();
    return acc;
}

namespace detail {

// Smallest-prime-factor table up to n.
inline std::vector<u32> spf_table(u32 n) {
    std::vector<u32> spf(static_cast<std::size_t>(n) + 1, 0);
    for (u64 i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (u64 j = i; j <= n; j += i) {
                if (spf[j] == 0) spf[j] = static_cast<u32>(i);
            }
        }
    }
    return spf;
}

} // namespace detail

// Double sum over square-free coprime (d1, d2) with d1*d2 <= Dmax of
// mu(d1) mu(d2) lambda(d1^2, d2^2) / (d1 d2)^2, accumulated in the fixed
// order ascending (d1*d2, d1). lambda comes from the root-set machinery;
// pairs whose lambda vanishes (a prime 3 mod 4 in d1, an even d, a prime
// 5 or 7 mod 8 in d2) are pruned up front.
//
// Tail: the coefficient of 1/m^2 for m = d1 d2 > Dmax is at most 4^omega(m)
// on square-free m (at most 2^omega splits, each lambda <= 2^omega). The
// bound is summed directly to 10*Dmax and closed with
// sum_{m > K} 4^omega(m)/m^2 <= K^{-1/2} * prod_p (1 + 4 p^{-3/2}).
inline SigmaEstimate sigma_sum(u64 Dmax) {
    if (Dmax < 1) throw std::invalid_argument("sigma_sum: need Dmax >= 1");

    auto spf = detail::spf_table(static_cast<u32>(Dmax));
    std::vector<signed char> mu(Dmax + 1, 0);
    std::vector<bool> good1(Dmax + 1, false), good2(Dmax + 1, false);
    mu[1] = 1;
    good1[1] = good2[1] = true;
    for (u64 d = 2; d <= Dmax; ++d) {
        u64 m = d;
        int k = 0;
        bool squarefree = true, g1 = true, g2 = true;
        while (m > 1) {
            u32 p = spf[m];
            u64 e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e > 1) squarefree = false;
            ++k;
            if (p == 2 || p % 4 == 3) g1 = false;           // (-1/p) != 1
            if (p == 2 || (p % 8 != 1 && p % 8 != 3)) g2 = false; // (-2/p) != 1
        }
        mu[d] = squarefree ? (k % 2 ? -1 : 1) : 0;
        good1[d] = squarefree && g1;
        good2[d] = squarefree && g2;
    }

    // Root-count caches, filled through the actual root-set machinery.
    std::map<u64, u64> c1, c2;
    auto count1 = [&](u64 d) {
        auto it = c1.find(d);
        if (it == c1.end()) it = c1.emplace(d, roots_mod(1, d * d).roots.size()).first;
        return it->second;
    };
    auto count2 = [&](u64 d) {
        auto it = c2.find(d);
        if (it == c2.end()) it = c2.emplace(d, roots_mod(2, d * d).roots.size()).first;
        return it->second;
    };

    struct Term {
        u64 product;
        u64 d1;
        long double value;
    };
    std::vector<Term> terms;
    for (u64 d1 = 1; d1 <= Dmax; ++d1) {
        if (mu[d1] == 0 || !good1[d1]) continue;
        for (u64 d2 = 1; d1 * d2 <= Dmax; ++d2) {
            if (mu[d2] == 0 || !good2[d2]) continue;
            if (std::gcd(d1, d2) != 1) continue;
            u64 lambda = count1(d1) * count2(d2);
            long double denom = static_cast<long double>(d1) * d1 * static_cast<long double>(d2) * d2;
            terms.push_back({d1 * d2, d1,
                             static_cast<long double>(mu[d1] * mu[d2]) * static_cast<long double>(lambda) / denom});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return std::tie(a.product, a.d1) < std::tie(b.product, b.d1);
    });
    long double acc = 0;
    for (const auto& t : terms) acc += t.value;

    // Tail bound.
    const u64 K = 10 * Dmax;
    std::vector<u32> spf_k = detail::spf_table(static_cast<u32>(K));
    long double numeric = 0;
    for (u64 m = Dmax + 1; m <= K; ++m) {
        u64 v = m;
        long double h = 1;
        bool squarefree = true;
        while (v > 1) {
            u32 p = spf_k[v];
            unsigned e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            if (e > 1) {
                squarefree = false;
                break;
            }
            h *= 4;
        }
        if (squarefree) numeric += h / (static_cast<long double>(m) * m);
    }
    long double prod_bound = 1;
    for (u32 p : sieve_primes(10000)) {
        prod_bound *= 1.0L + 4.0L / (static_cast<long double>(p) * sqrtl(static_cast<long double>(p)));
    }
    prod_bound *= expl(4.0L * 2.0L / sqrtl(10000.0L)); // primes beyond 10^4
    long double analytic = prod_bound / sqrtl(static_cast<long double>(K));

    return SigmaEstimate{static_cast<double>(acc), SigmaEstimate::Method::sum, Dmax,
                         static_cast<double>(numeric + analytic)};
}

// Cached default-precision sigma used by census reports.
inline const SigmaEstimate& sigma_default() {
    static const SigmaEstimate cached = sigma_product(1000000);
    return cached;
}

struct SigmaComparison {
    SigmaEstimate product;
    SigmaEstimate sum;
    double difference = 0;
    double allowance = 0;
    bool consistent = false;
};

inline SigmaComparison compare_sigma(const SigmaEstimate& product, const SigmaEstimate& sum) {
    SigmaComparison c{product, sum, std::abs(product.value - sum.value),
                      product.tail_bound + sum.tail_bound, false};
    c.consistent = c.difference <= c.allowance;
    return c;
}

} // namespace sqf
