#pragma once
// Exact integer and modular arithmetic kernel: gcd/inverses, Legendre symbol,
// Tonelli-Shanks square roots, Hensel lifting, CRT, factorization (trial
// division + Pollard-Brent rho with deterministic Miller-Rabin) and the
// multiplicative functions mu, omega, tau built on top of it.
//
// All operations are pure functions; values are exact integers up to the
// 96-bit factorization bound. Contract violations throw std::invalid_argument.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqf {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-v));
    return to_string(static_cast<u128>(v));
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Shift-and-add product for moduli that do not fit in 64 bits. Slow; only the
// rare beyond-2^64 factorization path uses it.
inline u128 mulmod128(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (a == 0 || b == 0) return 0;
    u128 r = 0;
    while (b > 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

inline u128 powmod128(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod128(r, base, m);
        base = mulmod128(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Simple Eratosthenes sieve, returns all primes <= n.
inline std::vector<u32> sieve_primes(u32 n) {
    std::vector<u32> primes;
    if (n < 2) return primes;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (!comp[i]) {
            primes.push_back(static_cast<u32>(i));
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return primes;
}

// Shared prime table for trial division (built once, thread-safe).
inline const std::vector<u32>& small_primes() {
    static const std::vector<u32> table = sieve_primes(1u << 20);
    return table;
}

namespace detail {

inline bool miller_rabin_u64(u64 n, u64 base) {
    if (base % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool miller_rabin_u128(u128 n, u128 base) {
    base %= n;
    if (base == 0) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u128 x = powmod128(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod128(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic witness set for all 64-bit inputs.
    for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (!detail::miller_rabin_u64(n, base)) return false;
    }
    return true;
}

inline bool is_prime(u128 n) {
    if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
    static constexpr std::array<unsigned, 25> bases = {
        2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : bases) {
        if (n % p == 0) return false; // n > 2^64, so n != p
    }
    for (unsigned base : bases) {
        if (!detail::miller_rabin_u128(n, base)) return false;
    }
    return true;
}

namespace detail {

// Pollard-Brent with batched gcd; expects n composite, odd, not a prime power
// obstruction (retries with different parameters until a factor splits).
inline u64 pollard_rho_u64(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = c + 2, y = x, d = 1;
        u64 prod = 1;
        int steps = 0;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            prod = mulmod(prod, diff, n);
            if (++steps % 64 == 0) {
                d = std::gcd(prod, n);
                prod = 1;
            }
        }
        if (d == 1) d = std::gcd(prod, n);
        if (d != 1 && d != n) return d;
        ++c;
    }
}

inline u128 pollard_rho_u128(u128 n) {
    if ((n & 1) == 0) return 2;
    u128 c = 1;
    while (true) {
        u128 x = c + 2, y = x, d = 1;
        auto step = [&](u128 v) {
            u128 w = mulmod128(v, v, n) + c;
            if (w >= n) w -= n;
            return w;
        };
        for (int i = 0; i < (1 << 22); ++i) {
            x = step(x);
            y = step(step(y));
            u128 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd_u128(diff, n);
            if (d != 1) break;
        }
        if (d != 1 && d != n) return d;
        ++c;
    }
}

} // namespace detail

struct PrimePower {
    u128 prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    u128 value = 1;
    std::vector<PrimePower> factors; // ascending by prime

    bool valid() const {
        u128 prod = 1, last = 0;
        for (const auto& [p, e] : factors) {
            if (p <= last || e == 0 || !is_prime(p)) return false;
            last = p;
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        return prod == value;
    }
};

// Full factorization of 1 <= n < 2^96. Trial division by small primes, then
// Miller-Rabin / Pollard-Brent recursion on what remains.
inline Factorization factorize(u128 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    if (n >> 96) throw std::invalid_argument("factorize: n exceeds the 2^96 bound");
    Factorization result;
    result.value = n;
    if (n == 1) return result;

    std::vector<std::pair<u128, unsigned>> found;
    constexpr u32 kTrialBound = 10000;
    for (u32 p : small_primes()) {
        if (p > kTrialBound) break;
        if (static_cast<u128>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            found.emplace_back(p, e);
        }
    }

    // Split the remaining cofactor recursively.
    std::vector<u128> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        u128 m = pending.back();
        pending.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            found.emplace_back(m, 1);
            continue;
        }
        u128 d = (m <= std::numeric_limits<u64>::max())
                     ? detail::pollard_rho_u64(static_cast<u64>(m))
                     : detail::pollard_rho_u128(m);
        pending.push_back(d);
        pending.push_back(m / d);
    }

    std::sort(found.begin(), found.end());
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (!result.factors.empty() && result.factors.back().prime == found[i].first) {
            result.factors.back().exponent += found[i].second;
        } else {
            result.factors.push_back({found[i].first, found[i].second});
        }
    }
    return result;
}

inline int mobius(u128 n) {
    Factorization f = factorize(n);
    for (const auto& pp : f.factors) {
        if (pp.exponent >= 2) return 0;
    }
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

inline unsigned omega(u128 n) { return static_cast<unsigned>(factorize(n).factors.size()); }

inline u64 tau(u128 n) {
    u64 t = 1;
    for (const auto& pp : factorize(n).factors) t *= pp.exponent + 1;
    return t;
}

// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
inline int legendre(i64 a, u64 p) {
    if (p == 2 || !is_prime_u64(p)) {
        throw std::invalid_argument("legendre: p must be an odd prime");
    }
    i64 r = a % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    u64 a0 = static_cast<u64>(r);
    if (a0 == 0) return 0;
    u64 e = powmod(a0, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

struct ResidueClass {
    u128 residue = 0;
    u128 modulus = 1;

    bool valid() const { return modulus >= 1 && residue < modulus; }
    bool operator==(const ResidueClass&) const = default;
};

// Inverse of n modulo q, result in [0, q); q = 1 yields 0.
inline u64 mod_inv(i64 n, u64 q) {
    if (q == 0) throw std::invalid_argument("mod_inv: modulus must be positive");
    if (q == 1) return 0;
    i64 r = n % static_cast<i64>(q);
    if (r < 0) r += static_cast<i64>(q);
    i64 old_r = static_cast<i64>(q), cur_r = r;
    i64 old_t = 0, cur_t = 1;
    while (cur_r != 0) {
        i64 quot = old_r / cur_r;
        old_r -= quot * cur_r;
        std::swap(old_r, cur_r);
        old_t -= quot * cur_t;
        std::swap(old_t, cur_t);
    }
    if (old_r != 1) throw std::invalid_argument("mod_inv: arguments are not coprime");
    if (old_t < 0) old_t += static_cast<i64>(q);
    return static_cast<u64>(old_t);
}

// All r in [0, p) with r^2 == a (mod p), ascending; empty iff (a/p) = -1.
// Tonelli-Shanks for p == 1 (mod 4), direct exponentiation for p == 3 (mod 4).
inline std::vector<u64> sqrt_mod_p(i64 a, u64 p) {
    if (p == 2 || !is_prime_u64(p)) {
        throw std::invalid_argument("sqrt_mod_p: p must be an odd prime");
    }
    i64 red = a % static_cast<i64>(p);
    if (red < 0) red += static_cast<i64>(p);
    u64 a0 = static_cast<u64>(red);
    if (a0 == 0) return {0};
    if (powmod(a0, (p - 1) / 2, p) != 1) return {};

    u64 root;
    if (p % 4 == 3) {
        root = powmod(a0, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = static_cast<u64>(s);
        u64 c = powmod(z, q, p);
        u64 t = powmod(a0, q, p);
        u64 r = powmod(a0, (q + 1) / 2, p);
        while (t != 1) {
            u64 t2 = t;
            u64 i = 0;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        root = r;
    }
    u64 other = p - root;
    if (root > other) std::swap(root, other);
    return {root, other};
}

// Lift r with r^2 + a == 0 (mod p) to the unique s mod p^2 with s == r (mod p)
// and s^2 + a == 0 (mod p^2). Newton step; requires p odd and p not dividing 2r.
inline u64 hensel_lift_sq(u64 r, i64 a, u64 p) {
    if (p == 2 || !is_prime_u64(p)) {
        throw std::invalid_argument("hensel_lift_sq: p must be an odd prime");
    }
    if (p >= (1ull << 31)) throw std::invalid_argument("hensel_lift_sq: p too large for p^2 in 64 bits");
    r %= p;
    i128 f = static_cast<i128>(r) * r + a;
    if (f % static_cast<i128>(p) != 0) {
        throw std::invalid_argument("hensel_lift_sq: r is not a root mod p");
    }
    if (r % p == 0) throw std::invalid_argument("hensel_lift_sq: derivative 2r is singular mod p");
    u64 p2 = p * p;
    i128 fp = f / static_cast<i128>(p);
    u64 fp_mod = static_cast<u64>(((fp % static_cast<i128>(p)) + p) % p);
    u64 t = mulmod(fp_mod, mod_inv(static_cast<i64>(mulmod(2, r, p)), p), p);
    // s = r - t*p mod p^2
    u64 s = (r + p2 - mulmod(t % p2, p, p2)) % p2;
    i128 check = (static_cast<i128>(s) * s + a) % static_cast<i128>(p2);
    if (check != 0) throw std::logic_error("hensel_lift_sq: lift failed");
    return s;
}

// Chinese remainder combination of two residue classes with coprime moduli.
// Moduli must each fit in 63 bits; the combined modulus may use the full 126.
inline ResidueClass crt(const ResidueClass& x, const ResidueClass& y) {
    if (!x.valid() || !y.valid()) throw std::invalid_argument("crt: invalid residue class");
    u128 m1 = x.modulus, m2 = y.modulus;
    if (gcd_u128(m1, m2) != 1) throw std::invalid_argument("crt: moduli share a factor");
    if (m1 == 1) return y;
    if (m2 == 1) return x;
    if ((m1 >> 63) || (m2 >> 63)) throw std::invalid_argument("crt: modulus exceeds 63 bits");
    u64 a1 = static_cast<u64>(x.residue), a2 = static_cast<u64>(y.residue);
    u64 inv = mod_inv(static_cast<i64>(static_cast<u64>(m1 % m2)), static_cast<u64>(m2));
    u64 diff = (a2 + static_cast<u64>(m2) - a1 % static_cast<u64>(m2)) % static_cast<u64>(m2);
    u128 k = mulmod(diff, inv, static_cast<u64>(m2));
    return ResidueClass{x.residue + m1 * k, m1 * m2};
}

// Exact integer square root when n is a perfect square.
inline std::optional<u128> exact_sqrt(u128 n) {
    if (n == 0) return u128(0);
    u128 r = static_cast<u128>(sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r == n) return r;
    return std::nullopt;
}

inline bool is_square(u128 n) { return exact_sqrt(n).has_value(); }

inline u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace sqf
