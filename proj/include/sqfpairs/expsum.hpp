#pragma once
// Exponential-sum toolkit: the unit phase e(t), the sawtooth psi and its
// truncated Fourier expansion, exact modular-inverse reciprocity, incomplete
// Kloosterman sums with an empirical Weil-bound study, the Theta_m sum
// evaluated along two routes (root sets vs canonical representations with
// reciprocity-transformed phases), the exact sawtooth transfer identity
// between root sets mod d^2 and mod d, and the psi-sums over root families.
//
// Every phase of the form rational + m*sqrt(X)/d is assembled from an exact
// rational reduced mod 1 plus a compensated irrational part (sqrt split into
// integer and fractional pieces), keeping per-term phase error below 1e-10
// at desk scale.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <random>

#include "sqfpairs/representation.hpp"

namespace sqf {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double frac(double t) { return t - std::floor(t); }

inline std::complex<double> e_phase(double t) {
    double f = frac(t);
    return {std::cos(kTwoPi * f), std::sin(kTwoPi * f)};
}

struct Phase {
    double t = 0;
    std::complex<double> value{1, 0};

    static Phase at(double t) { return Phase{t, e_phase(t)}; }
    bool valid() const { return std::abs(std::abs(value) - 1.0) <= 1e-12; }
};

// psi(t) = {t} - 1/2.
inline double psi(double t) { return frac(t) - 0.5; }

inline mpq_class psi_exact(const mpq_class& t) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    mpq_class r = t - mpq_class(fl) - mpq_class(1, 2);
    r.canonicalize();
    return r;
}

// Main term of the sawtooth expansion: -sum_{1<=|m|<=M} e(mt)/(2 pi i m),
// which collapses to -sum_{m=1}^{M} sin(2 pi m t)/(pi m) by conjugate pairing.
inline double psi_truncated(double t, u64 M) {
    if (M < 2) throw std::invalid_argument("psi_truncated: need M >= 2");
    double t0 = frac(t);
    double acc = 0;
    for (u64 m = 1; m <= M; ++m) {
        acc -= std::sin(kTwoPi * frac(static_cast<double>(m) * t0)) /
               (3.14159265358979323846 * static_cast<double>(m));
    }
    return acc;
}

struct PsiErrorRow {
    u64 M = 0;
    double mean_abs_err = 0;
};

// Mean |psi - psi_truncated| over a fixed seeded sample, one row per M.
inline std::vector<PsiErrorRow> psi_truncation_study(const std::vector<u64>& Ms, u64 samples, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> ts(samples);
    for (auto& t : ts) t = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::vector<PsiErrorRow> rows;
    for (u64 M : Ms) {
        double total = 0;
        for (double t : ts) total += std::abs(psi(t) - psi_truncated(t, M));
        rows.push_back({M, total / static_cast<double>(samples)});
    }
    return rows;
}

namespace detail {

inline mpq_class make_q(i64 num, i64 den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

inline mpq_class mod_one(const mpq_class& t) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    mpq_class r = t - mpq_class(fl);
    r.canonicalize();
    return r;
}

} // namespace detail

// Modular-inverse reciprocity: inv(A)_{|B|}/B + inv(B)_{|A|}/A - 1/(AB) is an
// integer for coprime nonzero A, B. Checked exactly.
inline bool reciprocity_check(i64 A, i64 B) {
    if (A == 0 || B == 0) throw std::invalid_argument("reciprocity_check: A, B must be nonzero");
    u64 a_abs = static_cast<u64>(A < 0 ? -A : A), b_abs = static_cast<u64>(B < 0 ? -B : B);
    if (std::gcd(a_abs, b_abs) != 1) throw std::invalid_argument("reciprocity_check: gcd(A,B) != 1");
    u64 inv_a = mod_inv(A, b_abs);
    u64 inv_b = mod_inv(B, a_abs);
    mpq_class sum = detail::make_q(static_cast<i64>(inv_a), B) +
                    detail::make_q(static_cast<i64>(inv_b), A) -
                    mpq_class(1) / detail::make_q(A, 1) / detail::make_q(B, 1);
    sum.canonicalize();
    return sum.get_den() == 1;
}

struct KloostermanSpec {
    i64 r = 1;
    i64 h = 1;
    double alpha = 0;
    double beta = 1;

    bool valid() const {
        if (r == 0 || h == 0) return false;
        double len = beta - alpha;
        return len > 0 && len <= 2.0 * static_cast<double>(r < 0 ? -r : r);
    }
};

// K(r,h) = sum over integers x in [alpha, beta] coprime to r of
// e(h * inv(x)_{|r|} / r); phases are exact reduced rationals.
inline std::complex<double> kloosterman_incomplete(i64 r, i64 h, double alpha, double beta) {
    if (r == 0) throw std::invalid_argument("kloosterman_incomplete: r must be nonzero");
    u64 ra = static_cast<u64>(r < 0 ? -r : r);
    std::complex<double> sum{0, 0};
    i64 x0 = static_cast<i64>(std::ceil(alpha));
    i64 x1 = static_cast<i64>(std::floor(beta));
    for (i64 x = x0; x <= x1; ++x) {
        u64 xm = static_cast<u64>(((x % static_cast<i64>(ra)) + static_cast<i64>(ra)) % static_cast<i64>(ra));
        if (std::gcd(xm, ra) != 1) continue;
        u64 xb = mod_inv(static_cast<i64>(xm), ra);
        i128 num = static_cast<i128>(h) * static_cast<i128>(xb);
        u64 e = static_cast<u64>(((num % static_cast<i128>(ra)) + static_cast<i128>(ra)) % static_cast<i128>(ra));
        double t = static_cast<double>(e) / static_cast<double>(ra);
        if (r < 0) t = -t;
        sum += e_phase(t);
    }
    return sum;
}

inline std::complex<double> kloosterman_incomplete(const KloostermanSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("kloosterman_incomplete: invalid spec");
    return kloosterman_incomplete(spec.r, spec.h, spec.alpha, spec.beta);
}

struct WeilStudy {
    u64 samples = 0;
    double max_ratio = 0;
    KloostermanSpec worst;
};

// Samples random incomplete sums and records |K| / (r^0.6 * gcd(r,h)^0.5);
// the Weil-type bound predicts a modest constant.
inline WeilStudy weil_ratio_study(u64 rmax, u64 samples, u64 seed) {
    if (rmax < 2) throw std::invalid_argument("weil_ratio_study: need rmax >= 2");
    std::mt19937_64 rng(seed);
    auto uniform = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    WeilStudy study;
    study.samples = samples;
    for (u64 i = 0; i < samples; ++i) {
        i64 r = static_cast<i64>(2 + rng() % (rmax - 1));
        i64 h = static_cast<i64>(1 + rng() % rmax);
        if (rng() & 1) h = -h;
        double alpha = uniform() * static_cast<double>(r);
        double len = uniform() * 2.0 * static_cast<double>(r);
        if (len == 0) len = 1;
        KloostermanSpec spec{r, h, alpha, alpha + len};
        double K = std::abs(kloosterman_incomplete(spec));
        u64 g = std::gcd(static_cast<u64>(r), static_cast<u64>(h < 0 ? -h : h));
        double ratio = K / (std::pow(static_cast<double>(r), 0.6) * std::sqrt(static_cast<double>(g)));
        if (ratio > study.max_ratio) {
            study.max_ratio = ratio;
            study.worst = spec;
        }
    }
    return study;
}

// Full-period incomplete sum over [1, r] is the Ramanujan sum: mu(r) on
// square-free r with (h, r) = 1.
inline double ramanujan_max_deviation(u64 rmax, i64 h) {
    double worst = 0;
    for (u64 r = 1; r <= rmax; ++r) {
        if (mobius(r) == 0) continue;
        if (std::gcd(r, static_cast<u64>(h < 0 ? -h : h)) != 1) continue;
        auto K = kloosterman_incomplete(static_cast<i64>(r), h, 1.0, static_cast<double>(r));
        worst = std::max(worst, std::abs(K - std::complex<double>(mobius(r), 0)));
    }
    return worst;
}

inline double eta1(i64 v, double D2) {
    double t = D2 - 2.0 * static_cast<double>(v) * static_cast<double>(v);
    return std::sqrt(std::max(0.0, t));
}

inline double eta2(i64 v, double D2) {
    double vv = static_cast<double>(v) * static_cast<double>(v);
    double t = std::min(vv, 2.0 * D2 - 2.0 * vv);
    return std::sqrt(std::max(0.0, t));
}

// K_{v,m}(t): incomplete Kloosterman sum over u in [eta1(v), t], (u,v) = 1.
inline std::complex<double> k_vm(i64 v, i64 m, double t, double D2) {
    if (v == 0) throw std::invalid_argument("k_vm: v must be nonzero");
    if (D2 <= 0) throw std::invalid_argument("k_vm: D2 must be positive");
    double lo = eta1(v, D2), hi = eta2(v, D2);
    if (t < lo - 1e-12 || t > hi + 1e-12) {
        throw std::invalid_argument("k_vm: t outside [eta1, eta2]");
    }
    return kloosterman_incomplete(v, m, lo, t);
}

struct ThetaSpec {
    double D2 = 1;
    i64 m = 1;
    double X = 1;

    bool valid() const { return D2 >= 0.5 && m != 0 && X > 0; }
};

namespace detail {

struct SqrtSplit {
    u64 integer = 0;
    double fractional = 0;
};

inline SqrtSplit split_sqrt(double X) {
    long double s = sqrtl(static_cast<long double>(X));
    u64 si = static_cast<u64>(s);
    return {si, static_cast<double>(s - static_cast<long double>(si))};
}

// m*sqrt(X)/d as exact-rational-plus-small-real, reduced mod 1.
inline double irrational_phase(i64 m, u64 d, const SqrtSplit& s) {
    i128 num = static_cast<i128>(m) * static_cast<i128>(s.integer);
    i64 red = static_cast<i64>(((num % static_cast<i128>(d)) + static_cast<i128>(d)) % static_cast<i128>(d));
    double rational = static_cast<double>(red) / static_cast<double>(d);
    double small = static_cast<double>(m) * s.fractional / static_cast<double>(d);
    return frac(rational + small);
}

// One d-term of Theta_m straight from the root set.
inline std::complex<double> theta_term_direct(u64 d, i64 m, const SqrtSplit& s) {
    auto roots = roots_mod(2, d).roots;
    std::complex<double> term{0, 0};
    double base = irrational_phase(m, d, s);
    for (u64 n : roots) {
        i128 num = -static_cast<i128>(m) * static_cast<i128>(n);
        i64 red = static_cast<i64>(((num % static_cast<i128>(d)) + static_cast<i128>(d)) % static_cast<i128>(d));
        term += e_phase(base + static_cast<double>(red) / static_cast<double>(d));
    }
    return term;
}

} // namespace detail

// Theta_m = sum_{D2 <= d < 2 D2} e(m sqrt(X)/d) sum_{n in N2(d)} e(-n m / d).
inline std::complex<double> theta_direct(const ThetaSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("theta_direct: invalid spec");
    auto s = detail::split_sqrt(spec.X);
    std::complex<double> sum{0, 0};
    for (u64 d = static_cast<u64>(std::ceil(spec.D2)); static_cast<double>(d) < 2.0 * spec.D2; ++d) {
        sum += detail::theta_term_direct(d, spec.m, s);
    }
    return sum;
}

// The same sum through the bijective representation subsets: for d >= 5 each
// root contributes via its canonical (u, v) with the reciprocity-transformed
// phase (split 0 < u < |v| vs 0 < |v| < u); d in {1,2,3,4} sits below the
// n >= 5 surjection guarantee (u = |v| = 1 forces d = 3) and keeps its
// literal term.
inline std::complex<double> theta_via_reps(const ThetaSpec& spec) {
    if (!spec.valid()) throw std::invalid_argument("theta_via_reps: invalid spec");
    auto s = detail::split_sqrt(spec.X);
    const i64 m = spec.m;
    std::complex<double> sum{0, 0};
    for (u64 d = static_cast<u64>(std::ceil(spec.D2)); static_cast<double>(d) < 2.0 * spec.D2; ++d) {
        if (d < 5) {
            sum += detail::theta_term_direct(d, m, s);
            continue;
        }
        double base = detail::irrational_phase(m, d, s);
        for (const auto& rep : select_bijective_subset(d)) {
            u64 u = rep.x;
            i64 v = rep.y;
            u64 v_abs = static_cast<u64>(v < 0 ? -v : v);
            mpq_class ph;
            if (u < v_abs) {
                // -n m/d == -m u/(v d) + m inv(u)_{|v|}/v  (mod 1)
                u64 inv_u = mod_inv(static_cast<i64>(u % v_abs), v_abs);
                ph = detail::make_q(-m * static_cast<i64>(u), v * static_cast<i64>(d)) +
                     detail::make_q(m * static_cast<i64>(inv_u), v);
            } else if (v_abs < u) {
                // -n m/d == 2 m v/(u d) - m inv(v)_u/u  (mod 1)
                u64 inv_v = mod_inv(v, u);
                ph = detail::make_q(2 * m * v, static_cast<i64>(u) * static_cast<i64>(d)) +
                     detail::make_q(-m * static_cast<i64>(inv_v), static_cast<i64>(u));
            } else {
                throw std::logic_error("theta_via_reps: u = |v| is impossible for d >= 5");
            }
            ph = detail::mod_one(ph);
            sum += e_phase(base + ph.get_d());
        }
    }
    return sum;
}

struct PrehodResult {
    u64 d1 = 0;
    u64 X = 0;
    mpq_class lhs;
    mpq_class rhs;
    bool equal = false;
};

// Exact evaluation of the sawtooth transfer between the root set mod d1^2 and
// the root set mod d1 (X a perfect square so both sides are rational):
//   lhs = sum_{n in N1'(d1)} psi((X-n)/d1^2)
//   rhs = sum_{n in N1(d1)} (X/d1^2 - sqrt(X)/d1) + sum_{n in N1(d1)} psi((sqrt(X)-n)/d1)
// The two sides agree exactly iff the boundary counts #{n in N1' : n > X} and
// #{n in N1 : n > sqrt(X)} coincide; prehod_boundary_defect reports them.
inline PrehodResult prehod_check(u64 d1, u64 X) {
    auto sq = exact_sqrt(X);
    if (!sq) throw std::invalid_argument("prehod_check: X must be a perfect square in exact mode");
    u64 sX = static_cast<u64>(*sq);
    if (d1 <= sX) throw std::invalid_argument("prehod_check: need d1 > sqrt(X)");
    PrehodResult out;
    out.d1 = d1;
    out.X = X;
    u128 d1sq = static_cast<u128>(d1) * d1;
    if (d1sq > 1000000000000ull) throw std::invalid_argument("prehod_check: d1^2 exceeds the root-set bound");

    for (u64 n : roots_mod(1, static_cast<u64>(d1sq)).roots) {
        out.lhs += psi_exact(detail::make_q(static_cast<i64>(X) - static_cast<i64>(n),
                                            static_cast<i64>(d1sq)));
    }
    for (u64 n : roots_mod(1, d1).roots) {
        out.rhs += detail::make_q(static_cast<i64>(X), static_cast<i64>(d1sq)) -
                   detail::make_q(static_cast<i64>(sX), static_cast<i64>(d1));
        out.rhs += psi_exact(detail::make_q(static_cast<i64>(sX) - static_cast<i64>(n),
                                            static_cast<i64>(d1)));
    }
    out.lhs.canonicalize();
    out.rhs.canonicalize();
    out.equal = out.lhs == out.rhs;
    return out;
}

struct PrehodDefect {
    i64 above_X = 0;      // #{n in N1'(d1) : n > X}
    i64 above_sqrtX = 0;  // #{n in N1(d1) : n > sqrt(X)}
};

inline PrehodDefect prehod_boundary_defect(u64 d1, u64 X) {
    auto sq = exact_sqrt(X);
    if (!sq) throw std::invalid_argument("prehod_boundary_defect: X must be a perfect square");
    u64 sX = static_cast<u64>(*sq);
    PrehodDefect d;
    for (u64 n : roots_mod(1, d1 * d1).roots) {
        if (n > X) ++d.above_X;
    }
    for (u64 n : roots_mod(1, d1).roots) {
        if (n > sX) ++d.above_sqrtX;
    }
    return d;
}

// Float-mode variant for non-square X (1e-9 comparison tolerance).
struct PrehodFloatResult {
    double lhs = 0;
    double rhs = 0;
    bool equal = false;
};

inline PrehodFloatResult prehod_check_float(u64 d1, double X) {
    if (X <= 0) throw std::invalid_argument("prehod_check_float: X must be positive");
    double sX = std::sqrt(X);
    if (static_cast<double>(d1) <= sX) throw std::invalid_argument("prehod_check_float: need d1 > sqrt(X)");
    PrehodFloatResult out;
    double d1sq = static_cast<double>(d1) * static_cast<double>(d1);
    for (u64 n : roots_mod(1, d1 * d1).roots) {
        out.lhs += psi((X - static_cast<double>(n)) / d1sq);
    }
    for (u64 n : roots_mod(1, d1).roots) {
        out.rhs += X / d1sq - sX / static_cast<double>(d1);
        out.rhs += psi((sX - static_cast<double>(n)) / static_cast<double>(d1));
    }
    out.equal = std::abs(out.lhs - out.rhs) <= 1e-9;
    return out;
}

// Sigma3/Sigma4-style sum: sum_{D <= d < 2D} sum_{n in N_a(d)} psi((sqrt(X)-n)/d).
inline double psi_sum_over_roots(int a, double D, double X) {
    if (D < 0.5) throw std::invalid_argument("psi_sum_over_roots: need D >= 1/2");
    if (X <= 0) throw std::invalid_argument("psi_sum_over_roots: X must be positive");
    long double sX = sqrtl(static_cast<long double>(X));
    long double total = 0;
    for (u64 d = static_cast<u64>(std::ceil(D)); static_cast<double>(d) < 2.0 * D; ++d) {
        for (u64 n : roots_mod(a, d).roots) {
            long double t = (sX - static_cast<long double>(n)) / static_cast<long double>(d);
            total += static_cast<long double>(psi(static_cast<double>(t)));
        }
    }
    return static_cast<double>(total);
}

struct PsiSumRow {
    double D = 0;
    double value = 0;
    double ratio = 0; // |value| * D^{1/4} / X
};

inline std::vector<PsiSumRow> psi_sum_study(int a, const std::vector<double>& Ds, double X) {
    std::vector<PsiSumRow> rows;
    for (double D : Ds) {
        double v = psi_sum_over_roots(a, D, X);
        rows.push_back({D, v, std::abs(v) * std::pow(D, 0.25) / X});
    }
    return rows;
}

} // namespace sqf
