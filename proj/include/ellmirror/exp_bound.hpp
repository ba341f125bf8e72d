#pragma once
// Exponential-boundedness certificates |a_v| <= c * r^{diag(v)} with
// diag(v) = sum_i (v_i + 1), and explicit bound propagation through the
// series operations (product, unit inverse, exp, unit substitution).

#include "ellmirror/qseries.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

struct CoefficientEntry {
    Exponent v;
    Rational value;
};

struct ExpBound {
    Rational c;
    Rational r;
};

struct BoundCheck {
    Exponent v;
    Rational value;
    bool pass;
};

struct ExpBoundReport {
    ExpBound bound;
    std::vector<BoundCheck> checks;
    bool all_pass = true;
    std::size_t failures = 0;
    // Smallest r for which every coefficient passes at the given c.
    double empirical_r = 0.0;
};

inline std::int64_t diag(const Exponent& v) {
    std::int64_t d = 0;
    for (auto x : v) d += x + 1;
    return d;
}

inline double log_abs(const Rational& q) {
    if (is_zero(q)) return -INFINITY;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

inline ExpBoundReport exp_bound_certify(const std::vector<CoefficientEntry>& table,
                                        const ExpBound& b) {
    if (sgn(b.c) <= 0 || sgn(b.r) <= 0) throw std::invalid_argument("c and r must be positive");
    ExpBoundReport rep;
    rep.bound = b;
    double logc = log_abs(b.c);
    for (const auto& e : table) {
        if (is_zero(e.value)) continue;
        Rational lim = b.c * rational_pow(b.r, diag(e.v));
        bool ok = abs(e.value) <= lim;
        rep.checks.push_back({e.v, e.value, ok});
        if (!ok) {
            rep.all_pass = false;
            ++rep.failures;
        }
        std::int64_t d = diag(e.v);
        if (d > 0) {
            double need = std::exp((log_abs(e.value) - logc) / static_cast<double>(d));
            if (need > rep.empirical_r) rep.empirical_r = need;
        }
    }
    return rep;
}

inline std::vector<CoefficientEntry> coefficient_table(const QSeries& s) {
    std::vector<CoefficientEntry> t;
    for (const auto& [v, c] : s.terms()) t.push_back({v, c});
    return t;
}

inline ExpBoundReport exp_bound_certify(const QSeries& s, const ExpBound& b) {
    return exp_bound_certify(coefficient_table(s), b);
}

// ---- propagation rules -------------------------------------------------
// All rules assume nonnegative exponents and r >= 1 and work with the
// one-variable majorant obtained by setting every z_i = s:
//   sum_{|v| = m} |a_v| <= c r^n 2^{m+n-1} r^m   (n = rank).

namespace detail {

inline void require_nonnegative(const QSeries& s) {
    for (const auto& kv : s.terms())
        for (auto x : kv.first)
            if (x < 0) throw std::domain_error("bound propagation needs nonnegative exponents");
}

inline Rational two_pow(std::int64_t k) { return rational_pow(Rational(2), k); }

inline Rational ceil_pow3(const Rational& k) {
    Integer q = k.get_num() / k.get_den();
    if (q * k.get_den() < k.get_num()) q += 1;
    return rational_pow(Rational(3), q.get_si());
}

}  // namespace detail

inline ExpBound bound_product(const ExpBound& a, const ExpBound& b, std::size_t rank) {
    Rational r = a.r > b.r ? a.r : b.r;
    if (r < 1) r = 1;
    auto n = static_cast<std::int64_t>(rank);
    return {a.c * b.c * rational_pow(r, n) / detail::two_pow(n), 2 * r};
}

// Inverse of a unit with constant term a0 given a bound on the whole series.
inline ExpBound bound_inverse(const ExpBound& a, const Rational& a0, std::size_t rank) {
    if (is_zero(a0)) throw std::domain_error("bound_inverse: not a unit");
    Rational r = a.r < 1 ? Rational(1) : a.r;
    auto n = static_cast<std::int64_t>(rank);
    Rational C = a.c / abs(a0);
    Rational K = C * rational_pow(r, n) * detail::two_pow(n - 1);
    Rational rp = 4 * r * (K + 1);
    return {2 / (abs(a0) * rational_pow(rp, n)), rp};
}

inline ExpBound bound_exp(const ExpBound& a, std::size_t rank) {
    Rational r = a.r < 1 ? Rational(1) : a.r;
    auto n = static_cast<std::int64_t>(rank);
    Rational K = a.c * rational_pow(r, n) * detail::two_pow(n - 1);
    Rational rp = 4 * r;
    return {detail::ceil_pow3(K) / rational_pow(rp, n), rp};
}

// f_i units with bound fb (shared) and constant terms of modulus <= f0max.
inline ExpBound bound_substitute(const ExpBound& a, const ExpBound& fb, const Rational& f0max,
                                 std::size_t rank) {
    auto n = static_cast<std::int64_t>(rank);
    Rational r = a.r < 1 ? Rational(1) : a.r;
    Rational rf = fb.r < 1 ? Rational(1) : fb.r;
    Rational Kf = fb.c * rational_pow(rf, n) * detail::two_pow(n - 1);
    Rational M = f0max + Kf;
    Rational inv1 = 4 * rf, inv2 = 4 * r * M;
    Rational rp = inv1 > inv2 ? inv1 : inv2;
    return {a.c * rational_pow(r, n) * detail::two_pow(n) / rational_pow(rp, n), rp};
}

// Smallest c (given r) making the series pass; exact.
inline Rational minimal_c(const QSeries& s, const Rational& r) {
    Rational c(0);
    for (const auto& [v, x] : s.terms()) {
        Rational need = abs(x) / rational_pow(r, diag(v));
        if (need > c) c = need;
    }
    return is_zero(c) ? Rational(1) : c;
}

}  // namespace ellmirror
