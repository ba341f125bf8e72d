#pragma once
// Independent reference computations used only by the tests and the
// acceptance suite. Each one avoids the code path it is compared against.

#include "ellmirror/affine_base.hpp"
#include "ellmirror/gw_counts.hpp"
#include "ellmirror/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace ellmirror::oracle {

// prod (1 - z^m)^{-12} by dividing twelve times by each (1 - z^m).
inline std::vector<Integer> bryan_leung_by_division(int N) {
    std::vector<Integer> p(N + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= N; ++m)
        for (int rep = 0; rep < 12; ++rep)
            for (int n = m; n <= N; ++n) p[n] += p[n - m];
    return p;
}

// Section classes of degree d: multisets of a_i bounded by sqrt(3 + d^2),
// expanded to all orderings, with no per-coordinate window.
inline std::vector<SectionClass> goldilocks_bruteforce(std::int64_t d) {
    const std::int64_t qmax = 3 + d * d, target = 3 * d - 1;
    const auto amax = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(qmax)))) + 1;
    std::set<SectionClass> out;
    std::array<std::int64_t, 9> a{};
    std::function<void(int, std::int64_t, std::int64_t, std::int64_t)> rec = [&](int i, std::int64_t hi,
                                                                                std::int64_t sum,
                                                                                std::int64_t sq) {
        if (i == 9) {
            if (sum != target || sq > qmax) return;
            auto b = a;
            std::sort(b.begin(), b.end());
            do {
                SectionClass c;
                c.d = d;
                c.a = b;
                if (c.dot_F() == 1 && c.arithmetic_genus() >= 0) out.insert(c);
            } while (std::next_permutation(b.begin(), b.end()));
            return;
        }
        for (std::int64_t x = hi; x >= -amax; --x) {
            if (sq + x * x > qmax) continue;
            a[i] = x;
            rec(i + 1, x, sum + x, sq + x * x);
        }
    };
    rec(0, amax, 0, 0);
    return {out.begin(), out.end()};
}

// Kink along ray (j,1), straight from the labelling rule.
inline PLValue kink_label(std::int64_t j) {
    std::int64_t r = ((j - 1) % 4 + 4) % 4;
    return PLValue::D(static_cast<int>(r) + 1);
}

// phi(x, y) by summing the kinks crossed when walking out of the cone C.
inline PLValue phi_by_kinks(std::int64_t x, std::int64_t y) {
    if (y <= 0) throw std::domain_error("phi_by_kinks needs y > 0");
    PLValue v;
    for (std::int64_t j = 1; j * y < x; ++j) v += Rational(static_cast<long>(x - j * y)) * kink_label(j);
    for (std::int64_t j = 0; j * y > x; --j) v += Rational(static_cast<long>(j * y - x)) * kink_label(j);
    return v;
}

// Exponents (4n+1)^2 up to T, each with its number of representations.
inline std::map<std::int64_t, int> theta2_exponents(std::int64_t T) {
    std::map<std::int64_t, int> e;
    for (std::int64_t n = -T; n <= T; ++n) {
        std::int64_t s = (4 * n + 1) * (4 * n + 1);
        if (s <= T) e[s]++;
    }
    return e;
}

// sum_{m in Z} v^{16 m^2} - 1 and sum_{n odd} v^{4 n^2}, up to T.
inline std::map<std::int64_t, int> even_square_exponents(std::int64_t T, bool drop_constant) {
    std::map<std::int64_t, int> e;
    for (std::int64_t m = -T; m <= T; ++m) {
        std::int64_t s = 16 * m * m;
        if (s <= T && !(drop_constant && s == 0)) e[s]++;
    }
    return e;
}
inline std::map<std::int64_t, int> odd_square_exponents(std::int64_t T) {
    std::map<std::int64_t, int> e;
    for (std::int64_t n = -T; n <= T; ++n) {
        if (n % 2 == 0) continue;
        std::int64_t s = 4 * n * n;
        if (s <= T) e[s]++;
    }
    return e;
}

// Determinant by Gaussian elimination over Q.
inline Rational det_gauss(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// j of the quadric pencil at a rational t: binary quartic from five
// determinant evaluations solved as a Vandermonde system, then the
// classical invariants.
inline Rational pencil_j_at(const Rational& t) {
    auto member = [&](const Rational& lam, const Rational& mu) {
        std::vector<std::vector<Rational>> M(4, std::vector<Rational>(4));
        // lam (X1X3 - tX2^2 - tX4^2) + mu (X2X4 - tX1^2 - tX3^2)
        M[0][2] = M[2][0] = lam / 2;
        M[1][3] = M[3][1] = mu / 2;
        M[1][1] = M[3][3] = -lam * t;
        M[0][0] = M[2][2] = -mu * t;
        return det_gauss(M);
    };
    // values at (1, m) give sum_i c_i m^i; solve the 5x5 Vandermonde system.
    std::vector<std::vector<Rational>> V(5, std::vector<Rational>(6));
    for (int m = 0; m < 5; ++m) {
        Rational p(1);
        for (int i = 0; i < 5; ++i, p *= m) V[m][i] = p;
        V[m][5] = member(Rational(1), Rational(m));
    }
    for (int c = 0; c < 5; ++c) {
        int p = c;
        while (sgn(V[p][c]) == 0) ++p;
        std::swap(V[p], V[c]);
        for (int r = 0; r < 5; ++r) {
            if (r == c) continue;
            Rational f = V[r][c] / V[c][c];
            for (int k = c; k < 6; ++k) V[r][k] -= f * V[c][k];
        }
    }
    std::array<Rational, 5> q;
    for (int i = 0; i < 5; ++i) q[i] = V[i][5] / V[i][i];
    const Rational &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
    Rational I = 12 * a * e - 3 * b * d + c * c;
    Rational J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    return 1728 * 4 * I * I * I / (4 * I * I * I - J * J);
}

}  // namespace ellmirror::oracle
