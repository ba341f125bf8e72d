#pragma once
// Universal cover {y > 0} of the dual intersection complex of (S, I4 fibre)
// and the piecewise-linear function phi, lifted to vanish on the cone
// spanned by (0,1) and (1,1).
//
// Ray (k,1) carries kink D_{((k-1) mod 4)+1}. Monodromy is (x,y) -> (x+4y, y).

#include "ellmirror/rational.hpp"

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

struct UCoverPoint {
    Rational x;
    Rational y;
};

// Coefficients over D1..D4; F = (1,1,1,1).
struct PLValue {
    std::array<Rational, 4> d{};

    static PLValue D(int i) {
        if (i < 1 || i > 4) throw std::out_of_range("D index");
        PLValue v;
        v.d[i - 1] = 1;
        return v;
    }
    static PLValue F() {
        PLValue v;
        for (auto& c : v.d) c = 1;
        return v;
    }
    Rational grade() const { return d[0] + d[1] + d[2] + d[3]; }
    bool effective() const {
        for (const auto& c : d)
            if (sgn(c) < 0) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : d)
            if (sgn(c) != 0) return false;
        return true;
    }

    PLValue& operator+=(const PLValue& o) {
        for (int i = 0; i < 4; ++i) d[i] += o.d[i];
        return *this;
    }
    PLValue& operator-=(const PLValue& o) {
        for (int i = 0; i < 4; ++i) d[i] -= o.d[i];
        return *this;
    }
    friend PLValue operator+(PLValue a, const PLValue& b) { return a += b; }
    friend PLValue operator-(PLValue a, const PLValue& b) { return a -= b; }
    friend PLValue operator*(const Rational& s, PLValue a) {
        for (auto& c : a.d) c *= s;
        return a;
    }
    friend bool operator==(const PLValue& a, const PLValue& b) { return a.d == b.d; }
    friend bool operator!=(const PLValue& a, const PLValue& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (sgn(d[i]) == 0) continue;
            std::string c = to_string(d[i]);
            if (!s.empty() && c[0] != '-') s += "+";
            if (c == "1") c = "";
            if (c == "-1") c = "-";
            s += c + "D" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }
};

// Class index 1..4 of the kink along (k,1).
inline int ray_class(std::int64_t k) {
    std::int64_t r = (k - 1) % 4;
    if (r < 0) r += 4;
    return static_cast<int>(r) + 1;
}

// Cone <(4n+j,1),(4n+j+1,1)>, j in 0..3.
struct ConeChart {
    std::int64_t n = 0;
    int j = 0;

    std::int64_t left() const { return 4 * n + j; }
    std::int64_t right() const { return 4 * n + j + 1; }

    static ConeChart containing_slope_floor(std::int64_t K) {
        std::int64_t n = K >= 0 ? K / 4 : -((-K + 3) / 4);
        return {n, static_cast<int>(K - 4 * n)};
    }
};

// phi on a chart is x*ax + y*ay.
struct LinearPL {
    PLValue ax;
    PLValue ay;
    PLValue operator()(const Rational& x, const Rational& y) const { return x * ax + y * ay; }
};

inline LinearPL chart_formula(const ConeChart& c) {
    const Rational n(static_cast<long>(c.n));
    LinearPL f;
    f.ax = n * PLValue::F();
    for (int i = 0; i < c.j; ++i) f.ax += PLValue::D(i + 1);
    Rational y1 = c.j >= 1 ? Rational((n + 1) * (2 * n + 1)) : Rational(n * (2 * n - 1));
    Rational y2 = c.j >= 2 ? Rational(2 * (n + 1) * (n + 1)) : Rational(2 * n * n);
    Rational y3 = c.j >= 3 ? Rational((n + 1) * (2 * n + 3)) : Rational(n * (2 * n + 1));
    Rational y4 = n * (2 * n + 2);
    f.ay.d = {-y1, -y2, -y3, -y4};
    return f;
}

inline std::int64_t floor_div(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f.get_si();
}

// Chart whose closure contains p; on a ray the chart on the right is used.
inline ConeChart chart_of(const UCoverPoint& p) {
    if (sgn(p.y) <= 0) throw std::domain_error("phi: point must have y > 0");
    return ConeChart::containing_slope_floor(floor_div(p.x / p.y));
}

inline PLValue phi(const UCoverPoint& p) {
    return chart_formula(chart_of(p))(p.x, p.y);
}
inline PLValue phi(std::int64_t x, std::int64_t y) {
    return phi(UCoverPoint{Rational(static_cast<long>(x)), Rational(static_cast<long>(y))});
}

// Bend of phi across (k,1): right chart minus left chart equals (x - k y) * kink.
inline PLValue kink(std::int64_t k) {
    auto right = chart_formula(ConeChart::containing_slope_floor(k));
    auto left = chart_formula(ConeChart::containing_slope_floor(k - 1));
    PLValue dx = right.ax - left.ax;
    PLValue dy = right.ay - left.ay;
    if (dy != Rational(static_cast<long>(-k)) * dx)
        throw std::logic_error("kink: chart difference is not a multiple of x - k y");
    return dx;
}

inline Rational y_grade(const UCoverPoint& v) { return v.y; }

struct PhiBoundCheck {
    std::int64_t m = 0;
    PLValue difference;       // phi(m,1) - phi(m-1,1)
    PLValue bound;            // coefficient times the named D
    bool componentwise = false;
    bool graded = false;      // grade comparison only
};

inline bool dominates(const PLValue& a, const PLValue& b) { return (a - b).effective(); }

// Bound as stated: for m > 1, (2 floor(m/4) - 1) D_{m-1}; for m < 0,
// (1 - 2 floor(m/4)) D_{m+1}; D indices mod 4 with D_0 = D_4.
inline PhiBoundCheck phi_difference_bound(std::int64_t m) {
    if (m >= 0 && m <= 1) throw std::domain_error("phi_difference_bound needs m > 1 or m < 0");
    auto fl4 = [](std::int64_t a) { return a >= 0 ? a / 4 : -((-a + 3) / 4); };
    auto idx = [](std::int64_t i) {
        std::int64_t r = i % 4;
        if (r <= 0) r += 4;
        return static_cast<int>(r);
    };
    PhiBoundCheck c;
    c.m = m;
    c.difference = phi(m, 1) - phi(m - 1, 1);
    if (m > 1)
        c.bound = Rational(static_cast<long>(2 * fl4(m) - 1)) * PLValue::D(idx(m - 1));
    else
        c.bound = Rational(static_cast<long>(1 - 2 * fl4(m))) * PLValue::D(idx(m + 1));
    c.componentwise = dominates(c.difference, c.bound);
    c.graded = c.difference.grade() >= c.bound.grade();
    return c;
}

// Image of the m > 1 bound under the reflection x -> 1 - x, D_i -> D_{5-i}:
// for m < 0, phi(m,1) - phi(m+1,1) >= (2 floor((1-m)/4) - 1) D_{m+1}.
inline PhiBoundCheck phi_difference_bound_reflected(std::int64_t m) {
    if (m >= 0) throw std::domain_error("reflected bound needs m < 0");
    auto idx = [](std::int64_t i) {
        std::int64_t r = i % 4;
        if (r <= 0) r += 4;
        return static_cast<int>(r);
    };
    PhiBoundCheck c;
    c.m = m;
    c.difference = phi(m, 1) - phi(m + 1, 1);
    c.bound = Rational(static_cast<long>(2 * ((1 - m) / 4) - 1)) * PLValue::D(idx(m + 1));
    c.componentwise = dominates(c.difference, c.bound);
    c.graded = c.difference.grade() >= c.bound.grade();
    return c;
}

// Figure of the base: rays (k,1) for |k| <= kmax, the cone C shaded, kink labels.
inline std::string base_svg(int kmax = 8, bool label_phi = false) {
    const int W = 40 * (2 * kmax + 2), H = 260, ox = W / 2, oy = H - 20;
    const int unit = 40;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<polygon points=\"" << ox << "," << oy << " " << ox << "," << oy - 2 * unit << " "
      << ox + 2 * unit << "," << oy - 2 * unit << "\" fill=\"#dde8f5\"/>\n";
    s << "<line x1=\"0\" y1=\"" << oy << "\" x2=\"" << W << "\" y2=\"" << oy
      << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (int k = -kmax; k <= kmax; ++k) {
        // Clip the ray at height 2.
        int x2 = ox + 2 * k * unit, y2 = oy - 2 * unit;
        s << "<line x1=\"" << ox << "\" y1=\"" << oy << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        int px = ox + k * unit, py = oy - unit;
        s << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"2.5\" fill=\"black\"/>\n";
        s << "<text x=\"" << px + 3 << "\" y=\"" << py - 4
          << "\" font-size=\"10\" font-family=\"sans-serif\">D" << ray_class(k) << "</text>\n";
        if (label_phi)
            s << "<text x=\"" << px + 3 << "\" y=\"" << py + 12
              << "\" font-size=\"7\" font-family=\"sans-serif\">" << phi(k, 1).str() << "</text>\n";
    }
    s << "<text x=\"" << ox + 4 << "\" y=\"" << oy - 2 * unit + 12
      << "\" font-size=\"10\" font-family=\"sans-serif\">C</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace ellmirror
