#pragma once
// The mirror fibre of the symmetric locus: j-invariant of the quadric pencil
// X1X3 = tX2^2 + tX4^2, X2X4 = tX1^2 + tX3^2 by two exact routes, Jacobi
// theta numerics, and the modular checks relating the fibre to the thetas.

#include "ellmirror/polynomial.hpp"
#include "ellmirror/qseries.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <array>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

inline Real pi_real() { return boost::math::constants::pi<Real>(); }
inline Complex imag_unit() { return Complex(Real(0), Real(1)); }

inline std::string fmt(const Real& x, int digits = 20) {
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}
inline std::string fmt(const Complex& z, int digits = 20) {
    Real re = z.real(), im = z.imag();
    std::string s = fmt(re, digits);
    s += im < 0 ? " - " : " + ";
    return s + fmt(abs(im), digits) + "i";
}

inline Real real_from(const Rational& r) {
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

// "a+bi", "bi", "a"; a and b decimal or p/q.
inline Complex parse_complex(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw std::invalid_argument("empty complex number");
    auto part = [](const std::string& p) -> Real {
        if (p.empty() || p == "+") return Real(1);
        if (p == "-") return Real(-1);
        if (p.find('/') != std::string::npos) return real_from(parse_rational(p));
        return Real(p);
    };
    if (s.back() != 'i') return Complex(part(s), Real(0));
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string::npos) return Complex(Real(0), part(body));
    return Complex(part(body.substr(0, split)), part(body.substr(split)));
}

// ---- j-invariants ------------------------------------------------------------

inline RationalFunction j_from_modulus(const RationalFunction& k) {
    auto K = RationalFunction::variable(k.variable_name());
    RationalFunction k2 = K * K;
    RationalFunction one(Rational(1));
    RationalFunction j = RationalFunction(Rational(256)) * (k2 * k2 - k2 + one).pow(3) /
                         (k2 * k2 * (k2 - one).pow(2));
    return j.compose(k);
}

inline Rational j_from_modulus(const Rational& k) {
    Rational k2 = k * k;
    if (sgn(k) == 0 || k2 == 1) throw std::domain_error("j_from_modulus: pole at k in {0, 1, -1}");
    Rational n = k2 * k2 - k2 + 1;
    Rational d = k2 * k2 * (k2 - 1) * (k2 - 1);
    return 256 * n * n * n / d;
}

inline Complex j_from_modulus(const Complex& k) {
    Complex k2 = k * k;
    Complex d = k2 * k2 * (k2 - Complex(1)) * (k2 - Complex(1));
    if (abs(d) == 0) throw std::domain_error("j_from_modulus: pole at k in {0, 1, -1}");
    Complex n = k2 * k2 - k2 + Complex(1);
    return Complex(256) * n * n * n / d;
}

// The same formula written in K = k^2.
inline RationalFunction j_from_modulus_squared(const RationalFunction& K) {
    auto x = RationalFunction::variable(K.variable_name());
    RationalFunction one(Rational(1));
    RationalFunction j = RationalFunction(Rational(256)) * (x * x - x + one).pow(3) / (x * x * (x - one).pow(2));
    return j.compose(K);
}

// 1728 * 4A^3 / (4A^3 + 27B^2) for y^2 = x^3 + A x + B.
inline RationalFunction weierstrass_j(const RationalFunction& A, const RationalFunction& B) {
    RationalFunction a3 = RationalFunction(Rational(4)) * A.pow(3);
    RationalFunction den = a3 + RationalFunction(Rational(27)) * B.pow(2);
    if (den.is_zero()) throw std::domain_error("singular Weierstrass curve");
    return RationalFunction(Rational(1728)) * a3 / den;
}

struct WeierstrassData {
    RationalFunction A, B;
};

// Coefficients of the displayed Weierstrass model of the pencil.
inline WeierstrassData pencil_weierstrass() {
    Polynomial A = Polynomial::monomial(Rational(-1, 3), 8) + Polynomial::monomial(Rational(-7, 24), 4) +
                   Polynomial(Rational(-1, 768));
    Polynomial B = Polynomial::monomial(Rational(2, 27), 12) + Polynomial::monomial(Rational(-11, 72), 8) +
                   Polynomial::monomial(Rational(-11, 1152), 4) + Polynomial(Rational(1, 55296));
    return {RationalFunction(A), RationalFunction(B)};
}

// Displayed closed form of j(t).
inline RationalFunction reference_pencil_j() {
    const std::vector<std::pair<long, unsigned>> num = {
        {16777216, 24}, {44040192, 20}, {38731776, 16}, {11583488, 12}, {151296, 8}, {672, 4}, {1, 0}};
    const std::vector<std::pair<long, unsigned>> den = {{65536, 20}, {-16384, 16}, {1536, 12}, {-64, 8}, {1, 4}};
    Polynomial N, D;
    for (auto [c, e] : num) N = N + Polynomial::monomial(Rational(c), e);
    for (auto [c, e] : den) D = D + Polynomial::monomial(Rational(c), e);
    return RationalFunction(N, D);
}

struct BinaryQuartic {
    std::array<Polynomial, 5> c;  // c[i] multiplies lambda^{4-i} mu^i
};

inline Polynomial det4(std::array<std::array<Polynomial, 4>, 4> m) {
    // Laplace expansion along the first row; entries are small polynomials.
    auto det3 = [](const std::array<std::array<Polynomial, 3>, 3>& a) {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    };
    Polynomial d;
    for (int col = 0; col < 4; ++col) {
        std::array<std::array<Polynomial, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c)
                if (c != col) minor[r - 1][cc++] = m[r][c];
        }
        Polynomial term = m[0][col] * det3(minor);
        d = col % 2 == 0 ? d + term : d - term;
    }
    return d;
}

using QuadricMatrix = std::array<std::array<Polynomial, 4>, 4>;

// Symmetric matrices M with Q = X^T M X for the two quadrics of the pencil.
inline std::pair<QuadricMatrix, QuadricMatrix> pencil_quadrics() {
    QuadricMatrix A, B;
    Polynomial half(Rational(1, 2)), mt = Polynomial::monomial(Rational(-1), 1);
    A[0][2] = A[2][0] = half;  // X1 X3
    A[1][1] = A[3][3] = mt;    // -t X2^2 - t X4^2
    B[1][3] = B[3][1] = half;  // X2 X4
    B[0][0] = B[2][2] = mt;    // -t X1^2 - t X3^2
    return {A, B};
}

// det(lambda A + mu B), by interpolation at (1, m), m = 0..4.
inline BinaryQuartic pencil_quartic(const QuadricMatrix& A, const QuadricMatrix& B) {
    std::array<Polynomial, 5> values;
    for (int m = 0; m <= 4; ++m) {
        QuadricMatrix M;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) M[i][j] = A[i][j] + Polynomial(Rational(m)) * B[i][j];
        values[m] = det4(M);
    }
    // Lagrange basis on nodes 0..4 gives the coefficients in mu.
    BinaryQuartic q;
    for (int m = 0; m <= 4; ++m) {
        Polynomial L(Rational(1));
        Rational denom(1);
        for (int k = 0; k <= 4; ++k) {
            if (k == m) continue;
            L = L * Polynomial({Rational(-k), Rational(1)});
            denom *= Rational(m - k);
        }
        for (int i = 0; i <= 4; ++i) q.c[i] = q.c[i] + Polynomial(L.coeff(i) / denom) * values[m];
    }
    bool zero = true;
    for (const auto& c : q.c) zero = zero && c.is_zero();
    if (zero) throw std::domain_error("degenerate pencil: every member is singular");
    return q;
}

struct QuarticInvariants {
    Polynomial I, J;
    RationalFunction j;
};

inline QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
    const auto &a = q.c[0], &b = q.c[1], &c = q.c[2], &d = q.c[3], &e = q.c[4];
    auto R = [](long x) { return Polynomial(Rational(x)); };
    QuarticInvariants inv;
    inv.I = R(12) * a * e - R(3) * b * d + c * c;
    inv.J = R(72) * a * c * e + R(9) * b * c * d - R(27) * a * d * d - R(27) * e * b * b - R(2) * c * c * c;
    Polynomial four_i3 = R(4) * inv.I.pow(3);
    Polynomial disc = four_i3 - inv.J * inv.J;
    if (disc.is_zero()) throw std::domain_error("pencil quartic has a repeated root identically");
    inv.j = RationalFunction(R(1728) * four_i3, disc);
    return inv;
}

struct PencilJ {
    RationalFunction weierstrass_path;
    RationalFunction quartic_path;
    BinaryQuartic quartic;
    bool paths_agree = false;
    std::string convention =
        "Weierstrass display read as y^2 = x^3 + A x + B, j = 1728*4A^3/(4A^3+27B^2); "
        "quartic path j = 1728*4I^3/(4I^3-J^2)";
};

inline PencilJ pencil_j_paths() {
    PencilJ r;
    auto w = pencil_weierstrass();
    r.weierstrass_path = weierstrass_j(w.A, w.B);
    auto [A, B] = pencil_quadrics();
    r.quartic = pencil_quartic(A, B);
    r.quartic_path = quartic_invariants(r.quartic).j;
    r.paths_agree = r.weierstrass_path == r.quartic_path;
    return r;
}

inline RationalFunction pencil_j_invariant() {
    auto p = pencil_j_paths();
    if (!p.paths_agree) throw std::logic_error("pencil j-invariant: the two computation paths disagree");
    return p.weierstrass_path;
}

// j(t) = G(t^2); returns G(s/4), the form in s = 4t^2.
inline RationalFunction j_in_s(const RationalFunction& jt) {
    RationalFunction G = jt.contract_powers(2, "s");
    RationalFunction w = RationalFunction(Polynomial({Rational(0), Rational(1, 4)}), Polynomial(Rational(1)), "s");
    return G.compose(w);
}

inline RationalFunction reference_j_in_s() {
    Polynomial s = Polynomial::x();
    Polynomial n = Polynomial(Rational(16)) *
                   (s.pow(4) + Polynomial::monomial(Rational(14), 2) + Polynomial(Rational(1))).pow(3);
    Polynomial d = s.pow(2) * (s - Polynomial(Rational(1))).pow(4) * (s + Polynomial(Rational(1))).pow(4);
    return RationalFunction(n, d, "s");
}

// Jacobi modulus of the pencil: k = (t^2 + 1/4)/t.
inline RationalFunction pencil_modulus() {
    return RationalFunction(Polynomial({Rational(1, 4), Rational(0), Rational(1)}), Polynomial::x(), "t");
}

// k^2 = (u + 1/4)^2 / u.
inline RationalFunction pencil_modulus_squared_in_u() {
    Polynomial p({Rational(1, 4), Rational(1)});
    return RationalFunction(p * p, Polynomial::x(), "u");
}

// ---- Jacobi thetas -------------------------------------------------------------

struct ThetaValue {
    Complex rho;
    Complex q;                       // exp(i pi rho)
    std::array<Complex, 4> theta;    // Theta_1..Theta_4 at z = 0
    std::array<Real, 4> error{};     // certified bound on the omitted tail
    int kind = 3;
    int terms = 0;

    const Complex& value() const { return theta[static_cast<std::size_t>(kind - 1)]; }
    const Complex& operator[](int i) const { return theta.at(static_cast<std::size_t>(i - 1)); }
};

// Theta_2 = sum q^{(n+1/2)^2}, Theta_3 = sum q^{n^2}, Theta_4 = sum (-1)^n q^{n^2}.
inline ThetaValue theta_values(const Complex& rho, const Real& tol) {
    if (!(rho.imag() > 0)) throw std::domain_error("theta: Im rho must be positive");
    if (!(tol > 0)) throw std::invalid_argument("theta: tolerance must be positive");
    const Complex ipi = imag_unit() * Complex(pi_real());
    ThetaValue v;
    v.rho = rho;
    v.q = exp(ipi * rho);
    const Real aq = abs(v.q);
    const Complex q2 = v.q * v.q;
    const Complex q4th = exp(ipi * rho / Complex(4));

    Complex s3(1), s4(1), s2(1);  // s2 = sum_{n>=0} q^{n(n+1)}
    Complex pn2(1), step = v.q;   // q^{n^2}, q^{2n+1}
    Complex pnn(1), step2 = q2;   // q^{n(n+1)}, q^{2n+2}
    int n = 0;
    Real tail3, tail2;
    for (;;) {
        pn2 *= step;
        step *= q2;
        pnn *= step2;
        step2 *= q2;
        ++n;
        s3 += Complex(2) * pn2;
        s4 += Complex(n % 2 ? -2 : 2) * pn2;
        s2 += pnn;
        // Tails after n terms, bounded by a geometric series.
        Real a = pow(aq, (n + 1) * (n + 1)), r = pow(aq, 2 * n + 3);
        tail3 = 2 * a / (1 - r);
        Real b = pow(aq, (n + 1) * (n + 2)), r2 = pow(aq, 2 * n + 4);
        tail2 = 2 * abs(q4th) * b / (1 - r2);
        if ((tail3 <= tol && tail2 <= tol) || n > 100000) break;
    }
    if (tail3 > tol || tail2 > tol) throw std::runtime_error("theta: series did not reach the tolerance");
    v.theta = {Complex(0), Complex(2) * q4th * s2, s3, s4};
    v.error = {Real(0), tail2, tail3, tail3};
    v.terms = n;
    return v;
}

inline ThetaValue theta(int kind, const Complex& rho, const Real& tol) {
    if (kind < 1 || kind > 4) throw std::invalid_argument("theta kind must be 1..4");
    auto v = theta_values(rho, tol);
    v.kind = kind;
    return v;
}

struct IdentityCheck {
    std::string identity;
    Complex lhs, rhs;
    Real residual;
    Real tolerance;
    bool pass = false;
};

inline Real relative_residual(const Complex& a, const Complex& b) {
    Real scale = std::max(abs(b), Real(1e-300));
    return abs(a - b) / scale;
}

inline IdentityCheck make_check(std::string name, const Complex& l, const Complex& r, const Real& tol) {
    IdentityCheck c{std::move(name), l, r, relative_residual(l, r), tol, false};
    c.pass = c.residual <= tol;
    return c;
}

inline const Real& default_theta_tol() {
    static const Real t("1e-60");
    return t;
}

// Jacobi quartic identity and the half-period identity at rho.
inline std::vector<IdentityCheck> theta_identities(const Complex& rho, const Real& tol) {
    auto a = theta_values(rho, default_theta_tol());
    auto h = theta_values(rho / Complex(2), default_theta_tol());
    std::vector<IdentityCheck> out;
    auto p4 = [](const Complex& z) { return z * z * z * z; };
    out.push_back(make_check("Theta3^4 = Theta2^4 + Theta4^4", p4(a[3]), p4(a[2]) + p4(a[4]), tol));
    out.push_back(make_check("(Theta2^2+Theta3^2)/(2 Theta2 Theta3) = Theta3(rho/2)^2/Theta2(rho/2)^2",
                             (a[2] * a[2] + a[3] * a[3]) / (Complex(2) * a[2] * a[3]),
                             h[3] * h[3] / (h[2] * h[2]), tol));
    return out;
}

// ---- symmetric-locus bridge ----------------------------------------------------

inline Complex evaluate_v_series(const QSeries& s, const Complex& v) {
    if (s.lattice().rank() != 1) throw std::invalid_argument("expected a one-variable series");
    if (!(abs(v) < 1)) throw std::domain_error("series evaluation needs |v| < 1");
    Complex r(0);
    for (const auto& [e, c] : s.terms())
        r += Complex(real_from(c)) * pow(v, static_cast<int>(e[0]));
    return r;
}

struct BridgeIdentity {
    IdentityCheck check;     // lhs: series at v, rhs: declared constant times theta combination
    Complex fitted_constant; // lhs / theta combination
    Rational declared_constant;
    Real truncation_bound;   // omitted series tail bound
};

struct BridgeReport {
    Complex rho, v;
    Complex t;               // Theta2 / (2 Theta3)
    std::vector<BridgeIdentity> identities;
    std::string convention =
        "q = exp(i*pi*rho), v = q^(1/4); f ~ Theta2/2, 1+r ~ (Theta3+Theta4)/2, r' ~ (Theta3-Theta4)/2";
    bool all_pass = true;
};

inline BridgeReport symmetric_locus_bridge(const QSeries& f, const QSeries& one_plus_r, const QSeries& r_cross,
                                           const Complex& rho, const Real& tol = Real("1e-8")) {
    for (const QSeries* s : {&f, &one_plus_r, &r_cross})
        if (s->truncation() < 49) throw std::invalid_argument("bridge needs series to grade at least 49");
    const Complex ipi = imag_unit() * Complex(pi_real());
    BridgeReport rep;
    rep.rho = rho;
    rep.v = exp(ipi * rho / Complex(4));
    if (!(abs(rep.v) < 1)) throw std::domain_error("bridge: |v| >= 1");
    auto th = theta_values(rho, default_theta_tol());
    rep.t = th[2] / (Complex(2) * th[3]);
    auto add = [&](std::string name, const QSeries& s, const Complex& target, Rational c) {
        Complex lhs = evaluate_v_series(s, rep.v);
        Real av = abs(rep.v);
        Real bound = 2 * pow(av, static_cast<int>(s.truncation() + 1)) / (1 - av);
        BridgeIdentity b{make_check(std::move(name), lhs, Complex(real_from(c)) * target, tol), lhs / target, c,
                         bound};
        rep.all_pass = rep.all_pass && b.check.pass;
        rep.identities.push_back(std::move(b));
    };
    add("f(v) = c * Theta2", f, th[2], Rational(1, 2));
    add("(1+r)(v) = c * (Theta3+Theta4)", one_plus_r, th[3] + th[4], Rational(1, 2));
    add("r'(v) = c * (Theta3-Theta4)", r_cross, th[3] - th[4], Rational(1, 2));
    return rep;
}

// ---- modular consistency -------------------------------------------------------

struct ModularReport {
    Complex rho, tau;                  // tau = rho / (2 - rho)
    Complex k_pencil, k_tau;           // k(t(rho)) and Theta2(tau)^2/Theta3(tau)^2
    Complex j_pencil, j_tau;
    std::vector<IdentityCheck> checks;
    bool all_pass = true;
};

inline ModularReport modular_consistency(const Complex& rho, const Real& ratio_tol = Real("1e-12"),
                                         const Real& j_tol = Real("1e-8")) {
    ModularReport rep;
    rep.rho = rho;
    const Real& T = default_theta_tol();
    auto a = theta_values(rho, T);
    auto b = theta_values(rho + Complex(1), T);
    auto s = theta_values(Complex(-1) / rho, T);
    const Complex e8 = exp(imag_unit() * Complex(pi_real() / 4));
    rep.checks.push_back(make_check("Theta3/Theta4 (rho) = Theta4/Theta3 (rho+1)", a[3] / a[4], b[4] / b[3], ratio_tol));
    rep.checks.push_back(
        make_check("Theta2/Theta3 (rho+1) = e^{i pi/4} Theta2/Theta4 (rho)", b[2] / b[3], e8 * a[2] / a[4], ratio_tol));
    rep.checks.push_back(make_check("Theta2/Theta3 (-1/rho) = Theta4/Theta3 (rho)", s[2] / s[3], a[4] / a[3], ratio_tol));
    rep.checks.push_back(make_check("Theta4/Theta3 (-1/rho) = Theta2/Theta3 (rho)", s[4] / s[3], a[2] / a[3], ratio_tol));

    rep.tau = rho / (Complex(2) - rho);
    auto c = theta_values(rep.tau, T);
    Complex t = a[2] / (Complex(2) * a[3]);
    rep.k_pencil = t + Complex(1) / (Complex(4) * t);
    rep.k_tau = c[2] * c[2] / (c[3] * c[3]);
    rep.j_pencil = j_from_modulus(rep.k_pencil);
    rep.j_tau = j_from_modulus(rep.k_tau);
    rep.checks.push_back(make_check("j(k_pencil(rho)) = j(k(rho/(2-rho)))", rep.j_pencil, rep.j_tau, j_tol));
    for (const auto& ch : rep.checks) rep.all_pass = rep.all_pass && ch.pass;
    return rep;
}

struct CuspPoint {
    Real im_rho;
    Real abs_k, abs_j;
};

// |k| and |j| of the pencil fibre along rho = i*y.
inline std::vector<CuspPoint> cusp_profile(const std::vector<Real>& ys) {
    std::vector<CuspPoint> out;
    for (const auto& y : ys) {
        auto a = theta_values(Complex(Real(0), y), default_theta_tol());
        Complex t = a[2] / (Complex(2) * a[3]);
        Complex k = t + Complex(1) / (Complex(4) * t);
        out.push_back({y, abs(k), abs(j_from_modulus(k))});
    }
    return out;
}

// ---- the (1,1,2) double-cover family -------------------------------------------

inline const std::vector<std::string>& family_variables() {
    static const std::vector<std::string> v{"x1", "y1", "x2", "y2", "x3", "y3"};
    return v;
}

inline MPoly example_family() {
    const auto& V = family_variables();
    auto x = [&](const char* n) { return MPoly::var(V, n); };
    return x("x1") * x("x2") * x("x3") * x("x3") + x("x1") * x("y2") * x("x3") * x("y3") +
           Rational(2) * x("y1") * x("x2") * x("x3") * x("y3") + x("y1") * x("y2") * x("y3") * x("y3");
}

// All 12 monomials of tridegree (1,1,2) with pseudo-random integer coefficients.
inline MPoly generic_family(unsigned seed = 7) {
    const auto& V = family_variables();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-9, 9);
    MPoly F(V);
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 2; ++c) {
                int v = 0;
                while (v == 0) v = coef(rng);
                F.add_term({a, 1 - a, b, 1 - b, c, 2 - c}, Rational(v));
            }
    return F;
}

struct FibreFactorization {
    std::vector<int> multiplicities;  // one entry per distinct root in P^1, sorted descending
};

// Roots in P^1 (with multiplicity) of a binary form in (x, y) over Q-bar.
inline FibreFactorization binary_form_roots(const MPoly& f, const std::string& x, const std::string& y) {
    std::size_t ix = f.index(x), iy = f.index(y);
    int total = -1;
    std::vector<Rational> c;
    for (const auto& [m, a] : f.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != ix && i != iy && m[i] != 0) throw std::invalid_argument("binary form has extra variables");
        int d = m[ix] + m[iy];
        if (total < 0) total = d;
        if (d != total) throw std::invalid_argument("binary form is not homogeneous");
        if (c.size() <= static_cast<std::size_t>(m[ix])) c.resize(static_cast<std::size_t>(m[ix]) + 1);
        c[static_cast<std::size_t>(m[ix])] = a;
    }
    FibreFactorization out;
    if (total < 0) throw std::domain_error("zero binary form");
    Polynomial p(c);  // f(x, 1)
    int at_infinity = total - p.degree();
    if (at_infinity > 0) out.multiplicities.push_back(at_infinity);
    for (const auto& [mult, P] : squarefree_decomposition(p))
        for (int i = 0; i < P.degree(); ++i) out.multiplicities.push_back(mult);
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    return out;
}

struct FamilyDiscriminant {
    MPoly family;
    MPoly branch;      // discriminant in (x3, y3): the branch curve of the double cover
    MPoly secondary;   // discriminant of the branch curve in (x1, y1): a binary form in (x2, y2)
    FibreFactorization singular_fibres;
    std::string summary;
};

inline FamilyDiscriminant family_discriminant(const MPoly& F) {
    FamilyDiscriminant r{F, quadratic_discriminant(F, "x3", "y3"), MPoly(F.variables()), {}, {}};
    r.secondary = quadratic_discriminant(r.branch, "x1", "y1");
    r.singular_fibres = binary_form_roots(r.secondary, "x2", "y2");
    const auto& m = r.singular_fibres.multiplicities;
    bool uniform = std::all_of(m.begin(), m.end(), [&](int x) { return x == m.front(); });
    r.summary = std::to_string(m.size()) + " singular fibres";
    if (!m.empty() && uniform && m.front() > 1) r.summary += " each with multiplicity " + std::to_string(m.front());
    return r;
}

inline FamilyDiscriminant family_discriminant() { return family_discriminant(example_family()); }

}  // namespace ellmirror
