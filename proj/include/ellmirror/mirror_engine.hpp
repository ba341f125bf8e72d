#pragma once
// Broken lines and pairs of pants on the universal cover of the I4 base,
// theta-function structure constants, and the mirror equations.
//
// Monomials live in a global trivialization: a monomial is (r, p) with
// r in Z^2 and p a class over D1..D4 plus section tags. The line from the
// lift v carries (v, phi(v)); a wall on the lift u contributes
// (-k u, [beta] + kF - k phi(u)). A pair ending near R contributes
// z^{p_P + p_Q - phi(R)} to theta_R.

#include "ellmirror/affine_base.hpp"
#include "ellmirror/qseries.hpp"
#include "ellmirror/walls.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

struct Vec2 {
    std::int64_t x = 0, y = 0;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(std::int64_t s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline std::int64_t det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// a0 + a1 eps + a2 eps^2 with eps a positive infinitesimal.
struct EpsNum {
    std::array<Rational, 3> c{};

    int sign() const {
        for (const auto& x : c)
            if (sgn(x) != 0) return sgn(x);
        return 0;
    }
    friend EpsNum operator+(EpsNum a, const EpsNum& b) {
        for (int i = 0; i < 3; ++i) a.c[i] += b.c[i];
        return a;
    }
    friend EpsNum operator-(EpsNum a, const EpsNum& b) {
        for (int i = 0; i < 3; ++i) a.c[i] -= b.c[i];
        return a;
    }
    friend EpsNum operator*(const Rational& s, EpsNum a) {
        for (auto& x : a.c) x *= s;
        return a;
    }
};

struct EpsPoint {
    EpsNum x, y;
};

// Endpoint R + eps d1 + eps^2 d2.
struct Endpoint {
    Vec2 target;
    std::array<Rational, 2> d1{Rational(3, 7), Rational(1)};
    std::array<Rational, 2> d2{Rational(1), Rational(-2, 5)};

    EpsPoint point() const {
        EpsPoint p;
        p.x.c = {Rational(static_cast<long>(target.x)), d1[0], d2[0]};
        p.y.c = {Rational(static_cast<long>(target.y)), d1[1], d2[1]};
        return p;
    }
};

inline Endpoint default_endpoint(Vec2 target) { return Endpoint{target}; }
inline Endpoint alternate_endpoint(Vec2 target) {
    Endpoint e{target};
    e.d1 = {Rational(-5, 11), Rational(1)};
    e.d2 = {Rational(-1), Rational(1, 3)};
    return e;
}

// Chart containing an infinitesimally perturbed point with y > 0.
inline ConeChart chart_of(const EpsPoint& p) {
    if (p.y.sign() <= 0) throw std::domain_error("endpoint must lie in y > 0");
    // Estimate floor(x/y) from the leading nonzero orders, then correct.
    int o = 0;
    while (sgn(p.y.c[o]) == 0) ++o;
    Rational est = p.x.c[o] / p.y.c[o];
    std::int64_t K = floor_div(est) - 1;
    auto below = [&](std::int64_t k) {  // x - k y >= 0
        EpsNum v = p.x - Rational(static_cast<long>(k)) * p.y;
        return v.sign() >= 0;
    };
    while (!below(K)) --K;
    while (below(K + 1)) ++K;
    return ConeChart::containing_slope_floor(K);
}

// ---- monomial classes ----------------------------------------------------

// Class vector over D1..D4 followed by section tags.
struct ClassSpace {
    std::vector<std::string> tags;
    std::vector<std::int64_t> tag_grades;

    std::size_t dim() const { return 4 + tags.size(); }
    std::size_t tag_index(const std::string& t) const {
        for (std::size_t i = 0; i < tags.size(); ++i)
            if (tags[i] == t) return 4 + i;
        throw std::invalid_argument("unknown tag " + t);
    }
    LatticePtr lattice() const {
        std::vector<std::string> l{"D1", "D2", "D3", "D4"};
        std::vector<std::int64_t> w{1, 1, 1, 1};
        l.insert(l.end(), tags.begin(), tags.end());
        w.insert(w.end(), tag_grades.begin(), tag_grades.end());
        return make_lattice(l, w);
    }
    std::int64_t grade(const Exponent& e) const {
        std::int64_t g = e[0] + e[1] + e[2] + e[3];
        for (std::size_t i = 0; i < tags.size(); ++i) g += tag_grades[i] * e[4 + i];
        return g;
    }
    static ClassSpace from(const WallTable& w) {
        ClassSpace s;
        for (const auto& [t, g] : w.tag_grades) {
            s.tags.push_back(t);
            s.tag_grades.push_back(g);
        }
        return s;
    }
};

inline Exponent pl_to_exponent(const PLValue& v, std::size_t dim) {
    Exponent e(dim, 0);
    for (int i = 0; i < 4; ++i) {
        if (v.d[i].get_den() != 1) throw std::logic_error("non-integral phi at an integral point");
        e[i] = v.d[i].get_num().get_si();
    }
    return e;
}

inline Exponent& add_into(Exponent& a, const Exponent& b, std::int64_t s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

// ---- broken lines --------------------------------------------------------

// One term of a wall function, placed on a specific lift of its ray.
struct WallTerm {
    const WallDatum* datum = nullptr;
    Vec2 u;          // primitive direction of this lift
    int k_beta = 1;
    Exponent klass;  // [beta] + kF - k phi(u)
    std::int64_t grade = 0;
};

struct Bend {
    Vec2 ray;                        // primitive direction of the bending ray
    std::vector<const WallTerm*> terms;  // one, or two multiplied together
    Vec2 before, after;              // carried directions
    std::int64_t multiplicity = 1;   // |det(u, before)|
    Rational factor;                 // coefficient picked from f^multiplicity
    EpsPoint at;                     // bend point
};

struct BrokenLine {
    Vec2 asymptotic;        // lift of the initial direction
    std::vector<Bend> bends;
    Vec2 final_direction;   // r(m) at the endpoint
    Rational coefficient;
    Exponent klass;         // p in the global trivialization
    std::int64_t excess_grade = 0;  // grade of p - phi_sigma(r) at the endpoint
    int bend_grade() const {
        return static_cast<int>(asymptotic.y - final_direction.y);
    }
};

enum class PantsShape {
    Unbent,
    OneBendGrade1,
    OneBendGrade2,
    BothBend,
    OneLineTwice,
};

inline const char* shape_name(PantsShape s) {
    switch (s) {
        case PantsShape::Unbent: return "no bends";
        case PantsShape::OneBendGrade1: return "one bend, y-grade 1";
        case PantsShape::OneBendGrade2: return "one bend, y-grade 2";
        case PantsShape::BothBend: return "both lines bend once";
        case PantsShape::OneLineTwice: return "one line bends twice";
    }
    return "?";
}

struct PairOfPants {
    BrokenLine p, q;
    Vec2 target;
    PantsShape shape = PantsShape::Unbent;
    Rational coefficient;
    Exponent klass;  // p_P + p_Q - phi(R)
    EpsPoint end;
};

struct EngineOptions {
    std::int64_t initial_window = 2;
    std::int64_t max_window = 512;
    bool check_all = false;  // trace every candidate, including negative excess
};

class BrokenLineEngine {
public:
    BrokenLineEngine(const WallTable& walls, std::int64_t truncation, EngineOptions opt = {})
        : walls_(walls), space_(ClassSpace::from(walls)), truncation_(truncation), opt_(opt) {
        if (truncation < 1) throw std::invalid_argument("truncation must be at least 1");
        walls_.validate();
    }

    const ClassSpace& space() const { return space_; }
    std::int64_t truncation() const { return truncation_; }
    std::int64_t last_window() const { return last_window_; }

    // All pairs of pants from lifts of P and Q ending near `target`.
    std::vector<PairOfPants> enumerate_pairs(Vec2 P, Vec2 Q, Vec2 target,
                                             const Endpoint* endpoint = nullptr) {
        if (P.y != 1 || Q.y != 1) throw std::invalid_argument("enumerate_pairs needs y(P) = y(Q) = 1");
        if (target.y < 0 || target.y > 2) throw std::invalid_argument("target height must be 0, 1 or 2");
        Endpoint E = endpoint ? *endpoint : default_endpoint(target);
        E.target = target;
        std::vector<PairOfPants> prev;
        bool have_prev = false;
        for (std::int64_t W = opt_.initial_window; W <= opt_.max_window; W *= 2) {
            auto cur = enumerate_with_window(P, Q, E, W);
            if (have_prev && same_pairs(prev, cur)) {
                last_window_ = W;
                return cur;
            }
            prev = std::move(cur);
            have_prev = true;
        }
        throw std::runtime_error("enumerate_pairs: search window did not stabilize");
    }

    // Sum of carried monomials grouped as a series on the class lattice.
    QSeries pair_series(const std::vector<PairOfPants>& pairs) const {
        QSeries s(space_.lattice(), truncation_);
        for (const auto& pp : pairs) s.add_term(pp.klass, pp.coefficient);
        return s;
    }

private:
    struct LineKey {
        Vec2 r;
        friend bool operator<(const LineKey& a, const LineKey& b) { return a.r < b.r; }
    };

    static bool same_pairs(const std::vector<PairOfPants>& a, const std::vector<PairOfPants>& b) {
        if (a.size() != b.size()) return false;
        std::map<Exponent, Rational> sa, sb;
        for (const auto& x : a) sa[x.klass] += x.coefficient;
        for (const auto& x : b) sb[x.klass] += x.coefficient;
        return sa == sb;
    }

    Exponent phi_class(Vec2 v) const { return pl_to_exponent(phi(v.x, v.y), space_.dim()); }

    std::vector<WallTerm> wall_terms(std::int64_t W) const {
        std::vector<WallTerm> out;
        for (const auto& d : walls_.entries) {
            std::int64_t period = d.ray.height == 1 ? 4 : 8;
            for (std::int64_t j = -W; j <= W; ++j) {
                Vec2 u{d.ray.k + period * j, d.ray.height};
                WallTerm t;
                t.datum = &d;
                t.u = u;
                t.k_beta = d.k_beta();
                t.klass = Exponent(space_.dim(), 0);
                t.klass[space_.tag_index(d.class_tag)] += 1;
                for (int i = 0; i < 4; ++i) t.klass[i] += d.fibre_steps;
                add_into(t.klass, phi_class(u), -t.k_beta);
                t.grade = space_.grade(t.klass);
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    // Backward from X along +r, meeting the ray lambda*u with s, lambda > 0.
    static std::optional<EpsPoint> trace(const EpsPoint& X, Vec2 r, Vec2 u) {
        std::int64_t D = -r.x * u.y + u.x * r.y;
        if (D == 0) return std::nullopt;
        Rational invD(1, 1);
        invD /= Rational(static_cast<long>(D));
        EpsNum bx = Rational(-1) * X.x, by = Rational(-1) * X.y;
        EpsNum s = invD * (Rational(static_cast<long>(-u.y)) * bx + Rational(static_cast<long>(u.x)) * by);
        EpsNum lam = invD * (Rational(static_cast<long>(r.x)) * by - Rational(static_cast<long>(r.y)) * bx);
        if (s.sign() <= 0 || lam.sign() <= 0) return std::nullopt;
        EpsPoint B;
        B.x = Rational(static_cast<long>(u.x)) * lam;
        B.y = Rational(static_cast<long>(u.y)) * lam;
        return B;
    }

    struct Context {
        EpsPoint X;
        LinearPL phi_sigma;
        Exponent sigma_x, sigma_y;        // integer form of phi_sigma
        std::int64_t grade_x = 0, grade_y = 0;
        std::vector<WallTerm> terms;
        std::map<int, std::multimap<Vec2, BrokenLine>> by_height;  // final y -> lines keyed by r
    };

    std::int64_t excess(const Context& c, const Exponent& p, Vec2 r, bool& effective) const {
        Exponent e = p;
        add_into(e, c.sigma_x, -r.x);
        add_into(e, c.sigma_y, -r.y);
        effective = true;
        for (auto x : e)
            if (x < 0) effective = false;
        return space_.grade(e);
    }

    // Grade of p - phi_sigma(r) from the grade of p alone. A line with
    // negative excess grade cannot be valid, so it is skipped unless checking.
    bool admissible(const Context& c, std::int64_t grade_p, Vec2 r) const {
        std::int64_t g = grade_p - r.x * c.grade_x - r.y * c.grade_y;
        return g <= truncation_ && (g >= 0 || opt_.check_all);
    }

    void keep(Context& c, BrokenLine line) const {
        bool eff = true;
        line.excess_grade = excess(c, line.klass, line.final_direction, eff);
        if (line.excess_grade > truncation_) return;
        if (!eff)
            throw std::logic_error("broken line carries a monomial outside the monoid at its endpoint");
        c.by_height[static_cast<int>(line.final_direction.y)].emplace(line.final_direction, std::move(line));
    }

    void lines_from(Context& c, Vec2 base, std::int64_t W, int min_final_y) const {
        std::vector<const WallTerm*> simple;
        for (const auto& t : c.terms)
            if (t.datum->tangency == 1) simple.push_back(&t);
        for (std::int64_t j = -W; j <= W; ++j) {
            Vec2 v{base.x + 4 * j, 1};
            Exponent pv = phi_class(v);
            const std::int64_t gv = space_.grade(pv);
            keep(c, BrokenLine{v, {}, v, Rational(1), pv});
            if (min_final_y > 0) continue;

            for (const auto& t : c.terms) {
                std::int64_t e1 = std::llabs(det(t.u, v));
                if (e1 == 0) continue;
                int ygrade = t.datum->tangency;
                if (1 - ygrade < min_final_y) continue;
                Vec2 r1 = v - t.k_beta * t.u;
                const std::int64_t g1 = gv + t.grade;
                auto make = [&](Vec2 r, Rational f) {
                    Exponent p = pv;
                    add_into(p, t.klass);
                    return BrokenLine{v, {}, r, std::move(f), std::move(p)};
                };
                if (admissible(c, g1, r1)) {
                    if (auto B = trace(c.X, r1, t.u)) {
                        BrokenLine l = make(r1, Rational(e1 * t.k_beta) * t.datum->count);
                        l.bends.push_back({t.u, {&t}, v, r1, e1, l.coefficient, *B});
                        keep(c, std::move(l));
                    }
                }
                if (ygrade != 1 || min_final_y > -1) continue;

                for (const WallTerm* t2 : simple) {
                    const std::int64_t g2 = g1 + t2->grade;
                    // A second tangency-one term from the same wall at the same point.
                    if (t2 >= &t && t2->u == t.u) {
                        Vec2 r = r1 - t2->u;
                        auto B = admissible(c, g2, r) ? trace(c.X, r, t.u) : std::nullopt;
                        if (B) {
                            Rational f = Rational(e1 * e1) * t.datum->count * t2->datum->count;
                            if (t2 == &t) f /= 2;
                            BrokenLine l = make(r, f);
                            add_into(l.klass, t2->klass);
                            l.bends.push_back({t.u, {&t, t2}, v, r, e1, f, *B});
                            keep(c, std::move(l));
                        }
                    }
                    // Two separate bends, first on t then on t2.
                    Vec2 r2 = r1 - t2->u;
                    if (!admissible(c, g2, r2)) continue;
                    std::int64_t e2 = std::llabs(det(t2->u, r1));
                    if (e2 == 0) continue;
                    auto B2 = trace(c.X, r2, t2->u);
                    if (!B2) continue;
                    auto B1 = trace(*B2, r1, t.u);
                    if (!B1) continue;
                    Rational f1 = Rational(e1) * t.datum->count, f2 = Rational(e2) * t2->datum->count;
                    BrokenLine l = make(r2, f1 * f2);
                    add_into(l.klass, t2->klass);
                    l.bends.push_back({t.u, {&t}, v, r1, e1, f1, *B1});
                    l.bends.push_back({t2->u, {t2}, r1, r2, e2, f2, *B2});
                    keep(c, std::move(l));
                }
            }
        }
    }

    static PantsShape classify(const BrokenLine& a, const BrokenLine& b) {
        const BrokenLine* bent = nullptr;
        int nb = 0;
        if (!a.bends.empty()) ++nb, bent = &a;
        if (!b.bends.empty()) ++nb, bent = &b;
        if (nb == 0) return PantsShape::Unbent;
        if (nb == 2) return PantsShape::BothBend;
        if (bent->bends.size() == 2) return PantsShape::OneLineTwice;
        return bent->bend_grade() == 1 ? PantsShape::OneBendGrade1 : PantsShape::OneBendGrade2;
    }

    std::vector<PairOfPants> enumerate_with_window(Vec2 P, Vec2 Q, const Endpoint& E, std::int64_t W) const {
        Context cp, cq;
        cp.X = cq.X = E.point();
        cp.phi_sigma = chart_formula(chart_of(cp.X));
        cp.sigma_x = pl_to_exponent(cp.phi_sigma.ax, space_.dim());
        cp.sigma_y = pl_to_exponent(cp.phi_sigma.ay, space_.dim());
        cp.grade_x = space_.grade(cp.sigma_x);
        cp.grade_y = space_.grade(cp.sigma_y);
        cq.phi_sigma = cp.phi_sigma;
        cq.sigma_x = cp.sigma_x;
        cq.sigma_y = cp.sigma_y;
        cq.grade_x = cp.grade_x;
        cq.grade_y = cp.grade_y;
        cp.terms = wall_terms(W);
        cq.terms = cp.terms;
        const Vec2 R = E.target;
        // Final heights: y(r_P) + y(r_Q) = y(R), each in {-1, 0, 1}.
        int min_y = static_cast<int>(R.y) - 1;
        lines_from(cp, P, W, min_y);
        lines_from(cq, Q, W, min_y);
        Exponent phiR = R.y > 0 ? phi_class(R) : Exponent(space_.dim(), 0);

        std::vector<PairOfPants> out;
        for (const auto& [yp, lp] : cp.by_height) {
            int yq = static_cast<int>(R.y) - yp;
            auto itq = cq.by_height.find(yq);
            if (itq == cq.by_height.end()) continue;
            for (const auto& [rp, a] : lp) {
                auto range = itq->second.equal_range(R - rp);
                for (auto it = range.first; it != range.second; ++it) {
                    const BrokenLine& b = it->second;
                    if (a.excess_grade + b.excess_grade > truncation_) continue;
                    PairOfPants pp{a, b, R, classify(a, b), a.coefficient * b.coefficient, a.klass, cp.X};
                    add_into(pp.klass, b.klass);
                    add_into(pp.klass, phiR, -1);
                    for (auto x : pp.klass)
                        if (x < 0) throw std::logic_error("pair of pants with non-effective class");
                    if (space_.grade(pp.klass) != a.excess_grade + b.excess_grade)
                        throw std::logic_error("pair grade does not split into line excesses");
                    out.push_back(std::move(pp));
                }
            }
        }
        return out;
    }

    WallTable walls_;
    ClassSpace space_;
    std::int64_t truncation_;
    EngineOptions opt_;
    std::int64_t last_window_ = 0;
};

// ---- structure constants -------------------------------------------------

// Canonical lifts of the theta functions that can appear in a product of
// two height-one thetas.
struct ThetaTarget {
    std::string name;
    Vec2 lift;
};

inline std::vector<ThetaTarget> theta_targets() {
    std::vector<ThetaTarget> t;
    for (int x = 0; x < 8; ++x) {
        std::string n;
        if (x % 2 == 0) {
            n = "2D" + std::to_string(ray_class(x / 2));
        } else {
            int i = ray_class((x - 1) / 2);
            n = "D" + std::to_string(i) + "+D" + std::to_string(i % 4 + 1);
        }
        t.push_back({n, {x, 2}});
    }
    for (int x = 0; x < 4; ++x) t.push_back({"D" + std::to_string(ray_class(x)), {x, 1}});
    t.push_back({"0", {0, 0}});
    return t;
}

inline Vec2 canonical_lift(int i) { return {i % 4, 1}; }  // D_i, with D4 at (0,1)

struct ProductResult {
    std::map<std::string, QSeries> coefficients;
    std::map<std::string, std::map<PantsShape, std::size_t>> shapes;
    std::map<std::string, bool> endpoint_consistent;  // second endpoint agrees
};

inline ProductResult theta_product_coefficients(Vec2 P, Vec2 Q, const WallTable& walls,
                                                std::int64_t truncation, bool spot_check = true) {
    BrokenLineEngine eng(walls, truncation);
    ProductResult res;
    for (const auto& tg : theta_targets()) {
        auto pairs = eng.enumerate_pairs(P, Q, tg.lift);
        if (pairs.empty()) continue;
        QSeries s = eng.pair_series(pairs);
        for (const auto& pp : pairs) res.shapes[tg.name][pp.shape]++;
        if (spot_check) {
            Endpoint alt = alternate_endpoint(tg.lift);
            auto pairs2 = eng.enumerate_pairs(P, Q, tg.lift, &alt);
            res.endpoint_consistent[tg.name] = eng.pair_series(pairs2) == s;
        }
        if (!s.is_zero()) res.coefficients.emplace(tg.name, std::move(s));
    }
    return res;
}

struct MirrorEquations {
    LatticePtr lattice;
    std::int64_t truncation = 0;
    std::map<std::string, QSeries> families;  // name -> series
    std::map<std::string, bool> endpoint_consistent;
    std::vector<std::string> order;           // stable output order
};

inline MirrorEquations assemble_equations(const WallTable& walls, std::int64_t truncation,
                                          bool spot_check = true) {
    MirrorEquations eq;
    eq.lattice = ClassSpace::from(walls).lattice();
    eq.truncation = truncation;
    auto zero = QSeries(eq.lattice, truncation);
    auto get = [&](const ProductResult& r, const std::string& n) {
        auto it = r.coefficients.find(n);
        return it == r.coefficients.end() ? zero : it->second;
    };
    auto put = [&](const std::string& name, QSeries s) {
        eq.order.push_back(name);
        eq.families.emplace(name, std::move(s));
    };
    auto note = [&](const std::string& prefix, const ProductResult& r) {
        for (const auto& [k, v] : r.endpoint_consistent) eq.endpoint_consistent[prefix + ":" + k] = v;
    };

    auto f = theta_product_coefficients(canonical_lift(1), canonical_lift(3), walls, truncation, spot_check);
    note("D1*D3", f);
    put("f_(2,2)", get(f, "2D2"));
    put("f_(6,2)", get(f, "2D4"));
    for (int i = 1; i <= 4; ++i) put("f_(" + std::to_string(i) + ",1)", get(f, "D" + std::to_string(i)));
    put("f_0", get(f, "0"));

    auto g = theta_product_coefficients(canonical_lift(2), canonical_lift(4), walls, truncation, spot_check);
    note("D2*D4", g);
    put("g_(0,2)", get(g, "2D1"));
    put("g_(4,2)", get(g, "2D3"));
    for (int i = 1; i <= 4; ++i) put("g_(" + std::to_string(i) + ",1)", get(g, "D" + std::to_string(i)));
    put("g_0", get(g, "0"));

    for (int i = 1; i <= 4; ++i) {
        std::string si = std::to_string(i);
        int i2 = (i + 1) % 4 + 1;
        auto r = theta_product_coefficients(canonical_lift(i), canonical_lift(i), walls, truncation, spot_check);
        note("D" + si + "^2", r);
        QSeries lead = get(r, "2D" + si) - QSeries::constant(eq.lattice, truncation, Rational(1));
        put("r^" + si + "_(" + si + ",2)", lead);
        put("r^" + si + "_(" + std::to_string(i2) + ",2)", get(r, "2D" + std::to_string(i2)));
        for (int j = 1; j <= 4; ++j)
            put("r^" + si + "_(" + std::to_string(j) + ",1)", get(r, "D" + std::to_string(j)));
        put("r^" + si + "_0", get(r, "0"));
    }
    return eq;
}

// z^{D_i} -> v and every tag -> v^{grade}.
inline LatticePtr v_lattice() {
    static LatticePtr lat = make_lattice({"v"}, {1});
    return lat;
}

inline QSeries specialize_symmetric(const QSeries& s) {
    const auto& labels = s.lattice().labels();
    if (labels.size() < 4 || labels[0] != "D1" || labels[1] != "D2" || labels[2] != "D3" || labels[3] != "D4")
        throw std::invalid_argument("specialize_symmetric: series must live on the D-lattice");
    QSeries r(v_lattice(), s.truncation());
    for (const auto& [e, c] : s.terms()) r.add_term({s.lattice().grade(e)}, c);
    return r;
}

// Relabels D_i -> D_{i+1} (cyclically) on a D-lattice series.
inline QSeries rotate_classes(const QSeries& s) {
    QSeries r(s.lattice_ptr(), s.truncation());
    for (const auto& [e, c] : s.terms()) {
        Exponent f = e;
        for (int i = 0; i < 4; ++i) f[(i + 1) % 4] = e[i];
        r.add_term(f, c);
    }
    return r;
}

// ---- figures -------------------------------------------------------------

inline double eps_value(const EpsNum& n, double eps) {
    return n.c[0].get_d() + eps * n.c[1].get_d() + eps * eps * n.c[2].get_d();
}

// Pairs of pants drawn on the universal cover, eps rendered as a finite offset.
inline std::string broken_lines_svg(const std::vector<PairOfPants>& pairs, double eps = 0.12,
                                    int kmax = 8) {
    const double unit = 40, W = unit * (2 * kmax + 2), H = 320, ox = W / 2, oy = H / 2;
    auto X = [&](double x) { return ox + unit * x; };
    auto Y = [&](double y) { return oy - unit * y; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int k = -kmax; k <= kmax; ++k)
        s << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(3.5 * k) << "\" y2=\"" << Y(3.5)
          << "\" stroke=\"#bbb\"/>\n";
    const char* colors[] = {"#c0392b", "#2c7fb8"};
    for (const auto& pp : pairs) {
        int which = 0;
        for (const BrokenLine* l : {&pp.p, &pp.q}) {
            std::vector<std::pair<double, double>> pts{{eps_value(pp.end.x, eps), eps_value(pp.end.y, eps)}};
            for (auto it = l->bends.rbegin(); it != l->bends.rend(); ++it)
                pts.emplace_back(eps_value(it->at.x, eps), eps_value(it->at.y, eps));
            auto [lx, ly] = pts.back();
            double len = 6.0 / std::max<double>(1.0, std::hypot(double(l->asymptotic.x), double(l->asymptotic.y)));
            pts.emplace_back(lx + len * l->asymptotic.x, ly + len * l->asymptotic.y);
            s << "<polyline fill=\"none\" stroke=\"" << colors[which++] << "\" points=\"";
            for (auto [x, y] : pts) s << X(x) << "," << Y(y) << " ";
            s << "\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

// ---- the factored single-bend sum ------------------------------------------

struct SingleBendReport {
    QSeries series;
    QSeries phi_sum;           // sum over m, n > 0 of z^{phi(4m+4n) + phi(-4n) - phi(4m)}
    std::size_t index_pairs = 0;
    bool inequality_holds = true;  // grade >= grade(phi(-4n)) + 2m + 2n - 1
};

inline SingleBendReport single_bend_series(const WallTable& walls, std::int64_t truncation) {
    auto space = ClassSpace::from(walls);
    auto lat = space.lattice();
    SingleBendReport rep{QSeries(lat, truncation), QSeries(lat, truncation)};
    // Tangency-one counts as sum_{S,k} I_{S+kF} z^{S+kF}.
    QSeries counts(lat, truncation);
    for (const auto& d : walls.entries) {
        if (d.tangency != 1) continue;
        Exponent e(space.dim(), 0);
        e[space.tag_index(d.class_tag)] = 1;
        for (int i = 0; i < 4; ++i) e[i] += d.fibre_steps;
        counts.add_term(e, d.count);
    }
    if (counts.is_zero()) return rep;
    // The inequality bounds the grade below by 2m + 2n - 1, so m, n <= truncation.
    for (std::int64_t m = 1; m <= truncation + 1; ++m)
        for (std::int64_t n = 1; n <= truncation + 1; ++n) {
            PLValue v = phi(4 * m + 4 * n, 1) + phi(-4 * n, 1) - phi(4 * m, 1);
            if (!v.effective())
                throw std::logic_error("single_bend_series: non-effective exponent at m=" +
                                       std::to_string(m) + " n=" + std::to_string(n));
            Rational lower = phi(-4 * n, 1).grade() + Rational(static_cast<long>(2 * m + 2 * n - 1));
            if (v.grade() < lower) rep.inequality_holds = false;
            Exponent e = pl_to_exponent(v, space.dim());
            if (space.grade(e) > truncation) continue;
            ++rep.index_pairs;
            rep.phi_sum.add_term(e, Rational(1));
        }
    rep.series = counts * rep.phi_sum;
    return rep;
}

}  // namespace ellmirror
