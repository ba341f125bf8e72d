#pragma once
// Exact univariate polynomials and rational functions over Q, and sparse
// multivariate polynomials for discriminant work.

#include "ellmirror/rational.hpp"

#include <map>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellmirror {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    Polynomial(const Rational& a) : c_{a} { trim(); }  // NOLINT: constants convert

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial monomial(const Rational& a, std::size_t n) {
        std::vector<Rational> c(n + 1);
        c[n] = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    template <class T>
    T eval(const T& x) const {
        T r = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_field<T>(*it);
        return r;
    }
    Rational eval(const Rational& x) const { return eval<Rational>(x); }

    Polynomial derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial r = *this;
        Rational l = leading();
        for (auto& a : r.c_) a /= l;
        return r;
    }

    // p(q(x)).
    Polynomial compose(const Polynomial& q) const {
        Polynomial r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Polynomial(*it);
        return r;
    }

    // p(x) = g(x^m) -> g; throws if p is not a polynomial in x^m.
    Polynomial contract_powers(std::size_t m) const {
        std::vector<Rational> g;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % m != 0) {
                if (sgn(c_[i]) != 0) throw std::domain_error("polynomial is not a function of x^m");
                continue;
            }
            g.push_back(c_[i]);
        }
        return Polynomial(std::move(g));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned n) const {
        Polynomial r(Rational(1)), b = *this;
        for (; n; n >>= 1, b = b * b)
            if (n & 1) r = r * b;
        return r;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rational& a = c_[static_cast<std::size_t>(i)];
            if (sgn(a) == 0) continue;
            std::string num = to_string(abs(a));
            s += s.empty() ? (sgn(a) < 0 ? "-" : "") : (sgn(a) < 0 ? " - " : " + ");
            if (i == 0) {
                s += num;
            } else {
                if (num != "1") s += num + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    template <class T>
    static T to_field(const Rational& r) {
        if constexpr (std::is_same_v<T, Rational>) {
            return r;
        } else {
            return T(r.get_num().get_str().c_str()) / T(r.get_den().get_str().c_str());
        }
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Polynomial t = Polynomial::monomial(r.leading() / b.leading(),
                                            static_cast<std::size_t>(r.degree() - b.degree()));
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Square-free decomposition p = c * prod P_i^i; returns {i -> P_i} for P_i nonconstant.
inline std::map<int, Polynomial> squarefree_decomposition(const Polynomial& p) {
    std::map<int, Polynomial> out;
    if (p.degree() <= 0) return out;
    Polynomial a = p.monic();
    Polynomial b = gcd(a, a.derivative());
    Polynomial c = divmod(a, b).first;
    Polynomial d = divmod(a.derivative(), b).first - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        Polynomial y = gcd(c, d);
        if (y.degree() > 0) out[i] = y;
        c = divmod(c, y).first;
        d = divmod(d, y).first - c.derivative();
    }
    return out;
}

// Reduced quotient num/den with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(Polynomial n, Polynomial d = Polynomial(Rational(1)), std::string var = "t")
        : num_(std::move(n)), den_(std::move(d)), var_(std::move(var)) {
        normalize();
    }
    RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT

    static RationalFunction variable(std::string var = "t") {
        return RationalFunction(Polynomial::x(), Polynomial(Rational(1)), std::move(var));
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    const std::string& variable_name() const { return var_; }
    RationalFunction renamed(std::string v) const {
        RationalFunction r = *this;
        r.var_ = std::move(v);
        return r;
    }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
        return num_.eval(x) / d;
    }
    template <class T>
    T eval(const T& x) const {
        return num_.eval<T>(x) / den_.eval<T>(x);
    }

    // this(r).
    RationalFunction compose(const RationalFunction& r) const {
        auto homogenize = [&](const Polynomial& p, int deg) {
            Polynomial acc;
            for (int i = 0; i <= p.degree(); ++i)
                acc = acc + Polynomial(p.coeff(static_cast<std::size_t>(i))) *
                                r.num_.pow(static_cast<unsigned>(i)) *
                                r.den_.pow(static_cast<unsigned>(deg - i));
            return acc;
        };
        int deg = std::max(num_.degree(), den_.degree());
        if (deg < 0) deg = 0;
        return RationalFunction(homogenize(num_, deg), homogenize(den_, deg), r.var_);
    }

    RationalFunction contract_powers(std::size_t m, std::string var) const {
        return RationalFunction(num_.contract_powers(m), den_.contract_powers(m), std::move(var));
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_, a.var_}; }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_, a.var_};
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(unsigned n) const { return {num_.pow(n), den_.pow(n), var_}; }

    // num/den rescaled so the denominator has coprime integer coefficients.
    std::pair<Polynomial, Polynomial> integer_form() const {
        Integer l = 1;
        for (const auto& c : den_.coefficients()) l = lcm(l, Integer(c.get_den()));
        Integer g = 0;
        for (const auto& c : den_.coefficients()) g = gcd(g, Integer(c * l));
        Polynomial scale(Rational(l) / g);
        return {num_ * scale, den_ * scale};
    }

    std::string str() const {
        if (den_ == Polynomial(Rational(1))) return num_.str(var_);
        return "(" + num_.str(var_) + ") / (" + den_.str(var_) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        Rational inv = 1 / den_.leading();
        num_ = num_ * Polynomial(inv);
        den_ = den_ * Polynomial(inv);
    }

    Polynomial num_, den_;
    std::string var_ = "t";
};

// Sparse polynomial in named variables.
class MPoly {
public:
    using Monomial = std::vector<int>;

    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly var(const std::vector<std::string>& vars, const std::string& name) {
        MPoly p(vars);
        Monomial m(vars.size(), 0);
        m.at(p.index(name)) = 1;
        p.terms_[m] = 1;
        return p;
    }
    static MPoly constant(const std::vector<std::string>& vars, const Rational& c) {
        MPoly p(vars);
        if (sgn(c) != 0) p.terms_[Monomial(vars.size(), 0)] = c;
        return p;
    }

    std::size_t index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("unknown variable " + name);
    }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c) {
        auto& slot = terms_[m];
        slot += c;
        if (sgn(slot) == 0) terms_.erase(m);
    }

    // Part with deg_x = i and deg_y = j, those two variables removed (set to exponent 0).
    MPoly bidegree_part(const std::string& x, const std::string& y, int i, int j) const {
        std::size_t ix = index(x), iy = index(y);
        MPoly r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m[ix] != i || m[iy] != j) continue;
            Monomial n = m;
            n[ix] = n[iy] = 0;
            r.add_term(n, c);
        }
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& kv : r.terms_) kv.second = -kv.second;
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const Rational& s, const MPoly& a) { return MPoly::constant(a.vars_, s) * a; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        // Descending monomial order for a stable, readable display.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string num = to_string(abs(c));
            s += s.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
            std::string mon;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                mon += vars_[i];
                if (m[i] > 1) mon += "^" + std::to_string(m[i]);
            }
            if (mon.empty()) s += num;
            else s += (num == "1" ? "" : num + "*") + mon;
        }
        return s;
    }

private:
    std::vector<std::string> vars_;
    std::map<Monomial, Rational> terms_;
};

// b^2 - 4ac for F = a x^2 + b x y + c y^2 (F must be a quadratic form in x, y).
inline MPoly quadratic_discriminant(const MPoly& F, const std::string& x, const std::string& y) {
    std::size_t ix = F.index(x), iy = F.index(y);
    for (const auto& [m, c] : F.terms())
        if (m[ix] + m[iy] != 2) throw std::invalid_argument("not a quadratic form in " + x + ", " + y);
    MPoly a = F.bidegree_part(x, y, 2, 0), b = F.bidegree_part(x, y, 1, 1), c = F.bidegree_part(x, y, 0, 2);
    return b * b - Rational(4) * a * c;
}

}  // namespace ellmirror
