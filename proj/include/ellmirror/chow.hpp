#pragma once
// The ring Q[H1..H4]/(H1^3, H2^2, H3^2, H4^2), with coefficients in any
// commutative ring T (exact rationals, or QSeries for the tensored case).

#include "ellmirror/qseries.hpp"
#include "ellmirror/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

using ChowMonomial = std::array<int, 4>;

constexpr std::array<int, 4> kChowMaxPower{2, 1, 1, 1};
constexpr std::size_t kChowDim = 24;
constexpr ChowMonomial kChowTop{2, 1, 1, 1};

constexpr std::size_t chow_index(const ChowMonomial& m) {
    return static_cast<std::size_t>(m[0] * 8 + m[1] * 4 + m[2] * 2 + m[3]);
}
constexpr ChowMonomial chow_monomial(std::size_t idx) {
    return {static_cast<int>(idx / 8), static_cast<int>((idx / 4) % 2),
            static_cast<int>((idx / 2) % 2), static_cast<int>(idx % 2)};
}
constexpr int chow_degree(const ChowMonomial& m) { return m[0] + m[1] + m[2] + m[3]; }
constexpr bool chow_valid(const ChowMonomial& m) {
    for (int i = 0; i < 4; ++i)
        if (m[i] < 0 || m[i] > kChowMaxPower[i]) return false;
    return true;
}

inline std::string chow_monomial_name(const ChowMonomial& m) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "H" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

template <class T>
class Chow {
public:
    explicit Chow(T zero) : zero_(zero), c_(kChowDim, zero) {}

    static Chow scalar(const T& s, const T& zero) {
        Chow r(zero);
        r.c_[0] = s;
        return r;
    }
    // H_i, i in 1..4.
    static Chow generator(int i, const T& one, const T& zero) {
        if (i < 1 || i > 4) throw std::out_of_range("Chow generator index");
        Chow r(zero);
        ChowMonomial m{0, 0, 0, 0};
        m[i - 1] = 1;
        r.c_[chow_index(m)] = one;
        return r;
    }

    const T& operator[](std::size_t idx) const { return c_.at(idx); }
    T& operator[](std::size_t idx) { return c_.at(idx); }
    const T& at(const ChowMonomial& m) const { return c_.at(chow_index(m)); }
    T& at(const ChowMonomial& m) { return c_.at(chow_index(m)); }
    const T& zero() const { return zero_; }

    const T& scalar_part() const { return c_[0]; }
    // Coefficient of the top class H1^2 H2 H3 H4, i.e. the degree pairing.
    const T& top() const { return c_[chow_index(kChowTop)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ellmirror::is_zero(x)) return false;
        return true;
    }

    // Part of pure H-degree k.
    Chow degree_part(int k) const {
        Chow r(zero_);
        for (std::size_t i = 0; i < kChowDim; ++i)
            if (chow_degree(chow_monomial(i)) == k) r.c_[i] = c_[i];
        return r;
    }

    Chow& operator+=(const Chow& o) {
        for (std::size_t i = 0; i < kChowDim; ++i) c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    Chow& operator-=(const Chow& o) {
        for (std::size_t i = 0; i < kChowDim; ++i) c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend Chow operator+(Chow a, const Chow& b) { return a += b; }
    friend Chow operator-(Chow a, const Chow& b) { return a -= b; }
    Chow operator-() const {
        Chow r(zero_);
        for (std::size_t i = 0; i < kChowDim; ++i) r.c_[i] = zero_ - c_[i];
        return r;
    }

    template <class S>
    Chow scaled(const S& s) const {
        Chow r(zero_);
        for (std::size_t i = 0; i < kChowDim; ++i)
            if (!ellmirror::is_zero(c_[i])) r.c_[i] = c_[i] * s;
        return r;
    }

    friend bool operator==(const Chow& a, const Chow& b) {
        for (std::size_t i = 0; i < kChowDim; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Chow& a, const Chow& b) { return !(a == b); }

private:
    T zero_;
    std::vector<T> c_;
};

template <class T>
Chow<T> chow_mul(const Chow<T>& a, const Chow<T>& b) {
    Chow<T> r(a.zero());
    for (std::size_t i = 0; i < kChowDim; ++i) {
        if (is_zero(a[i])) continue;
        auto mi = chow_monomial(i);
        for (std::size_t j = 0; j < kChowDim; ++j) {
            if (is_zero(b[j])) continue;
            auto mj = chow_monomial(j);
            ChowMonomial m{mi[0] + mj[0], mi[1] + mj[1], mi[2] + mj[2], mi[3] + mj[3]};
            if (!chow_valid(m)) continue;
            auto& slot = r.at(m);
            slot = slot + a[i] * b[j];
        }
    }
    return r;
}

template <class T>
Chow<T> operator*(const Chow<T>& a, const Chow<T>& b) {
    return chow_mul(a, b);
}

// Integral over the ambient space: the top-class coefficient of a*b.
template <class T>
T chow_pairing(const Chow<T>& a, const Chow<T>& b) {
    return chow_mul(a, b).top();
}

using ChowQ = Chow<Rational>;

inline ChowQ chow_scalar(const Rational& s) { return ChowQ::scalar(s, Rational(0)); }
inline ChowQ chow_H(int i) { return ChowQ::generator(i, Rational(1), Rational(0)); }
inline ChowQ chow_linear(const std::array<Rational, 4>& c) {
    ChowQ r(Rational(0));
    for (int i = 0; i < 4; ++i) r += chow_H(i + 1).scaled(c[i]);
    return r;
}

// Exponential of a Chow element whose scalar part is nilpotent (positive
// grade series) or zero. Terminates because H-degree and grade both grow.
inline Chow<QSeries> chow_exp(const Chow<QSeries>& x) {
    require_positive_grades(x.scalar_part(), "chow_exp");
    const QSeries& z = x.zero();
    QSeries one = QSeries::constant(z.lattice_ptr(), z.truncation(), Rational(1));
    Chow<QSeries> result = Chow<QSeries>::scalar(one, z);
    Chow<QSeries> power = result;
    for (unsigned n = 1;; ++n) {
        power = chow_mul(power, x).scaled(Rational(1, n));
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

}  // namespace ellmirror
