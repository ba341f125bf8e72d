#pragma once
// Truncated multivariate series with exact rational coefficients over a
// graded integer exponent lattice.

#include "ellmirror/rational.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ellmirror {

using Exponent = std::vector<std::int64_t>;

class ExponentLattice {
public:
    ExponentLattice(std::vector<std::string> labels, std::vector<std::int64_t> weights)
        : labels_(std::move(labels)), weights_(std::move(weights)) {
        if (labels_.empty()) throw std::invalid_argument("lattice rank must be positive");
        if (labels_.size() != weights_.size())
            throw std::invalid_argument("labels and weights differ in length");
        for (auto w : weights_)
            if (w < 0) throw std::invalid_argument("grade weights must be nonnegative");
    }

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }

    std::int64_t grade(const Exponent& v) const {
        if (v.size() != rank()) throw std::invalid_argument("exponent rank mismatch");
        std::int64_t g = 0;
        for (std::size_t i = 0; i < v.size(); ++i) g += weights_[i] * v[i];
        return g;
    }

    Exponent unit(std::size_t i) const {
        Exponent e(rank(), 0);
        e.at(i) = 1;
        return e;
    }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw std::invalid_argument("unknown label " + label);
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool operator==(const ExponentLattice& o) const {
        return labels_ == o.labels_ && weights_ == o.weights_;
    }
    bool operator!=(const ExponentLattice& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::vector<std::int64_t> weights_;
};

using LatticePtr = std::shared_ptr<const ExponentLattice>;

inline LatticePtr make_lattice(std::vector<std::string> labels,
                               std::vector<std::int64_t> weights) {
    return std::make_shared<const ExponentLattice>(std::move(labels), std::move(weights));
}

// Worker count used by QSeries multiplication. Results do not depend on it.
inline std::atomic<unsigned>& series_thread_count() {
    static std::atomic<unsigned> n{1};
    return n;
}
inline void set_series_threads(unsigned n) { series_thread_count() = n == 0 ? 1 : n; }

class QSeries {
public:
    using TermMap = std::map<Exponent, Rational>;

    QSeries(LatticePtr lattice, std::int64_t truncation)
        : lattice_(std::move(lattice)), truncation_(truncation) {
        if (!lattice_) throw std::invalid_argument("null lattice");
        if (truncation_ < 0) throw std::invalid_argument("truncation must be nonnegative");
    }

    static QSeries constant(LatticePtr lattice, std::int64_t truncation, const Rational& c) {
        QSeries s(std::move(lattice), truncation);
        s.add_term(Exponent(s.lattice_->rank(), 0), c);
        return s;
    }
    static QSeries monomial(LatticePtr lattice, std::int64_t truncation, Exponent e,
                            const Rational& c = Rational(1)) {
        QSeries s(std::move(lattice), truncation);
        s.add_term(std::move(e), c);
        return s;
    }

    const LatticePtr& lattice_ptr() const { return lattice_; }
    const ExponentLattice& lattice() const { return *lattice_; }
    std::int64_t truncation() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Adds c*x^e, dropping it when the grade exceeds the truncation.
    void add_term(Exponent e, const Rational& c) {
        if (ellmirror::is_zero(c)) return;
        if (lattice_->grade(e) > truncation_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (ellmirror::is_zero(it->second)) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Exponent(lattice_->rank(), 0)); }

    QSeries truncated(std::int64_t t) const {
        QSeries r(lattice_, std::min(t, truncation_));
        for (const auto& [e, c] : terms_)
            if (lattice_->grade(e) <= r.truncation_) r.terms_.emplace(e, c);
        return r;
    }

    // Smallest and largest grade among stored terms; 0 when empty.
    std::int64_t min_grade() const {
        std::int64_t g = 0;
        bool first = true;
        for (const auto& kv : terms_) {
            auto h = lattice_->grade(kv.first);
            if (first || h < g) g = h;
            first = false;
        }
        return g;
    }

    QSeries operator-() const {
        QSeries r(*this);
        for (auto& kv : r.terms_) kv.second = -kv.second;
        return r;
    }

    QSeries& operator*=(const Rational& c) {
        if (ellmirror::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }

    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        check_same(a, b);
        std::int64_t t = std::min(a.truncation_, b.truncation_);
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        auto skip = [&](auto& it, const auto& end) {
            while (it != end && a.lattice_->grade(it->first) > t) ++it;
        };
        for (;;) {
            skip(ia, a.terms_.end());
            skip(ib, b.terms_.end());
            if (ia == a.terms_.end() || ib == b.terms_.end())
                return ia == a.terms_.end() && ib == b.terms_.end();
            if (ia->first != ib->first || ia->second != ib->second) return false;
            ++ia;
            ++ib;
        }
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    static void check_same(const QSeries& a, const QSeries& b) {
        if (a.lattice_ != b.lattice_ && *a.lattice_ != *b.lattice_)
            throw std::invalid_argument("lattice mismatch");
    }

private:
    friend QSeries series_add(const QSeries&, const QSeries&);
    friend QSeries series_mul(const QSeries&, const QSeries&);

    LatticePtr lattice_;
    std::int64_t truncation_;
    TermMap terms_;
};

inline bool is_zero(const QSeries& s) { return s.is_zero(); }

inline QSeries series_add(const QSeries& a, const QSeries& b) {
    QSeries::check_same(a, b);
    QSeries r(a.lattice_, std::min(a.truncation_, b.truncation_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_add(a, -b); }
inline QSeries& operator+=(QSeries& a, const QSeries& b) { return a = series_add(a, b); }
inline QSeries& operator-=(QSeries& a, const QSeries& b) { return a = series_add(a, -b); }

namespace detail {

struct GradedTerm {
    std::int64_t grade;
    const Exponent* exp;
    const Rational* coeff;
};

inline std::vector<GradedTerm> by_grade(const ExponentLattice& lat, const QSeries::TermMap& m) {
    std::vector<GradedTerm> v;
    v.reserve(m.size());
    for (const auto& [e, c] : m) v.push_back({lat.grade(e), &e, &c});
    std::stable_sort(v.begin(), v.end(),
                     [](const GradedTerm& x, const GradedTerm& y) { return x.grade < y.grade; });
    return v;
}

inline void accumulate(std::map<Exponent, Rational>& out, const std::vector<GradedTerm>& lhs,
                       std::size_t lo, std::size_t hi, const std::vector<GradedTerm>& rhs,
                       std::int64_t trunc) {
    Exponent e;
    Rational p;
    for (std::size_t i = lo; i < hi; ++i) {
        const auto& x = lhs[i];
        for (const auto& y : rhs) {
            if (x.grade + y.grade > trunc) break;
            e = *x.exp;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += (*y.exp)[k];
            p = *x.coeff * *y.coeff;
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(e, p);
            else
                it->second += p;
        }
    }
}

}  // namespace detail

// Cauchy product. Chunks of the left operand may be handled by separate
// workers; exact addition makes the merged result independent of the split.
inline QSeries series_mul(const QSeries& a, const QSeries& b) {
    QSeries::check_same(a, b);
    const std::int64_t t = std::min(a.truncation_, b.truncation_);
    QSeries r(a.lattice_, t);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    auto lhs = detail::by_grade(*a.lattice_, a.terms_);
    auto rhs = detail::by_grade(*b.lattice_, b.terms_);

    unsigned workers = series_thread_count().load();
    if (lhs.size() < 64) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(lhs.size()));

    std::vector<std::map<Exponent, Rational>> parts(workers);
    if (workers == 1) {
        detail::accumulate(parts[0], lhs, 0, lhs.size(), rhs, t);
    } else {
        std::vector<std::thread> pool;
        std::size_t step = (lhs.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = w * step, hi = std::min(lhs.size(), lo + step);
            pool.emplace_back([&, w, lo, hi] { detail::accumulate(parts[w], lhs, lo, hi, rhs, t); });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& part : parts)
        for (auto& [e, c] : part) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_.emplace(e, std::move(c));
            else
                it->second += c;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = ellmirror::is_zero(it->second) ? r.terms_.erase(it) : std::next(it);
    return r;
}

inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries& operator*=(QSeries& a, const QSeries& b) { return a = series_mul(a, b); }

inline void require_positive_grades(const QSeries& a, const char* what) {
    for (const auto& kv : a.terms())
        if (a.lattice().grade(kv.first) <= 0)
            throw std::domain_error(std::string(what) + ": term of non-positive grade");
}

inline QSeries series_exp(const QSeries& a) {
    require_positive_grades(a, "series_exp");
    QSeries result = QSeries::constant(a.lattice_ptr(), a.truncation(), Rational(1));
    QSeries power = result;
    for (unsigned n = 1; !a.is_zero(); ++n) {
        power = power * a;
        power *= Rational(1, n);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

// Splits a = c + rest with rest of positive grade; a unit needs c != 0.
inline std::pair<Rational, QSeries> split_unit(const QSeries& a, const char* what) {
    Rational c = a.constant_term();
    if (is_zero(c)) throw std::domain_error(std::string(what) + ": zero constant term");
    QSeries rest = a - QSeries::constant(a.lattice_ptr(), a.truncation(), c);
    require_positive_grades(rest, what);
    return {c, rest};
}

inline QSeries series_inverse(const QSeries& a) {
    auto [c, rest] = split_unit(a, "series_inverse");
    Rational ci = Rational(1) / c;
    QSeries x = rest * (-ci);  // a = c(1 - x)
    QSeries result = QSeries::constant(a.lattice_ptr(), a.truncation(), Rational(1));
    QSeries power = result;
    while (!x.is_zero()) {
        power = power * x;
        if (power.is_zero()) break;
        result += power;
    }
    return result * ci;
}

// log of a series with constant term one.
inline QSeries series_log(const QSeries& a) {
    auto [c, rest] = split_unit(a, "series_log");
    if (c != 1) throw std::domain_error("series_log: constant term must be 1");
    QSeries result(a.lattice_ptr(), a.truncation());
    QSeries power = QSeries::constant(a.lattice_ptr(), a.truncation(), Rational(1));
    for (long n = 1;; ++n) {
        power = power * rest;
        if (power.is_zero()) break;
        result += power * Rational(n % 2 ? 1 : -1, n);
    }
    return result;
}

inline QSeries series_pow(const QSeries& a, long n) {
    if (n < 0) return series_pow(series_inverse(a), -n);
    QSeries r = QSeries::constant(a.lattice_ptr(), a.truncation(), Rational(1));
    QSeries b = a;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

// x^v -> x^v * prod_i f_i^{v_i}; every f_i must be a unit.
inline QSeries series_substitute(const QSeries& a, const std::vector<QSeries>& subs) {
    const auto& lat = a.lattice();
    if (subs.size() != lat.rank()) throw std::invalid_argument("one multiplier per variable");
    std::int64_t t = a.truncation();
    for (const auto& f : subs) {
        QSeries::check_same(a, f);
        split_unit(f, "series_substitute");
        t = std::min(t, f.truncation());
    }
    std::vector<std::map<std::int64_t, QSeries>> cache(subs.size());
    auto power = [&](std::size_t i, std::int64_t k) -> const QSeries& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        return cache[i].emplace(k, series_pow(subs[i].truncated(t), k)).first->second;
    };
    QSeries r(a.lattice_ptr(), t);
    for (const auto& [v, c] : a.terms()) {
        std::int64_t g = lat.grade(v);
        if (g > t) continue;
        QSeries m = QSeries::monomial(a.lattice_ptr(), t, v, c);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) m = m * power(i, v[i]);
        r += m;
    }
    return r;
}

}  // namespace ellmirror
