#pragma once
// Finite Laurent polynomials in hbar with Chow-ring coefficients.

#include "ellmirror/chow.hpp"

#include <map>
#include <stdexcept>

namespace ellmirror {

template <class T>
class HbarLaurent {
public:
    explicit HbarLaurent(T zero) : zero_(std::move(zero)) {}

    const T& zero() const { return zero_; }
    const std::map<int, Chow<T>>& powers() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int min_power() const {
        if (terms_.empty()) throw std::logic_error("empty HbarLaurent has no powers");
        return terms_.begin()->first;
    }
    int max_power() const {
        if (terms_.empty()) throw std::logic_error("empty HbarLaurent has no powers");
        return terms_.rbegin()->first;
    }

    Chow<T> coefficient(int p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Chow<T>(zero_) : it->second;
    }

    void add(int p, const Chow<T>& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HbarLaurent& operator+=(const HbarLaurent& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    friend HbarLaurent operator+(HbarLaurent a, const HbarLaurent& b) { return a += b; }

    friend HbarLaurent operator*(const HbarLaurent& a, const HbarLaurent& b) {
        HbarLaurent r(a.zero_);
        for (const auto& [p, x] : a.terms_)
            for (const auto& [q, y] : b.terms_) r.add(p + q, chow_mul(x, y));
        return r;
    }

    template <class S>
    HbarLaurent scaled(const S& s) const {
        HbarLaurent r(zero_);
        for (const auto& [p, c] : terms_) r.add(p, c.scaled(s));
        return r;
    }

    // Multiply every coefficient by a fixed Chow element.
    HbarLaurent times(const Chow<T>& c) const {
        HbarLaurent r(zero_);
        for (const auto& [p, x] : terms_) r.add(p, chow_mul(x, c));
        return r;
    }

    friend bool operator==(const HbarLaurent& a, const HbarLaurent& b) {
        return a.terms_ == b.terms_;
    }

private:
    T zero_;
    std::map<int, Chow<T>> terms_;
};

using HbarQ = HbarLaurent<Rational>;

}  // namespace ellmirror
