#pragma once
// Wall data consumed by the broken-line engine.

#include "ellmirror/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellmirror {

// Primitive ray direction (k, height); height 1 or 2 (k odd when 2).
struct RayDirection {
    std::int64_t k = 0;
    int height = 1;

    void validate() const {
        if (height != 1 && height != 2) throw std::invalid_argument("ray height must be 1 or 2");
        if (height == 2 && k % 2 == 0) throw std::invalid_argument("(k:2) ray needs k odd");
    }
    std::string str() const {
        return height == 1 ? "(" + std::to_string(k) + ",1)" : "(" + std::to_string(k) + ":2)";
    }
    friend bool operator<(const RayDirection& a, const RayDirection& b) {
        return a.height != b.height ? a.height < b.height : a.k < b.k;
    }
    friend bool operator==(const RayDirection& a, const RayDirection& b) {
        return a.k == b.k && a.height == b.height;
    }
};

struct WallDatum {
    RayDirection ray;
    int tangency = 1;          // w: y-grade of the attached monomial direction
    std::string class_tag;     // abstract section or bisection tag
    std::int64_t fibre_steps = 0;
    Rational count;            // N_beta

    // Multiple k_beta of the primitive direction carried by the monomial.
    int k_beta() const {
        if (tangency % ray.height != 0) throw std::invalid_argument("tangency not a multiple of ray height");
        return tangency / ray.height;
    }
    void validate() const {
        ray.validate();
        if (tangency != 1 && tangency != 2) throw std::invalid_argument("tangency must be 1 or 2");
        if (fibre_steps < 0) throw std::invalid_argument("fibre_steps must be nonnegative");
        (void)k_beta();
    }
};

struct WallTable {
    std::vector<WallDatum> entries;
    std::map<std::string, std::int64_t> tag_grades;  // declared grade of each tag

    std::vector<std::string> tags() const {
        std::vector<std::string> t;
        for (const auto& kv : tag_grades) t.push_back(kv.first);
        return t;
    }
    void validate() const {
        for (const auto& e : entries) {
            e.validate();
            if (!tag_grades.count(e.class_tag))
                throw std::invalid_argument("wall tag without declared grade: " + e.class_tag);
        }
    }
    bool empty() const { return entries.empty(); }
};

}  // namespace ellmirror
