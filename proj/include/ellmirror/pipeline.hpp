#pragma once
// Glue between the stages: threefold counts -> wall table -> mirror equations.

#include "ellmirror/gw_counts.hpp"
#include "ellmirror/mirror_engine.hpp"

#include <map>

namespace ellmirror {

// The bisection-type classes (a,2,0,1) reachable at the given I-function grade.
inline std::vector<ThreefoldClass> bisection_classes(int max_grade) {
    std::vector<ThreefoldClass> v;
    for (int a = 0; a + 3 <= max_grade; ++a) v.push_back({a, 2, 0, 1});
    return v;
}

inline std::map<ThreefoldClass, Rational> threefold_counts(const MirrorMap& mm, int max_grade) {
    std::map<ThreefoldClass, Rational> out;
    for (const auto& b : bisection_classes(max_grade)) out[b] = extract_curve_count(mm.J, b).count;
    return out;
}

// Tangency-1 walls with every fibre step that fits under the truncation,
// plus the tangency-2 walls built from the threefold counts.
inline WallTable default_walls(std::int64_t truncation, const std::map<ThreefoldClass, Rational>& counts) {
    std::int64_t steps = truncation >= 1 ? (truncation - 1) / 4 : 0;
    return merge_walls(tangency1_walls(steps), to_wall_counts(counts).tangency2);
}

// Theta series of the symmetric locus, computed from D1*D3 and D1^2.
struct SymmetricSeries {
    QSeries f;           // coefficient of theta_{2D2} in D1*D3
    QSeries one_plus_r;  // coefficient of theta_{2D1} in D1^2
    QSeries r_cross;     // coefficient of theta_{2D3} in D1^2
};

inline SymmetricSeries symmetric_series(const WallTable& walls, std::int64_t truncation) {
    BrokenLineEngine eng(walls, truncation);
    auto coeff = [&](Vec2 P, Vec2 Q, Vec2 R) {
        return specialize_symmetric(eng.pair_series(eng.enumerate_pairs(P, Q, R)));
    };
    Vec2 d1 = canonical_lift(1), d3 = canonical_lift(3);
    return {coeff(d1, d3, {4, 2}), coeff(d1, d1, {2, 2}), coeff(d1, d1, {6, 2})};
}

}  // namespace ellmirror
