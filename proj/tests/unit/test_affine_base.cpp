#include "ellmirror/affine_base.hpp"
#include "support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ellmirror;

TEST_CASE("phi vanishes on the cone C", "[phi]") {
    CHECK(phi(0, 1).is_zero());
    CHECK(phi(1, 1).is_zero());
    CHECK(phi(1, 2).is_zero());
    CHECK(phi(UCoverPoint{Rational(1, 3), Rational(1)}).is_zero());
}

TEST_CASE("phi at sample points", "[phi]") {
    CHECK(phi(2, 1) == PLValue::D(1));
    CHECK(phi(3, 1) == Rational(2) * PLValue::D(1) + PLValue::D(2));
    CHECK(phi(-1, 1) == PLValue::D(4));
    CHECK(phi(-3, 1).str() == "D2+2D3+3D4");
    CHECK(phi(9, 2).str() == "7D1+5D2+3D3+D4");
    CHECK_THROWS_AS(phi(1, 0), std::domain_error);
}

TEST_CASE("ray labels cycle with period four", "[phi]") {
    CHECK(ray_class(1) == 1);
    CHECK(ray_class(4) == 4);
    CHECK(ray_class(0) == 4);
    CHECK(ray_class(-3) == 1);
    for (std::int64_t k = -20; k <= 20; ++k) {
        CHECK(kink(k) == PLValue::D(ray_class(k)));
        CHECK(kink(k) == oracle::kink_label(k));
    }
}

TEST_CASE("charts contain their rays", "[phi]") {
    auto c = ConeChart::containing_slope_floor(-5);
    CHECK(c.left() == -5);
    CHECK(c.right() == -4);
    CHECK(chart_of(UCoverPoint{Rational(7), Rational(2)}).left() == 3);
}

TEST_CASE("phi agrees with the kink sum (100 instances)", "[phi][property]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> X(-300, 300), Y(1, 6);
    for (int i = 0; i < 100; ++i) {
        auto x = X(rng), y = Y(rng);
        INFO("(" << x << "," << y << ")");
        CHECK(phi(x, y) == oracle::phi_by_kinks(x, y));
    }
}

TEST_CASE("phi is convex with effective bends (100 instances)", "[phi][property]") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> X(-200, 200), Y(1, 5);
    for (int i = 0; i < 100; ++i) {
        std::int64_t x1 = X(rng), y1 = Y(rng), x2 = X(rng), y2 = Y(rng);
        PLValue gap = phi(x1, y1) + phi(x2, y2) - phi(x1 + x2, y1 + y2);
        INFO("(" << x1 << "," << y1 << ") + (" << x2 << "," << y2 << ")");
        CHECK(gap.effective());
        CHECK(phi(3 * x1, 3 * y1) == Rational(3) * phi(x1, y1));
    }
}

TEST_CASE("monodromy changes phi by a linear function (100 instances)", "[phi][property]") {
    // kinks are 4-periodic, so phi(x + 4y, y) - phi(x, y) has no bends
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> X(-200, 200), Y(1, 4);
    auto d = [](std::int64_t a, std::int64_t b) { return phi(a + 4 * b, b) - phi(a, b); };
    for (int i = 0; i < 100; ++i) {
        std::int64_t x1 = X(rng), y1 = Y(rng), x2 = X(rng), y2 = Y(rng);
        INFO("(" << x1 << "," << y1 << ") + (" << x2 << "," << y2 << ")");
        CHECK(d(x1 + x2, y1 + y2) == d(x1, y1) + d(x2, y2));
    }
}

TEST_CASE("difference bound: literal and graded readings", "[phi]") {
    CHECK_THROWS_AS(phi_difference_bound(1), std::domain_error);
    CHECK_THROWS_AS(phi_difference_bound_reflected(0), std::domain_error);
    auto c7 = phi_difference_bound(7);
    CHECK(c7.componentwise);
    auto c8 = phi_difference_bound(8);
    CHECK(c8.difference.str() == "2D1+2D2+2D3+D4");
    CHECK(c8.bound.str() == "3D3");
    CHECK_FALSE(c8.componentwise);  // the stated inequality fails from m = 8
    for (std::int64_t m = 2; m <= 64; ++m) CHECK(phi_difference_bound(m).graded);
    for (std::int64_t m = -64; m <= -2; ++m) {
        CHECK_FALSE(phi_difference_bound(m).componentwise);
        CHECK(phi_difference_bound_reflected(m).graded);
    }
}

TEST_CASE("base figure", "[phi][io]") {
    auto svg = base_svg(4, true);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(base_svg(4, true) == svg);
}
