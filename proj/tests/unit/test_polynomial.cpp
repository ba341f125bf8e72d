#include "ellmirror/polynomial.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace ellmirror;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-6, 6), d(1, 4);
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = make_rational(c(rng), d(rng));
    return Polynomial(v);
}

Polynomial nonzero_poly(std::mt19937_64& rng, int max_deg) {
    for (;;) {
        auto p = random_poly(rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

const Polynomial t = Polynomial::x();

}  // namespace

TEST_CASE("polynomial basics", "[poly]") {
    Polynomial p({Rational(1), Rational(0), Rational(3)});
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == -1);
    CHECK(p.eval(Rational(2)) == 13);
    CHECK(p.derivative() == Polynomial({Rational(0), Rational(6)}));
    CHECK(p.str() == "3*t^2 + 1");
    CHECK(p.compose(t + Polynomial(Rational(1))).eval(Rational(1)) == 13);
    CHECK(Polynomial::monomial(Rational(2), 6).contract_powers(3) == Polynomial::monomial(Rational(2), 2));
    CHECK_THROWS(Polynomial({Rational(0), Rational(1)}).contract_powers(2));
    CHECK_THROWS_AS(divmod(p, Polynomial()), std::domain_error);
}

TEST_CASE("square-free decomposition", "[poly]") {
    Polynomial a = t - Polynomial(Rational(1)), b = t + Polynomial(Rational(2));
    auto d = squarefree_decomposition(Polynomial(Rational(5)) * a * b.pow(3));
    REQUIRE(d.size() == 2);
    CHECK(d.at(1) == a);
    CHECK(d.at(3) == b);
    CHECK(squarefree_decomposition(Polynomial(Rational(4))).empty());
}

TEST_CASE("division and gcd (100 instances)", "[poly][property]") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng, 7), b = nonzero_poly(rng, 4), c = nonzero_poly(rng, 3);
        auto [q, r] = divmod(a, b);
        INFO(a.str() << " / " << b.str());
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        auto g = gcd(a * c, b * c);
        CHECK(divmod(g, c.monic()).second.is_zero());
        CHECK(divmod(a * c, g).second.is_zero());
    }
}

TEST_CASE("square-free parts multiply back (100 instances)", "[poly][property]") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        auto f = nonzero_poly(rng, 2), g = nonzero_poly(rng, 2);
        auto p = f * g.pow(2);
        if (p.degree() <= 0) continue;
        Polynomial prod(Rational(1));
        for (const auto& [m, P] : squarefree_decomposition(p)) prod = prod * P.pow(static_cast<unsigned>(m));
        INFO(p.str());
        CHECK(prod == p.monic());
    }
}

TEST_CASE("rational functions reduce and evaluate (100 instances)", "[poly][property]") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pt(-20, 20);
    for (int i = 0; i < 100; ++i) {
        auto a = nonzero_poly(rng, 4), b = nonzero_poly(rng, 4), c = nonzero_poly(rng, 2);
        RationalFunction r(a * c, b * c), s(a, b);
        INFO(r.str());
        CHECK(r == s);
        CHECK(r.denominator().leading() == 1);
        Rational x = make_rational(pt(rng), 7);
        if (sgn(b.eval(x)) == 0 || sgn(a.eval(x)) == 0) continue;
        CHECK(s.eval(x) == a.eval(x) / b.eval(x));
        CHECK((s * s.pow(2)).eval(x) == s.pow(3).eval(x));
        RationalFunction shift(t + Polynomial(Rational(1)));
        CHECK(s.compose(shift).eval(Rational(x - 1)) == s.eval(x));
        CHECK((s / s) == RationalFunction(Rational(1)));
    }
}

TEST_CASE("rational function forms", "[poly]") {
    RationalFunction r(Polynomial::monomial(Rational(2), 4) + Polynomial(Rational(1)), t * t);
    auto c = r.contract_powers(2, "s");
    CHECK(c.variable_name() == "s");
    CHECK(c.eval(Rational(3)) == Rational(19, 3));  // (2s^2 + 1)/s
    auto [n, d] = RationalFunction(Polynomial(Rational(1)), Polynomial({Rational(3, 2), Rational(1)})).integer_form();
    CHECK(n == Polynomial(Rational(2)));
    CHECK(d == Polynomial({Rational(3), Rational(2)}));
    CHECK_THROWS(RationalFunction(Polynomial(Rational(1)), Polynomial()));
}

TEST_CASE("multivariate polynomials", "[poly]") {
    std::vector<std::string> V{"x", "y", "z"};
    auto x = MPoly::var(V, "x"), y = MPoly::var(V, "y"), z = MPoly::var(V, "z");
    CHECK_THROWS_AS(MPoly::var(V, "w"), std::invalid_argument);
    auto F = x * x * z + Rational(3) * x * y * z + y * y;
    CHECK(F.bidegree_part("x", "y", 2, 0) == z);
    // a x^2 + b x y + c y^2 has discriminant b^2 - 4ac
    auto D = quadratic_discriminant(F, "x", "y");
    CHECK(D == Rational(9) * z * z - Rational(4) * z);
    CHECK((x - x).is_zero());
}
