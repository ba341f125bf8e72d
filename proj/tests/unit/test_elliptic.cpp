#include "ellmirror/elliptic.hpp"
#include "support/oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <catch_amalgamated.hpp>

#include <random>

using namespace ellmirror;

namespace {

Complex random_rho(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 3.0);
    return Complex(Real(re(rng)), Real(im(rng)));
}

QSeries v_series(const std::map<std::int64_t, int>& exps, std::int64_t T) {
    QSeries s(make_lattice({"v"}, {1}), T);
    for (const auto& [e, n] : exps) s.add_term({e}, Rational(n));
    return s;
}

}  // namespace

TEST_CASE("j from the Jacobi modulus", "[elliptic]") {
    CHECK(j_from_modulus(Rational(1, 2)) == make_rational(35152, 9));
    CHECK_THROWS_AS(j_from_modulus(Rational(1)), std::domain_error);
    CHECK_THROWS_AS(j_from_modulus(Rational(0)), std::domain_error);
    auto k = RationalFunction::variable();
    for (auto x : {Rational(1, 3), Rational(5, 2), Rational(-7)}) {
        CHECK(j_from_modulus(k).eval(x) == j_from_modulus(x));
        CHECK(j_from_modulus_squared(k * k).eval(x) == j_from_modulus(x));
    }
    // k = 1/sqrt(2) is the square lattice, j = 1728
    CHECK(j_from_modulus_squared(RationalFunction(Rational(1, 2))) == RationalFunction(Rational(1728)));
}

TEST_CASE("pencil j by two routes", "[elliptic]") {
    auto p = pencil_j_paths();
    CHECK(p.paths_agree);
    CHECK(p.weierstrass_path == reference_pencil_j());
    CHECK(pencil_j_invariant() == reference_pencil_j());
    for (auto t : {Rational(1, 3), Rational(2, 5), Rational(1), Rational(3), Rational(7, 2), Rational(-5, 6)})
        CHECK(p.weierstrass_path.eval(t) == oracle::pencil_j_at(t));
    CHECK(j_in_s(p.weierstrass_path) == reference_j_in_s());
    // the fibre is j(k) for k = (t^2 + 1/4)/t
    CHECK(j_from_modulus(pencil_modulus()) == p.weierstrass_path);
    auto u = pencil_modulus_squared_in_u();
    CHECK(j_from_modulus_squared(u) == p.weierstrass_path.contract_powers(2, "u"));
}

TEST_CASE("theta values at rho = i", "[elliptic][theta]") {
    auto v = theta_values(imag_unit(), Real("1e-40"));
    // Theta3(i) = pi^(1/4) / Gamma(3/4)
    Real expect = pow(pi_real(), Real(0.25)) / boost::math::tgamma(Real(0.75));
    CHECK(abs(v[3] - Complex(expect)) < Real("1e-38"));
    CHECK(abs(v[2] - v[4]) < Real("1e-38"));
    CHECK(v.error[2] <= Real("1e-40"));
    CHECK(theta(2, imag_unit(), Real("1e-10")).value() == theta_values(imag_unit(), Real("1e-10"))[2]);
    CHECK_THROWS_AS(theta_values(Complex(1), Real(1e-10)), std::domain_error);
    CHECK_THROWS_AS(theta_values(imag_unit(), Real(0)), std::invalid_argument);
    CHECK_THROWS_AS(theta(5, imag_unit(), Real(1e-10)), std::invalid_argument);
}

TEST_CASE("complex parsing", "[elliptic]") {
    CHECK(parse_complex("3i") == Complex(Real(0), Real(3)));
    CHECK(parse_complex("1/2+2i") == Complex(Real(0.5), Real(2)));
    CHECK(parse_complex("-i") == Complex(Real(0), Real(-1)));
    CHECK(parse_complex("0.25 - 1e-3i") == Complex(Real(0.25), Real("-1e-3")));
    CHECK(parse_complex("2") == Complex(Real(2), Real(0)));
    CHECK_THROWS(parse_complex(""));
}

TEST_CASE("theta identities (100 instances)", "[elliptic][theta][property]") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Complex rho = random_rho(rng);
        INFO("rho = " << fmt(rho));
        for (const auto& c : theta_identities(rho, Real("1e-40"))) CHECK(c.pass);
    }
}

TEST_CASE("modular consistency (100 instances)", "[elliptic][modular][property]") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        Complex rho = random_rho(rng);
        INFO("rho = " << fmt(rho));
        auto rep = modular_consistency(rho, Real("1e-40"), Real("1e-30"));
        CHECK(rep.all_pass);
    }
}

TEST_CASE("theta series feed the bridge (100 instances)", "[elliptic][bridge][property]") {
    const std::int64_t T = 49;
    auto f = v_series(oracle::theta2_exponents(T), T);
    auto opr = v_series(oracle::even_square_exponents(T, false), T);
    auto rc = v_series(oracle::odd_square_exponents(T), T);
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> re(-0.5, 0.5), im(1.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        Complex rho(Real(re(rng)), Real(im(rng)));
        INFO("rho = " << fmt(rho));
        auto rep = symmetric_locus_bridge(f, opr, rc, rho);
        CHECK(rep.all_pass);
        for (const auto& b : rep.identities) CHECK(b.check.residual <= b.truncation_bound / abs(b.check.rhs) + Real(1e-30));
    }
    QSeries short_f(make_lattice({"v"}, {1}), 10);
    CHECK_THROWS_AS(symmetric_locus_bridge(short_f, opr, rc, imag_unit()), std::invalid_argument);
}

TEST_CASE("cusp profile", "[elliptic]") {
    auto prof = cusp_profile({Real(1), Real(2), Real(4)});
    REQUIRE(prof.size() == 3);
    // k grows without bound toward the cusp, and so does |j|
    CHECK(prof[0].abs_k < prof[1].abs_k);
    CHECK(prof[1].abs_k < prof[2].abs_k);
    CHECK(prof[1].abs_j < prof[2].abs_j);
}

TEST_CASE("double-cover family discriminant", "[elliptic][family]") {
    auto d = family_discriminant();
    CHECK(d.branch.str() == "x1^2y2^2 + 4*y1^2x2^2");
    CHECK(d.secondary.str() == "-16*x2^2y2^2");
    CHECK(d.singular_fibres.multiplicities == std::vector<int>{2, 2});
    CHECK(d.summary == "2 singular fibres each with multiplicity 2");

    auto g = family_discriminant(generic_family());
    CHECK(g.singular_fibres.multiplicities == std::vector<int>{1, 1, 1, 1});
    CHECK(g.summary == "4 singular fibres");
    CHECK(generic_family().terms().size() == 12);
}

TEST_CASE("binary form roots", "[elliptic][family]") {
    std::vector<std::string> V{"x", "y"};
    auto x = MPoly::var(V, "x"), y = MPoly::var(V, "y");
    // x^2 y (x - y)^3: x = y three times, x = 0 twice, y = 0 once
    auto f = x * x * y * (x - y) * (x - y) * (x - y);
    CHECK(binary_form_roots(f, "x", "y").multiplicities == std::vector<int>{3, 2, 1});
    CHECK_THROWS_AS(binary_form_roots(x * x + y, "x", "y"), std::invalid_argument);
}
