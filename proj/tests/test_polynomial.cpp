#include <catch2/catch_amalgamated.hpp>

#include "crgeo/polynomial.hpp"
#include "crgeo/sphere_integral.hpp"

#include <numbers>
#include <random>

using namespace crgeo;

TEST_CASE("polynomial arithmetic basics") {
    auto x = Polynomial::variable(0, 4);
    auto y = Polynomial::variable(1, 4);
    auto p = x * x + Rational(2) * (x * y) + y * y;
    auto q = (x + y) * (x + y);
    REQUIRE(p == q);
    REQUIRE(p.degree() == 2);
    REQUIRE((p - q).is_zero());

    auto dp = p.derivative(0);
    REQUIRE(dp == Rational(2) * (x + y));
}

TEST_CASE("sphere_reduce eliminates high powers of the last variable") {
    const int nv = 4;
    auto w = Polynomial::variable(3, nv);
    auto p = w * w * w; // w^3 -> w(1 - x^2 - y^2 - z^2)
    auto r = p.sphere_reduce();
    for (auto& [e, c] : r.terms()) REQUIRE(e[3] <= 1);
    // both sides agree at a point on the sphere
    double pt[4] = {0.5, 0.5, 0.5, 0.5};
    REQUIRE(r.eval(pt) == Catch::Approx(p.eval(pt)).margin(1e-14));
}

TEST_CASE("monomial integral formula on S^3") {
    SphereIntegrator integ(4);
    // surface area of S^3 = 2 pi^2
    REQUIRE(integ.integrate(Polynomial::constant(4, 1)) == Rational(2));
    // odd monomial vanishes
    REQUIRE(integ.integrate(Polynomial::variable(0, 4)) == Rational(0));
    // int x1^2 = area/4
    auto x = Polynomial::variable(0, 4);
    REQUIRE(integ.integrate(x * x) == Rational(1, 2));
    REQUIRE(integ.to_value(Rational(2)) == Catch::Approx(2 * std::numbers::pi * std::numbers::pi));
}

TEST_CASE("monomial integrals agree with quasi Monte Carlo on S^3") {
    SphereIntegrator integ(4);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    auto x0 = Polynomial::variable(0, 4), x1 = Polynomial::variable(1, 4),
         x2 = Polynomial::variable(2, 4);
    auto p = x0 * x0 * x1 * x1 + Rational(3) * (x2 * x2) - Polynomial::constant(4, Rational(1, 7));
    double mc = 0;
    const int N = 400000;
    for (int i = 0; i < N; ++i) {
        double v[4], n2 = 0;
        for (double& c : v) {
            c = gauss(rng);
            n2 += c * c;
        }
        double n = std::sqrt(n2);
        for (double& c : v) c /= n;
        mc += p.eval(v);
    }
    mc *= integ.to_value(Rational(2)) / N; // area * mean
    REQUIRE(integ.to_value(integ.integrate(p)) == Catch::Approx(mc).epsilon(0.02));
}

TEST_CASE("integrate_product matches integrate of product") {
    SphereIntegrator integ(4);
    auto x = Polynomial::variable(0, 4);
    auto y = Polynomial::variable(1, 4);
    auto a = x * x + y;
    auto b = y * y - x;
    REQUIRE(integ.integrate_product(a, b) == integ.integrate(a * b));
}

TEST_CASE("integration is linear and kills odd monomials") {
    SphereIntegrator integ(6);
    auto x = Polynomial::variable(0, 6);
    auto y = Polynomial::variable(4, 6);
    auto a = x * x * y; // odd in y
    REQUIRE(integ.integrate(a) == Rational(0));
    auto b = x * x + x * x; // 2x^2
    REQUIRE(integ.integrate(b) == Rational(2) * integ.integrate(x * x));
}
