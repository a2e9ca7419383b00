#include <catch2/catch_amalgamated.hpp>

#include "crgeo/jet.hpp"

using namespace crgeo;

static const JetSpace* sp3 = JetSpace::get(3, 5);

TEST_CASE("jet product reproduces Leibniz exactly at truncation order") {
    auto x = Jet::variable(sp3, 0, 0.3);
    auto y = Jet::variable(sp3, 1, -0.2);
    auto f = x * x * y + y;
    auto g = x + y * y;
    auto fg = f * g;
    auto d_fg = fg.derivative(0);
    auto leibniz = f.derivative(0) * g + f * g.derivative(0);
    for (int i = 0; i < sp3->size(); ++i)
        if (sp3->degree(i) <= d_fg.ord())
            REQUIRE(d_fg.coeff(i) == Catch::Approx(leibniz.coeff(i)).margin(1e-14));
}

TEST_CASE("jet multiplication commutes and associates up to truncation") {
    auto x = Jet::variable(sp3, 0, 1.1);
    auto y = Jet::variable(sp3, 1, 0.4);
    auto z = Jet::variable(sp3, 2, -0.7);
    auto a = x * y + z * z;
    auto b = y * z - x;
    auto c = x + y + z;
    auto ab = a * b, ba = b * a;
    for (int i = 0; i < sp3->size(); ++i)
        REQUIRE(ab.coeff(i) == Catch::Approx(ba.coeff(i)).margin(1e-13));
    auto abc1 = (a * b) * c, abc2 = a * (b * c);
    for (int i = 0; i < sp3->size(); ++i)
        if (sp3->degree(i) <= abc1.ord())
            REQUIRE(abc1.coeff(i) == Catch::Approx(abc2.coeff(i)).margin(1e-12));
}

TEST_CASE("jet inverse and sqrt") {
    auto x = Jet::variable(sp3, 0, 0.0);
    auto f = Jet::constant(sp3, 4.0) + x;
    auto finv = f.inverse();
    auto prod = f * finv;
    REQUIRE(prod.value() == Catch::Approx(1.0));
    for (int i = 1; i < sp3->size(); ++i)
        if (sp3->degree(i) <= prod.ord()) REQUIRE(prod.coeff(i) == Catch::Approx(0.0).margin(1e-13));

    auto s = f.sqrt();
    auto s2 = s * s;
    for (int i = 0; i < sp3->size(); ++i)
        if (sp3->degree(i) <= s2.ord())
            REQUIRE(s2.coeff(i) == Catch::Approx(f.coeff(i)).margin(1e-13));
}

TEST_CASE("derivative order bookkeeping raises on exhaustion") {
    auto x = Jet::variable(sp3, 0, 1.0);
    Jet d = x;
    for (int k = 0; k < 6; ++k) d = d.derivative(0);
    REQUIRE(d.ord() < 0);
    REQUIRE_THROWS_AS(d.value(), jet_order_exhausted);
}

TEST_CASE("polynomial restriction onto jets matches direct evaluation") {
    auto p = Polynomial::variable(0, 3) * Polynomial::variable(1, 3) +
             Rational(5, 2) * Polynomial::variable(2, 3);
    std::vector<Jet> x = {Jet::variable(sp3, 0, 0.2), Jet::variable(sp3, 1, 0.3),
                          Jet::variable(sp3, 2, -0.1)};
    auto j = poly_on_jets(p, x);
    double pt[3] = {0.2, 0.3, -0.1};
    REQUIRE(j.value() == Catch::Approx(p.eval(pt)));
    // first-order coefficient in u0 equals d/dx0 = x1
    REQUIRE(j.derivative(0).value() == Catch::Approx(0.3));
    REQUIRE(j.derivative(2).value() == Catch::Approx(2.5));
}
