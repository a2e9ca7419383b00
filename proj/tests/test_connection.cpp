#include <catch2/catch_amalgamated.hpp>

#include "crgeo/operators.hpp"

#include <chrono>

using namespace crgeo;

namespace {

double max_abs_h(const TWGeometry& G, const JetTensor& T) {
    double mx = 0;
    for (auto& j : T.v) mx = std::max(mx, std::abs(j.value()));
    (void)G;
    return mx;
}

Jet random_jet(const JetSpace* sp, std::mt19937_64& rng) {
    Jet f(sp);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < sp->size(); ++i) f.coeff(i) = u(rng);
    return f;
}

} // namespace

TEST_CASE("heisenberg: flat with vanishing torsion") {
    for (int nn : {1, 2}) {
        auto mdl = build_model({ModelKind::heisenberg, nn});
        TWGeometry G(mdl, Point(2 * nn + 1, 0.0));
        REQUIRE(G.min_singular_value >= 1e-8);
        REQUIRE(G.axiom_residual <= 1e-10);
        for (int i = 0; i < G.m; ++i)
            for (int a = 0; a < G.hn; ++a)
                for (int b = 0; b < G.hn; ++b)
                    REQUIRE(G.G(i, a, b).max_abs_coeff(G.G(i, a, b).ord()) <= 1e-10);
        for (int a = 0; a < G.hn; ++a)
            for (int b = 0; b < G.hn; ++b) REQUIRE(std::abs(G.A(a, b).value()) <= 1e-12);
        REQUIRE(max_abs_h(G, G.curvature()) <= 1e-10);
        REQUIRE(std::abs(G.scalar_curv().value()) <= 1e-10);
    }
}

TEST_CASE("group3d torsion family closed forms") {
    // oracle: Gamma_{xi,1,2} = (c1+c2)/2, A_{12} = (c2-c1)/2, S = 2(c1+c2)
    auto check = [](double c1, double c2) {
        auto mdl = build_model({ModelKind::group3d, 1, Rational(c1), Rational(c2)});
        TWGeometry G(mdl, Point(3, 0.0));
        REQUIRE(G.min_singular_value >= 1e-8);
        REQUIRE(G.G(2, 0, 1).value() == Catch::Approx((c1 + c2) / 2).margin(1e-10));
        REQUIRE(G.G(2, 1, 0).value() == Catch::Approx(-(c1 + c2) / 2).margin(1e-10));
        REQUIRE(G.A(0, 1).value() == Catch::Approx((c2 - c1) / 2).margin(1e-10));
        REQUIRE(G.A(1, 0).value() == Catch::Approx((c2 - c1) / 2).margin(1e-10));
        REQUIRE(G.A(0, 0).value() == Catch::Approx(0.0).margin(1e-10));
        REQUIRE(G.A(1, 1).value() == Catch::Approx(0.0).margin(1e-10));
        REQUIRE(G.scalar_curv().value() == Catch::Approx(2 * (c1 + c2)).margin(1e-9));
        // parallel torsion in horizontal directions
        const JetTensor& nA = G.nablaA();
        for (int i = 0; i < G.hn; ++i)
            for (int a = 0; a < G.hn; ++a)
                for (int b = 0; b < G.hn; ++b)
                    REQUIRE(std::abs(nA(i, a, b).value()) <= 1e-9);
    };
    check(2, 1);
    check(2, 2);
    check(3, -1);
}

TEST_CASE("sphere: Sasakian with the paper constants") {
    auto run = [](int n, double tol) {
        ModelSpec spec{ModelKind::sphere, n};
        spec.jet_order = (n == 1) ? 5 : 4;
        auto mdl = build_model(spec);
        auto pts = sample_points(mdl, 2, 3);
        for (auto& p : pts) {
            TWGeometry G(mdl, p);
            REQUIRE(G.min_singular_value >= 1e-8);
            REQUIRE(G.axiom_residual <= 1e-10);
            for (int a = 0; a < G.hn; ++a)
                for (int b = 0; b < G.hn; ++b) REQUIRE(std::abs(G.A(a, b).value()) <= 1e-10);
            REQUIRE(G.scalar_curv().value() == Catch::Approx(4.0 * n * (n + 1)).margin(tol));
            const JetTensor& ric = G.ricci();
            for (int a = 0; a < G.hn; ++a)
                for (int b = 0; b < G.hn; ++b)
                    REQUIRE(ric(a, b).value() ==
                            Catch::Approx(a == b ? 2.0 * (n + 1) : 0.0).margin(tol));
        }
    };
    run(1, 1e-10);
    run(2, 1e-10);
}

TEST_CASE("curvature symmetries of the Tanaka-Webster connection") {
    auto mdl = build_model({ModelKind::sphere, 1});
    auto p = sample_points(mdl, 1, 9)[0];
    TWGeometry G(mdl, p);
    const JetTensor& R = G.curvature();
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j)
            for (int k = 0; k < G.hn; ++k) {
                REQUIRE(std::abs(R(i, j, k, G.m - 1).value()) <= 1e-9);
                for (int l = 0; l < G.hn; ++l) {
                    REQUIRE(R(i, j, k, l).value() ==
                            Catch::Approx(-R(i, j, l, k).value()).margin(1e-9));
                    double jz = 0; // R(e_i,e_j,Je_k,Je_l)
                    for (int cc = 0; cc < G.hn; ++cc)
                        for (int dd = 0; dd < G.hn; ++dd)
                            jz += G.Jc(k, cc).value() * G.Jc(l, dd).value() *
                                  R(i, j, cc, dd).value();
                    REQUIRE(jz == Catch::Approx(R(i, j, k, l).value()).margin(1e-8));
                }
            }
}

TEST_CASE("first Ricci identity and xi1 for a random jet on heisenberg(2)") {
    auto mdl = build_model({ModelKind::heisenberg, 2});
    TWGeometry G(mdl, Point(5, 0.0));
    std::mt19937_64 rng(17);
    Jet f = random_jet(G.sp, rng);
    ScalarStack s(G, f, 2);
    for (int a = 0; a < G.hn; ++a)
        for (int b = 0; b < G.hn; ++b) {
            double lhs = s.d[2](a, b).value() - s.d[2](b, a).value();
            double rhs = -2 * G.om(a, b).value() * s.xif().value();
            REQUIRE(lhs == Catch::Approx(rhs).margin(1e-9));
        }
    REQUIRE(s.omega_trace().value() == // xi1: -2n df(xi)
            Catch::Approx(-static_cast<double>(G.hn) * s.xif().value()).margin(1e-9));
}

TEST_CASE("levi-civita comparison (lcbi) and (wh)") {
    // lcbi: h(nabla_A B, C) = h(D_A B, C) + (1/2)[T(A,B,C) - T(B,C,A) + T(C,A,B)]
    auto lcbi_residual = [](const TWGeometry& G) {
        double mx = 0;
        auto T = [&](int i, int j, int k) { // torsion components of nabla
            return G.G(i, j, k).value() - G.G(j, i, k).value() - G.c(i, j, k).value();
        };
        for (int i = 0; i < G.m; ++i)
            for (int j = 0; j < G.m; ++j)
                for (int k = 0; k < G.m; ++k) {
                    double lhs = G.G(i, j, k).value();
                    double rhs = G.L(i, j, k).value() +
                                 0.5 * (T(i, j, k) - T(j, k, i) + T(k, i, j));
                    mx = std::max(mx, std::abs(lhs - rhs));
                }
        return mx;
    };
    {
        auto mdl = build_model({ModelKind::heisenberg, 1});
        TWGeometry G(mdl, Point(3, 0.0));
        REQUIRE(lcbi_residual(G) <= 1e-12);
    }
    {
        auto mdl = build_model({ModelKind::group3d, 1, 2, 1});
        TWGeometry G(mdl, Point(3, 0.0));
        REQUIRE(lcbi_residual(G) <= 1e-10);
    }
    auto mdl = build_model({ModelKind::sphere, 1});
    auto p = sample_points(mdl, 1, 21)[0];
    TWGeometry G(mdl, p);
    REQUIRE(lcbi_residual(G) <= 1e-9);
    // wh (A = 0): D_B C = nabla_B C + theta(B) JC + theta(C) JB - omega(B,C) xi
    int xi = G.m - 1;
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j) {
            for (int k = 0; k < G.hn; ++k) {
                double rhs = G.G(i, j, k).value();
                if (i == xi) rhs += G.Jc(j, k).value();
                if (j == xi) rhs += G.Jc(i, k).value();
                REQUIRE(G.L(i, j, k).value() == Catch::Approx(rhs).margin(1e-9));
            }
            REQUIRE(G.L(i, j, xi).value() == Catch::Approx(-G.om(i, j).value()).margin(1e-9));
        }
}

TEST_CASE("clasob: riemannian hessian of x1 on S^3 is -f h") {
    auto mdl = build_model({ModelKind::sphere, 1});
    for (auto& p : sample_points(mdl, 3, 33)) {
        TWGeometry G(mdl, p);
        Jet f = restrict_to_chart(G.fd, Polynomial::variable(0, 4));
        auto d = G.cov_scalar(f, 2, /*lc=*/true);
        for (int i = 0; i < G.m; ++i)
            for (int j = 0; j < G.m; ++j)
                REQUIRE(d[2](i, j).value() ==
                        Catch::Approx(i == j ? -f.value() : 0.0).margin(1e-9));
    }
}

TEST_CASE("engine timing stays within budget") {
    auto mdl = build_model({ModelKind::sphere, 2});
    const_cast<ModelSpec&>(mdl.spec).jet_order = 4;
    auto p = sample_points(mdl, 1, 5)[0];
    auto t0 = std::chrono::steady_clock::now();
    TWGeometry G(mdl, p);
    G.curvature();
    G.ricci();
    Jet f = restrict_to_chart(G.fd, Polynomial::variable(0, 6));
    ScalarStack s(G, f, 4);
    C_of(s);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    INFO("S^5 point pipeline took " << dt << " s");
    REQUIRE(dt < 2.0);
}
