#include <catch2/catch_amalgamated.hpp>

#include "crgeo/model.hpp"

using namespace crgeo;

namespace {

// Frame-coefficient expansion of a bracket: [e_i,e_j] = sum_k c^k e_k.
std::vector<double> bracket_frame_coeffs(const FrameData& fd, int i, int j) {
    auto br = fd.bracket(fd.frame[i], fd.frame[j]);
    std::vector<std::vector<Jet>> M(fd.m, std::vector<Jet>(fd.m, Jet()));
    for (int r = 0; r < fd.m; ++r)
        for (int c = 0; c < fd.m; ++c) M[r][c] = fd.frame[c][r];
    JetLinearSolver sol(M);
    auto x = sol.solve(br);
    std::vector<double> out(fd.m);
    for (int k = 0; k < fd.m; ++k) out[k] = x[k].value();
    return out;
}

void check_frame_invariants(const Model& model, const FrameData& fd, double tol) {
    const int m = fd.m, hn = fd.hdim();
    // theta(xi) = 1, theta(e_a) = 0
    REQUIRE(fd.theta_of(fd.frame[m - 1]).value() == Catch::Approx(1.0).margin(tol));
    for (int a = 0; a < hn; ++a)
        REQUIRE(fd.theta_of(fd.frame[a]).value() == Catch::Approx(0.0).margin(tol));
    // J^2 = -Id on frame components
    for (int a = 0; a < hn; ++a)
        for (int b = 0; b < hn; ++b) {
            double s = 0;
            for (int c = 0; c < hn; ++c) s += fd.Jmat[a][c].value() * fd.Jmat[c][b].value();
            REQUIRE(s == Catch::Approx(a == b ? -1.0 : 0.0).margin(tol));
        }
    // d theta(xi, e_a) = 0: theta([xi, e_a]) = 0 since theta(e_a), theta(xi) const
    for (int a = 0; a < hn; ++a) {
        auto br = fd.bracket(fd.frame[m - 1], fd.frame[a]);
        REQUIRE(fd.theta_of(br).value() == Catch::Approx(0.0).margin(tol));
    }
    // 2 g(e_a, e_b) = -d theta(J e_a, e_b); with orthonormal frame this reads
    // 2 delta_ab = sum_c Jmat[a][c] theta([e_c, e_b])
    for (int a = 0; a < hn; ++a)
        for (int b = 0; b < hn; ++b) {
            double s = 0;
            for (int c = 0; c < hn; ++c) {
                auto br = fd.bracket(fd.frame[c], fd.frame[b]);
                s += fd.Jmat[a][c].value() * fd.theta_of(br).value();
            }
            REQUIRE(s == Catch::Approx(a == b ? 2.0 : 0.0).margin(10 * tol));
        }
    (void)model;
}

} // namespace

TEST_CASE("model validation") {
    REQUIRE_THROWS_AS(build_model({ModelKind::sphere, 0}), model_error);
    REQUIRE_THROWS_AS(build_model({ModelKind::group3d, 2, 1, 1}), model_error);
    auto m = build_model({ModelKind::group3d, 1, 0, 1});
    REQUIRE(m.degenerate_bracket);
    auto h = build_model({ModelKind::heisenberg, 2});
    REQUIRE_FALSE(h.has_quadrature);
    REQUIRE(build_model({ModelKind::sphere, 2}).has_quadrature);
}

TEST_CASE("sampling is deterministic and lands on the manifold") {
    auto m = build_model({ModelKind::sphere, 2});
    auto a = sample_points(m, 20, 42);
    auto b = sample_points(m, 20, 42);
    REQUIRE(a == b);
    auto c = sample_points(m, 20, 43);
    REQUIRE(a != c);
    for (auto& p : a) {
        REQUIRE(static_cast<int>(p.size()) == 6);
        double n2 = 0;
        for (double x : p) n2 += x * x;
        REQUIRE(n2 == Catch::Approx(1.0).margin(1e-12));
    }
    auto g = build_model({ModelKind::group3d, 1, 2, 1});
    auto gp = sample_points(g, 10, 1);
    REQUIRE(gp == sample_points(g, 10, 1));
    for (auto& p : gp)
        for (double x : p) REQUIRE(std::abs(x) <= 1.0);
}

TEST_CASE("sphere frame invariants, n = 1 and n = 2") {
    for (int n : {1, 2}) {
        ModelSpec spec{ModelKind::sphere, n};
        spec.jet_order = (n == 1) ? 5 : 4;
        auto m = build_model(spec);
        for (auto& p : sample_points(m, 3, 11)) {
            auto fd = frame_at(m, p);
            check_frame_invariants(m, fd, 1e-10);
            // ambient frame orthonormal, orthogonal to z and xi = Jz
            auto& z = fd.z_amb;
            for (int a = 0; a < 2 * n; ++a) {
                auto& e = fd.frame_amb[a];
                double dz = 0, dxi = 0;
                auto xi = fd.frame_amb[2 * n];
                for (size_t c = 0; c < z.size(); ++c) {
                    dz += e[c].value() * z[c].value();
                    dxi += e[c].value() * xi[c].value();
                }
                REQUIRE(dz == Catch::Approx(0.0).margin(1e-12));
                REQUIRE(dxi == Catch::Approx(0.0).margin(1e-12));
                for (int b = a; b < 2 * n; ++b) {
                    double d = 0;
                    for (size_t c = 0; c < z.size(); ++c)
                        d += e[c].value() * fd.frame_amb[b][c].value();
                    REQUIRE(d == Catch::Approx(a == b ? 1.0 : 0.0).margin(1e-12));
                }
            }
            // chart components reproduce ambient fields through the chart differential
            for (int a = 0; a <= 2 * n; ++a) {
                for (size_t c = 0; c < z.size(); ++c) {
                    Jet s = Jet::constant(fd.sp, 0.0);
                    for (int i = 0; i < fd.m; ++i) s += fd.frame[a][i] * z[c].derivative(i);
                    REQUIRE(s.value() == Catch::Approx(fd.frame_amb[a][c].value()).margin(1e-10));
                }
            }
        }
    }
}

TEST_CASE("heisenberg frame has constant brackets matching the relations") {
    auto m = build_model({ModelKind::heisenberg, 2});
    auto fd = frame_at(m, Point(5, 0.0));
    check_frame_invariants(m, fd, 1e-10);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            auto c = bracket_frame_coeffs(fd, i, j);
            for (int k = 0; k < 5; ++k)
                REQUIRE(c[k] == Catch::Approx(m.struct_const(i, j, k)).margin(1e-10));
        }
}

TEST_CASE("group3d(2,1) frame reproduces its structure constants") {
    auto m = build_model({ModelKind::group3d, 1, 2, 1});
    auto fd = frame_at(m, Point(3, 0.0));
    check_frame_invariants(m, fd, 1e-10);
    auto c = bracket_frame_coeffs(fd, 0, 1);
    REQUIRE(c[0] == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(c[1] == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(c[2] == Catch::Approx(2.0).margin(1e-9));
    auto cx = bracket_frame_coeffs(fd, 2, 0); // [xi, e1] = c1 e2
    REQUIRE(cx[1] == Catch::Approx(2.0).margin(1e-9));
    auto cy = bracket_frame_coeffs(fd, 1, 2); // [e2, xi] = c2 e1
    REQUIRE(cy[0] == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("frame coefficients of brackets are constant across the chart") {
    // left-invariance: frame coefficients of [e_i,e_j] have no chart dependence
    auto m = build_model({ModelKind::group3d, 1, 3, -1});
    auto fd = frame_at(m, Point(3, 0.0));
    auto br = fd.bracket(fd.frame[0], fd.frame[1]);
    std::vector<std::vector<Jet>> M(3, std::vector<Jet>(3, Jet()));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M[r][c] = fd.frame[c][r];
    auto x = JetLinearSolver(M).solve(br);
    for (int k = 0; k < 3; ++k) {
        Jet dev = x[k] - Jet::constant(fd.sp, x[k].value());
        REQUIRE(dev.max_abs_coeff(dev.ord()) < 1e-9);
    }
}

TEST_CASE("restricting an ambient polynomial to the sphere chart") {
    auto m = build_model({ModelKind::sphere, 1});
    auto p = sample_points(m, 1, 5)[0];
    auto fd = frame_at(m, p);
    auto f = Polynomial::variable(0, 4) * Polynomial::variable(2, 4);
    auto j = restrict_to_chart(fd, f);
    REQUIRE(j.value() == Catch::Approx(p[0] * p[2]));
}
