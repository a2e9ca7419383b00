// Pointwise operator zoo on scalar jets: sub-Laplacian, Webster-metric
// Laplacian, the Hessian components B and B0, the one-form P and the
// fourth-order operator C, all expressed through covariant derivatives of
// the Tanaka-Webster connection at a point.
#pragma once

#include "crgeo/connection.hpp"

namespace crgeo {

// covariant derivatives of a scalar up to the requested order
struct ScalarStack {
    const TWGeometry* G = nullptr;
    std::vector<JetTensor> d; // d[k] = nabla^k f (valence k)

    ScalarStack(const TWGeometry& geom, const Jet& f, int order) : G(&geom) {
        d = geom.cov_scalar(f, order);
    }

    const Jet& f() const { return d[0].v[0]; }
    const Jet& df(int i) const { return d[1](i); }
    Jet xif() const { return d[1](G->m - 1); }

    // horizontal gradient components df(e_a)
    Jet grad(int a) const { return d[1](a); }
    // (J grad f)_c = df(e_a) J_{ac}
    Jet Jgrad(int c) const {
        Jet s = Jet::constant(G->sp, 0.0);
        for (int a = 0; a < G->hn; ++a) s += d[1](a) * G->Jc(a, c);
        return s;
    }
    Jet grad_norm2() const {
        Jet s = Jet::constant(G->sp, 0.0);
        for (int a = 0; a < G->hn; ++a) s += d[1](a) * d[1](a);
        return s;
    }
    Jet sublap() const { // -trace_H of the horizontal Hessian
        Jet s = Jet::constant(G->sp, 0.0);
        for (int a = 0; a < G->hn; ++a) s -= d[2](a, a);
        return s;
    }
    Jet omega_trace() const { // g(nabla^2 f, omega) = nabla^2 f(e_a, J e_a)
        Jet s = Jet::constant(G->sp, 0.0);
        for (int a = 0; a < G->hn; ++a)
            for (int b = 0; b < G->hn; ++b) s += d[2](a, b) * G->Jc(a, b);
        return s;
    }
    Jet xi2f() const { return d[2](G->m - 1, G->m - 1); }
    Jet riem_lap() const { return sublap() - xi2f(); }

    // contraction of a horizontal tensor slot with a horizontal vector field
    // given by its frame components
    Jet hess_full2() const { // |nabla df|^2 over horizontal slots
        Jet s = Jet::constant(G->sp, 0.0);
        for (int a = 0; a < G->hn; ++a)
            for (int b = 0; b < G->hn; ++b) s += d[2](a, b) * d[2](a, b);
        return s;
    }
};

// B[f] = (nabla^2 f)_{[1]}, horizontal valence-2
inline JetTensor B_of(const ScalarStack& s) {
    auto [b, _] = decompose_11_m11(*s.G, s.d[2]);
    return b;
}

// B0[f] = B + (lap f / 2n) g - (1/2n) g(nabla^2 f, omega) omega
inline JetTensor B0_of(const ScalarStack& s) {
    const TWGeometry& G = *s.G;
    JetTensor b = B_of(s);
    Jet lap = s.sublap(), w = s.omega_trace();
    double c = 1.0 / G.hn;
    for (int a = 0; a < G.hn; ++a)
        for (int bb = 0; bb < G.hn; ++bb) {
            if (a == bb) b(a, bb) += c * lap;
            b(a, bb) -= c * w * G.Jc(a, bb);
        }
    return b;
}

// P[f](X) = nabla^3 f(X,e_b,e_b) + nabla^3 f(JX,e_b,Je_b) + 4n A(X, J grad f)
inline JetTensor P_of(const ScalarStack& s) {
    const TWGeometry& G = *s.G;
    JetTensor P(G.sp, G.m, 1);
    // omega-trace of the last two slots, per first-slot index
    std::vector<Jet> wtr(G.hn, Jet::constant(G.sp, 0.0));
    for (int cc = 0; cc < G.hn; ++cc)
        for (int b = 0; b < G.hn; ++b)
            for (int dd = 0; dd < G.hn; ++dd) wtr[cc] += s.d[3](cc, b, dd) * G.Jc(b, dd);
    for (int i = 0; i < G.hn; ++i) {
        Jet r = Jet::constant(G.sp, 0.0);
        for (int b = 0; b < G.hn; ++b) r += s.d[3](i, b, b);
        for (int cc = 0; cc < G.hn; ++cc) r += G.Jc(i, cc) * wtr[cc];
        for (int cc = 0; cc < G.hn; ++cc) r += (2.0 * G.hn) * (G.A(i, cc) * s.Jgrad(cc));
        P(i) = r;
    }
    return P;
}

// Cf = -nabla^* P = (nabla_{e_a} P)(e_a)
inline Jet C_of(const ScalarStack& s) {
    const TWGeometry& G = *s.G;
    JetTensor dP = G.cov(P_of(s));
    Jet r = Jet::constant(G.sp, 0.0);
    for (int a = 0; a < G.hn; ++a) r += dP(a, a);
    return r;
}

// horizontal divergence of a one-form: nabla^* sigma = -(nabla_{e_a} sigma)(e_a)
inline Jet hdiv_star(const TWGeometry& G, const JetTensor& sigma) {
    JetTensor ds = G.cov(sigma);
    Jet r = Jet::constant(G.sp, 0.0);
    for (int a = 0; a < G.hn; ++a) r -= ds(a, a);
    return r;
}

} // namespace crgeo
