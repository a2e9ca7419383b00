// The identity catalog: every tagged equation registered as a named,
// runnable check with tolerance, hypothesis guards and an anchor, plus the
// torsion-model suite and the Lichnerowicz certificate wrapper.
//
// Checks come in four evaluation kinds:
//   pointwise  - frame/tensor identities evaluated at seeded points with
//                random scalar fields (and the extremal field f = x1 on
//                spheres);
//   integral   - exact rational integral identities on spheres (field mode);
//   inequality - one-sided bounds, reported through the violation margin;
//   spectral   - Galerkin eigenvalue facts.
// Guarded checks are reported "skipped" (never "pass") when their
// hypotheses cannot be instantiated on the given model.
#pragma once

#include "crgeo/calculus.hpp"
#include "crgeo/field_ops.hpp"
#include "crgeo/operators.hpp"
#include "crgeo/report.hpp"
#include "crgeo/spectral.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace crgeo {

struct Tolerances {
    double pointwise = 1e-8; // relative, unconditional pointwise identities
    double extremal = 1e-9;  // relative, extremal-eigenfunction identities
    double integral = 1e-8;  // relative, exact-integral identities
    double spectral = 1e-6;  // absolute, eigenvalue facts
};

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string spec_name(const ModelSpec& s) {
    switch (s.kind) {
        case ModelKind::heisenberg: return "heisenberg(" + std::to_string(s.n) + ")";
        case ModelKind::sphere: return "sphere(" + std::to_string(s.n) + ")";
        default:
            return "group3d(" + rational_str(s.c1) + "," + rational_str(s.c2) + ")";
    }
}

// worker pool size for the point loops; results are merged by max so the
// outcome does not depend on the partition
inline int worker_count() {
    if (const char* e = std::getenv("CRGEO_WORKERS")) {
        int w = std::atoi(e);
        if (w >= 1) return std::min(w, 64);
    }
    return 1;
}

template <class Fn> inline void parallel_for(int count, Fn&& fn) {
    int w = std::min(worker_count(), count);
    if (w <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> ts;
    ts.reserve(w);
    for (int t = 0; t < w; ++t)
        ts.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) fn(i);
        });
    for (auto& t : ts) t.join();
}

// max-defect accumulator with a magnitude scale for relative residuals
struct Resid {
    double defect = 0, scale = 0;
    bool touched = false;
    void eq(double lhs, double rhs) {
        touched = true;
        defect = std::max(defect, std::abs(lhs - rhs));
        scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
    }
    // one-sided: require lo <= hi, the violation is the defect
    void le(double lo, double hi) {
        touched = true;
        defect = std::max(defect, std::max(0.0, lo - hi));
        scale = std::max({scale, std::abs(lo), std::abs(hi)});
    }
    void merge(const Resid& o) {
        touched = touched || o.touched;
        defect = std::max(defect, o.defect);
        scale = std::max(scale, o.scale);
    }
    double rel() const { return scale > 1.0 ? defect / scale : defect; }
};

// Pointwise evaluation context: base-point value tables of the frame,
// connection, torsion and curvature pack, plus the scalar stacks of the
// random field (rnd) and, on spheres, the extremal field f = x1 (ext).
struct PointCtx {
    const TWGeometry* Gp = nullptr;
    const ScalarStack* rnd = nullptr;
    const ScalarStack* ext = nullptr;
    int m = 0, hn = 0, n = 0, xi = 0;
    std::vector<double> Jv, Av, Ricv, rhov, Rv, nAv, cv, Gv, Lv, dJv, domv, dRicv, dSv;
    double S = 0, normA2 = 0, maxA = 0;

    explicit PointCtx(const TWGeometry& G)
        : Gp(&G), m(G.m), hn(G.hn), n(G.n), xi(G.m - 1) {
        Jv.assign(static_cast<size_t>(hn) * hn, 0.0);
        Av = Jv;
        for (int a = 0; a < hn; ++a)
            for (int b = 0; b < hn; ++b) {
                Jv[a * hn + b] = G.Jc(a, b).value();
                double v = G.A(a, b).value();
                Av[a * hn + b] = v;
                normA2 += v * v;
                maxA = std::max(maxA, std::abs(v));
            }
        const JetTensor& R = G.curvature();
        Rv.assign(static_cast<size_t>(m) * m * m * m, 0.0);
        for (size_t i = 0; i < R.v.size(); ++i) Rv[i] = R.v[i].value();
        const JetTensor& ric = G.ricci();
        Ricv.assign(static_cast<size_t>(m) * m, 0.0);
        for (size_t i = 0; i < ric.v.size(); ++i) Ricv[i] = ric.v[i].value();
        JetTensor rh = G.rho();
        rhov.assign(static_cast<size_t>(m) * m, 0.0);
        for (size_t i = 0; i < rh.v.size(); ++i) rhov[i] = rh.v[i].value();
        const JetTensor& nA = G.nablaA();
        nAv.assign(nA.v.size(), 0.0);
        for (size_t i = 0; i < nA.v.size(); ++i) nAv[i] = nA.v[i].value();
        cv.assign(static_cast<size_t>(m) * m * m, 0.0);
        Gv = cv;
        Lv = cv;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    cv[(i * m + j) * m + k] = G.c(i, j, k).value();
                    Gv[(i * m + j) * m + k] = G.G(i, j, k).value();
                    Lv[(i * m + j) * m + k] = G.L(i, j, k).value();
                }
        dJv.assign(static_cast<size_t>(m) * hn * hn, 0.0);
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < hn; ++a)
                for (int b = 0; b < hn; ++b)
                    dJv[(i * hn + a) * hn + b] = G.D(i, G.fd.Jmat[a][b]).value();
        {
            JetTensor omT(G.sp, m, 2);
            for (int a = 0; a < hn; ++a)
                for (int b = 0; b < hn; ++b) omT(a, b) = G.om(a, b);
            JetTensor dom = G.cov(omT);
            domv.assign(dom.v.size(), 0.0);
            for (size_t i = 0; i < dom.v.size(); ++i) domv[i] = dom.v[i].value();
        }
        {
            JetTensor dric = G.cov(ric);
            dRicv.assign(dric.v.size(), 0.0);
            for (size_t i = 0; i < dric.v.size(); ++i) dRicv[i] = dric.v[i].value();
        }
        Jet Sj = G.scalar_curv();
        S = Sj.value();
        dSv.assign(m, 0.0);
        for (int i = 0; i < m; ++i) dSv[i] = G.D(i, Sj).value();
    }

    double J(int a, int b) const { return (a < hn && b < hn) ? Jv[a * hn + b] : 0.0; }
    double A(int a, int b) const { return (a < hn && b < hn) ? Av[a * hn + b] : 0.0; }
    double R(int i, int j, int k, int l) const { return Rv[((i * m + j) * m + k) * m + l]; }
    double Ric(int i, int j) const { return Ricv[i * m + j]; }
    double rho(int i, int j) const { return rhov[i * m + j]; }
    double nA(int i, int a, int b) const { return nAv[(i * m + a) * m + b]; }
    double c3(int i, int j, int k) const { return cv[(i * m + j) * m + k]; }
    double Gm(int i, int j, int k) const { return Gv[(i * m + j) * m + k]; }
    double L3(int i, int j, int k) const { return Lv[(i * m + j) * m + k]; }
    double dJ(int i, int a, int b) const { return dJv[(i * hn + a) * hn + b]; }
    double dom(int i, int a, int b) const { return domv[(i * m + a) * m + b]; }
    double dRic(int i, int j, int k) const { return dRicv[(i * m + j) * m + k]; }
};

namespace vdetail {

inline double D1(const ScalarStack& s, int i) { return s.d[1](i).value(); }
inline double D2(const ScalarStack& s, int i, int j) { return s.d[2](i, j).value(); }
inline double D3(const ScalarStack& s, int i, int j, int k) { return s.d[3](i, j, k).value(); }

// A(e_a, grad f)
inline double Agrad(const PointCtx& c, const ScalarStack& s, int a) {
    double r = 0;
    for (int v = 0; v < c.hn; ++v) r += c.A(a, v) * D1(s, v);
    return r;
}
// (J grad f)_e = df(e_a) J_{ae}
inline double Jgrad(const PointCtx& c, const ScalarStack& s, int e) {
    double r = 0;
    for (int a = 0; a < c.hn; ++a) r += D1(s, a) * c.J(a, e);
    return r;
}
// df(J e_z)
inline double dfJ(const PointCtx& c, const ScalarStack& s, int z) {
    double r = 0;
    for (int e = 0; e < c.hn; ++e) r += c.J(z, e) * D1(s, e);
    return r;
}
// A(J grad f, grad f)
inline double AJgg(const PointCtx& c, const ScalarStack& s) {
    double r = 0;
    for (int a = 0; a < c.hn; ++a) r += Jgrad(c, s, a) * Agrad(c, s, a);
    return r;
}
// Ric(grad f, grad f)
inline double Ricgg(const PointCtx& c, const ScalarStack& s) {
    double r = 0;
    for (int a = 0; a < c.hn; ++a)
        for (int b = 0; b < c.hn; ++b) r += c.Ric(a, b) * D1(s, a) * D1(s, b);
    return r;
}
// (nabla_{e_i} A)(e_j, grad f)
inline double nAgrad(const PointCtx& c, const ScalarStack& s, int i, int j) {
    double r = 0;
    for (int v = 0; v < c.hn; ++v) r += c.nA(i, j, v) * D1(s, v);
    return r;
}
// R(e_i, e_j, e_k, grad f)
inline double Rgrad(const PointCtx& c, const ScalarStack& s, int i, int j, int k) {
    double r = 0;
    for (int v = 0; v < c.hn; ++v) r += c.R(i, j, k, v) * D1(s, v);
    return r;
}

} // namespace vdetail

struct PointwiseCheck {
    std::string id;
    std::string anchor;
    bool needs_ext = false;      // extremal first eigenfunction (spheres)
    bool needs_3d = false;       // n == 1
    bool needs_n2 = false;       // n >= 2
    bool needs_sasakian = false; // torsion A == 0
    bool needs_sphere = false;   // round-sphere model constants
    bool inequality = false;
    std::function<void(const PointCtx&, Resid&)> eval;
};

inline const std::vector<PointwiseCheck>& pointwise_registry() {
    using namespace vdetail;
    static const std::vector<PointwiseCheck> reg = [] {
        std::vector<PointwiseCheck> v;
        auto add = [&](PointwiseCheck ck) { v.push_back(std::move(ck)); };

        // ---------------- unconditional frame/tensor identities ------------
        add({"torha", "Sec. 2, connection axioms (torha)", false, false, false, false, false,
             false, [](const PointCtx& c, Resid& r) {
                 // metric parallel, J parallel, torsion normal form
                 for (int i = 0; i < c.m; ++i)
                     for (int a = 0; a < c.hn; ++a)
                         for (int b = 0; b < c.hn; ++b) {
                             r.eq(c.Gm(i, a, b) + c.Gm(i, b, a), 0.0);
                             double s = c.dJ(i, a, b);
                             for (int e = 0; e < c.hn; ++e)
                                 s += c.J(a, e) * c.Gm(i, e, b) - c.Gm(i, a, e) * c.J(e, b);
                             r.eq(s, 0.0);
                         }
                 for (int a = 0; a < c.hn; ++a) {
                     r.eq(c.c3(c.xi, a, c.xi), 0.0); // T(xi, e_a) horizontal
                     for (int b = a + 1; b < c.hn; ++b) {
                         for (int k = 0; k < c.hn; ++k)
                             r.eq(c.Gm(a, b, k) - c.Gm(b, a, k), c.c3(a, b, k));
                         r.eq(-c.c3(a, b, c.xi), 2.0 * c.J(a, b)); // T(X,Y)=2w(X,Y)xi
                     }
                 }
                 // g(T(xi,X),Y) symmetric and J-anti-invariant
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         r.eq(c.A(a, b), c.A(b, a));
                         double jj = 0;
                         for (int e = 0; e < c.hn; ++e)
                             for (int f = 0; f < c.hn; ++f)
                                 jj += c.J(a, e) * c.J(b, f) * c.A(e, f);
                         r.eq(jj, -c.A(a, b));
                     }
             }});

        add({"tortrace", "Sec. 2, eq. (tortrace)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 double tr = 0, trJ = 0;
                 for (int a = 0; a < c.hn; ++a) {
                     tr += c.A(a, a);
                     for (int b = 0; b < c.hn; ++b) trJ += c.A(a, b) * c.J(a, b);
                 }
                 r.eq(tr, 0.0);
                 r.eq(trJ, 0.0);
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         r.eq(c.A(a, b), c.A(b, a));
                         double jj = 0;
                         for (int e = 0; e < c.hn; ++e)
                             for (int f = 0; f < c.hn; ++f)
                                 jj += c.J(a, e) * c.J(b, f) * c.A(e, f);
                         r.eq(c.A(a, b), -jj);
                     }
             }});

        add({"currrr", "Sec. 2, eq. (currrr)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 auto AJ = [&](int x, int y) { // A(e_x, J e_y)
                     double s = 0;
                     for (int v = 0; v < c.hn; ++v) s += c.A(x, v) * c.J(y, v);
                     return s;
                 };
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b)
                         for (int z = 0; z < c.hn; ++z)
                             for (int w = 0; w < c.hn; ++w) {
                                 double Rjj = 0, RjjZ = 0;
                                 for (int e = 0; e < c.hn; ++e)
                                     for (int f = 0; f < c.hn; ++f) {
                                         Rjj += c.J(a, e) * c.J(b, f) * c.R(e, f, z, w);
                                         RjjZ += c.J(z, e) * c.J(w, f) * c.R(a, b, e, f);
                                     }
                                 double lhs = 0.5 * (c.R(a, b, z, w) - Rjj);
                                 double rhs = -(a == z ? AJ(b, w) : 0.0) -
                                              (b == w ? AJ(a, z) : 0.0) +
                                              (b == z ? AJ(a, w) : 0.0) +
                                              (a == w ? AJ(b, z) : 0.0) -
                                              c.J(a, z) * c.A(b, w) - c.J(b, w) * c.A(a, z) +
                                              c.J(b, z) * c.A(a, w) + c.J(a, w) * c.A(b, z);
                                 r.eq(lhs, rhs);
                                 r.eq(c.R(a, b, z, w), -c.R(a, b, w, z));
                                 r.eq(RjjZ, c.R(a, b, z, w));
                             }
             }});

        add({"currr", "Sec. 2, eq. (currr)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b)
                         for (int z = 0; z < c.hn; ++z)
                             r.eq(c.R(c.xi, a, b, z), c.nA(b, z, a) - c.nA(z, b, a));
             }});

        add({"torric", "Sec. 2, eq. (torric)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         r.eq(c.Ric(a, b), c.Ric(b, a));
                         double Rjj = 0, AJ = 0;
                         for (int e = 0; e < c.hn; ++e) {
                             AJ += c.A(a, e) * c.J(b, e); // A(X, JY)
                             for (int f = 0; f < c.hn; ++f)
                                 Rjj += c.J(a, e) * c.J(b, f) * c.Ric(e, f);
                         }
                         r.eq(c.Ric(a, b) - Rjj, 4.0 * (c.n - 1) * AJ);
                     }
             }});

        add({"rho", "Sec. 2, eq. (rho)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double lhs = 0, Rjj = 0, tr = 0;
                         for (int e = 0; e < c.hn; ++e) {
                             lhs += 2.0 * c.rho(a, e) * c.J(b, e); // 2 rho(X, JY)
                             for (int f = 0; f < c.hn; ++f)
                                 Rjj += c.J(a, e) * c.J(b, f) * c.Ric(e, f);
                         }
                         for (int p = 0; p < c.hn; ++p)
                             for (int q = 0; q < c.hn; ++q)
                                 for (int e = 0; e < c.hn; ++e)
                                     tr += c.J(p, q) * c.R(p, q, a, e) * c.J(b, e);
                         double rhs = -(c.Ric(a, b) + Rjj);
                         r.eq(lhs, rhs);
                         r.eq(rhs, tr);
                     }
             }});

        add({"rid", "Sec. 2, eq. (rid)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double rhoJ = 0, AJ = 0;
                         for (int e = 0; e < c.hn; ++e) {
                             rhoJ += c.J(a, e) * c.rho(e, b); // rho(JX, Y)
                             AJ += c.J(a, e) * c.A(e, b);     // A(JX, Y)
                         }
                         r.eq(c.Ric(a, b), rhoJ + 2.0 * (c.n - 1) * AJ);
                     }
             }});

        add({"div", "Sec. 2, eq. (div)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int z = 0; z < c.hn; ++z) {
                     double lhs = 0;
                     for (int a = 0; a < c.hn; ++a) lhs += 2.0 * c.dRic(a, a, z);
                     r.eq(lhs, c.dSv[z]);
                 }
             }});

        add({"e:ricci identities", "Sec. 2, the six Ricci identities", false, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.rnd;
                 const int xi = c.xi;
                 for (int a = 0; a < c.hn; ++a) {
                     r.eq(D2(s, a, xi) - D2(s, xi, a), Agrad(c, s, a));
                     for (int b = 0; b < c.hn; ++b) {
                         r.eq(D2(s, a, b) - D2(s, b, a), -2.0 * c.J(a, b) * D1(s, xi));
                         // third-order, vertical-horizontal exchanges
                         double l5 = D3(s, xi, a, b) - D3(s, a, xi, b);
                         double r5 = 0;
                         for (int e = 0; e < c.hn; ++e)
                             r5 += D1(s, e) * c.nA(e, b, a) - c.nA(b, e, a) * D1(s, e) -
                                   c.A(a, e) * D2(s, e, b);
                         r.eq(l5, r5);
                         double l6 = D3(s, a, b, xi) - D3(s, xi, a, b);
                         double r6 = nAgrad(c, s, a, b) + nAgrad(c, s, b, a);
                         for (int e = 0; e < c.hn; ++e)
                             r6 += c.A(a, e) * D2(s, e, b) + c.A(b, e) * D2(s, a, e) -
                                   D1(s, e) * c.nA(e, a, b);
                         r.eq(l6, r6);
                         for (int z = 0; z < c.hn; ++z) {
                             r.eq(D3(s, a, b, z) - D3(s, b, a, z),
                                  -Rgrad(c, s, a, b, z) - 2.0 * c.J(a, b) * D2(s, xi, z));
                             double l4 = D3(s, a, b, z) - D3(s, z, b, a);
                             double r4 = -Rgrad(c, s, a, b, z) - Rgrad(c, s, b, z, a) -
                                         2.0 * c.J(a, b) * D2(s, xi, z) -
                                         2.0 * c.J(b, z) * D2(s, xi, a) +
                                         2.0 * c.J(z, a) * D2(s, xi, b) +
                                         2.0 * c.J(z, a) * Agrad(c, s, b);
                             r.eq(l4, r4);
                         }
                     }
                 }
             }});

        add({"xi1", "Sec. 2, eq. (xi1)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.rnd;
                 double w = 0, tr = 0;
                 for (int a = 0; a < c.hn; ++a) {
                     tr += D2(s, a, a);
                     for (int b = 0; b < c.hn; ++b) w += D2(s, a, b) * c.J(a, b);
                 }
                 r.eq(w, -static_cast<double>(c.hn) * D1(s, c.xi)); // hn = 2n
                 r.eq(tr, -s.sublap().value());
             }});

        add({"bohh", "Appendix, Greenleaf Bochner formula (bohh)", false, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.rnd;
                 Jet u = Jet::constant(G.sp, 0.0);
                 for (int a = 0; a < c.hn; ++a) u += s.d[1](a) * s.d[1](a);
                 ScalarStack su(G, u, 2);
                 // with the positive sub-Laplacian (-trace), the Bochner
                 // left-hand side is -(1/2) lap |grad f|^2
                 double lhs = -0.5 * su.sublap().value();
                 Jet lap = s.sublap();
                 double gradlap = 0;
                 for (int a = 0; a < c.hn; ++a) gradlap += G.D(a, lap).value() * D1(s, a);
                 double hxiJ = 0;
                 for (int e = 0; e < c.hn; ++e) hxiJ += D2(s, c.xi, e) * Jgrad(c, s, e);
                 double rhs = -gradlap + Ricgg(c, s) + 2.0 * AJgg(c, s) +
                              s.hess_full2().value() + 4.0 * hxiJ;
                 r.eq(lhs, rhs);
             }});

        add({"e:vertical Bochner", "Sec. 3, vertical Bochner formula", false, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.rnd;
                 Jet xifj = s.d[1](c.xi);
                 ScalarStack sv(G, xifj * xifj, 2);
                 double lhs = -sv.sublap().value();
                 double gxif2 = 0, gAh = 0, divAg = 0;
                 for (int a = 0; a < c.hn; ++a) {
                     gxif2 += D2(s, a, c.xi) * D2(s, a, c.xi);
                     for (int b = 0; b < c.hn; ++b) gAh += c.A(a, b) * D2(s, a, b);
                     for (int e = 0; e < c.hn; ++e) divAg -= c.nA(a, a, e) * D1(s, e);
                 }
                 double xif = D1(s, c.xi);
                 double xilap = G.D(c.xi, s.sublap()).value();
                 r.eq(lhs, 2.0 * gxif2 - 2.0 * xif * xilap + 4.0 * xif * gAh -
                               4.0 * xif * divAg);
             }});

        add({"lcbi", "Sec. 6, Levi-Civita comparison (lcbi)", false, false, false, false,
             false, false, [](const PointCtx& c, Resid& r) {
                 auto Th = [&](int i, int j, int k) {
                     if (k == c.xi) return -c.c3(i, j, c.xi);
                     return c.Gm(i, j, k) - c.Gm(j, i, k) - c.c3(i, j, k);
                 };
                 for (int i = 0; i < c.m; ++i)
                     for (int j = 0; j < c.m; ++j)
                         for (int k = 0; k < c.m; ++k) {
                             double lhs = (j < c.hn && k < c.hn) ? c.Gm(i, j, k) : 0.0;
                             double rhs = c.L3(i, j, k) +
                                          0.5 * (Th(i, j, k) - Th(j, k, i) + Th(k, i, j));
                             r.eq(lhs, rhs);
                         }
             }});

        add({"obsa", "Sec. 4, eq. (obsa)", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.rnd;
                 auto dlc = G.cov_scalar(s.f(), 2, true);
                 double lhs = 0;
                 for (int i = 0; i < c.m; ++i) lhs -= dlc[2](i, i).value();
                 r.eq(lhs, s.riem_lap().value());
             }});

        add({"coshy3", "Appendix, projection inequality (coshy3)", false, false, false,
             false, false, true, [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 auto run = [&](const ScalarStack& s, bool equality) {
                     auto [t1, tm1] = decompose_11_m11(G, s.d[2]);
                     double lhs = hnorm2_value(G, t1);
                     double lap = s.sublap().value(), w = s.omega_trace().value();
                     double rhs = (lap * lap + w * w) / G.hn;
                     r.le(rhs, lhs);
                     if (!equality) return;
                     r.eq(lhs, rhs);
                     // equality case: (hess f)_[1] = -(lap f/2n) g + (w/2n) omega
                     for (int a = 0; a < c.hn; ++a)
                         for (int b = 0; b < c.hn; ++b)
                             r.eq(t1(a, b).value(),
                                  -(lap / G.hn) * (a == b) + (w / G.hn) * c.J(a, b));
                 };
                 run(*c.rnd, false);
                 if (c.ext) run(*c.ext, true);
             }});

        add({"par", "Appendix, parallel horizontal torsion (par)", false, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 // T(Y,Z) = 2 w(Y,Z) xi on horizontal arguments; with nabla xi = 0
                 // its covariant derivative reduces to nabla omega
                 for (int i = 0; i < c.m; ++i)
                     for (int a = 0; a < c.hn; ++a)
                         for (int b = 0; b < c.hn; ++b) r.eq(c.dom(i, a, b), 0.0);
             }});

        add({"gr3", "Appendix, Lemma gr3", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.rnd;
                 for (int z = 0; z < c.hn; ++z) {
                     double tr = 0;
                     for (int a = 0; a < c.hn; ++a)
                         for (int b = 0; b < c.hn; ++b) tr += c.J(a, b) * D3(s, z, b, a);
                     r.eq(D2(s, c.xi, z), tr / c.hn - Agrad(c, s, z));
                 }
             }});

        add({"l:GrLee", "Appendix, Lemma GrLee", false, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.rnd;
                 JetTensor dB0 = G.cov(B0_of(s));
                 JetTensor P = P_of(s);
                 const double f = (c.n - 1.0) / G.hn;
                 for (int z = 0; z < c.hn; ++z) {
                     double lhs = 0;
                     for (int a = 0; a < c.hn; ++a) lhs += dB0(a, a, z).value();
                     r.eq(lhs, f * P(z).value());
                 }
             }});

        add({"wh", "Sec. 6, eq. (wh)", false, false, false, true, false, false,
             [](const PointCtx& c, Resid& r) {
                 for (int i = 0; i < c.m; ++i)
                     for (int j = 0; j < c.m; ++j)
                         for (int k = 0; k < c.m; ++k) {
                             double rhs = ((j < c.hn && k < c.hn) ? c.Gm(i, j, k) : 0.0) +
                                          (i == c.xi ? c.J(j, k) : 0.0) +
                                          (j == c.xi ? c.J(i, k) : 0.0) -
                                          (k == c.xi ? c.J(i, j) : 0.0);
                             r.eq(c.L3(i, j, k), rhs);
                         }
             }});

        add({"t:A vansihes if div 3D", "Sec. 5 and Sec. 4, constant Webster curvature",
             false, false, false, false, true, false, [](const PointCtx& c, Resid& r) {
                 // round-sphere constants: S = 4n(n+1) and Ric = 2(n+1) g
                 r.eq(c.S, 4.0 * c.n * (c.n + 1));
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b)
                         r.eq(c.Ric(a, b), 2.0 * (c.n + 1) * (a == b ? 1.0 : 0.0));
             }});

        // ---------------- extremal-eigenfunction identities ----------------
        add({"e:hessian", "Sec. 3, Lemma on the extremal Hessian (e:hessian)", true, false,
             false, false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value();
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b)
                         r.eq(D2(s, a, b),
                              -f * (a == b) - D1(s, c.xi) * c.J(a, b));
             }});

        add({"eq7", "Sec. 3, eq. (eq7)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value();
                 // eigenfunction precondition and the k0-normalized Hessian form
                 r.eq(s.sublap().value(), static_cast<double>(c.hn) * f);
                 const double k0 = 2.0 * (c.n + 1);
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b)
                         r.eq(D2(s, a, b), -(k0 / (2.0 * (c.n + 1))) * f * (a == b) -
                                               D1(s, c.xi) * c.J(a, b));
             }});

        add({"eq14", "Sec. 3, eq. (eq14)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 const double k0 = 2.0 * (c.n + 1);
                 r.eq(Ricgg(c, s) + 4.0 * AJgg(c, s), k0 * s.grad_norm2().value());
             }});

        add({"e:D3f extremal bis", "Sec. 3, Lemma on the third derivative (bis)", true,
             false, false, false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value(), xif = D1(s, c.xi), x2 = s.xi2f().value();
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double rhs = -xif * (a == b) - x2 * c.J(a, b) -
                                      2.0 * f * c.A(a, b) + nAgrad(c, s, a, b) +
                                      nAgrad(c, s, b, a);
                         for (int e = 0; e < c.hn; ++e) rhs -= D1(s, e) * c.nA(e, a, b);
                         r.eq(D3(s, a, b, c.xi), rhs);
                     }
             }});

        add({"xii1", "Sec. 3, eq. (xii1)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.ext;
                 ScalarStack sx(G, s.d[1](c.xi), 2);
                 r.eq(sx.sublap().value(),
                      static_cast<double>(G.hn) * s.d[1](c.xi).value());
             }});

        add({"xii4", "Sec. 3, eq. (xii4)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.ext;
                 ScalarStack sx(G, s.d[1](c.xi), 2);
                 double xif = D1(s, c.xi), x2 = s.xi2f().value();
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double lhs = sx.d[2](a, b).value();
                         r.eq(lhs, -xif * (a == b) - x2 * c.J(a, b));
                         r.eq(lhs, D3(s, a, b, c.xi));
                     }
             }});

        add({"eqc1", "Sec. 4, eq. (eqc1)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int z = 0; z < c.hn; ++z)
                     for (int a = 0; a < c.hn; ++a)
                         for (int b = 0; b < c.hn; ++b) {
                             double rhs = D1(s, z) * (a == b) - D1(s, a) * (z == b) +
                                          D2(s, c.xi, z) * c.J(a, b) -
                                          D2(s, c.xi, a) * c.J(z, b) -
                                          2.0 * D2(s, c.xi, b) * c.J(z, a) +
                                          Agrad(c, s, z) * c.J(a, b) -
                                          Agrad(c, s, a) * c.J(z, b);
                             r.eq(Rgrad(c, s, z, a, b), rhs);
                         }
             }});

        add({"eqc02", "Sec. 4, eq. (eqc02)", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int z = 0; z < c.hn; ++z) {
                     double ricg = 0, ricJJ = 0, AJz = 0, hxiJz = 0;
                     for (int e = 0; e < c.hn; ++e) {
                         ricg += c.Ric(z, e) * D1(s, e);
                         AJz += c.J(z, e) * Agrad(c, s, e); // A(JZ, grad f)
                         hxiJz += c.J(z, e) * D2(s, c.xi, e);
                         for (int q = 0; q < c.hn; ++q)
                             ricJJ += c.J(z, e) * c.Ric(e, q) * Jgrad(c, s, q);
                     }
                     r.eq(ricg, (2.0 * c.n - 1) * D1(s, z) - AJz - 3.0 * hxiJz);
                     r.eq(ricJJ, D1(s, z) - (2.0 * c.n - 1) * AJz -
                                     (2.0 * c.n + 1) * hxiJz);
                 }
             }});

        add({"eqc01", "Sec. 4, eq. (eqc01)", true, false, true, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int z = 0; z < c.hn; ++z) {
                     double AJz = 0, hxiJz = 0;
                     for (int e = 0; e < c.hn; ++e) {
                         AJz += c.J(z, e) * Agrad(c, s, e);
                         hxiJz += c.J(z, e) * D2(s, c.xi, e);
                     }
                     r.eq(hxiJz, -D1(s, z) + AJz);
                 }
             }});

        add({"e:vhessian", "Sec. 4, eq. (e:vhessian)", true, false, true, false, false,
             false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int b = 0; b < c.hn; ++b) {
                     double dj = dfJ(c, s, b), ag = Agrad(c, s, b);
                     r.eq(D2(s, c.xi, b), dj + ag);
                     r.eq(D2(s, b, c.xi), dj + 2.0 * ag);
                 }
             }});

        add({"e:vhessianc", "Sec. 6, eq. (e:vhessianc)", true, false, false, true, false,
             false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int b = 0; b < c.hn; ++b) {
                     double dj = dfJ(c, s, b);
                     r.eq(D2(s, c.xi, b), dj);
                     r.eq(D2(s, b, c.xi), dj);
                 }
                 r.eq(s.xi2f().value(), -s.f().value());
             }});

        add({"e:norms dfA vs Adf", "Sec. 4, norm identity of Lemma R1", true, false, true,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double sum = 0;
                 for (int a = 0; a < c.hn; ++a) {
                     double g = Agrad(c, s, a);
                     sum += g * g;
                 }
                 r.eq(s.grad_norm2().value() * c.normA2, 2.0 * sum);
             }});

        add({"e:D3f extremal", "Sec. 4, Lemma on the third derivative", true, false, true,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value(), xif = D1(s, c.xi);
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double AJ = 0; // A(J e_a, e_b)
                         for (int e = 0; e < c.hn; ++e) AJ += c.J(a, e) * c.A(e, b);
                         double rhs = -xif * (a == b) + f * c.J(a, b) -
                                      2.0 * f * c.A(a, b) - 2.0 * xif * AJ +
                                      2.0 * nAgrad(c, s, a, b);
                         r.eq(D3(s, a, b, c.xi), rhs);
                     }
             }});

        add({"e:xi2f", "Sec. 4, Lemma on the vertical second derivative", true, false,
             true, false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double tr = 0;
                 for (int a = 0; a < c.hn; ++a)
                     for (int e = 0; e < c.hn; ++e) tr += c.nA(a, a, e) * Jgrad(c, s, e);
                 r.eq(s.xi2f().value(), -s.f().value() - tr / c.n);
             }});

        add({"ntor1", "Sec. 4, Lemma ntor1", true, false, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value(), xif = D1(s, c.xi);
                 r.eq(s.xi2f().value(), -f);
                 for (int a = 0; a < c.hn; ++a)
                     for (int b = 0; b < c.hn; ++b) {
                         double AJ = 0; // A(X, JY)
                         for (int e = 0; e < c.hn; ++e) AJ += c.A(a, e) * c.J(b, e);
                         r.eq(nAgrad(c, s, a, b), f * c.A(a, b) + xif * AJ);
                     }
             }});

        add({"tordf", "Sec. 4, eq. A grad f = 0 (tordf)", true, false, false, false, false,
             false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int a = 0; a < c.hn; ++a) r.eq(Agrad(c, s, a), 0.0);
             }});

        add({"e:riem-eigen-fn", "Sec. 4, Corollary (e:riem-eigen-fn)", true, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 r.eq(s.riem_lap().value(), (2.0 * c.n + 1) * s.f().value());
             }});

        add({"clasob", "Sec. 6, classical Obata equation (clasob)", true, false, false,
             false, false, false, [](const PointCtx& c, Resid& r) {
                 const TWGeometry& G = *c.Gp;
                 const ScalarStack& s = *c.ext;
                 auto dlc = G.cov_scalar(s.f(), 2, true);
                 double f = s.f().value();
                 for (int i = 0; i < c.m; ++i)
                     for (int j = 0; j < c.m; ++j)
                         r.eq(dlc[2](i, j).value(), -f * (i == j));
             }});

        // ---------------- 3D extremal identities ---------------------------
        add({"n11", "Sec. 5, eq. (n11)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double ricg = Ricgg(c, s), g2 = s.grad_norm2().value();
                 r.eq(ricg, 0.5 * c.S * g2);
                 r.eq(ricg, 4.0 * g2 - 4.0 * AJgg(c, s));
             }});

        add({"n12", "Sec. 5, eq. (n12)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double h = 0;
                 for (int e = 0; e < c.hn; ++e) h += D2(s, c.xi, e) * Jgrad(c, s, e);
                 double g2 = s.grad_norm2().value();
                 r.eq(h, -g2 + AJgg(c, s));
                 r.eq(h, -0.25 * Ricgg(c, s));
                 r.eq(h, -(c.S / 8.0) * g2);
             }});

        add({"n13", "Sec. 5, eq. (n13)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double hx = 0, hg = 0, Agg = 0;
                 for (int e = 0; e < c.hn; ++e) {
                     hx += D2(s, c.xi, e) * D1(s, e);
                     hg += D2(s, e, c.xi) * D1(s, e);
                     Agg += Agrad(c, s, e) * D1(s, e);
                 }
                 r.eq(hx, -Agg / 3.0);
                 r.eq(hg, 2.0 * Agg / 3.0);
             }});

        add({"e:xi2f 3D", "Sec. 5, eq. (e:xi2f 3D)", true, true, false, false, false,
             false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double gdS = 0;
                 for (int a = 0; a < c.hn; ++a) gdS += D1(s, a) * c.dSv[a];
                 r.eq(6.0 * s.xi2f().value(),
                      -(c.S - 2.0) * s.f().value() + 0.5 * gdS);
             }});

        add({"e:riem-eqn in 3D", "Sec. 5, Lemma riem-eqn in 3D", true, true, false, false,
             false, false, [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double gdS = 0;
                 for (int a = 0; a < c.hn; ++a) gdS += D1(s, a) * c.dSv[a];
                 r.eq(s.riem_lap().value(),
                      (2.0 + (c.S - 2.0) / 6.0) * s.f().value() - gdS / 12.0);
             }});

        add({"hes3", "Sec. 6, eq. (hes3)", true, true, false, true, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 for (int z = 0; z < c.hn; ++z) {
                     double rhs = ((c.S - 2.0) / 6.0) * dfJ(c, s, z);
                     r.eq(D2(s, c.xi, z), rhs);
                     r.eq(D2(s, z, c.xi), rhs);
                 }
             }});

        add({"hes31", "Sec. 6, eq. (hes31)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double f = s.f().value(), xif = D1(s, c.xi);
                 for (int b = 0; b < c.hn; ++b)
                     for (int z = 0; z < c.hn; ++z)
                         r.eq(D3(s, b, z, c.xi),
                              (c.dSv[b] * dfJ(c, s, z) + (c.S - 2.0) * f * c.J(b, z) -
                               (c.S - 2.0) * xif * (b == z)) /
                                  6.0);
             }});

        add({"hes32", "Sec. 6, eq. (hes32)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 double xif = D1(s, c.xi), x2 = s.xi2f().value();
                 for (int b = 0; b < c.hn; ++b)
                     for (int z = 0; z < c.hn; ++z)
                         r.eq(D3(s, b, z, c.xi), -xif * (b == z) - x2 * c.J(b, z));
             }});

        add({"hes34", "Sec. 6, eq. (hes34)", true, true, false, false, false, false,
             [](const PointCtx& c, Resid& r) {
                 const ScalarStack& s = *c.ext;
                 r.eq(s.xi2f().value(), -s.f().value());
             }});

        return v;
    }();
    return reg;
}

} // namespace crgeo

#include "crgeo/verify_suites.hpp"
