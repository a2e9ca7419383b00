// Galerkin spectra on the spheres: a real basis from bigraded monomial
// restrictions, exact rational Gram and operator matrices, floating-point
// symmetric eigensolve, and an independent pointwise-application oracle.
#pragma once

#include "crgeo/field_ops.hpp"
#include "crgeo/operators.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

namespace crgeo {

struct BasisFunction {
    Polynomial poly; // real-valued restriction representative
    int p = 0, q = 0;
};

namespace detail {

// complex polynomial as (real, imaginary) parts
struct CPoly {
    Polynomial re, im;
};

inline CPoly cmul(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

} // namespace detail

// Real basis of the degree <= N slice of polynomial restrictions on S^{2n+1}:
// monomials z^alpha zbar^beta with |alpha|+|beta| <= N and
// min(alpha_{n+1}, beta_{n+1}) = 0 restrict to linearly independent
// functions; conjugate pairs are combined into Re/Im parts, with only the
// real part kept when alpha = beta.
inline std::vector<BasisFunction> spectral_basis(int n, int N) {
    if (N < 1) throw model_error("degree cap must be >= 1");
    const int nc = n + 1, d = 2 * nc;
    std::vector<BasisFunction> basis;
    std::vector<int> alpha(nc, 0), beta(nc, 0);
    auto mono = [&]() {
        detail::CPoly m{Polynomial::constant(d, 1), Polynomial::constant(d, 0)};
        for (int k = 0; k < nc; ++k) {
            detail::CPoly zk{Polynomial::variable(2 * k, d), Polynomial::variable(2 * k + 1, d)};
            detail::CPoly zbk{zk.re, -zk.im};
            for (int e = 0; e < alpha[k]; ++e) m = detail::cmul(m, zk);
            for (int e = 0; e < beta[k]; ++e) m = detail::cmul(m, zbk);
        }
        return m;
    };
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == 2 * nc) {
            if (alpha[nc - 1] > 0 && beta[nc - 1] > 0) return;
            // keep one representative of each conjugate pair
            if (std::lexicographical_compare(alpha.begin(), alpha.end(), beta.begin(), beta.end()))
                return;
            int p = 0, q = 0;
            for (int k = 0; k < nc; ++k) {
                p += alpha[k];
                q += beta[k];
            }
            auto m = mono();
            basis.push_back({m.re.sphere_reduce(), p, q});
            if (alpha != beta) basis.push_back({m.im.sphere_reduce(), p, q});
            return;
        }
        int* slot = var < nc ? &alpha[var] : &beta[var - nc];
        for (int k = 0; k <= rem; ++k) {
            *slot = k;
            self(self, var + 1, rem - k);
        }
        *slot = 0;
    };
    rec(rec, 0, N);
    return basis;
}

// expected real dimension of the degree <= N restriction slice
inline long spectral_basis_dim(int n, int N) {
    auto binom = [](long a, long b) {
        long r = 1;
        for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return binom(N + 2 * n + 1, 2 * n + 1) + binom(N + 2 * n, 2 * n + 1);
}

struct SpectralMatrix {
    std::string op;
    int n = 0, N = 0;
    std::vector<BasisFunction> basis;
    Eigen::MatrixXd gram;            // exact Gram converted to double
    Eigen::MatrixXd ortho_matrix;    // L^{-1} M L^{-T}, symmetrized
    double symmetry_defect = 0;      // max |M - M^T| before symmetrization
    double gram_min_eig = 0;
    Eigen::VectorXd eigenvalues;     // ascending
    Eigen::MatrixXd eigenvectors;    // columns, coordinates in the raw basis

    struct Group {
        double value;
        int multiplicity;
        std::vector<std::pair<int, int>> bidegrees;
    };
    std::vector<Group> groups; // eigenvalues grouped within gap 1e-6
};

inline SpectralMatrix assemble(int n, const std::string& op, int N) {
    SphereFieldCalc calc(n);
    SphereIntegrator I(calc.dim());
    SpectralMatrix sm;
    sm.op = op;
    sm.n = n;
    sm.N = N;
    sm.basis = spectral_basis(n, N);
    const int dim = static_cast<int>(sm.basis.size());
    if (dim != spectral_basis_dim(n, N)) throw model_error("basis enumeration bug");

    std::vector<Polynomial> opb;
    opb.reserve(dim);
    for (auto& b : sm.basis) {
        if (op == "sublaplacian") opb.push_back(calc.sublap(b.poly));
        else if (op == "riemannian_laplacian") opb.push_back(calc.riem_lap(b.poly));
        else if (op == "paneitz") opb.push_back(calc.paneitz(b.poly));
        else throw model_error("unknown operator: " + op);
    }

    Eigen::MatrixXd G(dim, dim), M(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // exact rational entries (common factor pi^{n+1} dropped)
            G(i, j) = to_double(I.integrate_product(sm.basis[i].poly, sm.basis[j].poly));
            M(i, j) = to_double(I.integrate_product(sm.basis[i].poly, opb[j]));
        }
    sm.gram = G;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ge(G, Eigen::EigenvaluesOnly);
    sm.gram_min_eig = ge.eigenvalues().minCoeff();
    if (sm.gram_min_eig <= 1e-12) throw model_error("Gram matrix not positive definite");

    Eigen::LLT<Eigen::MatrixXd> llt(G);
    Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd Mo = L.triangularView<Eigen::Lower>().solve(M);
    Mo = L.triangularView<Eigen::Lower>().solve(Mo.transpose().eval()).transpose().eval();
    sm.symmetry_defect = (Mo - Mo.transpose()).cwiseAbs().maxCoeff();
    Mo = 0.5 * (Mo + Mo.transpose().eval());
    sm.ortho_matrix = Mo;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Mo);
    sm.eigenvalues = es.eigenvalues();
    // raw-basis coordinates: v = L^{-T} u
    sm.eigenvectors = L.transpose().triangularView<Eigen::Upper>().solve(es.eigenvectors());

    // multiplicity grouping with gap 1e-6 and bidegree attribution from the
    // dominant coordinates
    for (int i = 0; i < dim;) {
        int j = i;
        while (j + 1 < dim && sm.eigenvalues(j + 1) - sm.eigenvalues(j) < 1e-6) ++j;
        SpectralMatrix::Group g;
        g.value = sm.eigenvalues.segment(i, j - i + 1).mean();
        g.multiplicity = j - i + 1;
        for (int c = i; c <= j; ++c) {
            int arg = 0;
            sm.eigenvectors.col(c).cwiseAbs().maxCoeff(&arg);
            auto pq = std::make_pair(sm.basis[arg].p, sm.basis[arg].q);
            if (std::find(g.bidegrees.begin(), g.bidegrees.end(), pq) == g.bidegrees.end())
                g.bidegrees.push_back(pq);
        }
        std::sort(g.bidegrees.begin(), g.bidegrees.end());
        sm.groups.push_back(std::move(g));
        i = j + 1;
    }
    return sm;
}

struct FirstEigen {
    double lambda1 = 0;
    int multiplicity = 0;
    Eigen::MatrixXd eigenbasis; // raw-basis coordinates, one column per function
};

inline FirstEigen first_eigenvalue(const SpectralMatrix& sm) {
    const int dim = static_cast<int>(sm.eigenvalues.size());
    int i = 0;
    while (i < dim && sm.eigenvalues(i) <= 1e-8) ++i;
    if (i == dim) throw model_error("no positive eigenvalue in the assembled slice");
    int j = i;
    while (j + 1 < dim && sm.eigenvalues(j + 1) - sm.eigenvalues(j) < 1e-6) ++j;
    FirstEigen fe;
    fe.lambda1 = sm.eigenvalues.segment(i, j - i + 1).mean();
    fe.multiplicity = j - i + 1;
    fe.eigenbasis = sm.eigenvectors.middleCols(i, j - i + 1);
    return fe;
}

// Independent cross-check: apply the pointwise operator to each basis
// function at sampled points, fit the matrix of the operator in the basis by
// least squares, and return its eigenvalues (ascending real parts).
inline Eigen::VectorXd pointwise_fit_spectrum(const Model& model, const std::string& op, int N,
                                              std::uint64_t seed) {
    const int n = model.spec.n;
    auto basis = spectral_basis(n, N);
    const int dim = static_cast<int>(basis.size());
    const int npts = dim + dim / 2 + 5;
    auto pts = sample_points(model, npts, seed);
    Eigen::MatrixXd E(npts, dim), V(npts, dim);
    for (int t = 0; t < npts; ++t) {
        TWGeometry G(model, pts[t]);
        for (int j = 0; j < dim; ++j) {
            E(t, j) = basis[j].poly.eval(pts[t]);
            ScalarStack s(G, restrict_to_chart(G.fd, basis[j].poly), op == "paneitz" ? 4 : 2);
            if (op == "sublaplacian") V(t, j) = s.sublap().value();
            else if (op == "riemannian_laplacian") V(t, j) = s.riem_lap().value();
            else if (op == "paneitz") V(t, j) = C_of(s).value();
            else throw model_error("unknown operator: " + op);
        }
    }
    // E * C = V  =>  C = E^+ V; Op b_j = sum_i C(i,j) b_i
    Eigen::MatrixXd C = E.colPivHouseholderQr().solve(V);
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    Eigen::VectorXd ev = es.eigenvalues().real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

struct LichnerowiczCertificate {
    double k0 = 0;
    double lambda1 = 0;
    double bound = 0; // (n/(n+1)) k0
    double gap = 0;   // lambda1 - bound
    bool holds = false;
};

// k0 = min over sampled points and unit horizontal X of Ric(X,X) + 4A(X,JX)
inline double compute_k0(const Model& model, int npoints, int nx_per_point, std::uint64_t seed) {
    auto pts = sample_points(model, npoints, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::normal_distribution<double> gauss;
    double k0 = std::numeric_limits<double>::infinity();
    for (auto& p : pts) {
        TWGeometry G(model, p);
        const int hn = G.hn;
        std::vector<std::vector<double>> ric(hn, std::vector<double>(hn)),
            A(hn, std::vector<double>(hn)), Jc(hn, std::vector<double>(hn));
        for (int a = 0; a < hn; ++a)
            for (int b = 0; b < hn; ++b) {
                ric[a][b] = G.ricci()(a, b).value();
                A[a][b] = G.A(a, b).value();
                Jc[a][b] = G.Jc(a, b).value();
            }
        std::vector<double> u(hn), Ju(hn);
        for (int t = 0; t < nx_per_point; ++t) {
            double n2 = 0;
            for (int a = 0; a < hn; ++a) {
                u[a] = gauss(rng);
                n2 += u[a] * u[a];
            }
            if (n2 < 1e-12) continue;
            const double inv = 1.0 / std::sqrt(n2);
            for (int a = 0; a < hn; ++a) u[a] *= inv;
            for (int b = 0; b < hn; ++b) {
                Ju[b] = 0;
                for (int a = 0; a < hn; ++a) Ju[b] += u[a] * Jc[a][b];
            }
            double v = 0;
            for (int a = 0; a < hn; ++a)
                for (int b = 0; b < hn; ++b) v += u[a] * (ric[a][b] * u[b] + 4.0 * A[a][b] * Ju[b]);
            k0 = std::min(k0, v);
        }
    }
    return k0;
}

inline LichnerowiczCertificate lichnerowicz_certificate(const Model& model, int N,
                                                        std::uint64_t seed) {
    if (model.spec.kind != ModelKind::sphere)
        throw model_error("certificate requires a compact (sphere) model");
    if (N < 2) throw model_error("degree cap must be >= 2");
    const int n = model.spec.n;
    LichnerowiczCertificate c;
    c.k0 = compute_k0(model, 10, 1000, seed);
    c.lambda1 = first_eigenvalue(assemble(n, "sublaplacian", N)).lambda1;
    c.bound = c.k0 * n / (n + 1.0);
    c.gap = c.lambda1 - c.bound;
    c.holds = c.gap >= -1e-8;
    return c;
}

} // namespace crgeo
