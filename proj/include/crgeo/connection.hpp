// Tanaka-Webster connection built from its defining axioms, plus the
// curvature pack and iterated covariant derivatives.
//
// The connection coefficients Gamma_{ijk} (nabla_{e_i} e_j = Gamma_{ij}^k e_k,
// j,k horizontal; nabla xi = 0 and nabla theta = 0 make the remaining
// coefficients vanish) are the unknowns of an overdetermined linear system
// assembled from:
//   (a) metric parallelism      Gamma_{iab} + Gamma_{iba} = 0
//   (b) J parallelism           e_i(J_ab) + J_ac Gamma_{icb} - Gamma_{iac} J_cb = 0
//   (c) horizontal torsion      Gamma_{abk} - Gamma_{bak} = c_{ab}^k
//   (d) mixed-torsion symmetry  A symmetric and J-anti-invariant,
//                               where A_ab = Gamma_{xi,a,b} - c_{xi,a}^b.
// The system is solved in jet arithmetic layer by layer around the base
// point; uniqueness is certified through the smallest singular value of the
// base-value matrix and the final residual.
#pragma once

#include "crgeo/model.hpp"

#include <Eigen/SVD>
#include <optional>

namespace crgeo {

namespace detail {
inline size_t ipow(int b, int e) {
    size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}
} // namespace detail

// Dense multi-index array of jets; all slots range over the full frame
// 0..m-1 with the Reeb field last.
struct JetTensor {
    const JetSpace* sp = nullptr;
    int m = 0, valence = 0;
    std::vector<Jet> v;

    JetTensor() = default;
    JetTensor(const JetSpace* sp_, int m_, int valence_)
        : sp(sp_), m(m_), valence(valence_),
          v(detail::ipow(m_, valence_), Jet::constant(sp_, 0.0)) {}

    template <class... I> size_t flat(I... idx) const {
        size_t f = 0;
        ((f = f * m + idx), ...);
        return f;
    }
    template <class... I> Jet& operator()(I... idx) { return v[flat(idx...)]; }
    template <class... I> const Jet& operator()(I... idx) const { return v[flat(idx...)]; }
};

class TWGeometry {
public:
    TWGeometry(const Model& model, const Point& p) : model_(&model) {
        fd = frame_at(model, p);
        m = fd.m;
        hn = fd.hdim();
        n = fd.n;
        sp = fd.sp;
        compute_brackets();
        solve_axioms();
        compute_levi_civita();
    }

    const Model* model_;
    FrameData fd;
    int m, hn, n;
    const JetSpace* sp = nullptr;
    double min_singular_value = 0, axiom_residual = 0;

    // frame-coefficient brackets [e_i,e_j] = c_{ij}^k e_k, full indices
    const Jet& c(int i, int j, int k) const { return c_[(i * m + j) * m + k]; }
    // Tanaka-Webster coefficients, full indices (zero on Reeb slots)
    const Jet& G(int i, int j, int k) const {
        if (j >= hn || k >= hn) return zero_;
        return G_[(i * hn + j) * hn + k];
    }
    // Levi-Civita coefficients of h = g + theta^2, full indices
    const Jet& L(int i, int j, int k) const { return L_[(i * m + j) * m + k]; }
    // complex structure in frame components, extended by J xi = 0
    const Jet& Jc(int i, int j) const {
        if (i >= hn || j >= hn) return zero_;
        return fd.Jmat[i][j];
    }
    // fundamental 2-form omega(e_i,e_j) = g(J e_i, e_j)
    const Jet& om(int i, int j) const { return Jc(i, j); }
    // pseudohermitian torsion A(e_a,e_b)
    const Jet& A(int a, int b) const {
        if (a >= hn || b >= hn) return zero_;
        return A_[a * hn + b];
    }

    Jet D(int i, const Jet& f) const { return fd.derive(i, f); }

    // covariant derivative; the new (differentiation) slot comes first
    JetTensor cov(const JetTensor& T, bool lc = false) const {
        JetTensor r(sp, m, T.valence + 1);
        std::vector<int> s(T.valence, 0);
        const size_t sz = T.v.size();
        for (size_t f = 0; f < sz; ++f) {
            // decode multi-index of T
            size_t t = f;
            for (int k = T.valence - 1; k >= 0; --k) {
                s[k] = static_cast<int>(t % m);
                t /= m;
            }
            for (int i = 0; i < m; ++i) {
                Jet e = D(i, T.v[f]);
                for (int k = 0; k < T.valence; ++k) {
                    const int sk = s[k];
                    const size_t stride = detail::ipow(m, T.valence - 1 - k);
                    const size_t base = f - static_cast<size_t>(sk) * stride;
                    for (int cidx = 0; cidx < m; ++cidx) {
                        const Jet& coeff = lc ? L(i, sk, cidx) : G(i, sk, cidx);
                        if (coeff.space() && coeff.max_abs_coeff(std::max(coeff.ord(), 0)) == 0.0)
                            continue;
                        e -= coeff * T.v[base + static_cast<size_t>(cidx) * stride];
                    }
                }
                r.v[static_cast<size_t>(i) * sz + f] = e;
            }
        }
        return r;
    }

    // nabla^k f as a stack: result[k] has valence k (result[0] is f itself)
    std::vector<JetTensor> cov_scalar(const Jet& f, int order, bool lc = false) const {
        std::vector<JetTensor> out;
        JetTensor t(sp, m, 0);
        t.v[0] = f;
        out.push_back(t);
        for (int k = 1; k <= order; ++k) out.push_back(cov(out.back(), lc));
        return out;
    }

    // R(e_i,e_j,e_k,e_l) = g(R(e_i,e_j)e_k, e_l)
    const JetTensor& curvature(bool lc = false) const {
        auto& slot = lc ? Rlc_ : R_;
        if (!slot) slot = compute_curvature(lc);
        return *slot;
    }

    // Ric(B,C) = R(e_a,B,C,e_a), horizontal trace
    const JetTensor& ricci() const {
        if (!Ric_) {
            const JetTensor& R = curvature();
            JetTensor r(sp, m, 2);
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    Jet s = Jet::constant(sp, 0.0);
                    for (int a = 0; a < hn; ++a) s += R(a, j, k, a);
                    r(j, k) = s;
                }
            Ric_ = std::move(r);
        }
        return *Ric_;
    }

    Jet scalar_curv() const {
        const JetTensor& ric = ricci();
        Jet s = Jet::constant(sp, 0.0);
        for (int a = 0; a < hn; ++a) s += ric(a, a);
        return s;
    }

    // rho(B,C) = (1/2) R(B,C,e_a,J e_a)
    JetTensor rho() const {
        const JetTensor& R = curvature();
        JetTensor r(sp, m, 2);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Jet s = Jet::constant(sp, 0.0);
                for (int a = 0; a < hn; ++a)
                    for (int b = 0; b < hn; ++b) s += R(i, j, a, b) * Jc(a, b);
                r(i, j) = 0.5 * s;
            }
        return r;
    }

    // nabla A as a valence-3 tensor (i, a, b)
    const JetTensor& nablaA() const {
        if (!nA_) {
            JetTensor t(sp, m, 2);
            for (int a = 0; a < hn; ++a)
                for (int b = 0; b < hn; ++b) t(a, b) = A(a, b);
            nA_ = cov(t);
        }
        return *nA_;
    }

private:
    std::vector<Jet> c_, G_, L_, A_;
    Jet zero_;
    mutable std::optional<JetTensor> R_, Rlc_, Ric_, nA_;

    void compute_brackets() {
        c_.assign(static_cast<size_t>(m) * m * m, Jet::constant(sp, 0.0));
        std::vector<std::vector<Jet>> M(m, std::vector<Jet>(m, Jet()));
        for (int r = 0; r < m; ++r)
            for (int col = 0; col < m; ++col) M[r][col] = fd.frame[col][r];
        JetLinearSolver sol(M);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto br = fd.bracket(fd.frame[i], fd.frame[j]);
                auto x = sol.solve(br);
                for (int k = 0; k < m; ++k) {
                    c_[(i * m + j) * m + k] = x[k];
                    c_[(j * m + i) * m + k] = -x[k];
                }
            }
        zero_ = Jet::constant(sp, 0.0);
        zero_.set_ord(sp->order());
    }

    void solve_axioms() {
        const int ncols = m * hn * hn;
        auto col = [&](int i, int a, int b) { return (i * hn + a) * hn + b; };

        struct Trip {
            int r, c;
            Jet a;
        };
        std::vector<Trip> trips;
        std::vector<Jet> rhs;
        int nr = 0;
        auto add = [&](int r, int cidx, Jet a) { trips.push_back({r, cidx, std::move(a)}); };
        auto new_row = [&](Jet b) {
            rhs.push_back(std::move(b));
            return nr++;
        };
        const Jet zero = Jet::constant(sp, 0.0);
        const int xi = m - 1;

        // (a) metric parallel: antisymmetry in the last two indices
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < hn; ++a)
                for (int b = a; b < hn; ++b) {
                    int r = new_row(zero);
                    add(r, col(i, a, b), Jet::constant(sp, 1.0));
                    if (b != a) add(r, col(i, b, a), Jet::constant(sp, 1.0));
                    else trips.back().a = Jet::constant(sp, 2.0);
                }
        // (b) J parallel
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < hn; ++a)
                for (int b = 0; b < hn; ++b) {
                    int r = new_row(-D(i, fd.Jmat[a][b]));
                    for (int cc = 0; cc < hn; ++cc) {
                        add(r, col(i, cc, b), fd.Jmat[a][cc]);
                        add(r, col(i, a, cc), -fd.Jmat[cc][b]);
                    }
                }
        // (c) horizontal part of the torsion normal form
        for (int a = 0; a < hn; ++a)
            for (int b = a + 1; b < hn; ++b)
                for (int k = 0; k < hn; ++k) {
                    int r = new_row(c(a, b, k));
                    add(r, col(a, b, k), Jet::constant(sp, 1.0));
                    add(r, col(b, a, k), Jet::constant(sp, -1.0));
                }
        // (d1) A symmetric
        for (int a = 0; a < hn; ++a)
            for (int b = a + 1; b < hn; ++b) {
                int r = new_row(c(xi, a, b) - c(xi, b, a));
                add(r, col(xi, a, b), Jet::constant(sp, 1.0));
                add(r, col(xi, b, a), Jet::constant(sp, -1.0));
            }
        // (d2) A anti-commutes with J: A(X,Y) = -A(JX,JY)
        for (int a = 0; a < hn; ++a)
            for (int b = 0; b < hn; ++b) {
                Jet b0 = c(xi, a, b);
                for (int cc = 0; cc < hn; ++cc)
                    for (int dd = 0; dd < hn; ++dd)
                        b0 += fd.Jmat[a][cc] * fd.Jmat[b][dd] * c(xi, cc, dd);
                int r = new_row(b0);
                add(r, col(xi, a, b), Jet::constant(sp, 1.0));
                for (int cc = 0; cc < hn; ++cc)
                    for (int dd = 0; dd < hn; ++dd)
                        add(r, col(xi, cc, dd), fd.Jmat[a][cc] * fd.Jmat[b][dd]);
            }

        // working jet order of the solve
        int ord = sp->order();
        for (auto& t : trips) ord = std::min(ord, t.a.ord());
        for (auto& b : rhs) ord = std::min(ord, b.ord());

        Eigen::MatrixXd A0 = Eigen::MatrixXd::Zero(nr, ncols);
        for (auto& t : trips) A0(t.r, t.c) += t.a.coeff(0);
        Eigen::BDCSVD<Eigen::MatrixXd> svd(A0, Eigen::ComputeThinU | Eigen::ComputeThinV);
        min_singular_value = svd.singularValues().minCoeff();
        if (min_singular_value < 1e-8)
            throw model_error("Tanaka-Webster axiom system is rank deficient");

        std::vector<Jet> x(ncols, Jet::constant(sp, 0.0));
        const int ncoef = sp->size();
        Eigen::MatrixXd Rm(nr, ncoef);
        for (int it = 0; it <= ord; ++it) {
            // residual rhs - A x
            std::vector<Jet> res = rhs;
            for (auto& t : trips) res[t.r] -= Jet::mul_trunc(t.a, x[t.c], ord);
            for (int r = 0; r < nr; ++r)
                for (int ci = 0; ci < ncoef; ++ci) Rm(r, ci) = res[r].coeff(ci);
            Eigen::MatrixXd dx = svd.solve(Rm);
            for (int cc = 0; cc < ncols; ++cc)
                for (int ci = 0; ci < ncoef; ++ci)
                    if (sp->degree(ci) <= ord) x[cc].coeff(ci) += dx(cc, ci);
        }
        for (auto& xi_ : x) xi_.set_ord(ord);

        // final residual
        {
            std::vector<Jet> res = rhs;
            for (auto& t : trips) res[t.r] -= Jet::mul_trunc(t.a, x[t.c], ord);
            double mr = 0;
            for (auto& r : res) mr = std::max(mr, r.max_abs_coeff(ord));
            axiom_residual = mr;
            if (mr > 1e-10) throw model_error("Tanaka-Webster axiom system is inconsistent");
        }
        G_ = std::move(x);

        A_.assign(static_cast<size_t>(hn) * hn, Jet());
        for (int a = 0; a < hn; ++a)
            for (int b = 0; b < hn; ++b) A_[a * hn + b] = G(xi, a, b) - c(xi, a, b);
    }

    void compute_levi_civita() {
        // Koszul formula in the h-orthonormal frame {e_a, xi}
        L_.assign(static_cast<size_t>(m) * m * m, Jet());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    L_[(i * m + j) * m + k] = 0.5 * (c(i, j, k) - c(j, k, i) + c(k, i, j));
    }

    JetTensor compute_curvature(bool lc) const {
        JetTensor R(sp, m, 4);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    for (int l = 0; l < m; ++l) {
                        auto g_ = [&](int a, int b, int cc) -> const Jet& {
                            return lc ? L(a, b, cc) : G(a, b, cc);
                        };
                        Jet r = D(i, g_(j, k, l)) - D(j, g_(i, k, l));
                        for (int p = 0; p < m; ++p) {
                            r += g_(j, k, p) * g_(i, p, l) - g_(i, k, p) * g_(j, p, l);
                            r -= c(i, j, p) * g_(p, k, l);
                        }
                        R(i, j, k, l) = r;
                        R(j, i, k, l) = -r;
                    }
        return R;
    }
};

// --- valence-2 horizontal helpers -------------------------------------------

// [1] and [-1] parts with respect to Upsilon = J (x) J
inline std::pair<JetTensor, JetTensor> decompose_11_m11(const TWGeometry& G, const JetTensor& T) {
    JetTensor t1(G.sp, G.m, 2), tm1(G.sp, G.m, 2);
    for (int a = 0; a < G.hn; ++a)
        for (int b = 0; b < G.hn; ++b) {
            Jet jj = Jet::constant(G.sp, 0.0);
            for (int cc = 0; cc < G.hn; ++cc)
                for (int dd = 0; dd < G.hn; ++dd)
                    jj += G.Jc(a, cc) * G.Jc(b, dd) * T(cc, dd);
            t1(a, b) = 0.5 * (T(a, b) + jj);
            tm1(a, b) = 0.5 * (T(a, b) - jj);
        }
    return {std::move(t1), std::move(tm1)};
}

inline double hnorm2_value(const TWGeometry& G, const JetTensor& T) {
    double s = 0;
    for (int a = 0; a < G.hn; ++a)
        for (int b = 0; b < G.hn; ++b) {
            double x = T(a, b).value();
            s += x * x;
        }
    return s;
}

} // namespace crgeo
