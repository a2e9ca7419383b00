// Catalog of exact model pseudohermitian manifolds and their frame
// realizations: Heisenberg groups, standard Sasakian spheres, and the
// three dimensional left-invariant family with bracket relations
//   [e1,e2] = 2 xi,  [xi,e1] = c1 e2,  [e2,xi] = c2 e1.
//
// Frames are realized as jets in a chart around the requested point: a
// normalized graph chart for spheres, the left-translated exponential chart
// (canonical coordinates of the first kind) for the groups. The group frame
// coefficients come from the Bernoulli-number series for the inverse
// differential of exp, truncated at the jet order.
#pragma once

#include "crgeo/jet.hpp"

#include <Eigen/Dense>
#include <numbers>
#include <random>
#include <string>

namespace crgeo {

enum class ModelKind { heisenberg, sphere, group3d };

struct ModelSpec {
    ModelKind kind = ModelKind::sphere;
    int n = 1; // CR dimension; manifold dimension is 2n+1
    Rational c1 = 0, c2 = 0;
    int jet_order = 5;
};

struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Point = std::vector<double>;

// Chart-component vector field: coefficients of d/du_mu.
using VectorField = std::vector<Jet>;

// Solves M(u) x = b(u) for square jet matrices whose base value is
// invertible, by fixed-point refinement order by order.
class JetLinearSolver {
public:
    explicit JetLinearSolver(std::vector<std::vector<Jet>> M) : M_(std::move(M)) {
        const int m = static_cast<int>(M_.size());
        Eigen::MatrixXd M0(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) M0(i, j) = M_[i][j].value();
        lu_ = M0.partialPivLu();
        if (std::abs(lu_.determinant()) < 1e-12) throw model_error("singular jet linear system");
    }

    std::vector<Jet> solve(const std::vector<Jet>& b) const {
        const int m = static_cast<int>(M_.size());
        const JetSpace* sp = b[0].space();
        int ord = sp->order();
        for (auto& row : M_)
            for (auto& e : row) ord = std::min(ord, e.ord());
        for (auto& e : b) ord = std::min(ord, e.ord());

        std::vector<Jet> x(m, Jet::constant(sp, 0.0));
        Eigen::VectorXd v(m);
        for (int it = 0; it <= ord; ++it) {
            // r = b - M x
            std::vector<Jet> r = b;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) r[i] -= Jet::mul_trunc(M_[i][j], x[j], ord);
            // x += M0^{-1} r, applied coefficient-by-coefficient
            for (int ci = 0; ci < sp->size(); ++ci) {
                if (sp->degree(ci) > ord) continue;
                for (int i = 0; i < m; ++i) v(i) = r[i].coeff(ci);
                Eigen::VectorXd s = lu_.solve(v);
                for (int i = 0; i < m; ++i) x[i].coeff(ci) += s(i);
            }
        }
        for (auto& xi : x) xi.set_ord(ord);
        return x;
    }

private:
    std::vector<std::vector<Jet>> M_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

// Pointwise frame realization: e_1..e_2n horizontal, xi last, as chart
// vector fields, together with the contact form and the complex structure
// in frame components.
struct FrameData {
    int n = 1;             // CR dimension
    int m = 3;             // chart dimension 2n+1
    const JetSpace* sp = nullptr;
    std::vector<VectorField> frame; // size m, frame[2n] = xi
    std::vector<Jet> theta;         // chart components of the contact form
    std::vector<std::vector<Jet>> Jmat; // J e_a = sum_b Jmat[a][b] e_b (2n x 2n)
    // sphere only: ambient realization at the chart
    std::vector<Jet> z_amb;
    std::vector<std::vector<Jet>> frame_amb; // ambient components, xi last

    int hdim() const { return 2 * n; }
    int fdim() const { return m; }

    Jet derive(const VectorField& X, const Jet& f) const {
        Jet r = Jet::constant(sp, 0.0);
        for (int mu = 0; mu < m; ++mu) r += X[mu] * f.derivative(mu);
        return r;
    }
    Jet derive(int frame_index, const Jet& f) const { return derive(frame[frame_index], f); }

    VectorField bracket(const VectorField& X, const VectorField& Y) const {
        VectorField r(m, Jet::constant(sp, 0.0));
        for (int mu = 0; mu < m; ++mu) {
            for (int nu = 0; nu < m; ++nu)
                r[mu] += X[nu] * Y[mu].derivative(nu) - Y[nu] * X[mu].derivative(nu);
        }
        return r;
    }

    Jet theta_of(const VectorField& X) const {
        Jet r = Jet::constant(sp, 0.0);
        for (int mu = 0; mu < m; ++mu) r += theta[mu] * X[mu];
        return r;
    }
};

class Model {
public:
    ModelSpec spec;
    bool compact = false;
    bool has_quadrature = false;
    bool degenerate_bracket = false;

    int dim() const { return 2 * spec.n + 1; }
    int ambient_dim() const { return 2 * spec.n + 2; } // spheres only

    std::string kind_name() const {
        switch (spec.kind) {
            case ModelKind::heisenberg: return "heisenberg";
            case ModelKind::sphere: return "sphere";
            case ModelKind::group3d: return "group3d";
        }
        return "?";
    }

    // Structure constants [e_i, e_j] = c_{ij}^k e_k for the group models.
    double struct_const(int i, int j, int k) const {
        const int n = spec.n, xi = 2 * n;
        auto val = [&](double v) { return v; };
        if (spec.kind == ModelKind::heisenberg) {
            for (int a = 0; a < n; ++a) {
                if (i == a && j == n + a && k == xi) return val(2);
                if (i == n + a && j == a && k == xi) return val(-2);
            }
            return 0;
        }
        if (spec.kind == ModelKind::group3d) {
            double c1 = to_double(spec.c1), c2 = to_double(spec.c2);
            if (i == 0 && j == 1 && k == 2) return 2;
            if (i == 1 && j == 0 && k == 2) return -2;
            if (i == 2 && j == 0 && k == 1) return c1;
            if (i == 0 && j == 2 && k == 1) return -c1;
            if (i == 1 && j == 2 && k == 0) return c2;
            if (i == 2 && j == 1 && k == 0) return -c2;
            return 0;
        }
        throw model_error("structure constants only exist for group models");
    }
};

inline void check_jacobi(const Model& model) {
    const int m = model.dim();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                for (int w = 0; w < m; ++w) {
                    double s = 0;
                    for (int u = 0; u < m; ++u)
                        s += model.struct_const(x, y, u) * model.struct_const(u, z, w) +
                             model.struct_const(y, z, u) * model.struct_const(u, x, w) +
                             model.struct_const(z, x, u) * model.struct_const(u, y, w);
                    if (std::abs(s) > 1e-12)
                        throw model_error("structure constants violate the Jacobi identity");
                }
}

inline Model build_model(const ModelSpec& spec) {
    if (spec.n < 1) throw model_error("CR dimension n must be at least 1");
    if (spec.kind == ModelKind::group3d && spec.n != 1)
        throw model_error("group3d models are three dimensional (n = 1)");
    if (spec.jet_order < 2) throw model_error("jet order must be at least 2");
    Model m;
    m.spec = spec;
    m.compact = (spec.kind == ModelKind::sphere);
    m.has_quadrature = (spec.kind == ModelKind::sphere);
    if (spec.kind != ModelKind::sphere) check_jacobi(m);
    if (spec.kind == ModelKind::group3d && (spec.c1 == 0 || spec.c2 == 0))
        m.degenerate_bracket = true;
    return m;
}

inline std::vector<Point> sample_points(const Model& model, int count, uint64_t seed) {
    if (count < 1) throw model_error("sample count must be positive");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { // uniform in [0,1), stdlib-independent
        return (rng() >> 11) * 0x1.0p-53;
    };
    std::vector<Point> pts;
    pts.reserve(count);
    if (model.spec.kind == ModelKind::sphere) {
        const int d = model.ambient_dim();
        while (static_cast<int>(pts.size()) < count) {
            Point p(d);
            double n2 = 0;
            for (int i = 0; i < d; i += 2) { // Box-Muller pairs
                double u1 = unit(), u2 = unit();
                if (u1 < 1e-300) u1 = 1e-300;
                double r = std::sqrt(-2.0 * std::log(u1));
                p[i] = r * std::cos(2 * std::numbers::pi * u2);
                p[i + 1] = r * std::sin(2 * std::numbers::pi * u2);
                n2 += p[i] * p[i] + p[i + 1] * p[i + 1];
            }
            if (n2 < 1e-12) continue;
            double nn = std::sqrt(n2);
            for (double& c : p) c /= nn;
            pts.push_back(std::move(p));
        }
    } else {
        const int m = model.dim();
        for (int k = 0; k < count; ++k) {
            Point p(m);
            for (double& c : p) c = 2.0 * unit() - 1.0;
            pts.push_back(std::move(p));
        }
    }
    return pts;
}

namespace detail {

// ambient complex structure on R^{2n+2} with ordering (x1,y1,x2,y2,...)
inline std::vector<double> ambient_J_times(const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (size_t k = 0; k < v.size(); k += 2) {
        r[k] = -v[k + 1];
        r[k + 1] = v[k];
    }
    return r;
}

inline std::vector<Jet> ambient_J_times(const std::vector<Jet>& v) {
    std::vector<Jet> r(v.size(), Jet());
    for (size_t k = 0; k < v.size(); k += 2) {
        r[k] = -v[k + 1];
        r[k + 1] = v[k];
    }
    return r;
}

inline Jet dot(const std::vector<Jet>& a, const std::vector<Jet>& b) {
    Jet r = Jet::constant(a[0].space(), 0.0);
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// Bernoulli numbers with B1 = +1/2 (the t/(1-e^{-t}) convention).
inline double bernoulli_plus(int k) {
    static const double b[] = {1.0, 0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0,
                               -1.0 / 30, 0.0, 5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6};
    if (k < 0 || k >= static_cast<int>(std::size(b)))
        throw model_error("jet order beyond tabulated Bernoulli numbers");
    return b[k];
}

inline FrameData group_frame(const Model& model) {
    const int m = model.dim();
    const int n = model.spec.n;
    const int K = model.spec.jet_order;
    const JetSpace* sp = JetSpace::get(m, K);

    FrameData fd;
    fd.n = n;
    fd.m = m;
    fd.sp = sp;

    // ad_x as jet matrix: (ad_x)^k_j = x^i c_{ij}^k
    std::vector<std::vector<Jet>> ad(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
    for (int i = 0; i < m; ++i) {
        Jet xi = Jet::variable(sp, i);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                double c = model.struct_const(i, j, k);
                if (c != 0.0) ad[k][j] += c * xi;
            }
    }
    // F = sum_k B+_k / k! ad^k
    std::vector<std::vector<Jet>> F(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
    std::vector<std::vector<Jet>> P(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
    for (int i = 0; i < m; ++i) P[i][i] = Jet::constant(sp, 1.0);
    double kfact = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            kfact *= k;
            std::vector<std::vector<Jet>> Q(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    for (int l = 0; l < m; ++l) Q[i][j] += ad[i][l] * P[l][j];
            P = std::move(Q);
        }
        double c = bernoulli_plus(k) / kfact;
        if (c != 0.0)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) F[i][j] += c * P[i][j];
    }

    fd.frame.assign(m, VectorField(m, Jet::constant(sp, 0.0)));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) fd.frame[j][i] = F[i][j];

    // contact form: theta_mu satisfies theta(F column j) = delta_{j,xi},
    // i.e. F^T theta = e_xi.
    std::vector<std::vector<Jet>> FT(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) FT[i][j] = F[j][i];
    JetLinearSolver tsolver(FT);
    std::vector<Jet> rhs(m, Jet::constant(sp, 0.0));
    rhs[m - 1] = Jet::constant(sp, 1.0);
    fd.theta = tsolver.solve(rhs);

    // J e_a = -e_{n+a}, J e_{n+a} = e_a
    fd.Jmat.assign(2 * n, std::vector<Jet>(2 * n, Jet::constant(sp, 0.0)));
    for (int a = 0; a < n; ++a) {
        fd.Jmat[a][n + a] = Jet::constant(sp, -1.0);
        fd.Jmat[n + a][a] = Jet::constant(sp, 1.0);
    }
    return fd;
}

inline FrameData sphere_frame(const Model& model, const Point& p) {
    const int n = model.spec.n;
    const int m = 2 * n + 1;
    const int d = 2 * n + 2;
    if (static_cast<int>(p.size()) != d) throw model_error("sphere point has wrong dimension");
    double n2 = 0;
    for (double c : p) n2 += c * c;
    if (std::abs(n2 - 1.0) > 1e-10) throw model_error("point is off the sphere");

    // chart jets are built one order above the requested jet order: the chart
    // differential costs a derivative before the frame is even assembled
    const int K = model.spec.jet_order + 1;
    const JetSpace* sp = JetSpace::get(m, K);

    // deterministic tangent basis at p: project ambient axes, pivot on norm
    std::vector<std::vector<double>> basis;
    {
        std::vector<std::vector<double>> cand(d, std::vector<double>(d, 0.0));
        for (int i = 0; i < d; ++i) {
            cand[i][i] = 1.0;
            for (int c = 0; c < d; ++c) cand[i][c] -= p[i] * p[c];
        }
        std::vector<bool> used(d, false);
        while (static_cast<int>(basis.size()) < m) {
            int best = -1;
            double bestn = -1;
            for (int i = 0; i < d; ++i) {
                if (used[i]) continue;
                double nn = 0;
                for (double c : cand[i]) nn += c * c;
                if (nn > bestn + 1e-15) {
                    bestn = nn;
                    best = i;
                }
            }
            used[best] = true;
            if (bestn < 1e-12) continue;
            auto v = cand[best];
            double nn = std::sqrt(bestn);
            for (double& c : v) c /= nn;
            basis.push_back(v);
            for (int i = 0; i < d; ++i) {
                if (used[i]) continue;
                double dp = 0;
                for (int c = 0; c < d; ++c) dp += cand[i][c] * v[c];
                for (int c = 0; c < d; ++c) cand[i][c] -= dp * v[c];
            }
        }
    }

    // z(u) = (p + sum u_i b_i) / sqrt(1 + |u|^2)
    std::vector<Jet> u(m);
    for (int i = 0; i < m; ++i) u[i] = Jet::variable(sp, i);
    Jet un2 = Jet::constant(sp, 1.0);
    for (int i = 0; i < m; ++i) un2 += u[i] * u[i];
    Jet scale = un2.sqrt().inverse();
    std::vector<Jet> z(d, Jet::constant(sp, 0.0));
    for (int c = 0; c < d; ++c) {
        Jet num = Jet::constant(sp, p[c]);
        for (int i = 0; i < m; ++i) num += basis[i][c] * u[i];
        z[c] = num * scale;
    }
    std::vector<Jet> xi_amb = ambient_J_times(z);

    FrameData fd;
    fd.n = n;
    fd.m = m;
    fd.sp = sp;
    fd.z_amb = z;

    // horizontal frame by Gram-Schmidt on projected ambient axes
    std::vector<std::vector<Jet>> hframe;
    {
        std::vector<std::vector<Jet>> cand;
        for (int i = 0; i < d; ++i) {
            std::vector<Jet> v(d, Jet::constant(sp, 0.0));
            v[i] = Jet::constant(sp, 1.0);
            Jet a = dot(v, z), b = dot(v, xi_amb);
            for (int c = 0; c < d; ++c) v[c] -= a * z[c] + b * xi_amb[c];
            cand.push_back(std::move(v));
        }
        std::vector<bool> used(d, false);
        while (static_cast<int>(hframe.size()) < 2 * n) {
            int best = -1;
            double bestn = -1;
            for (int i = 0; i < d; ++i) {
                if (used[i]) continue;
                double nn = dot(cand[i], cand[i]).value();
                if (nn > bestn + 1e-15) {
                    bestn = nn;
                    best = i;
                }
            }
            used[best] = true;
            if (bestn < 1e-10) continue;
            auto v = cand[best];
            Jet inv_norm = dot(v, v).sqrt().inverse();
            for (auto& c : v) c = c * inv_norm;
            hframe.push_back(v);
            for (int i = 0; i < d; ++i) {
                if (used[i]) continue;
                Jet dp = dot(cand[i], v);
                for (int c = 0; c < d; ++c) cand[i][c] -= dp * v[c];
            }
        }
    }
    fd.frame_amb = hframe;
    fd.frame_amb.push_back(xi_amb);

    // chart differential and conversion ambient -> chart components
    std::vector<std::vector<Jet>> Zu(d, std::vector<Jet>(m, Jet()));
    for (int c = 0; c < d; ++c)
        for (int i = 0; i < m; ++i) Zu[c][i] = z[c].derivative(i);
    std::vector<std::vector<Jet>> G(m, std::vector<Jet>(m, Jet::constant(sp, 0.0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < d; ++c) G[i][j] += Zu[c][i] * Zu[c][j];
    JetLinearSolver gram(G);
    auto to_chart = [&](const std::vector<Jet>& amb) {
        std::vector<Jet> rhs(m, Jet::constant(sp, 0.0));
        for (int i = 0; i < m; ++i)
            for (int c = 0; c < d; ++c) rhs[i] += Zu[c][i] * amb[c];
        return gram.solve(rhs);
    };
    for (auto& e : fd.frame_amb) fd.frame.push_back(to_chart(e));

    // theta in chart components: theta(d/du_i) = <J z, dz/du_i>
    fd.theta.assign(m, Jet::constant(sp, 0.0));
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < d; ++c) fd.theta[i] += xi_amb[c] * Zu[c][i];

    // J in frame components
    fd.Jmat.assign(2 * n, std::vector<Jet>(2 * n, Jet::constant(sp, 0.0)));
    for (int a = 0; a < 2 * n; ++a) {
        auto Je = ambient_J_times(hframe[a]);
        for (int b = 0; b < 2 * n; ++b) fd.Jmat[a][b] = dot(Je, hframe[b]);
    }
    return fd;
}

} // namespace detail

inline FrameData frame_at(const Model& model, const Point& p) {
    if (model.spec.kind == ModelKind::sphere) return detail::sphere_frame(model, p);
    (void)p; // left-invariant: the frame in the point's own left chart is point-independent
    return detail::group_frame(model);
}

// Restrict an ambient polynomial (sphere models) to the chart of a frame.
inline Jet restrict_to_chart(const FrameData& fd, const Polynomial& f) {
    if (fd.z_amb.empty()) throw model_error("polynomial fields only attach to sphere models");
    return poly_on_jets(f, fd.z_amb);
}

} // namespace crgeo
