// Exact "field mode" operators on the Sasakian spheres: every operator maps
// polynomials to polynomials with rational coefficients, so Galerkin
// matrices and integral identities can be evaluated without floating-point
// quadrature.
//
// The implementation works with ambient tensor components. For tangent
// fields U, V on the sphere the Tanaka-Webster connection is
//     nabla_U V = Dbar_U V + K(U, V),
//     K(U,V) = <U,V> z - theta(U) J V_H - theta(V) J U_H + omega(U_H,V_H) Jz,
// with Dbar the flat ambient derivative, theta = <Jz, .>, and V_H the
// horizontal part. A covariant step on a covariant tensor S is therefore
//     (nabla S)_{j,c...} = d_j S_{c...} - sum_e S_{...e...} K^e_{j,c_k},
// and horizontal traces contract with the projector PH = I - z z^T - Jz Jz^T.
// All results are reduced to the canonical form modulo |z|^2 = 1.
#pragma once

#include "crgeo/polynomial.hpp"
#include "crgeo/sphere_integral.hpp"

#include <vector>

namespace crgeo {

class SphereFieldCalc {
public:
    explicit SphereFieldCalc(int n) : n_(n), d_(2 * n + 2) {
        z_.reserve(d_);
        for (int e = 0; e < d_; ++e) z_.push_back(Polynomial::variable(e, d_));
        // ambient complex structure on pairs (x_k, y_k): J(x,y) = (-y, x)
        Jm_.assign(d_, std::vector<int>(d_, 0));
        for (int k = 0; k < d_; k += 2) {
            Jm_[k][k + 1] = -1;
            Jm_[k + 1][k] = 1;
        }
        xi_.assign(d_, Polynomial::constant(d_, 0));
        for (int e = 0; e < d_; ++e)
            for (int c = 0; c < d_; ++c)
                if (Jm_[e][c] != 0) xi_[e] += Rational(Jm_[e][c]) * z_[c];
        PH_.assign(d_, std::vector<Polynomial>(d_, Polynomial::constant(d_, 0)));
        for (int e = 0; e < d_; ++e)
            for (int c = 0; c < d_; ++c) {
                Polynomial p = Polynomial::constant(d_, e == c ? 1 : 0);
                p -= z_[e] * z_[c];
                p -= xi_[e] * xi_[c];
                PH_[e][c] = p;
            }
        // JPH[e][c] = (J PH)_{ec}
        JPH_.assign(d_, std::vector<Polynomial>(d_, Polynomial::constant(d_, 0)));
        for (int e = 0; e < d_; ++e)
            for (int c = 0; c < d_; ++c)
                for (int p = 0; p < d_; ++p)
                    if (Jm_[e][p] != 0) JPH_[e][c] += Rational(Jm_[e][p]) * PH_[p][c];
        // omega_{jc} = <J PH e_j, PH e_c>
        om_.assign(d_, std::vector<Polynomial>(d_, Polynomial::constant(d_, 0)));
        for (int j = 0; j < d_; ++j)
            for (int c = 0; c < d_; ++c) {
                Polynomial s = Polynomial::constant(d_, 0);
                for (int e = 0; e < d_; ++e) s += JPH_[e][j] * PH_[e][c];
                om_[j][c] = s.sphere_reduce();
            }
        // connector K^e_{j,c}
        K_.assign(d_, std::vector<std::vector<Polynomial>>(
                          d_, std::vector<Polynomial>(d_, Polynomial::constant(d_, 0))));
        for (int e = 0; e < d_; ++e)
            for (int j = 0; j < d_; ++j)
                for (int c = 0; c < d_; ++c) {
                    Polynomial p = Polynomial::constant(d_, 0);
                    if (j == c) p += z_[e];
                    p -= xi_[j] * JPH_[e][c];
                    p -= xi_[c] * JPH_[e][j];
                    p += om_[j][c] * xi_[e];
                    K_[e][j][c] = p.sphere_reduce();
                }
    }

    int n() const { return n_; }
    int dim() const { return d_; }
    const std::vector<Polynomial>& z() const { return z_; }
    const std::vector<std::vector<Polynomial>>& PH() const { return PH_; }

    Polynomial reduce(const Polynomial& p) const { return p.sphere_reduce(); }

    // one covariant step on a covariant tensor given as a flat component
    // array with `valence` ambient slots
    std::vector<Polynomial> cov_step(const std::vector<Polynomial>& S, int valence) const {
        const size_t sz = S.size();
        std::vector<Polynomial> r(sz * d_, Polynomial::constant(d_, 0));
        std::vector<int> idx(valence, 0);
        for (size_t f = 0; f < sz; ++f) {
            size_t t = f;
            for (int k = valence - 1; k >= 0; --k) {
                idx[k] = static_cast<int>(t % d_);
                t /= d_;
            }
            for (int j = 0; j < d_; ++j) {
                Polynomial e = S[f].derivative(j);
                for (int k = 0; k < valence; ++k) {
                    const size_t stride = [&] {
                        size_t s = 1;
                        for (int q = k + 1; q < valence; ++q) s *= d_;
                        return s;
                    }();
                    const size_t base = f - static_cast<size_t>(idx[k]) * stride;
                    for (int ee = 0; ee < d_; ++ee)
                        e -= S[base + static_cast<size_t>(ee) * stride] * K_[ee][j][idx[k]];
                }
                r[static_cast<size_t>(j) * sz + f] = e.sphere_reduce();
            }
        }
        return r;
    }

    std::vector<Polynomial> d1(const Polynomial& f) const {
        std::vector<Polynomial> r;
        r.reserve(d_);
        for (int c = 0; c < d_; ++c) r.push_back(f.derivative(c));
        return r;
    }

    // horizontal Hessian components (nabla^2 f)_{j,c}
    std::vector<Polynomial> hessian(const Polynomial& f) const { return cov_step(d1(f), 1); }

    Polynomial trace_H(const std::vector<Polynomial>& S2) const {
        Polynomial s = Polynomial::constant(d_, 0);
        for (int j = 0; j < d_; ++j)
            for (int c = 0; c < d_; ++c) s += PH_[j][c] * S2[j * d_ + c];
        return s.sphere_reduce();
    }

    Polynomial sublap(const Polynomial& f) const {
        Polynomial s = trace_H(hessian(f));
        return (Rational(-1) * s).sphere_reduce();
    }

    Polynomial xif(const Polynomial& f) const {
        Polynomial s = Polynomial::constant(d_, 0);
        for (int e = 0; e < d_; ++e) s += xi_[e] * f.derivative(e);
        return s.sphere_reduce();
    }

    Polynomial riem_lap(const Polynomial& f) const {
        Polynomial s = sublap(f) - xif(xif(f));
        return s.sphere_reduce();
    }

    // g(nabla^2 f, omega) = -2n df(xi) by the trace formula; computed here
    // from the Hessian for cross-checking
    Polynomial omega_trace(const std::vector<Polynomial>& S2) const {
        Polynomial s = Polynomial::constant(d_, 0);
        // sum_a S2(e_a, J e_a): contraction matrix M_{jc} = sum_a (e_a)_j (J e_a)_c
        // with sum_a e_a e_a^T = PH gives M = -(J PH)^T ... explicitly
        // M_{jc} = sum_p J_{cp} PH_{jp}
        for (int j = 0; j < d_; ++j)
            for (int c = 0; c < d_; ++c) {
                Polynomial m = Polynomial::constant(d_, 0);
                for (int p = 0; p < d_; ++p)
                    if (Jm_[c][p] != 0) m += Rational(Jm_[c][p]) * PH_[j][p];
                s += S2[j * d_ + c] * m;
            }
        return s.sphere_reduce();
    }

    // the one-form P_f; on the torsion-free sphere
    // P(X) = -d(lap f)(X) + d(g(nabla^2 f, omega))(JX)
    std::vector<Polynomial> P_form(const Polynomial& f) const {
        Polynomial lap = sublap(f);
        Polynomial w = (Rational(-2 * n_) * xif(f)).sphere_reduce(); // trace formula
        std::vector<Polynomial> P(d_, Polynomial::constant(d_, 0));
        for (int c = 0; c < d_; ++c) {
            Polynomial p = Rational(-1) * lap.derivative(c);
            for (int e = 0; e < d_; ++e)
                if (Jm_[e][c] != 0) p += Rational(Jm_[e][c]) * w.derivative(e);
            P[c] = p.sphere_reduce();
        }
        return P;
    }

    // CR-Paneitz operator Cf = -nabla^* P = trace_H(nabla P)
    Polynomial paneitz(const Polynomial& f) const {
        return trace_H(cov_step(P_form(f), 1));
    }

    // horizontal gradient, ambient components
    std::vector<Polynomial> hgrad(const Polynomial& f) const {
        std::vector<Polynomial> g(d_, Polynomial::constant(d_, 0));
        for (int e = 0; e < d_; ++e) {
            for (int c = 0; c < d_; ++c) g[e] += PH_[e][c] * f.derivative(c);
            g[e] = g[e].sphere_reduce();
        }
        return g;
    }

    // divergence (positive trace) of a horizontal one-form
    Polynomial hdiv(const std::vector<Polynomial>& sigma) const {
        return trace_H(cov_step(sigma, 1));
    }

    // contraction of a one-form with a horizontal vector (ambient comps)
    Polynomial pair(const std::vector<Polynomial>& sigma, const std::vector<Polynomial>& X) const {
        Polynomial s = Polynomial::constant(d_, 0);
        for (int e = 0; e < d_; ++e) s += sigma[e] * X[e];
        return s.sphere_reduce();
    }

    // (J X)_e for ambient components X
    std::vector<Polynomial> Jvec(const std::vector<Polynomial>& X) const {
        std::vector<Polynomial> r(d_, Polynomial::constant(d_, 0));
        for (int e = 0; e < d_; ++e)
            for (int c = 0; c < d_; ++c)
                if (Jm_[e][c] != 0) r[e] += Rational(Jm_[e][c]) * X[c];
        return r;
    }

    // nabla^2 f(xi, X) for horizontal ambient X: contract the Hessian's
    // derivative slot with xi
    Polynomial hess_xi_X(const std::vector<Polynomial>& S2, const std::vector<Polynomial>& X) const {
        Polynomial s = Polynomial::constant(d_, 0);
        for (int j = 0; j < d_; ++j)
            for (int c = 0; c < d_; ++c) s += xi_[j] * S2[j * d_ + c] * X[c];
        return s.sphere_reduce();
    }

    // B0 components (torsion-free): B + (lap/2n) PH - (w/2n) omega
    std::vector<Polynomial> B0(const Polynomial& f) const {
        auto S2 = hessian(f);
        Polynomial lap = sublap(f);
        Polynomial w = (Rational(-2 * n_) * xif(f)).sphere_reduce();
        std::vector<Polynomial> b(static_cast<size_t>(d_) * d_, Polynomial::constant(d_, 0));
        const Rational c(1, 2 * n_);
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l) {
                // (1,1)-part: (1/2)[S2_{kl} + sum_{ef} J_{ek} J_{fl} S2_{ef}]
                Polynomial jj = Polynomial::constant(d_, 0);
                for (int e = 0; e < d_; ++e)
                    for (int ff = 0; ff < d_; ++ff)
                        if (Jm_[e][k] != 0 && Jm_[ff][l] != 0)
                            jj += Rational(Jm_[e][k] * Jm_[ff][l]) * S2[e * d_ + ff];
                Polynomial v = Rational(1, 2) * (S2[k * d_ + l] + jj);
                v += (c * lap) * PH_[k][l];
                v -= (c * w) * om_[k][l];
                b[static_cast<size_t>(k) * d_ + l] = v.sphere_reduce();
            }
        return b;
    }

    // |T|^2 for a valence-2 horizontal tensor: T_{kl} T_{k'l'} PH_{kk'} PH_{ll'}.
    // Expanding PH = I - z z^T - xi xi^T turns tr(T PH T^T PH) into a handful
    // of vector/scalar contractions, avoiding large matrix products:
    //   tr(T T^T) - |T z|^2 - |T xi|^2 - |T^T z|^2 - |T^T xi|^2
    //   + sum_{u,v in {z,xi}} (v^T T u)^2
    Polynomial hnorm2(const std::vector<Polynomial>& T) const {
        auto at = [&](int k, int l) -> const Polynomial& {
            return T[static_cast<size_t>(k) * d_ + l];
        };
        Polynomial r = Polynomial::constant(d_, 0);
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l) r += at(k, l) * at(k, l);
        const std::vector<Polynomial>* uv[2] = {&z_, &xi_};
        for (auto* u : uv) {
            for (int k = 0; k < d_; ++k) {
                Polynomial tu = Polynomial::constant(d_, 0), ttu = Polynomial::constant(d_, 0);
                for (int l = 0; l < d_; ++l) {
                    tu += at(k, l) * (*u)[l];  // (T u)_k
                    ttu += at(l, k) * (*u)[l]; // (T^T u)_k
                }
                r -= tu * tu;
                r -= ttu * ttu;
            }
        }
        for (auto* u : uv)
            for (auto* v : uv) {
                Polynomial s = Polynomial::constant(d_, 0);
                for (int k = 0; k < d_; ++k)
                    for (int l = 0; l < d_; ++l) s += (*v)[k] * at(k, l) * (*u)[l];
                r += s * s;
            }
        return r.sphere_reduce();
    }

    // exact integral of |T|^2 over the sphere (coefficient of pi^{n+1});
    // same expansion as hnorm2, but summed through integrate_product so no
    // large polynomial is ever formed or reduced
    Rational hnorm2_integral(const SphereIntegrator& I, const std::vector<Polynomial>& T) const {
        auto at = [&](int k, int l) -> const Polynomial& {
            return T[static_cast<size_t>(k) * d_ + l];
        };
        Rational r = 0;
        for (int k = 0; k < d_; ++k)
            for (int l = 0; l < d_; ++l) r += I.integrate_product(at(k, l), at(k, l));
        const std::vector<Polynomial>* uv[2] = {&z_, &xi_};
        for (auto* u : uv) {
            for (int k = 0; k < d_; ++k) {
                Polynomial tu = Polynomial::constant(d_, 0), ttu = Polynomial::constant(d_, 0);
                for (int l = 0; l < d_; ++l) {
                    tu += at(k, l) * (*u)[l];
                    ttu += at(l, k) * (*u)[l];
                }
                r -= I.integrate_product(tu, tu);
                r -= I.integrate_product(ttu, ttu);
            }
        }
        for (auto* u : uv)
            for (auto* v : uv) {
                Polynomial s = Polynomial::constant(d_, 0);
                for (int k = 0; k < d_; ++k)
                    for (int l = 0; l < d_; ++l) s += (*v)[k] * at(k, l) * (*u)[l];
                r += I.integrate_product(s, s);
            }
        return r;
    }

    const std::vector<std::vector<Polynomial>>& omega() const { return om_; }
    const std::vector<Polynomial>& xi_vec() const { return xi_; }

private:
    int n_, d_;
    std::vector<Polynomial> z_, xi_;
    std::vector<std::vector<int>> Jm_;
    std::vector<std::vector<Polynomial>> PH_, JPH_, om_;
    std::vector<std::vector<std::vector<Polynomial>>> K_;
};

} // namespace crgeo
