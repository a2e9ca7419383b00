// Sparse multivariate polynomials with exact rational coefficients.
//
// These live on the ambient space of a sphere model; restriction to the unit
// sphere is handled by reducing modulo |x|^2 - 1 (sphere_reduce), which keeps
// the exponent of the last variable below 2.
#pragma once

#include "crgeo/rational.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace crgeo {

using Exponents = std::vector<int>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Exponents(nvars, 0)] = std::move(c);
        return p;
    }
    static Polynomial variable(int i, int nvars) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.nvars_);
        Exponents e(a.nvars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (s == 0) return r;
        for (auto& [e, c] : p.terms_) r.terms_[e] = s * c;
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& s) { return *this = s * *this; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial derivative(int var) const {
        Polynomial r(nvars_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.add_term(d, c * e[var]);
        }
        return r;
    }

    double eval(std::span<const double> x) const {
        double s = 0;
        for (auto& [e, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    Rational eval_rational(std::span<const Rational> x) const {
        Rational s = 0;
        for (auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    // Reduce modulo |x|^2 - 1 so the last variable appears with exponent <= 1.
    Polynomial sphere_reduce() const {
        Polynomial r(nvars_);
        const int d = nvars_ - 1;
        std::map<Exponents, Rational> work(terms_);
        while (!work.empty()) {
            auto it = work.begin();
            Exponents e = it->first;
            Rational c = it->second;
            work.erase(it);
            if (e[d] < 2) {
                r.add_term(e, c);
                continue;
            }
            // x_d^2 = 1 - sum_{i<d} x_i^2
            e[d] -= 2;
            auto push = [&work](const Exponents& ee, const Rational& cc) {
                auto w = work.find(ee);
                if (w == work.end()) work.emplace(ee, cc);
                else {
                    w->second += cc;
                    if (w->second == 0) work.erase(w);
                }
            };
            push(e, c);
            for (int i = 0; i < d; ++i) {
                Exponents e2 = e;
                e2[i] += 2;
                push(e2, -c);
            }
        }
        return r;
    }

    static int total(const Exponents& e) {
        int t = 0;
        for (int v : e) t += v;
        return t;
    }

private:
    void check(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
    }

    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

} // namespace crgeo
