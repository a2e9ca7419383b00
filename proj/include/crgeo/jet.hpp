// Truncated multivariate Taylor expansions ("jets") around a base point.
//
// A Jet stores coefficients for all monomials of total degree <= order of its
// JetSpace, plus the order up to which those coefficients are actually valid.
// Differentiation lowers the valid order by one; arithmetic takes the min.
// Requesting a value from a jet whose valid order has dropped below zero is
// the "derivative budget exhausted" error path.
#pragma once

#include "crgeo/polynomial.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace crgeo {

struct jet_order_exhausted : std::runtime_error {
    jet_order_exhausted() : std::runtime_error("jet order exhausted: requested derivative order exceeds jet truncation") {}
};

class JetSpace {
public:
    static const JetSpace* get(int nvars, int order) {
        static std::map<std::pair<int, int>, std::unique_ptr<JetSpace>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(nvars, order);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::unique_ptr<JetSpace>(new JetSpace(nvars, order))).first;
        return it->second.get();
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(monos_.size()); }
    const Exponents& mono(int i) const { return monos_[i]; }
    int degree(int i) const { return degree_[i]; }
    int index_of(const Exponents& e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : it->second;
    }
    // index of product monomial, or -1 if it exceeds the order cap
    int prod(int i, int j) const { return prod_[static_cast<size_t>(i) * monos_.size() + j]; }
    // index of mono i with exponent of var v lowered by one, or -1
    int lower(int i, int v) const { return lower_[static_cast<size_t>(i) * nvars_ + v]; }

private:
    JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
        Exponents e(nvars, 0);
        for (int d = 0; d <= order; ++d) enumerate(e, 0, d, d);
        for (int i = 0; i < size(); ++i) index_[monos_[i]] = i;
        prod_.assign(static_cast<size_t>(size()) * size(), -1);
        Exponents s(nvars);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) {
                if (degree_[i] + degree_[j] > order) continue;
                for (int v = 0; v < nvars; ++v) s[v] = monos_[i][v] + monos_[j][v];
                prod_[static_cast<size_t>(i) * size() + j] = index_[s];
            }
        lower_.assign(static_cast<size_t>(size()) * nvars, -1);
        for (int i = 0; i < size(); ++i)
            for (int v = 0; v < nvars; ++v) {
                if (monos_[i][v] == 0) continue;
                Exponents l = monos_[i];
                l[v] -= 1;
                lower_[static_cast<size_t>(i) * nvars + v] = index_[l];
            }
    }

    void enumerate(Exponents& e, int var, int remaining, int target) {
        if (var == nvars_ - 1) {
            e[var] = remaining;
            monos_.push_back(e);
            degree_.push_back(target);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[var] = k;
            enumerate(e, var + 1, remaining - k, target);
        }
        e[var] = 0;
    }

    int nvars_, order_;
    std::vector<Exponents> monos_;
    std::vector<int> degree_;
    std::map<Exponents, int> index_;
    std::vector<int32_t> prod_;
    std::vector<int32_t> lower_;
};

class Jet {
public:
    Jet() = default;
    explicit Jet(const JetSpace* sp) : sp_(sp), c_(sp->size(), 0.0), ord_(sp->order()) {}

    static Jet constant(const JetSpace* sp, double v) {
        Jet j(sp);
        j.c_[0] = v;
        return j;
    }
    static Jet variable(const JetSpace* sp, int i, double base = 0.0) {
        Jet j(sp);
        j.c_[0] = base;
        Exponents e(sp->nvars(), 0);
        e[i] = 1;
        j.c_[sp->index_of(e)] = 1.0;
        return j;
    }

    const JetSpace* space() const { return sp_; }
    int ord() const { return ord_; }
    double value() const {
        if (ord_ < 0) throw jet_order_exhausted();
        return c_[0];
    }
    double coeff(int i) const { return c_[i]; }
    double& coeff(int i) { return c_[i]; }

    Jet& operator+=(const Jet& o) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        ord_ = std::min(ord_, o.ord_);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        ord_ = std::min(ord_, o.ord_);
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    Jet operator-() const {
        Jet r = *this;
        for (double& v : r.c_) v = -v;
        return r;
    }
    friend Jet operator*(double s, Jet a) {
        for (double& v : a.c_) v *= s;
        return a;
    }
    Jet& operator*=(double s) {
        for (double& v : c_) v *= s;
        return *this;
    }

    friend Jet operator*(const Jet& a, const Jet& b) { return mul_trunc(a, b, std::min(a.ord_, b.ord_)); }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    static Jet mul_trunc(const Jet& a, const Jet& b, int cap) {
        const JetSpace* sp = a.sp_;
        Jet r(sp);
        r.ord_ = std::min({a.ord_, b.ord_, cap});
        const int n = sp->size();
        for (int i = 0; i < n; ++i) {
            const double ai = a.c_[i];
            if (ai == 0.0) continue;
            const int di = sp->degree(i);
            if (di > r.ord_) continue;
            for (int j = 0; j < n; ++j) {
                const double bj = b.c_[j];
                if (bj == 0.0) continue;
                if (di + sp->degree(j) > r.ord_) continue;
                r.c_[sp->prod(i, j)] += ai * bj;
            }
        }
        return r;
    }

    Jet derivative(int var) const {
        const JetSpace* sp = sp_;
        Jet r(sp);
        r.ord_ = ord_ - 1;
        const int n = sp->size();
        for (int i = 0; i < n; ++i) {
            if (c_[i] == 0.0) continue;
            int l = sp->lower(i, var);
            if (l >= 0) r.c_[l] = c_[i] * sp->mono(i)[var];
        }
        return r;
    }

    // Substitute this jet (with zero constant term) into a power series
    // sum_k series[k] * t^k, truncated at the jet order.
    static Jet apply_series(std::span<const double> series, const Jet& t) {
        Jet r = Jet::constant(t.sp_, 0.0);
        r.set_ord(t.ord_);
        // Horner from the top
        for (int k = static_cast<int>(series.size()) - 1; k >= 0; --k) {
            r = r * t;
            r.c_[0] += series[k];
        }
        return r;
    }

    Jet inverse() const {
        double a0 = c_[0];
        if (a0 == 0.0) throw std::domain_error("jet inverse at zero");
        Jet t = (1.0 / a0) * *this;
        t.c_[0] = 0.0;
        std::vector<double> series(sp_->order() + 1);
        double s = 1.0;
        for (int k = 0; k <= sp_->order(); ++k) {
            series[k] = s;
            s = -s;
        }
        return (1.0 / a0) * apply_series(series, t);
    }

    Jet sqrt() const {
        double a0 = c_[0];
        if (a0 <= 0.0) throw std::domain_error("jet sqrt needs positive base value");
        Jet t = (1.0 / a0) * *this;
        t.c_[0] = 0.0;
        std::vector<double> series(sp_->order() + 1);
        double binom = 1.0; // binom(1/2, k)
        for (int k = 0; k <= sp_->order(); ++k) {
            series[k] = binom;
            binom *= (0.5 - k) / (k + 1);
        }
        return std::sqrt(a0) * apply_series(series, t);
    }

    // Keep only the homogeneous part of the given degree.
    Jet homogeneous_part(int deg) const {
        Jet r(sp_);
        r.ord_ = ord_;
        for (int i = 0; i < sp_->size(); ++i)
            if (sp_->degree(i) == deg) r.c_[i] = c_[i];
        return r;
    }

    double max_abs_coeff(int up_to_order) const {
        double m = 0;
        for (int i = 0; i < sp_->size(); ++i)
            if (sp_->degree(i) <= up_to_order) m = std::max(m, std::abs(c_[i]));
        return m;
    }

    void set_ord(int o) { ord_ = o; }

private:
    const JetSpace* sp_ = nullptr;
    std::vector<double> c_;
    int ord_ = -1;
};

// Evaluate an ambient polynomial on a vector of jets (one per variable).
inline Jet poly_on_jets(const Polynomial& p, std::span<const Jet> x) {
    const JetSpace* sp = x.empty() ? nullptr : x[0].space();
    Jet r = Jet::constant(sp, 0.0);
    for (auto& [e, c] : p.terms()) {
        Jet t = Jet::constant(sp, to_double(c));
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        r += t;
    }
    return r;
}

} // namespace crgeo
