// Exact integration of polynomials over odd-dimensional unit spheres.
//
// For a monomial x^a on S^{d-1} with d even, the surface integral equals a
// rational number times pi^{d/2}; integrals are carried around as that
// rational coefficient and converted to double only on demand.
#pragma once

#include "crgeo/polynomial.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

namespace crgeo {

// integral of x^a over S^{d-1} = 2 * prod Gamma((a_i+1)/2) / Gamma((|a|+d)/2),
// zero when any exponent is odd. With d even and all a_i even this is
// pi^{d/2} times the rational returned here.
inline Rational monomial_sphere_integral(const Exponents& a) {
    const int d = static_cast<int>(a.size());
    if (d % 2 != 0) throw std::invalid_argument("ambient dimension must be even");
    int total = 0;
    for (int e : a) {
        if (e % 2 != 0) return 0;
        total += e;
    }
    // Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi)
    Rational num = 2;
    for (int e : a) {
        unsigned k = static_cast<unsigned>(e / 2);
        num *= Rational(factorial(2 * k), factorial(k) * rational_pow(4, static_cast<int>(k)).convert_to<BigInt>());
    }
    unsigned s = static_cast<unsigned>((total + d) / 2);
    return num / Rational(factorial(s - 1));
}

class SphereIntegrator {
public:
    explicit SphereIntegrator(int ambient_dim) : dim_(ambient_dim) {}

    int ambient_dim() const { return dim_; }

    // Rational coefficient of pi^{dim/2}.
    Rational integrate(const Polynomial& p) const {
        Rational s = 0;
        for (auto& [e, c] : p.terms()) s += c * cached(e);
        return s;
    }

    // packed exponent key: one byte per variable (exponents < 256)
    static std::uint64_t pack(const Exponents& e) {
        std::uint64_t k = 0;
        for (int v : e) k = (k << 8) | static_cast<std::uint64_t>(v & 0xff);
        return k;
    }

    // integral of a*b without forming the full product: terms are bucketed by
    // exponent parity so only even-sum pairs are touched.
    Rational integrate_product(const Polynomial& a, const Polynomial& b) const {
        if (dim_ > 8) { // packed keys need one byte per variable
            Polynomial prod = a * b;
            return integrate(prod);
        }
        constexpr std::uint64_t parity_mask = 0x0101010101010101ull;
        std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Rational*>>>
            buckets;
        for (auto& [e, c] : b.terms()) {
            std::uint64_t k = pack(e);
            buckets[k & parity_mask].push_back({k, &c});
        }
        Rational s = 0;
        Exponents sum(dim_);
        for (auto& [ea, ca] : a.terms()) {
            std::uint64_t ka = pack(ea);
            auto it = buckets.find(ka & parity_mask);
            if (it == buckets.end()) continue;
            for (auto& [kb, cb] : it->second) {
                const std::uint64_t ks = ka + kb; // bytewise sum, no carries (small degrees)
                auto ci = pcache_.find(ks);
                if (ci == pcache_.end()) {
                    std::uint64_t t = ks;
                    for (int i = dim_ - 1; i >= 0; --i) {
                        sum[i] = static_cast<int>(t & 0xff);
                        t >>= 8;
                    }
                    ci = pcache_.emplace(ks, monomial_sphere_integral(sum)).first;
                }
                if (ci->second != 0) s += ca * (*cb) * ci->second;
            }
        }
        return s;
    }

    double to_value(const Rational& coeff) const {
        return to_double(coeff) * std::pow(std::numbers::pi, dim_ / 2);
    }

private:
    const Rational& cached(const Exponents& e) const {
        auto it = cache_.find(e);
        if (it == cache_.end()) it = cache_.emplace(e, monomial_sphere_integral(e)).first;
        return it->second;
    }

    int dim_;
    mutable std::map<Exponents, Rational> cache_;
    mutable std::unordered_map<std::uint64_t, Rational> pcache_;
};

} // namespace crgeo
