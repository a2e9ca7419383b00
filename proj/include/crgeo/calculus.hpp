// Scalar-field representations and directional differentiation: global
// polynomials on sphere models, truncated chart jets on the Lie-group models,
// plus seeded random test-field generators.
#pragma once

#include "crgeo/model.hpp"

#include <optional>

namespace crgeo {

struct ScalarField {
    std::optional<Polynomial> poly; // ambient polynomial (sphere models)
    std::optional<Jet> jet;         // chart jet at a base point (group models)

    static ScalarField polynomial(Polynomial p) {
        ScalarField f;
        f.poly = std::move(p);
        return f;
    }
    static ScalarField from_jet(Jet j) {
        ScalarField f;
        f.jet = std::move(j);
        return f;
    }
};

inline void check_attachment(const Model& model, const ScalarField& f) {
    const bool sphere = model.spec.kind == ModelKind::sphere;
    if (sphere && !f.poly) throw model_error("sphere models require polynomial fields");
    if (!sphere && !f.jet) throw model_error("group models require jet fields");
}

// realize the field as a chart jet at the frame's base point
inline Jet field_jet(const FrameData& fd, const ScalarField& f) {
    if (f.poly) return restrict_to_chart(fd, *f.poly);
    if (f.jet) return *f.jet;
    throw model_error("empty scalar field");
}

// df(e_i) at the chart origin, with i a full-frame index (xi last)
inline double derive(const FrameData& fd, const ScalarField& f, int frame_index) {
    if (frame_index < 0 || frame_index >= fd.m) throw model_error("bad frame index");
    Jet j = field_jet(fd, f);
    Jet s = Jet::constant(fd.sp, 0.0);
    for (int k = 0; k < fd.m; ++k) s += fd.frame[frame_index][k] * j.derivative(k);
    return s.value();
}

// df(v) for an ambient tangent vector v at p (sphere models)
inline double derive_ambient(const ScalarField& f, const Point& p, const std::vector<double>& v) {
    if (!f.poly) throw model_error("ambient derivative needs a polynomial field");
    double s = 0;
    for (size_t c = 0; c < v.size(); ++c)
        s += v[c] * f.poly->derivative(static_cast<int>(c)).eval(p);
    return s;
}

// random polynomial of degree <= max_degree with small rational coefficients
inline Polynomial random_polynomial(int nvars, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    // enumerate all monomials of total degree <= max_degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            p.add_term(e, Rational(num(rng), den(rng)));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[var] = k;
            self(self, var + 1, remaining - k);
        }
        e[var] = 0;
    };
    rec(rec, 0, max_degree);
    return p;
}

// random chart jet with coefficients uniform in [-1, 1]
inline Jet random_chart_jet(const JetSpace* sp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    Jet f(sp);
    for (int i = 0; i < sp->size(); ++i) f.coeff(i) = u(rng);
    return f;
}

} // namespace crgeo
