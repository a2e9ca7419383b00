// crgeo: command-line driver for the pseudohermitian-geometry laboratory.
//
// Subcommands:
//   models    list the model families and their capabilities
//   verify    run an identity suite on a model, write a JSON report
//   spectrum  assemble a Galerkin operator on a sphere, write CSV spectra
//
// Exit codes: 0 success, 1 check failure, 2 usage/configuration error.
// The CRGEO_WORKERS environment variable sets the point-loop worker count.

#include <CLI11.hpp>

#include "crgeo/verify.hpp"

#include <cstdio>
#include <iostream>

namespace {

using namespace crgeo;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--c1/--c2", "not a rational number: " + s);
    }
}

int cmd_models(bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        auto add = [&](const char* kind, const char* params, const char* dim,
                       bool quad, bool spectra) {
            nlohmann::ordered_json e;
            e["kind"] = kind;
            e["parameters"] = params;
            e["dimension"] = dim;
            e["quadrature"] = quad;
            e["spectra"] = spectra;
            j.push_back(std::move(e));
        };
        add("heisenberg", "--n N (N >= 1)", "2N+1", false, false);
        add("sphere", "--n N (N >= 1)", "2N+1", true, true);
        add("group3d", "--c1 Q --c2 Q (rational)", "3", false, false);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "kind        parameters                 dim    quadrature  spectra\n"
              << "heisenberg  --n N (N >= 1)             2N+1   no          no\n"
              << "sphere      --n N (N >= 1)             2N+1   yes         yes\n"
              << "group3d     --c1 Q --c2 Q (rational)   3      no          no\n";
    return 0;
}

struct VerifyCfg {
    std::string model;
    int n = 1;
    std::string c1 = "2", c2 = "2";
    std::string suite = "all";
    std::uint64_t seed = 42;
    int points = 100;
    double tol = -1; // < 0 means use the per-class defaults
    std::string out;
    std::string format = "json";
};

ModelSpec spec_from(const std::string& model, int n, const std::string& c1,
                    const std::string& c2) {
    ModelSpec spec;
    if (model == "heisenberg")
        spec.kind = ModelKind::heisenberg;
    else if (model == "sphere")
        spec.kind = ModelKind::sphere;
    else if (model == "group3d")
        spec.kind = ModelKind::group3d;
    else
        throw CLI::ValidationError("--model", "unknown model kind: " + model);
    spec.n = spec.kind == ModelKind::group3d ? 1 : n;
    spec.c1 = parse_rational(c1);
    spec.c2 = parse_rational(c2);
    return spec;
}

int cmd_verify(const VerifyCfg& cfg) {
    if (cfg.format != "json")
        throw CLI::ValidationError("--format", "verify reports are json only");
    auto spec = spec_from(cfg.model, cfg.n, cfg.c1, cfg.c2);
    auto mdl = build_model(spec);
    Tolerances tol;
    if (cfg.tol >= 0) tol = {cfg.tol, cfg.tol, cfg.tol, cfg.tol};
    Report rep;
    try {
        rep = run_suite(mdl, cfg.suite, cfg.seed, cfg.points, tol);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--suite", e.what());
    }
    std::cout << "model " << rep.model << "  suite " << cfg.suite << "  seed "
              << rep.seed << "  points " << cfg.points << "\n";
    for (auto& c : rep.checks)
        std::printf("  %-24s %-7s residual %-12s tol %-8s points %d\n", c.id.c_str(),
                    to_string(c.status), fmt(c.residual).c_str(),
                    fmt(c.tolerance).c_str(), c.points);
    std::cout << rep.count(CheckStatus::pass) << " passed, "
              << rep.count(CheckStatus::fail) << " failed, "
              << rep.count(CheckStatus::skipped) << " skipped\n";
    if (spec.kind == ModelKind::group3d) {
        TorsionInfo t = torsion_info(mdl);
        std::cout << "torsion: |A| = " << fmt(t.normA) << "  S = " << fmt(t.S)
                  << "  k0 = " << fmt(t.k0)
                  << "  sasakian = " << (t.sasakian ? "yes" : "no") << "\n"
                  << "         Ric eigenvalues =";
        for (double e : t.ric_eigen) std::cout << " " << fmt(e);
        std::cout << "\n         |nabla A| = " << fmt(t.parallel_residual)
                  << "  |div A| = " << fmt(t.divfree_residual) << "\n";
        if (mdl.degenerate_bracket) std::cout << "note: degenerate bracket\n";
    }
    if (!cfg.out.empty()) write_text_atomic(cfg.out, report_json_string(rep));
    return rep.all_passed() ? 0 : 1;
}

struct SpectrumCfg {
    std::string model = "sphere";
    int n = 1;
    int degree = 3;
    std::string op = "sublaplacian";
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "csv";
};

int cmd_spectrum(const SpectrumCfg& cfg) {
    if (cfg.model != "sphere")
        throw CLI::ValidationError("--model", "spectra require a sphere model");
    if (cfg.n < 1) throw CLI::ValidationError("--n", "n must be >= 1");
    if (cfg.degree < 1 || cfg.degree > 6)
        throw CLI::ValidationError("--degree", "degree must be in 1..6");
    if (cfg.format != "csv")
        throw CLI::ValidationError("--format", "spectra are csv only");
    if (cfg.op != "sublaplacian" && cfg.op != "riemannian_laplacian" &&
        cfg.op != "paneitz")
        throw CLI::ValidationError("--operator", "unknown operator: " + cfg.op);

    auto sm = assemble(cfg.n, cfg.op, cfg.degree);
    auto fe = first_eigenvalue(sm);
    std::string csv = "operator,N,value,multiplicity,bidegrees\n";
    for (auto& g : sm.groups) {
        std::string bd;
        for (auto& [p, q] : g.bidegrees) {
            if (!bd.empty()) bd += ";";
            bd += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        }
        csv += cfg.op + "," + std::to_string(cfg.degree) + "," + fmt(g.value) + "," +
               std::to_string(g.multiplicity) + ",\"" + bd + "\"\n";
    }
    csv += "# lambda1 = " + fmt(fe.lambda1) +
           " multiplicity = " + std::to_string(fe.multiplicity) + "\n";
    ModelSpec ks{ModelKind::sphere, cfg.n};
    ks.jet_order = 2; // curvature values suffice for k0
    auto cert = lichnerowicz_certificate(build_model(ks), cfg.degree, cfg.seed);
    csv += "# lichnerowicz: k0 = " + fmt(cert.k0) + " bound = " + fmt(cert.bound) +
           " lambda1 = " + fmt(cert.lambda1) + " gap = " + fmt(cert.gap) +
           " holds = " + (cert.holds ? "yes" : "no") + "\n";
    if (!cfg.out.empty())
        write_text_atomic(cfg.out, csv);
    else
        std::cout << csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crgeo: a computational laboratory for pseudohermitian geometry"};
    app.require_subcommand(1);

    auto* models = app.add_subcommand("models", "list model families");
    bool models_json = false;
    models->add_flag("--json", models_json, "machine-readable output");

    VerifyCfg vc;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--model", vc.model, "heisenberg | sphere | group3d")
        ->required();
    verify->add_option("--n", vc.n, "CR dimension (default 1)");
    verify->add_option("--c1", vc.c1, "group3d bracket parameter (default 2)");
    verify->add_option("--c2", vc.c2, "group3d bracket parameter (default 2)");
    verify->add_option("--suite", vc.suite,
                       "pointwise | extremal | integral | spectral | torsion | all "
                       "(default all)");
    verify->add_option("--seed", vc.seed, "sampling seed (default 42)");
    verify->add_option("--points", vc.points, "sample points (default 100)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol", vc.tol, "override all tolerance classes");
    verify->add_option("--out", vc.out, "report path (written atomically)");
    verify->add_option("--format", vc.format, "json (default)");

    SpectrumCfg sc;
    auto* spectrum = app.add_subcommand("spectrum", "Galerkin spectra on spheres");
    spectrum->add_option("--model", sc.model, "must be sphere");
    spectrum->add_option("--n", sc.n, "CR dimension (default 1)");
    spectrum->add_option("--degree", sc.degree, "basis degree N <= 6 (default 3)");
    spectrum->add_option("--operator", sc.op,
                         "sublaplacian | riemannian_laplacian | paneitz");
    spectrum->add_option("--seed", sc.seed, "seed for the k0 sampling (default 42)");
    spectrum->add_option("--out", sc.out, "CSV path (written atomically)");
    spectrum->add_option("--format", sc.format, "csv (default)");

    try {
        app.parse(argc, argv);
        if (models->parsed()) return cmd_models(models_json);
        if (verify->parsed()) return cmd_verify(vc);
        return cmd_spectrum(sc);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
