#include <catch2/catch_amalgamated.hpp>

#include "crgeo/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace crgeo;

TEST_CASE("registry accounts for every tagged identity") {
    // every tag is either a runnable check or has an out-of-scope reason,
    // and no tag is claimed as both
    REQUIRE(uncovered_tags().empty());
    REQUIRE(doubly_claimed_tags().empty());
    // ids are unique within the pointwise registry
    std::set<std::string> seen;
    for (auto& ck : pointwise_registry()) {
        REQUIRE(seen.insert(ck.id).second);
        REQUIRE_FALSE(ck.anchor.empty());
    }
    // out-of-scope entries carry a justification
    for (auto& [id, why] : out_of_scope_registry()) REQUIRE_FALSE(why.empty());
    REQUIRE(registered_check_ids().size() >= 50);
}

TEST_CASE("unknown suite is rejected") {
    auto mdl = build_model({ModelKind::heisenberg, 1});
    REQUIRE_THROWS_AS(run_suite(mdl, "bogus", 1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(run_suite(mdl, "", 1, 2), std::invalid_argument);
}

TEST_CASE("pointwise suite passes on the flat model") {
    auto rep = run_suite(build_model({ModelKind::heisenberg, 1}), "pointwise", 42, 5);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.model == "heisenberg(1)");
    // every unconditional identity actually ran (only the sphere-constants
    // check is inapplicable here)
    for (auto& c : rep.checks) {
        if (c.id == "t:A vansihes if div 3D")
            REQUIRE(c.status == CheckStatus::skipped);
        else {
            REQUIRE(c.status == CheckStatus::pass);
            REQUIRE(c.points == 5);
        }
    }
}

TEST_CASE("full suite passes on the 3-sphere with correct skip semantics") {
    auto rep = run_suite(build_model({ModelKind::sphere, 1}), "all", 42, 4);
    REQUIRE(rep.all_passed());
    std::map<std::string, CheckStatus> st;
    for (auto& c : rep.checks) st[c.id] = c.status;
    // n >= 2 identities cannot be instantiated on S^3
    for (const char* id : {"eqc01", "e:vhessian", "e:norms dfA vs Adf", "e:D3f extremal",
                           "e:xi2f"})
        REQUIRE(st.at(id) == CheckStatus::skipped);
    // 3D chain, Sasakian identities, spectral and integral facts all run
    for (const char* id : {"n11", "n12", "n13", "e:xi2f 3D", "hes3", "wh", "clasob",
                           "eig", "condm", "main1", "paneitz-psd", "gr2", "gr3",
                           "l:GrLee", "e:bohin", "div1", "coshy3",
                           "t:A vansihes if div 3D"})
        REQUIRE(st.at(id) == CheckStatus::pass);
    // torsion-family checks only apply to group models
    REQUIRE(st.at("vcurv1") == CheckStatus::skipped);
}

TEST_CASE("pointwise and extremal suites pass on the 5-sphere") {
    auto mdl = build_model({ModelKind::sphere, 2});
    auto rep = run_suite(mdl, "pointwise", 7, 2);
    REQUIRE(rep.all_passed());
    auto ext = run_suite(mdl, "extremal", 7, 2);
    REQUIRE(ext.all_passed());
    std::map<std::string, CheckStatus> st;
    for (auto& c : ext.checks) st[c.id] = c.status;
    // the n >= 2 chain runs here, the 3D chain does not
    for (const char* id : {"eqc01", "e:vhessian", "e:norms dfA vs Adf", "e:D3f extremal",
                           "e:xi2f", "e:hessian", "tordf", "ntor1"})
        REQUIRE(st.at(id) == CheckStatus::pass);
    REQUIRE(st.at("n11") == CheckStatus::skipped);
}

TEST_CASE("extremal suite on a non-compact model reports skips, not passes") {
    auto rep = run_suite(build_model({ModelKind::heisenberg, 1}), "extremal", 3, 2);
    REQUIRE_FALSE(rep.checks.empty());
    for (auto& c : rep.checks) REQUIRE(c.status == CheckStatus::skipped);
}

TEST_CASE("torsion family: Sasakian and parallel-torsion regimes") {
    // c1 = c2 gives A = 0; distinct parameters give constant nonzero A with
    // horizontal-parallel, divergence-free torsion
    auto sas = build_model({ModelKind::group3d, 1, Rational(3), Rational(3)});
    auto tor = build_model({ModelKind::group3d, 1, Rational(2), Rational(1)});
    TorsionInfo ts = torsion_info(sas);
    REQUIRE(ts.normA <= 1e-12);
    REQUIRE(ts.sasakian);
    TorsionInfo tt = torsion_info(tor);
    // A12 = (c2 - c1)/2 = -1/2, so |A| = sqrt(2)/2; S = 2(c1 + c2) = 6
    REQUIRE(tt.normA == Catch::Approx(std::sqrt(0.5)).margin(1e-12));
    REQUIRE(tt.S == Catch::Approx(6.0).margin(1e-12));
    REQUIRE_FALSE(tt.sasakian);
    REQUIRE(tt.parallel_residual <= 1e-12);
    REQUIRE(tt.divfree_residual <= 1e-12);
    REQUIRE(tt.codazzi_residual <= 1e-12);
    REQUIRE(tt.vertical_curv_residual <= 1e-12);
    REQUIRE(tt.ric_eigen.size() == 2);

    auto rep = torsion_model_suite(tor, 42);
    REQUIRE(rep.all_passed());
    for (auto& c : rep.checks) REQUIRE(c.status == CheckStatus::pass);
    // the full suite also passes on the torsion model (guarded checks skip)
    REQUIRE(run_suite(tor, "all", 42, 5).all_passed());
}

TEST_CASE("report merge combines same-id results deterministically") {
    Report rep;
    rep.merge({"b", "x", CheckStatus::skipped, 0.0, 1e-8, 0});
    rep.merge({"a", "y", CheckStatus::pass, 1e-12, 1e-8, 3});
    rep.merge({"b", "x", CheckStatus::pass, 2e-12, 1e-9, 4});
    rep.merge({"a", "y", CheckStatus::fail, 5e-3, 1e-8, 3});
    rep.canonicalize();
    REQUIRE(rep.checks.size() == 2);
    REQUIRE(rep.checks[0].id == "a");
    REQUIRE(rep.checks[0].status == CheckStatus::fail); // fail wins
    REQUIRE(rep.checks[0].residual == 5e-3);            // max residual
    REQUIRE(rep.checks[0].points == 6);                 // summed points
    REQUIRE(rep.checks[1].status == CheckStatus::pass); // pass beats skipped
    REQUIRE(rep.checks[1].points == 4);
    REQUIRE_FALSE(rep.all_passed());
    REQUIRE(rep.count(CheckStatus::fail) == 1);
}

TEST_CASE("report JSON has the stable key order") {
    Report rep;
    rep.model = "sphere(1)";
    rep.seed = 42;
    rep.merge({"torha", "Sec. 2", CheckStatus::pass, 1e-16, 1e-8, 5});
    std::string s = report_json_string(rep);
    REQUIRE(s.find("\"model\"") < s.find("\"seed\""));
    REQUIRE(s.find("\"seed\"") < s.find("\"checks\""));
    REQUIRE(s.find("\"id\"") < s.find("\"paper_anchor\""));
    REQUIRE(s.find("\"paper_anchor\"") < s.find("\"status\""));
    REQUIRE(s.find("\"status\"") < s.find("\"residual\""));
    REQUIRE(s.find("\"residual\"") < s.find("\"tolerance\""));
    REQUIRE(s.find("\"tolerance\"") < s.find("\"points\""));
    REQUIRE(s.back() == '\n');
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    auto mdl = build_model({ModelKind::sphere, 1});
    auto s1 = report_json_string(run_suite(mdl, "pointwise", 42, 3));
    auto s2 = report_json_string(run_suite(mdl, "pointwise", 42, 3));
    REQUIRE(s1 == s2);
    setenv("CRGEO_WORKERS", "4", 1);
    auto s3 = report_json_string(run_suite(mdl, "pointwise", 42, 3));
    unsetenv("CRGEO_WORKERS");
    REQUIRE(s1 == s3);
    // a different seed samples different points
    auto s4 = report_json_string(run_suite(mdl, "pointwise", 43, 3));
    REQUIRE(s1 != s4);
}

TEST_CASE("extremal diagnostics validates its eigenfunction precondition") {
    auto mdl = build_model({ModelKind::sphere, 1});
    Polynomial x0 = Polynomial::variable(0, 4);
    Polynomial x1 = Polynomial::variable(1, 4);
    // any ambient linear function is a lambda_1 = 2n eigenfunction
    auto rep = extremal_diagnostics(mdl, x1, 11, 3);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.count(CheckStatus::pass) >= 15);
    // quadratics are not, and group models have no polynomial calculus
    REQUIRE_THROWS_AS(extremal_diagnostics(mdl, x0 * x0, 11, 2), model_error);
    REQUIRE_THROWS_AS(
        extremal_diagnostics(build_model({ModelKind::heisenberg, 1}), x1, 11, 2),
        model_error);
}

TEST_CASE("atomic text writes leave no partial files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "crgeo_verify_test";
    fs::create_directories(dir);
    fs::path target = dir / "out.json";
    write_text_atomic(target.string(), "hello\n");
    REQUIRE_FALSE(fs::exists(target.string() + ".tmp"));
    write_text_atomic(target.string(), "world\n"); // overwrite is atomic too
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    REQUIRE(content == "world\n");
    fs::remove_all(dir);
}
