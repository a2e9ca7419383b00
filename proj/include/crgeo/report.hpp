// Structured verification outcomes: a Report is a list of named check
// results with residuals and tolerances, serialized to JSON with a stable
// key order so identical runs produce byte-identical files.
#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace crgeo {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    std::string id;
    std::string paper_anchor;
    CheckStatus status = CheckStatus::skipped;
    double residual = 0.0;
    double tolerance = 0.0;
    int points = 0;
};

struct Report {
    std::string model;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    int count(CheckStatus s) const {
        int k = 0;
        for (auto& c : checks)
            if (c.status == s) ++k;
        return k;
    }

    // deterministic merge keyed by check id: same-id results are combined
    // (worst status, max residual, summed points), then sorted by id
    void merge(CheckResult r) {
        for (auto& c : checks) {
            if (c.id != r.id) continue;
            if (r.status == CheckStatus::fail ||
                (r.status == CheckStatus::pass && c.status == CheckStatus::skipped))
                c.status = r.status;
            c.residual = std::max(c.residual, r.residual);
            c.tolerance = std::max(c.tolerance, r.tolerance);
            c.points += r.points;
            return;
        }
        checks.push_back(std::move(r));
    }
    void canonicalize() {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    }
};

inline nlohmann::ordered_json to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["model"] = rep.model;
    j["seed"] = rep.seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : rep.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["paper_anchor"] = c.paper_anchor;
        e["status"] = to_string(c.status);
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["points"] = c.points;
        j["checks"].push_back(std::move(e));
    }
    return j;
}

inline std::string report_json_string(const Report& rep) { return to_json(rep).dump(2) + "\n"; }

// write-to-temp then rename, so readers never observe a partial file
inline void write_text_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace crgeo
