#pragma once

// Report assembly and rendering. Reports are deterministic down to the byte:
// checks are sorted by name, names are unique, and both renderers emit
// newline-terminated UTF-8 with no locale-dependent formatting.

#include "octocheck/check.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

inline constexpr std::string_view kVersion = "1.0.0";

enum class SuiteName { table, identities, clifford, representations, lemma_field, orbits, all };

inline const char* to_string(SuiteName s) {
    switch (s) {
        case SuiteName::table: return "table";
        case SuiteName::identities: return "identities";
        case SuiteName::clifford: return "clifford";
        case SuiteName::representations: return "representations";
        case SuiteName::lemma_field: return "lemma-field";
        case SuiteName::orbits: return "orbits";
        default: return "all";
    }
}

inline std::optional<SuiteName> parse_suite(std::string_view s) {
    for (SuiteName n : {SuiteName::table, SuiteName::identities, SuiteName::clifford,
                        SuiteName::representations, SuiteName::lemma_field, SuiteName::orbits,
                        SuiteName::all})
        if (s == to_string(n))
            return n;
    return std::nullopt;
}

enum class ReportFormat { text, json };

struct SuiteConfig {
    SuiteName suite = SuiteName::all;
    std::uint64_t seed = 0;
    int trials = 256;

    void validate() const {
        if (trials <= 0)
            throw std::invalid_argument("SuiteConfig: trials must be positive");
    }
};

struct Summary {
    int pass = 0;
    int fail = 0;
    int finding = 0;
};

struct Report {
    std::string version;
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    Summary summary;

    static Report build(SuiteName suite, std::uint64_t seed, std::vector<CheckResult> checks) {
        std::sort(checks.begin(), checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        for (std::size_t i = 1; i < checks.size(); ++i)
            if (checks[i - 1].name == checks[i].name)
                throw std::logic_error("Report: duplicate check name " + checks[i].name);
        Report r;
        r.version = std::string(kVersion);
        r.suite = to_string(suite);
        r.seed = seed;
        r.checks = std::move(checks);
        for (const auto& c : r.checks) {
            switch (c.status) {
                case CheckStatus::pass: ++r.summary.pass; break;
                case CheckStatus::fail: ++r.summary.fail; break;
                case CheckStatus::finding: ++r.summary.finding; break;
            }
        }
        return r;
    }
};

inline std::string render_text(const Report& r) {
    std::string out;
    out += "octocheck " + r.version + "  suite=" + r.suite + "  seed=" + std::to_string(r.seed) + "\n";
    out += "\n";
    for (const auto& c : r.checks) {
        out += "[" + std::string(to_string(c.status)) + "] " + c.name + " :: " + c.claim + "\n";
        if (c.witness) {
            out += "    input:    " + c.witness->input + "\n";
            out += "    got:      " + c.witness->got + "\n";
            out += "    expected: " + c.witness->expected + "\n";
        }
    }
    out += "\n";
    out += "summary: pass=" + std::to_string(r.summary.pass) +
           " fail=" + std::to_string(r.summary.fail) +
           " finding=" + std::to_string(r.summary.finding) + "\n";
    return out;
}

inline std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["version"] = r.version;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["paper_ref"] = c.claim;
        jc["status"] = to_string(c.status);
        if (c.witness) {
            nlohmann::ordered_json w;
            w["input"] = c.witness->input;
            w["got"] = c.witness->got;
            w["expected"] = c.witness->expected;
            jc["witness"] = w;
        } else {
            jc["witness"] = nullptr;
        }
        checks.push_back(jc);
    }
    j["checks"] = checks;
    nlohmann::ordered_json s;
    s["pass"] = r.summary.pass;
    s["fail"] = r.summary.fail;
    s["finding"] = r.summary.finding;
    j["summary"] = s;
    return j.dump(2) + "\n";
}

inline std::string render(const Report& r, ReportFormat f) {
    return f == ReportFormat::json ? render_json(r) : render_text(r);
}

// Findings do not fail a run; only a hard check failure does.
inline int exit_code_for(const Report& r) {
    return r.summary.fail > 0 ? 1 : 0;
}

}  // namespace octo
