#include "octocheck/report.hpp"
#include "octocheck/suites.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <set>
#include <stdexcept>

using octo::CheckResult;
using octo::CheckStatus;
using octo::Report;
using octo::SuiteConfig;
using octo::SuiteName;
using octo::Witness;

namespace {
SuiteConfig config(SuiteName s, std::uint64_t seed = 0, int trials = 64) {
    SuiteConfig cfg;
    cfg.suite = s;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}
}  // namespace

TEST_CASE("suite names round-trip") {
    for (SuiteName s : {SuiteName::table, SuiteName::identities, SuiteName::clifford,
                        SuiteName::representations, SuiteName::lemma_field, SuiteName::orbits,
                        SuiteName::all}) {
        const auto parsed = octo::parse_suite(octo::to_string(s));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == s);
    }
    CHECK(octo::parse_suite("lemma-field").has_value());
    CHECK_FALSE(octo::parse_suite("bogus").has_value());
    CHECK_FALSE(octo::parse_suite("Table").has_value());
}

TEST_CASE("trials must be positive") {
    CHECK_THROWS_AS(octo::run_suite(config(SuiteName::table, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(octo::run_suite(config(SuiteName::table, 0, -5)), std::invalid_argument);
}

TEST_CASE("reports sort checks by name and reject duplicates") {
    std::vector<CheckResult> checks;
    checks.push_back(CheckResult::passed("b.check", "claim b"));
    checks.push_back(CheckResult::passed("a.check", "claim a"));
    const Report r = Report::build(SuiteName::table, 0, checks);
    CHECK(r.checks.front().name == "a.check");
    CHECK(r.checks.back().name == "b.check");

    checks.push_back(CheckResult::passed("a.check", "claim a again"));
    CHECK_THROWS_AS(Report::build(SuiteName::table, 0, checks), std::logic_error);
}

TEST_CASE("summary counts statuses and drives the exit code") {
    std::vector<CheckResult> checks;
    checks.push_back(CheckResult::passed("a", "c"));
    checks.push_back(CheckResult::found("b", "c", Witness{"in", "g", "e"}));
    Report r = Report::build(SuiteName::table, 0, checks);
    CHECK(r.summary.pass == 1);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.finding == 1);
    // Findings do not fail the run.
    CHECK(octo::exit_code_for(r) == 0);

    checks.push_back(CheckResult::failed("c", "c", Witness{"in", "g", "e"}));
    r = Report::build(SuiteName::table, 0, checks);
    CHECK(r.summary.fail == 1);
    CHECK(octo::exit_code_for(r) == 1);
}

TEST_CASE("identical configurations render byte-identical reports") {
    const SuiteConfig cfg = config(SuiteName::identities, 99, 32);
    const Report a = octo::run_suite(cfg);
    const Report b = octo::run_suite(cfg);
    CHECK(octo::render_text(a) == octo::render_text(b));
    CHECK(octo::render_json(a) == octo::render_json(b));

    // A different seed changes nothing structural; output stays valid.
    const Report c = octo::run_suite(config(SuiteName::identities, 100, 32));
    CHECK(c.checks.size() == a.checks.size());
}

TEST_CASE("json reports follow the schema exactly") {
    const Report r = octo::run_suite(config(SuiteName::lemma_field, 42));
    const nlohmann::json j = nlohmann::json::parse(octo::render_json(r));

    REQUIRE(j.is_object());
    REQUIRE(j.contains("version"));
    CHECK(j["version"].is_string());
    CHECK(j["version"] == std::string(octo::kVersion));
    CHECK(j["suite"] == "lemma-field");
    CHECK(j["seed"] == 42);
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["summary"].is_object());

    int pass = 0, fail = 0, finding = 0;
    std::set<std::string> names;
    std::string prev;
    for (const auto& c : j["checks"]) {
        REQUIRE(c.contains("name"));
        REQUIRE(c.contains("paper_ref"));
        REQUIRE(c.contains("status"));
        REQUIRE(c.contains("witness"));
        CHECK(c["name"].is_string());
        CHECK(c["paper_ref"].is_string());
        const std::string status = c["status"];
        CHECK((status == "pass" || status == "fail" || status == "finding"));
        if (status == "pass") {
            ++pass;
            CHECK(c["witness"].is_null());
        } else {
            REQUIRE(c["witness"].is_object());
            CHECK(c["witness"]["input"].is_string());
            CHECK(c["witness"]["got"].is_string());
            CHECK(c["witness"]["expected"].is_string());
            status == "fail" ? ++fail : ++finding;
        }
        const std::string name = c["name"];
        CHECK(names.insert(name).second);
        CHECK(prev < name);
        prev = name;
    }
    CHECK(j["summary"]["pass"] == pass);
    CHECK(j["summary"]["fail"] == fail);
    CHECK(j["summary"]["finding"] == finding);
    CHECK(octo::render_json(r).back() == '\n');
}

TEST_CASE("text reports carry witnesses for findings") {
    const Report r = octo::run_suite(config(SuiteName::lemma_field, 0));
    const std::string text = octo::render_text(r);
    CHECK(text.rfind("octocheck ", 0) == 0);
    CHECK(text.find("[finding] field.step08_a_vs_b_forms") != std::string::npos);
    CHECK(text.find("    input:    k = 1, x = i2") != std::string::npos);
    CHECK(text.find("summary: pass=") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("the full run aggregates every suite with unique names") {
    const Report r = octo::run_suite(config(SuiteName::all, 0, 16));
    CHECK(r.suite == "all");
    CHECK(r.checks.size() >= 100);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.finding > 0);

    // Every individual suite's checks appear.
    std::set<std::string> prefixes;
    for (const auto& c : r.checks)
        prefixes.insert(c.name.substr(0, c.name.find('.')));
    for (const char* p : {"table", "identities", "clifford", "rep", "field", "threec", "orbit",
                          "parallel"})
        CHECK(prefixes.count(p) == 1);
}
