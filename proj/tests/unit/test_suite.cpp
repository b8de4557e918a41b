#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "z3orb/suite.hpp"

using namespace z3orb;

namespace {

const ReportItem* find(const RunReport& r, const std::string& id) {
    for (const auto& it : r.items)
        if (it.id == id) return &it;
    return nullptr;
}

std::string without_elapsed(const RunReport& r) {
    auto j = report_json(r);
    j.erase("elapsed_ms");
    return j.dump();
}

}  // namespace

TEST_CASE("empty catalog") {
    SuiteConfig cfg;
    cfg.suite = Suite::All;
    const RunReport r = run_suite(cfg, {});
    CHECK(r.items.empty());
    CHECK(r.exit_code == 0);
    const std::string js = emit_report(r, Format::Json);
    const auto j = nlohmann::json::parse(js);
    CHECK(j["suite"] == "all");
    CHECK(j["items"].empty());
    CHECK(j["exit_code"] == 0);
    CHECK(js.rfind("{\n  \"suite\": \"all\",\n  \"items\": []", 0) == 0);
}

TEST_CASE("config validation") {
    SuiteConfig cfg;
    cfg.max_weight = 1;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    CHECK(run_suite(cfg).exit_code == 2);
    cfg.max_weight = 6;
    cfg.q_truncation = Rational(0);
    CHECK(run_suite(cfg).exit_code == 2);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"suite", "nope"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"max_weight", "x"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json{{"colour", 1}}), ConfigError);
    const SuiteConfig c = config_from_json(nlohmann::json{{"suite", "glue"}, {"q_truncation", "15/2"}});
    CHECK(c.suite == Suite::Glue);
    CHECK(c.q_truncation == Rational(15, 2));
    CHECK(parse_suite("characters-e6") == Suite::CharactersE6);
}

TEST_CASE("fusion suite") {
    SuiteConfig cfg;
    cfg.suite = Suite::Fusion;
    const RunReport r = run_suite(cfg);
    CHECK(r.exit_code == 0);
    const ReportItem* n = find(r, "fusion.N_{3,3}^6");
    REQUIRE(n != nullptr);
    CHECK(n->status == ItemStatus::Verified);
    CHECK(n->detail == "N_{3,3}^6 = 1");
    CHECK(std::is_sorted(r.items.begin(), r.items.end(),
                         [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; }));
    CHECK(without_elapsed(r) == without_elapsed(run_suite(cfg)));
}

TEST_CASE("quotient suite at weight 6") {
    SuiteConfig cfg;
    cfg.suite = Suite::Quotient;
    cfg.max_weight = 6;
    const RunReport r = run_suite(cfg);
    const ReportItem* g6 = find(r, "quotient.gamma6");
    REQUIRE(g6 != nullptr);
    CHECK(g6->status == ItemStatus::Verified);
    for (const auto& it : r.items) CHECK(it.status != ItemStatus::Discrepancy);
    // binding items all verify; the refuted ones are report-only
    for (const auto& it : r.items)
        if (it.binding) CHECK(it.status == ItemStatus::Verified);
    const bool any_refuted = std::any_of(r.items.begin(), r.items.end(),
                                         [](const ReportItem& i) { return i.status == ItemStatus::Refuted; });
    CHECK(r.exit_code == (any_refuted ? 1 : 0));
    CHECK(without_elapsed(r) == without_elapsed(run_suite(cfg)));
}

TEST_CASE("refuted items serialize their residual") {
    SuiteConfig cfg;
    cfg.suite = Suite::Quotient;
    cfg.max_weight = 8;
    const RunReport r = run_suite(cfg);
    CHECK(r.exit_code == 1);
    const ReportItem* it = find(r, "quotient.gamma8-lemma");
    REQUIRE(it != nullptr);
    CHECK(it->status == ItemStatus::Refuted);
    CHECK_FALSE(it->binding);
    const auto& res = it->payload["residual"];
    REQUIRE(res.is_array());
    REQUIRE(res.size() == 1);
    CHECK(res[0]["monomial"] == "a(-1) a'(-7)");
    CHECK(res[0]["coefficient"] == "-6");
    CHECK(find(r, "quotient.gamma8-lemma.corrected")->status == ItemStatus::Verified);
}

TEST_CASE("text report") {
    RunReport r;
    r.suite = "quotient";
    ReportItem it;
    it.id = "quotient.gamma4-matrix";
    it.status = ItemStatus::Verified;
    it.source = Source::Paper;
    it.detail = "char poly of 1800 M: X^2-69X-4608900";
    r.items.push_back(it);
    const std::string t = emit_report(r, Format::Text);
    CHECK(t.find("X^2-69X-4608900") != std::string::npos);
    CHECK(t.find("quotient.gamma4-matrix  verified") != std::string::npos);
    CHECK(emit_report(r, Format::Text) == t);
}
