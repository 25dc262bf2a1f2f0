#include <doctest.h>

#include <json.hpp>

#include "sweeplab/error.hpp"
#include "sweeplab/harness.hpp"

using namespace sweeplab;

namespace {

CampaignConfig small(const std::string& suite) {
  CampaignConfig c;
  c.suite = suite;
  c.rmax = 2;
  c.smax = 2;
  c.sizemax = 5;
  c.kmax = 1;
  c.mmax = 2;
  c.wmax = 1;
  return c;
}

}  // namespace

TEST_CASE("every suite passes at small ranges") {
  for (const auto& suite : suite_names()) {
    if (suite == "control:wrong-order") continue;
    auto report = run_campaign(small(suite));
    CAPTURE(suite);
    CHECK(report.passed());
    CHECK(report.count(PointStatus::kSkipped) == 0);
    CHECK(!report.entries.empty());
  }
}

TEST_CASE("negative control fails with replayable counterexamples") {
  auto report = run_campaign(small("control:wrong-order"));
  REQUIRE_FALSE(report.passed());
  for (const auto& e : report.entries) {
    if (e.status != PointStatus::kFail) continue;
    CHECK(!e.counterexample.input.empty());
    CHECK(!e.counterexample.actual.empty());
    CHECK(e.replay.rfind("sweeplab verify control:wrong-order --point ", 0) == 0);
    auto cfg = small("control:wrong-order");
    cfg.point = e.params;
    auto again = run_campaign(cfg);
    REQUIRE(again.entries.size() == 1);
    CHECK(again.entries[0].status == PointStatus::kFail);
    CHECK(again.entries[0].counterexample.input == e.counterexample.input);
  }
}

TEST_CASE("reports do not depend on parallelism") {
  auto cfg = small("bijectivity");
  auto one = report_json(run_campaign(cfg));
  cfg.parallelism = 4;
  CHECK(report_json(run_campaign(cfg)) == one);
  cfg.parallelism = 1;
  CHECK(report_json(run_campaign(cfg)) == one);
}

TEST_CASE("json report layout") {
  auto j = nlohmann::json::parse(report_json(run_campaign(small("inversion:haglund"))));
  CHECK(j["schema"] == "sweeplab-report/1");
  CHECK(j["campaign"] == "inversion:haglund");
  CHECK(j["totals"]["fail"] == 0);
  CHECK(j["totals"]["points"] == j["entries"].size());
  CHECK_FALSE(j.contains("wall_seconds"));
  auto timed = nlohmann::json::parse(report_json(run_campaign(small("inversion:haglund")), true));
  CHECK(timed.contains("wall_seconds"));
}

TEST_CASE("budget exhaustion is a skip") {
  auto cfg = small("equivalence:phi-lw");
  cfg.budget = 30;
  auto report = run_campaign(cfg);
  CHECK(report.passed());
  CHECK(report.count(PointStatus::kSkipped) > 0);
  for (const auto& e : report.entries) {
    if (e.status == PointStatus::kSkipped) CHECK(!e.note.empty());
  }
}

TEST_CASE("sampled campaigns are reproducible") {
  auto cfg = small("equivalence:phi-prime");
  cfg.sizemax = 6;
  cfg.samples = 5;
  cfg.seed = 42;
  auto a = report_json(run_campaign(cfg));
  CHECK(report_json(run_campaign(cfg)) == a);
  CHECK(run_campaign(cfg).passed());
}

TEST_CASE("single point replay") {
  auto cfg = small("conjecture:catalan-t-inv-q");
  cfg.point = {{"b", 3}, {"a", 2}};
  auto report = run_campaign(cfg);
  REQUIRE(report.entries.size() == 1);
  CHECK(format_params(report.entries[0].params) == "a=2,b=3");
  cfg.point = {{"x", 1}};
  CHECK_THROWS_AS(run_campaign(cfg), ParseError);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_campaign(small("nonsense")), ParseError);
  CHECK_THROWS_AS(run_campaign(small("equivalence:nothing")), ParseError);
  auto cfg = small("bijectivity");
  cfg.budget = 0;
  CHECK_THROWS_AS(run_campaign(cfg), ParameterError);
  cfg = small("bijectivity");
  cfg.sizemax = 0;
  CHECK_THROWS_AS(run_campaign(cfg), ParameterError);
}

TEST_CASE("csv and text reports") {
  auto report = run_campaign(small("equivalence:zeta"));
  auto csv = report_csv(report);
  CHECK(csv.rfind("campaign,params,status,checked,input,expected,actual,replay,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(report.entries.size() + 1));
  auto text = report_text(report);
  CHECK(text.find("equivalence:zeta: ") != std::string::npos);
}
