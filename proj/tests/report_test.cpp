#include "contractdom/report.hpp"

#include <gtest/gtest.h>

#include "contractdom/generators.hpp"
#include "contractdom/oracle.hpp"
#include "contractdom/polyalgo.hpp"

namespace contractdom {
namespace {

TEST(DigestTest, KnownVectors) {
  EXPECT_EQ(digest(std::string()), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(digest(std::string("a")), "fnv1a64:af63dc4c8601ec8c");
  EXPECT_EQ(digest(named(Family::path, 4)), digest(format_edge_list(named(Family::path, 4))));
  EXPECT_NE(digest(named(Family::path, 4)), digest(named(Family::cycle, 4)));
}

TEST(DecisionJsonTest, Fields) {
  Json bf = to_json(decide_bruteforce(named(Family::path, 4)));
  EXPECT_EQ(bf["method"], "bruteforce");
  EXPECT_EQ(bf["answer"], "yes");
  EXPECT_EQ(bf["witness"]["edge"], Json::array({0, 1}));
  EXPECT_TRUE(bf["witness"]["set"].is_null());
  EXPECT_TRUE(bf["a"].is_null());

  Json st = to_json(decide_structural(named(Family::cycle, 6), 1));
  EXPECT_EQ(st["answer"], "no");
  EXPECT_EQ(st["fired_step"], "1.1.2");
  EXPECT_EQ(st["j"], 1);
  EXPECT_EQ(st["f"], 20);
  EXPECT_EQ(st["a"], Json::array({0, 1, 2}));
}

TEST(RunReportTest, JsonRoundTrip) {
  RunReport r;
  r.command = "decide";
  r.input_digest = digest(named(Family::cycle, 6));
  r.result = to_json(decide_characterization(named(Family::cycle, 4)));
  r.exit_status = kExitYes;
  EXPECT_EQ(report_from_json(to_json(r)), r);
  EXPECT_EQ(report_from_json(Json::parse(render_json(r))), r);
  EXPECT_FALSE(to_json(r).contains("elapsed_ms"));

  r.elapsed_ms = 1.5;
  EXPECT_EQ(report_from_json(Json::parse(render_json(r))), r);
}

TEST(RunReportTest, RenderingIsStable) {
  RunReport r;
  r.command = "gamma";
  r.input_digest = "fnv1a64:0000000000000000";
  r.result = {{"n", 4}, {"gamma", 2}, {"witness", {0, 2}}};
  EXPECT_EQ(render_json(r), render_json(r));
  EXPECT_EQ(render_text(r),
            "command: gamma\n"
            "input_digest: fnv1a64:0000000000000000\n"
            "result:\n"
            "  n: 4\n"
            "  gamma: 2\n"
            "  witness: [0,2]\n"
            "exit_status: 0\n");
}

TEST(SummaryJsonTest, CrosscheckAndClaims) {
  CrosscheckSummary s;
  s.instances = 3;
  s.agree = 2;
  s.disagree = 1;
  s.tallies["bruteforce"]["yes"] = 2;
  s.disagreements.push_back({7, "2 1\n0 1\n", {{"bruteforce", "no"}, {"structural", "yes"}}});
  Json j = to_json(s);
  EXPECT_EQ(j["disagree"], 1);
  EXPECT_EQ(j["tallies"]["bruteforce"]["yes"], 2);
  EXPECT_EQ(j["disagreements"][0]["answers"]["structural"], "yes");

  ClaimSummary c;
  c.instances = 1;
  Json cj = to_json(c);
  EXPECT_EQ(cj["violations"], 0);
  EXPECT_EQ(cj["claims"].size(), kClaimCount);
}

}  // namespace
}  // namespace contractdom
