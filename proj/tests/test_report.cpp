#include <gtest/gtest.h>

#include "bmp/run_report.hpp"
#include "bmp/suites.hpp"

using bmp::json;

TEST(PropertyReport, FailKeepsFirstWitness) {
  bmp::PropertyReport r;
  r.fail(json{{"m", 3}}, json{{"v", "1/2"}});
  r.fail(json{{"m", 4}}, json{{"v", "1/3"}});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample->location["m"], 3);
}

TEST(PropertyReport, JsonRoundTrip) {
  bmp::PropertyReport r;
  r.property = "unimodal";
  r.range = "0 <= m <= 10";
  r.notes = {"a note"};
  r.elapsed_seconds = 0.25;
  r.fail(json{{"m", 7}}, json{{"row", json::array({"1/2", "3"})}});
  const json j = r;
  EXPECT_EQ(j["kind"], "property");
  const auto back = j.get<bmp::PropertyReport>();
  EXPECT_EQ(back.property, r.property);
  EXPECT_EQ(back.range, r.range);
  EXPECT_EQ(back.passed, false);
  EXPECT_EQ(back.notes, r.notes);
  ASSERT_TRUE(back.counterexample.has_value());
  EXPECT_EQ(back.counterexample->values, r.counterexample->values);
  EXPECT_EQ(json(back), j);
}

TEST(PropertyReport, RejectsFailureWithoutWitness) {
  bmp::PropertyReport r;
  r.property = "x";
  json j = r;
  j["verdict"] = "fail";
  EXPECT_ANY_THROW(j.get<bmp::PropertyReport>());
}

TEST(RunReport, RoundTripAllKinds) {
  bmp::RunReport rr;
  rr.command = "verify";
  rr.config = json{{"max_m", 5}};
  rr.started = bmp::utc_timestamp();
  rr.results.emplace_back(bmp::verify_unimodal(bmp::SuiteOptions{5, 3, 1}));
  rr.results.emplace_back(bmp::t_bundle(3));
  rr.results.emplace_back(bmp::quartic_integral_check(1, 1.0, 1e-10));
  rr.finished = bmp::utc_timestamp();
  EXPECT_TRUE(rr.passed());
  const json j = rr;
  EXPECT_EQ(j["schema_version"], bmp::kSchemaVersion);
  EXPECT_EQ(j["overall"], "pass");
  const auto back = j.get<bmp::RunReport>();
  EXPECT_EQ(back.results.size(), 3u);
  const auto& tb = std::get<bmp::TValueBundle>(back.results[1]);
  EXPECT_EQ(tb.direct, bmp::Rational(67, 264));
  EXPECT_EQ(json(back), j);
}

TEST(RunReport, OverallReflectsFailures) {
  bmp::RunReport rr;
  bmp::PropertyReport bad;
  bad.fail(json{{"m", 1}}, json::object());
  rr.results.emplace_back(bad);
  EXPECT_FALSE(rr.passed());
  json j = rr;
  EXPECT_EQ(j["overall"], "fail");
  j["overall"] = "pass";
  EXPECT_ANY_THROW(j.get<bmp::RunReport>());
}

TEST(RunReport, RejectsUnknownSchema) {
  json j = bmp::RunReport{};
  j["schema_version"] = bmp::kSchemaVersion + 1;
  EXPECT_ANY_THROW(j.get<bmp::RunReport>());
}
