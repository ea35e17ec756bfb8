#include <gtest/gtest.h>

#include "surprise/verify.hpp"

using namespace surprise;

TEST(Verify, AllChecksPass) {
  VerifyOptions opt;
  opt.seed = 42;
  const auto r = verify_all(opt);
  ASSERT_EQ(r.checks.size(), 14u);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.ok());
}

TEST(Verify, BoundOneStillPasses) {
  VerifyOptions opt;
  opt.bound = 1;
  opt.samples = 50;
  const auto r = verify_all(opt);
  EXPECT_TRUE(r.ok()) << verification_text(r);
  EXPECT_NE(r.checks[7].detail.find("6 models with <= 1 worlds"), std::string::npos);
  EXPECT_NE(r.checks[7].detail.find("limitation"), std::string::npos);
}

TEST(Verify, TamperedSigmaFails) {
  VerifyOptions opt;
  opt.samples = 50;
  opt.sigma_day = [](surprise::Run d) { return conj(t_eq(d), neg(box(t_lt(d)))); };
  const auto r = verify_all(opt);
  EXPECT_FALSE(r.ok());
  EXPECT_GE(r.failures(), 1u);
  EXPECT_NE(verification_text(r).find("FAIL no-box-sigma-s5"), std::string::npos);
}

TEST(Verify, OutOfRangeBoundFailsTheCheck) {
  VerifyOptions opt;
  opt.bound = 5;
  opt.samples = 10;
  const auto r = verify_all(opt);
  EXPECT_FALSE(r.checks[7].passed());
  EXPECT_NE(r.checks[7].detail.find("exception"), std::string::npos);
}

TEST(Verify, DeterministicText) {
  VerifyOptions opt;
  opt.samples = 100;
  opt.seed = 7;
  EXPECT_EQ(verification_text(verify_all(opt)), verification_text(verify_all(opt)));
}

TEST(Verify, JsonRecords) {
  VerifyOptions opt;
  opt.samples = 20;
  const auto j = verification_json(verify_all(opt));
  ASSERT_EQ(j["checks"].size(), 14u);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name") && c.contains("anchor") && c.contains("status") && c.contains("detail"));
    EXPECT_EQ(c["status"], "pass");
  }
  EXPECT_TRUE(j["elapsed_ms"].is_number_unsigned());
}
