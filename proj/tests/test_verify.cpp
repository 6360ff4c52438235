#include <set>

#include <gtest/gtest.h>

#include "sklyanin/error.hpp"
#include "sklyanin/verify.hpp"

using namespace sklyanin;

namespace {

nlohmann::json without_timing(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    auto j = to_json(r);
    j.erase("ms");
    out.push_back(j);
  }
  return out;
}

}  // namespace

TEST(Verify, AllSuitesCoverEveryCheckOnce) {
  const auto reports = run_suite("all", RunConfig{});
  std::vector<std::string> names;
  for (const auto& r : reports) names.push_back(r.name);
  const std::vector<std::string> expected{
      "center.central_elements",  "center.degree4_exact",      "hilbert.factor_rings",
      "hilbert.polynomial_growth", "isomorphisms.tables",      "modules.fat_point",
      "modules.no_point_modules", "modules.restriction_duality", "modules.uniqueness",
      "nilpotent.degree_one",     "points.completeness",       "points.point_scheme",
      "points.two_zero_exclusion", "relations.matrix_model",   "relations.twisted_relations"};
  EXPECT_EQ(names, expected);
  const std::set<std::string> assumptions{"center.degree4_exact", "modules.uniqueness", "points.completeness"};
  for (const auto& r : reports) {
    const Status want = assumptions.count(r.name) ? Status::Assumption : Status::Pass;
    EXPECT_EQ(r.status, want) << r.name << ": " << r.details.dump();
    const auto j = to_json(r);
    EXPECT_TRUE(j.contains("name") && j.contains("status") && j.contains("details") && j.contains("ms"));
    EXPECT_GE(r.ms, 0.0);
  }
}

TEST(Verify, ReportsAreDeterministic) {
  RunConfig c;
  c.degree = 5;
  EXPECT_EQ(without_timing(run_suite("points", c)), without_timing(run_suite("points", c)));
  EXPECT_EQ(without_timing(run_suite("isomorphisms", c)), without_timing(run_suite("isomorphisms", c)));
}

TEST(Verify, FieldIsListed) {
  const auto reports = run_suite("nilpotent", RunConfig{});
  ASSERT_EQ(reports.size(), 1U);
  const auto field = reports[0].details.at("field").get<std::vector<std::string>>();
  EXPECT_EQ(field.front(), "i^2=-1");
  EXPECT_EQ(field.size(), 4U);
}

TEST(Verify, HilbertRespectsAlgebraChoice) {
  RunConfig c;
  c.algebra = AlgebraChoice::Twist;
  const auto reports = run_suite("hilbert", c);
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_FALSE(r.details.contains("sklyanin"));
    EXPECT_TRUE(r.details.contains("twist"));
  }
  const auto growth = reports[1].details.at("twist").get<std::vector<std::size_t>>();
  EXPECT_EQ(growth, (std::vector<std::size_t>{1, 4, 10, 20, 35, 56, 84}));
}

TEST(Verify, OtherParametersPass) {
  RunConfig c;
  c.beta = Rational(1, 3);
  c.gamma = -5;
  c.degree = 5;
  c.module_degree = 3;
  for (const auto& r : run_suite("all", c)) EXPECT_NE(r.status, Status::Fail) << r.name << ": " << r.details.dump();
}

TEST(Verify, ConfigErrors) {
  RunConfig bad;
  bad.beta = 1;
  try {
    (void)run_suite("relations", bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateParameter);
  }
  RunConfig wrong_alpha;
  wrong_alpha.alpha = Rational(1, 2);
  try {
    (void)run_suite("relations", wrong_alpha);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstraintViolated);
  }
  try {
    (void)run_suite("nonsense", RunConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Precondition);
  }
}

TEST(Verify, TooSmallDegreeBoundFailsInsteadOfCrashing) {
  RunConfig c;
  c.degree = 3;
  for (const auto& r : run_suite("center", c))
    if (r.name == "center.central_elements") EXPECT_EQ(r.status, Status::Fail);
}
