#include "cypair/error.hpp"
#include "cypair/registry.hpp"
#include "cypair/report.hpp"
#include "cypair/verifier.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace cypair;
using namespace cypair::verifier;

namespace {

const Registry& registry() {
  static const Registry r = Registry::load_file(CYPAIR_TEST_REGISTRY);
  return r;
}

const Check* find(const Verdict& v, const std::string& name) {
  for (const auto& c : v.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> mismatches(const Verdict& v) {
  std::vector<std::string> out;
  for (const auto& c : v.checks)
    if (c.status == Status::Mismatch) out.push_back(c.name);
  return out;
}

const char* kMinimal = R"J({"cases": [{
  "id": "toy", "variables": ["x0","x1","x2","x3","x4"],
  "parameters": {"q": "x0^2 + x1^2"},
  "x_equation": "x1^4 + x2^4 + x3^4 + x0^4 + x4*q*x0",
  "boundary": ["x4"]
}]})J";

}  // namespace

TEST(Registry, ContainsEveryWorkedExample) {
  EXPECT_EQ(registry().ids(), (std::vector<std::string>{"ex3.1", "ex3.2", "ex3.3", "ex3.5", "ex3.6", "ex4.1", "ex4.2"}));
  EXPECT_THROW(registry().get("ex9.9"), NotFound);
}

TEST(Registry, ParametersAndBoundaryDefaults) {
  auto r = Registry::load_string(kMinimal);
  const auto& c = r.get("toy");
  EXPECT_EQ(c.boundary_names, std::vector<std::string>{"D"});
  EXPECT_EQ(c.x(), Poly::parse("x1^4 + x2^4 + x3^4 + x0^4 + x4*x0^3 + x4*x1^2*x0", c.ring()));
  EXPECT_EQ(c.boundary_variable(), "x4");
  EXPECT_EQ(c.d(), Poly::parse("x0^4 + x1^4 + x2^4 + x3^4", c.d_ring()));
}

TEST(Registry, Errors) {
  EXPECT_THROW(Registry::load_string("{"), ParseError);
  EXPECT_THROW(Registry::load_string(R"J({"cases": [{"id": "a"}]})J"), ParseError);
  std::string dup = std::string(R"J({"cases": [)J") +
                    R"J({"id":"a","variables":["x","y"],"x_equation":"x*y","boundary":["x"]},)J" +
                    R"J({"id":"a","variables":["x","y"],"x_equation":"x*y","boundary":["x"]}]})J";
  EXPECT_THROW(Registry::load_string(dup), ParseError);
  EXPECT_THROW(Registry::load_file("/nonexistent/registry.json"), NotFound);
  EXPECT_THROW(Registry::load_string(R"J({"cases": [{"id":"a","variables":["x","y"],"x_equation":"x*y","boundary":["x"],
    "steps":[{"label":"s","kind":"teleport","exceptional":"E"}]}]})J"),
               ParseError);
}

TEST(Rigidity, Rule) {
  RigidityFacts q{"quartic", 4, 4, 6, true, true, true, "c"};
  EXPECT_EQ(apply_rigidity(q), kRigid);
  q.singular_points = 9;
  EXPECT_EQ(apply_rigidity(q), kNoConclusion);
  q.singular_points = 3;
  q.all_odp = false;
  EXPECT_EQ(apply_rigidity(q), kNoConclusion);
  q.all_odp.reset();
  EXPECT_EQ(apply_rigidity(q), kNoConclusion);
  RigidityFacts c{"cubic", 3, 4, 0, true, true, true, "c"};
  EXPECT_EQ(apply_rigidity(c), kNonRational);
  c.singular_points = 1;
  EXPECT_EQ(apply_rigidity(c), kNoConclusion);
  RigidityFacts sextic{"quartic", 6, 4, 0, true, true, true, "c"};
  EXPECT_EQ(apply_rigidity(sextic), kNoConclusion);
}

TEST(CyPair, DegreeArithmetic) {
  auto r = Registry::load_string(kMinimal);
  auto checks = check_cy_pair(r.get("toy"));
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_EQ(checks[0].status, Status::Confirmed);
  auto bad = Registry::load_string(R"J({"cases": [{"id":"b","variables":["x0","x1","x2","x3","x4"],
    "x_equation":"x0^3+x1^3+x2^3+x3^3+x4^3","boundary":["x4"]}]})J");
  EXPECT_EQ(check_cy_pair(bad.get("b"))[0].status, Status::Mismatch);
}

TEST(RunCase, CuspQuarticHasNoMismatch) {
  auto v = run_case(registry().get("ex3.1"));
  EXPECT_TRUE(v.passed()) << ::testing::PrintToString(mismatches(v));
  EXPECT_EQ(v.conclusion, kRigid);
  ASSERT_TRUE(v.fingerprint);
  EXPECT_EQ(v.fingerprint->catalog_match, "tetrahedron-boundary");
  EXPECT_EQ(v.ledger.boundary, (std::vector<std::string>{"D", "E", "E1", "E2"}));
  EXPECT_GT(v.count(Status::Assumed), 0u);
  for (const auto& c : v.checks)
    if (c.status == Status::Assumed) EXPECT_FALSE(c.citation.empty()) << c.name;
}

TEST(RunCase, NodalQuarticPointsAreNotOrdinary) {
  auto v = run_case(registry().get("ex3.2"));
  EXPECT_FALSE(v.passed());
  EXPECT_EQ(mismatches(v), (std::vector<std::string>{"Sing(X) on L: ODP", "conclusion"}));
  EXPECT_EQ(v.conclusion, kNoConclusion);
  const Check* count = find(v, "Sing(X) on L");
  ASSERT_NE(count, nullptr);
  EXPECT_EQ(count->status, Status::Confirmed);
}

TEST(RunCase, RemainingCasesPass) {
  for (const char* id : {"ex3.3", "ex3.5", "ex3.6", "ex4.1", "ex4.2"}) {
    auto v = run_case(registry().get(id));
    EXPECT_TRUE(v.passed()) << id << ": " << ::testing::PrintToString(mismatches(v));
  }
}

TEST(RunCase, ExpectationErrorsBecomeMismatches) {
  auto r = Registry::load_string(R"J({"cases": [{"id":"g","variables":["x0","x1","x2","x3","x4"],
    "x_equation":"x1^4+x2^4+x3^4+x0*x1*x2*x3+x4*(x0^3+x4^3)","boundary":["x4"],
    "germs":[{"name":"wrong","surface":"D","point":[1,0,0,0],"expect":"E_8"},
             {"name":"off","surface":"D","point":[1,1,0,0],"expect":"A_1"}]}]})J");
  auto v = run_case(r.get("g"));
  EXPECT_EQ(find(v, "wrong")->status, Status::Mismatch);
  EXPECT_EQ(find(v, "off")->status, Status::Mismatch);
  EXPECT_NE(find(v, "off")->computed.find("error"), std::string::npos);
}

TEST(Report, DeterministicJson) {
  const auto& c = registry().get("ex3.5");
  std::string a = report::verdict(run_case(c), report::Format::Json);
  std::string b = report::verdict(run_case(c), report::Format::Json);
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("case_id"), "ex3.5");
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.at("dual_complex").at("fingerprint").at("catalog_match"), "tetrahedron-boundary");
  EXPECT_EQ(j.at("ledger").at("boundary"), (std::vector<std::string>{"S", "T", "Ef", "Eg"}));
  for (const auto& chk : j.at("checks")) {
    std::string s = chk.at("status");
    EXPECT_TRUE(s == "CONFIRMED" || s == "ASSUMED" || s == "MISMATCH" || s == "FLAGGED");
  }
}

TEST(Report, TextSummaryLine) {
  const auto& c = registry().get("ex4.2");
  ASSERT_FALSE(c.annotations.empty());
  auto v = run_case(c);
  std::string t = report::verdict(v, report::Format::Text);
  EXPECT_NE(t.find("annotation: " + c.annotations.front()), std::string::npos);
  EXPECT_NE(t.find("result: PASS"), std::string::npos);
  EXPECT_THROW(report::parse_format("yaml"), ParseError);
}

TEST(Ledger, ReplayIsByteIdentical) {
  for (const auto& id : registry().ids()) {
    auto a = report::verdict(run_case(registry().get(id)), report::Format::Text);
    auto b = report::verdict(run_case(registry().get(id)), report::Format::Text);
    EXPECT_EQ(a, b) << id;
  }
}
