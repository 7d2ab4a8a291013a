#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "permrep/verify.hpp"

using namespace permrep;

namespace {

const Check* find_check(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("verify_rule passes for a decreasing rule at small scale") {
  const Report rep = verify_rule(Rule::from_beta_text("3*2"), 4, 4, false);
  CHECK(rep.overall() == CheckStatus::Pass);
  REQUIRE(find_check(rep, "class-count"));
  CHECK(find_check(rep, "class-count")->status == CheckStatus::Pass);
  REQUIRE(find_check(rep, "fiber-equality"));
  REQUIRE(find_check(rep, "finite-classes"));
  REQUIRE(find_check(rep, "unraveling"));
  CHECK(find_check(rep, "class-count")->details.find("theory classes=5") != std::string::npos);
}

TEST_CASE("verify_rule passes for a drop-only rule") {
  const Report rep = verify_rule(Rule::from_beta_text("12*"), 5, 0, false);
  CHECK(rep.overall() == CheckStatus::Pass);
  CHECK(find_check(rep, "class-count")->details.find("theory classes=65") != std::string::npos);
  CHECK(find_check(rep, "primitive-fibers")->status == CheckStatus::Pass);
  CHECK(find_check(rep, "catalan-count")->status == CheckStatus::Pass);
}

TEST_CASE("verify_rule reports the shift discrepancy as inconclusive, never as failure") {
  // The staircase families never merge into the bulk at any ceiling, so the
  // shift class theory stays unconfirmed: splits only, no forbidden merges.
  const Report rep = verify_rule(Rule::from_beta_text("*12"), 5, 3, false);
  CHECK(rep.overall() == CheckStatus::Inconclusive);
  for (const auto& c : rep.checks) CHECK(c.status != CheckStatus::Fail);
  CHECK(find_check(rep, "rid-isolated")->status == CheckStatus::Pass);
  CHECK(find_check(rep, "single-bulk")->status == CheckStatus::Inconclusive);
  CHECK(find_check(rep, "fiber-equality")->status == CheckStatus::Inconclusive);
}

TEST_CASE("verify_rule passes for a switch rule") {
  const Report rep = verify_rule(Rule::from_beta_text("13*"), 6, 2, false);
  CHECK(rep.overall() == CheckStatus::Pass);
  CHECK(find_check(rep, "canonical-shortest")->status == CheckStatus::Pass);
  CHECK(find_check(rep, "realized-triples")->status == CheckStatus::Pass);
}

TEST_CASE("too little slack reports inconclusive, auto-escalation recovers") {
  const Report split = verify_rule(Rule::from_beta_text("3*2"), 5, 0, false);
  CHECK(split.overall() == CheckStatus::Inconclusive);
  CHECK(split.slack == 0);

  const Report healed = verify_rule(Rule::from_beta_text("3*2"), 5, 0, true);
  CHECK(healed.overall() == CheckStatus::Pass);
  CHECK(healed.slack > 0);
}

TEST_CASE("verify_partition matches verify_rule and needs members") {
  const Rule r = Rule::from_beta_text("12*");
  const Partition part = compute_partition(r, 5, 0, true);
  const Report from_part = verify_partition(part);
  const Report fresh = verify_rule(r, 5, 0, false);
  REQUIRE(from_part.checks.size() == fresh.checks.size());
  for (std::size_t i = 0; i < fresh.checks.size(); ++i) {
    CHECK(from_part.checks[i].name == fresh.checks[i].name);
    CHECK(from_part.checks[i].status == fresh.checks[i].status);
    CHECK(from_part.checks[i].details == fresh.checks[i].details);
  }

  const Partition lean = compute_partition(r, 5, 0, false);
  CHECK_THROWS_AS(verify_partition(lean), std::invalid_argument);
}

TEST_CASE("a merge that contradicts the theory is a hard failure") {
  // Doctor a correct partition by fusing two classes; the harness must call
  // this FAIL (not inconclusive) and name the offending pair.
  const Rule r = Rule::from_beta_text("12*");
  Partition part = compute_partition(r, 4, 0, true);
  REQUIRE(part.classes.size() >= 2);
  auto& victim = part.classes[part.classes.size() - 2];
  auto& target = part.classes[part.classes.size() - 1];
  for (const auto& m : target.members) victim.members.push_back(m);
  victim.size += target.size;
  part.classes.pop_back();

  const Report rep = verify_partition(part);
  CHECK(rep.overall() == CheckStatus::Fail);
  bool saw_merge_fail = false;
  for (const auto& c : rep.checks)
    if (c.name == "fiber-equality" && c.status == CheckStatus::Fail &&
        c.details.find("merge contradicts theory") != std::string::npos)
      saw_merge_fail = true;
  CHECK(saw_merge_fail);
}

TEST_CASE("verify_symmetry") {
  CHECK(verify_symmetry(StarString::parse("13*"), 5, 2).overall() == CheckStatus::Pass);
  CHECK(verify_symmetry(StarString::parse("12*"), 5, 0).overall() == CheckStatus::Pass);
  CHECK(verify_symmetry(StarString::parse("3*1"), 4, 3).overall() == CheckStatus::Pass);
  CHECK(verify_symmetry(StarString::parse("*12"), 5, 3).overall() == CheckStatus::Pass);
}

TEST_CASE("verify_confluence") {
  const Report rep = verify_confluence(Rule::from_beta_text("12*"), 100, 42);
  CHECK(rep.overall() == CheckStatus::Pass);
  CHECK(rep.samples == 100);
  CHECK(rep.seed == 42);

  // Same seed, same bytes.
  const Report again = verify_confluence(Rule::from_beta_text("12*"), 100, 42);
  CHECK(report_to_json_string(rep) == report_to_json_string(again));

  CHECK(verify_confluence(Rule::from_beta_text("*23"), 60, 7).overall() == CheckStatus::Pass);
  CHECK(verify_confluence(Rule::from_beta_text("1*3"), 60, 7).overall() == CheckStatus::Pass);
  CHECK_THROWS_AS(verify_confluence(Rule::from_beta_text("3*2"), 10, 1), std::invalid_argument);
}

TEST_CASE("verify_inverse_adjacency") {
  CHECK(verify_inverse_adjacency(Rule::from_beta_text("3*2"), 5).overall() == CheckStatus::Pass);
  CHECK(verify_inverse_adjacency(Rule::from_beta_text("*12"), 5).overall() == CheckStatus::Pass);
  CHECK(verify_inverse_adjacency(Rule::from_beta_text("13*"), 5).overall() == CheckStatus::Pass);
  CHECK_THROWS_AS(verify_inverse_adjacency(Rule::from_beta_text("3*2"), 9),
                  std::invalid_argument);
}

TEST_CASE("catalan_check") {
  const Report rep = catalan_check(7);
  CHECK(rep.overall() == CheckStatus::Pass);
  CHECK(find_check(rep, "catalan-counts")->details.find("1 1 2 5 14 42 132 429") !=
        std::string::npos);
  CHECK(find_check(rep, "drop-only-class-counts")->status == CheckStatus::Pass);
  CHECK_THROWS_AS(catalan_check(11), std::invalid_argument);
}

TEST_CASE("report status aggregation") {
  Report rep;
  rep.checks.push_back({"a", "x", CheckStatus::Pass, ""});
  CHECK(rep.overall() == CheckStatus::Pass);
  rep.checks.push_back({"b", "x", CheckStatus::Inconclusive, ""});
  CHECK(rep.overall() == CheckStatus::Inconclusive);
  rep.checks.push_back({"c", "x", CheckStatus::Fail, ""});
  CHECK(rep.overall() == CheckStatus::Fail);

  const std::string joint = reports_to_json_string({rep});
  CHECK(joint.find("\"overall\": \"FAIL\"") != std::string::npos);
}

TEST_CASE("report text rendering carries one line per check") {
  const Report rep = verify_rule(Rule::from_beta_text("13*"), 5, 2, false);
  const std::string text = report_to_text(rep);
  for (const auto& c : rep.checks) CHECK(text.find(c.name) != std::string::npos);
  CHECK(text.find("overall: PASS") != std::string::npos);
}
