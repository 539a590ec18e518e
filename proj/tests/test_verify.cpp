#include <doctest.h>

#include <regex>

#include "qbern/verify.hpp"

using namespace qbern::verify;

namespace {

std::string strip_elapsed(std::string json) {
  static const std::regex elapsed(R"("elapsed_ms": [0-9.e+-]+)");
  return std::regex_replace(json, elapsed, R"("elapsed_ms": 0)");
}

} // namespace

TEST_CASE("identity ids round-trip through their names") {
  CHECK(all_identities().size() == 11);
  for (IdentityId id : all_identities()) {
    auto back = identity_from_string(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(identity_from_string("T3").has_value());
  CHECK(identity_from_string("T9-paper-variant") == IdentityId::T9PaperVariant);
}

TEST_CASE("single identities pass at small bounds") {
  Bounds b;
  b.max_n = 4;
  for (IdentityId id : {IdentityId::T1, IdentityId::T2, IdentityId::COR3,
                        IdentityId::T4, IdentityId::T5, IdentityId::T9}) {
    IdentityReport rep = verify_identity(id, b);
    CHECK(rep.status == Status::Pass);
    CHECK(rep.as_expected());
    CHECK(rep.params.at("max_n") == 4);
  }
  Bounds small;
  small.max_n = 3;
  small.max_m = 2;
  small.max_r = 2;
  CHECK(verify_identity(IdentityId::T8, small).status == Status::Pass);
  CHECK(verify_identity(IdentityId::T6, small).status == Status::Pass);
  CHECK(verify_identity(IdentityId::T7, small).status == Status::Pass);
  Bounds j_only;
  j_only.max_j = 6;
  CHECK(verify_identity(IdentityId::EQ23, j_only).status == Status::Pass);
}

TEST_CASE("the truncated-bound variant fails with witness n = 1") {
  IdentityReport rep = verify_identity(IdentityId::T9PaperVariant);
  CHECK(rep.status == Status::Fail);
  CHECK(rep.as_expected()); // failing is this identity's expectation
  REQUIRE(rep.counterexample.has_value());
  CHECK(rep.counterexample->params.at("n") == 1);
  CHECK_FALSE(rep.counterexample->lhs.empty());
  CHECK_FALSE(rep.counterexample->rhs.empty());
}

TEST_CASE("trivial bounds pass everything vacuously or at index zero") {
  Bounds zero;
  zero.max_n = 0;
  zero.max_m = 1;
  zero.max_r = 1;
  zero.max_j = 0;
  for (IdentityId id : all_identities()) {
    IdentityReport rep = verify_identity(id, zero);
    CHECK(rep.status == Status::Pass);
  }
}

TEST_CASE("budget overruns surface as errors, not failures") {
  Bounds tiny;
  tiny.max_n = 5;
  tiny.term_budget = 10;
  IdentityReport rep = verify_identity(IdentityId::T8, tiny);
  CHECK(rep.status == Status::Error);
  CHECK_FALSE(rep.error_message.empty());
  CHECK_FALSE(rep.as_expected());
}

TEST_CASE("verify_all runs every identity and meets expectations") {
  Bounds b;
  b.max_n = 3;
  b.max_m = 2;
  b.max_r = 2;
  b.max_j = 3;
  auto reports = verify_all(b);
  REQUIRE(reports.size() == all_identities().size());
  unsigned passes = 0, fails = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].id == all_identities()[i]); // deterministic order
    if (reports[i].status == Status::Pass) ++passes;
    if (reports[i].status == Status::Fail) ++fails;
  }
  CHECK(passes == 10);
  CHECK(fails == 1);
  CHECK(all_expectations_met(reports));

  // parallel run gives the same reports in the same order
  auto parallel = verify_all(b, 4);
  CHECK(strip_elapsed(reports_to_json(parallel)) ==
        strip_elapsed(reports_to_json(reports)));
}

TEST_CASE("reports serialize deterministically modulo elapsed times") {
  Bounds b;
  b.max_n = 2;
  auto first = strip_elapsed(reports_to_json({verify_identity(IdentityId::T2, b)}));
  auto second = strip_elapsed(reports_to_json({verify_identity(IdentityId::T2, b)}));
  CHECK(first == second);
  CHECK(first.find("\"identity_id\": \"T2\"") != std::string::npos);
  CHECK(first.find("\"status\": \"pass\"") != std::string::npos);

  auto variant = reports_to_json({verify_identity(IdentityId::T9PaperVariant)});
  CHECK(variant.find("\"counterexample\"") != std::string::npos);
  CHECK(variant.find("\"lhs\"") != std::string::npos);
}
