#ifndef QBERN_VERIFY_HPP
#define QBERN_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/ratfunc.hpp"

namespace qbern::verify {

/// Identity ids, one per theorem-level check. T9PaperVariant encodes the
/// printed summation bound of the difference identity and is EXPECTED to
/// fail; its failure is part of the suite's success condition.
enum class IdentityId {
  T1, T2, COR3, T4, T5, T6, T7, T8, T9, T9PaperVariant, EQ23,
};

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);
const std::vector<IdentityId>& all_identities();

struct Bounds {
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_m;
  std::optional<unsigned> max_r;
  std::optional<unsigned> max_j;
  std::size_t term_budget = 2'000'000;
};

struct Counterexample {
  std::map<std::string, unsigned> params;
  std::string lhs;
  std::string rhs;
};

enum class Status { Pass, Fail, Error };

struct IdentityReport {
  IdentityId id = IdentityId::T1;
  std::map<std::string, unsigned> params; // bounds actually used
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample; // present iff Fail
  std::string error_message;                    // present iff Error
  double elapsed_ms = 0.0;
  bool expected_fail = false;

  /// Pass for ordinary identities, Fail for the expected-fail variant.
  bool as_expected() const {
    return expected_fail ? status == Status::Fail : status == Status::Pass;
  }
};

/// Exhaustively checks one identity over its integer grid, short-circuiting
/// on the first counterexample. Resource overruns surface as Status::Error.
IdentityReport verify_identity(IdentityId id, const Bounds& bounds = {});

/// Runs every identity once; `jobs` = 0 means hardware concurrency.
/// Reports come back in identity-id order regardless of scheduling.
std::vector<IdentityReport> verify_all(const Bounds& bounds = {}, unsigned jobs = 1);

bool all_expectations_met(const std::vector<IdentityReport>& reports);

/// JSON array, schema: identity_id, params, status,
/// counterexample{params, lhs, rhs}, elapsed_ms.
std::string reports_to_json(const std::vector<IdentityReport>& reports);

} // namespace qbern::verify

#endif
