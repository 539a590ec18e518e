#include "qbern/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/errors.hpp"
#include "qbern/io.hpp"

namespace qbern::verify {

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::T1: return "T1";
    case IdentityId::T2: return "T2";
    case IdentityId::COR3: return "COR3";
    case IdentityId::T4: return "T4";
    case IdentityId::T5: return "T5";
    case IdentityId::T6: return "T6";
    case IdentityId::T7: return "T7";
    case IdentityId::T8: return "T8";
    case IdentityId::T9: return "T9";
    case IdentityId::T9PaperVariant: return "T9-paper-variant";
    default: return "EQ23";
  }
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (IdentityId id : all_identities())
    if (name == to_string(id)) return id;
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::T1, IdentityId::T2, IdentityId::COR3, IdentityId::T4,
      IdentityId::T5, IdentityId::T6, IdentityId::T7, IdentityId::T8,
      IdentityId::T9, IdentityId::T9PaperVariant, IdentityId::EQ23,
  };
  return ids;
}

namespace {

class Runner {
 public:
  Runner(IdentityReport& report, std::size_t budget)
      : report_(report), budget_(budget) {}

  const RatFunc& guard(const RatFunc& f) const {
    if (f.term_count() > budget_)
      throw BudgetError("term budget exceeded (" + std::to_string(f.term_count()) +
                        " > " + std::to_string(budget_) + ")");
    return f;
  }

  /// Records the first counterexample; returns false to stop the grid walk.
  bool expect_eq(std::map<std::string, unsigned> params, const RatFunc& lhs,
                 const RatFunc& rhs) {
    guard(lhs);
    guard(rhs);
    if (lhs == rhs) return true;
    report_.status = Status::Fail;
    report_.counterexample = Counterexample{std::move(params), to_text(lhs), to_text(rhs)};
    return false;
  }

  bool expect_var_free(std::map<std::string, unsigned> params, const RatFunc& f, Var v) {
    if (!f.num().uses(v) && !f.den().uses(v)) return true;
    report_.status = Status::Fail;
    report_.counterexample =
        Counterexample{std::move(params), to_text(f),
                       std::string("value free of ") + var_name(v)};
    return false;
  }

 private:
  IdentityReport& report_;
  std::size_t budget_;
};

unsigned bound(const std::optional<unsigned>& requested, unsigned fallback) {
  return requested.value_or(fallback);
}

void run_identity(IdentityId id, const Bounds& bounds, IdentityReport& report) {
  Runner r(report, bounds.term_budget);
  using namespace qbern::degenerate;

  switch (id) {
    case IdentityId::T1: {
      unsigned max_n = bound(bounds.max_n, 8);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 0; n <= max_n; ++n)
        if (!r.expect_eq({{"n", n}}, dbeta_via_integral(n), dbeta(n))) return;
      break;
    }
    case IdentityId::T2: {
      unsigned max_n = bound(bounds.max_n, 8);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 0; n <= max_n; ++n)
        if (!r.expect_eq({{"n", n}}, dbeta(n), dbeta_corollary3(n))) return;
      break;
    }
    case IdentityId::COR3: {
      unsigned max_n = bound(bounds.max_n, 8);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 0; n <= max_n; ++n)
        if (!r.expect_eq({{"n", n}}, dbeta_corollary3(n), dbeta_theorem5(n))) return;
      break;
    }
    case IdentityId::T4: {
      unsigned max_n = bound(bounds.max_n, 10);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 0; n <= max_n; ++n) {
        RatFunc recovered = recover_beta(n);
        if (!r.expect_var_free({{"n", n}}, recovered, Var::L)) return;
        if (!r.expect_eq({{"n", n}}, recovered, carlitz::beta_poly_closed(n))) return;
      }
      break;
    }
    case IdentityId::T5: {
      unsigned max_n = bound(bounds.max_n, 8);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 0; n <= max_n; ++n)
        if (!r.expect_eq({{"n", n}}, dbeta_theorem5(n), dbeta(n))) return;
      break;
    }
    case IdentityId::T6: {
      unsigned max_n = bound(bounds.max_n, 6);
      unsigned max_r = bound(bounds.max_r, 3);
      report.params = {{"max_n", max_n}, {"max_r", max_r}};
      for (unsigned n = 0; n <= max_n; ++n) {
        if (!r.expect_eq({{"n", n}, {"r", 1}}, dbeta_order_r(n, 1), dbeta(n))) return;
        for (unsigned rr = 1; rr <= max_r; ++rr) {
          RatFunc at_zero = limit_at(dbeta_order_r(n, rr), Var::L, Rational(0));
          if (!r.expect_eq({{"n", n}, {"r", rr}}, at_zero, carlitz::beta_order_r(n, rr)))
            return;
        }
      }
      break;
    }
    case IdentityId::T7: {
      unsigned max_n = bound(bounds.max_n, 6);
      unsigned max_r = bound(bounds.max_r, 3);
      report.params = {{"max_n", max_n}, {"max_r", max_r}};
      for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned rr = 1; rr <= max_r; ++rr) {
          RatFunc recovered = recover_beta_order_r(n, rr);
          if (!r.expect_var_free({{"n", n}, {"r", rr}}, recovered, Var::L)) return;
          if (!r.expect_eq({{"n", n}, {"r", rr}}, recovered, carlitz::beta_order_r(n, rr)))
            return;
        }
      }
      break;
    }
    case IdentityId::T8: {
      unsigned max_n = bound(bounds.max_n, 6);
      unsigned max_m = bound(bounds.max_m, 3);
      report.params = {{"max_n", max_n}, {"max_m", max_m}};
      for (unsigned m = 1; m <= max_m; ++m)
        for (unsigned n = 0; n <= max_n; ++n)
          if (!r.expect_eq({{"n", n}, {"m", m}}, multiplication_rhs(n, m), dbeta(n)))
            return;
      break;
    }
    case IdentityId::T9: {
      unsigned max_n = bound(bounds.max_n, 8);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 1; n <= max_n; ++n) {
        auto [lhs, rhs] = difference_sides(n);
        if (!r.expect_eq({{"n", n}}, lhs, rhs)) return;
      }
      break;
    }
    case IdentityId::T9PaperVariant: {
      unsigned max_n = bound(bounds.max_n, 2);
      report.params = {{"max_n", max_n}};
      for (unsigned n = 1; n <= max_n; ++n) {
        auto [lhs, rhs] = difference_sides_paper_variant(n);
        if (!r.expect_eq({{"n", n}}, lhs, rhs)) return;
      }
      break;
    }
    case IdentityId::EQ23: {
      unsigned max_j = bound(bounds.max_j, 10);
      report.params = {{"max_j", max_j}};
      const RatFunc q_minus_one = RatFunc::variable(Var::q) - RatFunc(1);
      for (unsigned j = 0; j <= max_j; ++j) {
        auto [lhs, rhs] = eq23_basis_check(j);
        RatFunc expected = RatFunc(Rational(static_cast<long>(j) + 1)) * q_minus_one;
        if (!r.expect_eq({{"j", j}}, lhs, rhs)) return;
        if (!r.expect_eq({{"j", j}}, lhs, expected)) return;
      }
      break;
    }
  }
}

} // namespace

IdentityReport verify_identity(IdentityId id, const Bounds& bounds) {
  IdentityReport report;
  report.id = id;
  report.expected_fail = (id == IdentityId::T9PaperVariant);
  auto start = std::chrono::steady_clock::now();
  try {
    run_identity(id, bounds, report);
  } catch (const std::exception& e) {
    report.status = Status::Error;
    report.error_message = e.what();
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<IdentityReport> verify_all(const Bounds& bounds, unsigned jobs) {
  const auto& ids = all_identities();
  std::vector<IdentityReport> reports(ids.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(ids.size()));

  if (jobs <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      reports[i] = verify_identity(ids[i], bounds);
    return reports;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= ids.size()) return;
        reports[i] = verify_identity(ids[i], bounds);
      }
    });
  }
  for (auto& t : workers) t.join();
  return reports;
}

bool all_expectations_met(const std::vector<IdentityReport>& reports) {
  if (reports.empty()) return false;
  for (const auto& rep : reports)
    if (!rep.as_expected()) return false;
  return true;
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json obj;
    obj["identity_id"] = to_string(rep.id);
    obj["params"] = rep.params;
    obj["status"] = rep.status == Status::Pass   ? "pass"
                    : rep.status == Status::Fail ? "fail"
                                                 : "error";
    if (rep.counterexample) {
      nlohmann::ordered_json ce;
      ce["params"] = rep.counterexample->params;
      ce["lhs"] = rep.counterexample->lhs;
      ce["rhs"] = rep.counterexample->rhs;
      obj["counterexample"] = ce;
    }
    if (rep.status == Status::Error) obj["error"] = rep.error_message;
    obj["elapsed_ms"] = rep.elapsed_ms;
    arr.push_back(obj);
  }
  return arr.dump(2);
}

} // namespace qbern::verify
