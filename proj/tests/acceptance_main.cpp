// Acceptance suite: every release criterion in one binary, one PASS/FAIL
// line per criterion. All symbolic checks are exact (zero tolerance); the
// p-adic checks compare valuations measured at fixed levels.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/io.hpp"
#include "qbern/padic.hpp"
#include "qbern/stirling.hpp"
#include "qbern/table.hpp"
#include "qbern/verify.hpp"

using namespace qbern;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& label, F&& body) {
  try {
    std::string detail;
    bool ok = body(detail);
    report(number, label, ok, detail);
  } catch (const std::exception& e) {
    report(number, label, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// classical Bernoulli oracle: sum_{k<=m} C(m+1,k) B_k = 0, B_0 = 1
std::vector<Rational> bernoulli_numbers(unsigned max_n) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= max_n; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return b;
}

} // namespace

int main() {
  criterion(1, "triple-construction agreement, n <= 10, < 5 s", [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (unsigned n = 0; n <= 10; ++n) {
      if (!(carlitz::beta_poly(n) == carlitz::beta_poly_closed(n))) {
        detail = "expansion vs closed form differs at n = " + std::to_string(n);
        return false;
      }
      if (!(carlitz::beta_via_integral(n) == carlitz::beta_poly_closed(n))) {
        detail = "integral construction differs at n = " + std::to_string(n);
        return false;
      }
    }
    double secs = seconds_since(start);
    detail = "elapsed " + std::to_string(secs) + " s";
    return secs < 5.0;
  });

  criterion(2, "umbral recurrence closure, n <= 12", [](std::string& detail) {
    for (unsigned n = 1; n <= 12; ++n) {
      RatFunc acc;
      for (unsigned k = 0; k <= n; ++k)
        acc += RatFunc(Rational(binomial(n, k))) *
               RatFunc(MultiPoly::variable(Var::q, k)) * carlitz::beta_number(k);
      RatFunc residual = RatFunc::variable(Var::q) * acc - carlitz::beta_number(n);
      if (!(residual == RatFunc(n == 1 ? 1 : 0))) {
        detail = "residual not delta at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(3, "classical limit q -> 1 gives B_n, n <= 12, exact", [](std::string& detail) {
    auto bernoulli = bernoulli_numbers(12);
    if (bernoulli[12] != rational_from_string("-691/2730")) {
      detail = "oracle disagrees with B_12 = -691/2730";
      return false;
    }
    for (unsigned n = 0; n <= 12; ++n) {
      if (!(limit_at(carlitz::beta_number(n), Var::q, Rational(1)) ==
            RatFunc(bernoulli[n]))) {
        detail = "limit differs from B_n at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(4, "degenerate cross-checks (Thm2 = Cor3 = Thm5; L -> 0)", [](std::string& detail) {
    for (unsigned n = 0; n <= 8; ++n) {
      RatFunc base = degenerate::dbeta(n);
      if (!(base == degenerate::dbeta_corollary3(n)) ||
          !(base == degenerate::dbeta_theorem5(n))) {
        detail = "construction mismatch at n = " + std::to_string(n);
        return false;
      }
    }
    for (unsigned n = 0; n <= 10; ++n) {
      if (!(limit_at(degenerate::dbeta(n), Var::L, Rational(0)) ==
            carlitz::beta_poly_closed(n))) {
        detail = "lambda -> 0 limit differs at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(5, "Stirling round trips (Thm4 n <= 10; Thm6/7 r <= 3, n <= 6; inversion n <= 14)",
            [](std::string& detail) {
    for (unsigned n = 0; n <= 14; ++n)
      for (unsigned m = 0; m <= n; ++m) {
        Int sum(0);
        for (unsigned k = 0; k <= n; ++k) sum += s1(n, k) * s2(k, m);
        if (sum != (n == m ? 1 : 0)) {
          detail = "s1/s2 inversion fails at (n, m) = (" + std::to_string(n) + ", " +
                   std::to_string(m) + ")";
          return false;
        }
      }
    for (unsigned n = 0; n <= 10; ++n) {
      RatFunc rec = degenerate::recover_beta(n);
      if (rec.num().uses(Var::L) || rec.den().uses(Var::L) ||
          !(rec == carlitz::beta_poly_closed(n))) {
        detail = "Theorem 4 recovery fails at n = " + std::to_string(n);
        return false;
      }
    }
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned n = 0; n <= 6; ++n) {
        RatFunc rec = degenerate::recover_beta_order_r(n, r);
        if (!(rec == carlitz::beta_order_r(n, r))) {
          detail = "Theorem 6/7 round trip fails at (n, r) = (" + std::to_string(n) +
                   ", " + std::to_string(r) + ")";
          return false;
        }
      }
    return true;
  });

  criterion(6, "distribution relation (Thm8), n <= 6, m in {1,2,3}, < 30 s",
            [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = 0; n <= 6; ++n)
        if (!(degenerate::multiplication_rhs(n, m) == degenerate::dbeta(n))) {
          detail = "fails at (n, m) = (" + std::to_string(n) + ", " + std::to_string(m) + ")";
          return false;
        }
    double secs = seconds_since(start);
    detail = "elapsed " + std::to_string(secs) + " s";
    return secs < 30.0;
  });

  criterion(7, "difference identity (Thm9): bound n holds, printed bound n-1 fails",
            [](std::string& detail) {
    for (unsigned n = 1; n <= 8; ++n) {
      auto [lhs, rhs] = degenerate::difference_sides(n);
      if (!(lhs == rhs)) {
        detail = "corrected bound fails at n = " + std::to_string(n);
        return false;
      }
    }
    auto [lhs, rhs] = degenerate::difference_sides_paper_variant(1);
    if (lhs == rhs) {
      detail = "printed bound unexpectedly holds at n = 1";
      return false;
    }
    if (!(lhs - rhs == RatFunc::variable(Var::Q))) {
      detail = "witness gap is not the dropped q^x term";
      return false;
    }
    return true;
  });

  criterion(8, "measure functional equation on basis, j <= 10", [](std::string& detail) {
    const RatFunc q_minus_one = RatFunc::variable(Var::q) - RatFunc(1);
    for (unsigned j = 0; j <= 10; ++j) {
      auto [lhs, rhs] = degenerate::eq23_basis_check(j);
      RatFunc expected = RatFunc(Rational(static_cast<long>(j) + 1)) * q_minus_one;
      if (!(lhs == expected) || !(rhs == expected)) {
        detail = "fails at j = " + std::to_string(j);
        return false;
      }
    }
    return true;
  });

  criterion(9, "p-adic convergence grid (n <= 3, lambda, x in {0,1}), < 10 s",
            [](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (unsigned n = 0; n <= 3; ++n) {
      for (long lam : {0l, 1l}) {
        for (unsigned x : {0u, 1u}) {
          padic::QConfig cfg; // p = 3, K = 15, q = 1 + p
          cfg.lambda = Rational(lam);
          cfg.x = x;
          auto levels = padic::check_theorem1(n, cfg, {2, 4, 6});
          auto cell = [&] {
            return "(n, lambda, x) = (" + std::to_string(n) + ", " + std::to_string(lam) +
                   ", " + std::to_string(x) + ")";
          };
          // exact entries are differences that vanish at working precision;
          // they satisfy any lower bound
          for (std::size_t i = 1; i < levels.size(); ++i) {
            if (!levels[i].exact && !levels[i - 1].exact &&
                levels[i].valuation < levels[i - 1].valuation) {
              detail = "valuations decrease at " + cell();
              return false;
            }
          }
          if (!levels[0].exact && n >= 1 && levels[0].valuation < 2) {
            detail = "N=2 valuation below the measured floor at " + cell();
            return false;
          }
          if (!levels[2].exact &&
              levels[2].valuation < levels[0].valuation + 2) {
            detail = "N=6 valuation below N=2 + 2 at " + cell();
            return false;
          }
        }
      }
    }
    double secs = seconds_since(start);
    detail = "elapsed " + std::to_string(secs) + " s";
    return secs < 10.0;
  });

  criterion(10, "determinism: byte-identical tables; full verify < 60 s",
            [](std::string& detail) {
    std::string first = table_to_json(build_table(Family::Degenerate, 6));
    std::string second = table_to_json(build_table(Family::Degenerate, 6));
    if (first != second) {
      detail = "table bytes differ between runs";
      return false;
    }
    auto start = std::chrono::steady_clock::now();
    auto reports = verify::verify_all();
    double secs = seconds_since(start);
    if (!verify::all_expectations_met(reports)) {
      detail = "verify_all expectations not met";
      return false;
    }
    if (reports.size() != 11) {
      detail = "expected 11 reports";
      return false;
    }
    detail = "verify_all elapsed " + std::to_string(secs) + " s";
    return secs < 60.0;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
