// qbern - exact Carlitz q-Bernoulli families, identity verification, and
// p-adic convergence checks from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/errors.hpp"
#include "qbern/io.hpp"
#include "qbern/padic.hpp"
#include "qbern/table.hpp"
#include "qbern/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : qbern::Error {
  using qbern::Error::Error;
};

struct GlobalOpts {
  std::string format = "plain";
  std::string out;
  unsigned jobs = 0;
};

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output path: " + g.out);
  f << text;
  if (!f) throw UsageError("cannot write output path: " + g.out);
}

std::string render(const qbern::RatFunc& f, const std::string& format) {
  if (format == "plain") return qbern::to_text(f);
  if (format == "json") return qbern::to_json(f);
  if (format == "latex") return qbern::to_latex(f);
  throw UsageError("unknown format: " + format);
}

// "--at q=1,L=0": parse into per-variable rational assignments
struct EvalPoint {
  std::optional<qbern::Rational> at[3];

  void parse(const std::vector<std::string>& specs) {
    for (const auto& chunk : specs) {
      std::size_t start = 0;
      while (start <= chunk.size()) {
        std::size_t comma = chunk.find(',', start);
        std::string item = chunk.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!item.empty()) parse_one(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }

  void parse_one(const std::string& item) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("bad --at assignment (want var=value): " + item);
    std::string var = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    int idx;
    if (var == "q") idx = 0;
    else if (var == "L") idx = 1;
    else if (var == "Q") idx = 2;
    else throw UsageError("unknown variable in --at: " + var);
    try {
      at[idx] = qbern::rational_from_string(value);
    } catch (const qbern::Error&) {
      throw UsageError("bad rational in --at: " + value);
    }
  }

  bool empty() const { return !at[0] && !at[1] && !at[2]; }

  // assignments are applied as limits in the fixed order q, L, Q
  qbern::RatFunc apply(qbern::RatFunc f) const {
    const qbern::Var order[3] = {qbern::Var::q, qbern::Var::L, qbern::Var::Q};
    for (qbern::Var v : order) {
      const auto& val = at[static_cast<int>(v)];
      if (val) f = qbern::limit_at(f, v, *val);
    }
    return f;
  }
};

struct ComputeArgs {
  std::string family;
  unsigned n = 0;
  unsigned r = 0; // 0 = not given
  std::vector<std::string> at;
};

qbern::RatFunc compute_value(const ComputeArgs& args) {
  auto family = qbern::family_from_string(args.family);
  if (!family) throw UsageError("unknown family: " + args.family);
  if (qbern::family_needs_r(*family) && args.r == 0)
    throw UsageError(args.family + " needs --r >= 1");
  return qbern::family_value(*family, args.n, args.r == 0 ? 1 : args.r);
}

int run_compute(const GlobalOpts& g, const ComputeArgs& args, bool limit_mode) {
  qbern::RatFunc value = compute_value(args);
  EvalPoint point;
  point.parse(args.at);
  if (limit_mode && point.empty()) {
    // default limits: q -> 1 for the classical families, L -> 0 for the
    // degenerate ones
    auto family = *qbern::family_from_string(args.family);
    if (family == qbern::Family::Degenerate || family == qbern::Family::DegenerateOrderR)
      point.at[1] = qbern::Rational(0);
    else
      point.at[0] = qbern::Rational(1);
  }
  value = point.apply(value);
  write_output(g, render(value, g.format));
  return kExitOk;
}

unsigned long env_term_budget() {
  if (const char* env = std::getenv("QBERN_BUDGET_TERMS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 0;
}

struct VerifyArgs {
  std::string identity = "all";
  std::optional<unsigned> max_n, max_m, max_r, max_j;
};

int run_verify(const GlobalOpts& g, const VerifyArgs& args) {
  qbern::verify::Bounds bounds;
  bounds.max_n = args.max_n;
  bounds.max_m = args.max_m;
  bounds.max_r = args.max_r;
  bounds.max_j = args.max_j;
  if (unsigned long b = env_term_budget(); b > 0) bounds.term_budget = b;

  std::vector<qbern::verify::IdentityReport> reports;
  if (args.identity == "all") {
    reports = qbern::verify::verify_all(bounds, g.jobs);
  } else {
    auto id = qbern::verify::identity_from_string(args.identity);
    if (!id) throw UsageError("unknown identity: " + args.identity);
    reports.push_back(qbern::verify::verify_identity(*id, bounds));
  }
  write_output(g, qbern::verify::reports_to_json(reports));

  for (const auto& rep : reports)
    if (rep.status == qbern::verify::Status::Error) return kExitResource;
  return qbern::verify::all_expectations_met(reports) ? kExitOk : kExitVerifyFailed;
}

struct TableArgs {
  std::string family;
  long max_n = -1;
  unsigned r = 0;
};

int run_table(const GlobalOpts& g, const TableArgs& args) {
  if (args.max_n < 0) throw UsageError("--max-n must be >= 0");
  auto family = qbern::family_from_string(args.family);
  if (!family) throw UsageError("unknown family: " + args.family);
  std::optional<unsigned> r;
  if (args.r > 0) r = args.r;
  if (qbern::family_needs_r(*family) && !r)
    throw UsageError(args.family + " needs --r >= 1");
  auto entries = qbern::build_table(*family, static_cast<unsigned>(args.max_n), r);
  write_output(g, qbern::table_to_json(entries));
  return kExitOk;
}

struct PadicArgs {
  unsigned long p = 3;
  unsigned precision = 15;
  std::vector<unsigned> levels = {2, 4, 6};
  unsigned n = 0;
  unsigned r = 1;
  std::string lambda = "0";
  unsigned x = 0;
};

int run_padic(const GlobalOpts& g, const PadicArgs& args) {
  qbern::padic::QConfig cfg;
  cfg.p = args.p;
  cfg.K = args.precision;
  cfg.q = qbern::Int(args.p) + 1;
  cfg.x = args.x;
  try {
    cfg.lambda = qbern::rational_from_string(args.lambda);
  } catch (const qbern::Error&) {
    throw UsageError("bad rational for --lambda: " + args.lambda);
  }
  try {
    cfg.validate();
  } catch (const qbern::PrecisionError&) {
    throw;
  } catch (const qbern::Error& e) {
    throw UsageError(e.what());
  }
  if (args.r == 0) throw UsageError("--r must be >= 1");

  std::vector<qbern::padic::LevelValuation> levels;
  if (args.r == 1) {
    levels = qbern::padic::check_theorem1(args.n, cfg, args.levels);
  } else {
    for (unsigned N : args.levels)
      levels.push_back(qbern::padic::check_order_r(args.n, args.r, cfg, N));
  }

  nlohmann::ordered_json obj;
  obj["n"] = args.n;
  obj["r"] = args.r;
  obj["p"] = args.p;
  obj["K"] = args.precision;
  obj["lambda"] = qbern::rational_to_string(cfg.lambda);
  obj["x"] = args.x;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& lv : levels) {
    nlohmann::ordered_json entry;
    entry["N"] = lv.N;
    entry["valuation"] = lv.valuation;
    entry["exact"] = lv.exact;
    arr.push_back(entry);
  }
  obj["levels"] = arr;
  write_output(g, obj.dump(2));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Carlitz q-Bernoulli families: computation, identity "
               "verification, tables and p-adic convergence checks"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--jobs", g.jobs, "Verifier parallelism (0 = hardware)");

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Compute one family member");
  compute->add_option("--family", compute_args.family, "Family name")->required();
  compute->add_option("--n", compute_args.n, "Index n >= 0")->required();
  compute->add_option("--r", compute_args.r, "Order r >= 1 (order-r families)");
  compute->add_option("--at", compute_args.at,
                      "Evaluate/limit at var=value (vars q, L, Q; rationals like 2/3)");

  ComputeArgs limit_args;
  auto* limit = app.add_subcommand(
      "limit", "compute with --at defaulting to q=1 (classical) or L=0 (degenerate)");
  limit->add_option("--family", limit_args.family, "Family name")->required();
  limit->add_option("--n", limit_args.n, "Index n >= 0")->required();
  limit->add_option("--r", limit_args.r, "Order r >= 1 (order-r families)");
  limit->add_option("--at", limit_args.at, "Override the default limit point");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--identity", verify_args.identity,
                     "Identity id (T1, T2, COR3, T4..T9, T9-paper-variant, EQ23) or 'all'")
      ->capture_default_str();
  verify->add_option("--max-n", verify_args.max_n, "Upper index bound");
  verify->add_option("--max-m,--m", verify_args.max_m, "Upper modulus bound (T8)");
  verify->add_option("--max-r", verify_args.max_r, "Upper order bound (T6/T7)");
  verify->add_option("--max-j", verify_args.max_j, "Upper basis bound (EQ23)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Emit a JSON table of family values");
  table->add_option("--family", table_args.family, "Family name")->required();
  table->add_option("--max-n", table_args.max_n, "Largest index n")->required();
  table->add_option("--r", table_args.r, "Order r >= 1 (order-r families)");

  PadicArgs padic_args;
  auto* padic = app.add_subcommand("padic", "p-adic Riemann-sum convergence report");
  padic->add_option("--p", padic_args.p, "Odd prime")->capture_default_str();
  padic->add_option("--precision", padic_args.precision, "Working digits K")
      ->capture_default_str();
  padic->add_option("--levels", padic_args.levels, "Levels N (sum over p^N points)")
      ->delimiter(',')
      ->capture_default_str();
  padic->add_option("--n", padic_args.n, "Index n >= 0")->required();
  padic->add_option("--r", padic_args.r, "Order r (r > 1 checks the r-fold sum)")
      ->capture_default_str();
  padic->add_option("--lambda", padic_args.lambda, "Rational lambda (r = 1 only)")
      ->capture_default_str();
  padic->add_option("--x", padic_args.x, "Integer x >= 0")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(g, compute_args, /*limit_mode=*/false);
    if (*limit) return run_compute(g, limit_args, /*limit_mode=*/true);
    if (*verify) return run_verify(g, verify_args);
    if (*table) return run_table(g, table_args);
    if (*padic) return run_padic(g, padic_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qbern::PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qbern::PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qbern::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qbern::DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qbern::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}
