#include "qbern/padic.hpp"

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/errors.hpp"

namespace qbern::padic {

namespace {

Int pow_int(unsigned long base, unsigned exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Int mod_reduce(Int v, const Int& modulus) {
  Int r = v % modulus;
  if (r < 0) r += modulus;
  return r;
}

Int mod_inverse(const Int& v, const Int& modulus) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw DivisionByZero("value is not invertible modulo p^K");
  return r;
}

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

} // namespace

PadicInt::PadicInt(unsigned long p, unsigned K, Int value)
    : PadicInt(p, K, std::move(value), K) {}

PadicInt::PadicInt(unsigned long p, unsigned K, Int value, unsigned known_precision)
    : p_(p), K_(K), modulus_(pow_int(p, K)),
      residue_(mod_reduce(std::move(value), modulus_)),
      prec_(std::min(known_precision, K)) {
  if (K_ == 0) throw PrecisionError("precision K must be positive");
}

void PadicInt::check_compatible(const PadicInt& o) const {
  if (p_ != o.p_ || K_ != o.K_)
    throw Error("mismatched p-adic parameters");
}

unsigned PadicInt::valuation() const {
  Int masked = residue_ % pow_int(p_, prec_);
  if (masked == 0) return prec_;
  return static_cast<unsigned>(int_valuation(masked, p_));
}

bool PadicInt::is_zero_at_precision() const {
  return residue_ % pow_int(p_, prec_) == 0;
}

PadicInt PadicInt::operator-() const {
  return PadicInt(p_, K_, modulus_ - residue_, prec_);
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return PadicInt(a.p_, a.K_, a.residue_ + b.residue_, std::min(a.prec_, b.prec_));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return PadicInt(a.p_, a.K_, a.residue_ - b.residue_ + a.modulus_,
                  std::min(a.prec_, b.prec_));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return PadicInt(a.p_, a.K_, a.residue_ * b.residue_, std::min(a.prec_, b.prec_));
}

PadicInt operator/(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  if (b.is_zero_at_precision())
    throw DivisionByZero("divisor is indistinguishable from zero at current precision");
  unsigned vb = b.valuation();
  unsigned va = a.valuation();
  if (va < vb && !a.is_zero_at_precision())
    throw PrecisionError("quotient is not a p-adic integer");
  unsigned prec = std::min(a.prec_, b.prec_);
  if (prec <= vb) throw PrecisionError("division exhausts the known precision");
  Int pv = pow_int(a.p_, vb);
  Int unit = b.residue_ / pv;
  Int shifted = a.residue_ / pv; // exact when va >= vb
  Int inv = mod_inverse(unit, a.modulus_);
  return PadicInt(a.p_, a.K_, shifted * inv, prec - vb);
}

PadicInt PadicInt::pow(unsigned long e) const {
  Int r;
  mpz_powm_ui(r.get_mpz_t(), residue_.get_mpz_t(), e, modulus_.get_mpz_t());
  return PadicInt(p_, K_, std::move(r), prec_);
}

bool operator==(const PadicInt& a, const PadicInt& b) {
  if (a.p_ != b.p_ || a.K_ != b.K_) return false;
  unsigned prec = std::min(a.prec_, b.prec_);
  Int mask = pow_int(a.p_, prec);
  return (a.residue_ - b.residue_) % mask == 0;
}

void QConfig::validate() const {
  if (!is_odd_prime(p)) throw Error("p must be an odd prime");
  if (K == 0) throw PrecisionError("precision K must be positive");
  if ((q - 1) % static_cast<long>(p) != 0)
    throw Error("q must satisfy q = 1 (mod p)");
  if (lambda.get_den() % static_cast<long>(p) == 0)
    throw Error("lambda denominator must be a p-adic unit");
  if (x > 100000)
    throw Error("x exceeds the supported range (exact q^x evaluation)");
}

Int QConfig::modulus() const { return pow_int(p, K); }

namespace {

// residue of lambda = a/b with b a unit
Int lambda_residue(const QConfig& cfg) {
  Int mod = cfg.modulus();
  Int num = mod_reduce(cfg.lambda.get_num(), mod);
  if (cfg.lambda.get_den() == 1) return num;
  return mod_reduce(num * mod_inverse(cfg.lambda.get_den(), mod), mod);
}

struct QuotientSums {
  Int weighted; // sum f(y) q^y
  Int bracket;  // [points]_q
};

// one pass over y < points accumulating both sums modulo p^K
QuotientSums sum_over_points(const std::function<Int(unsigned long, const Int&)>& f,
                             const QConfig& cfg, unsigned long points) {
  Int mod = cfg.modulus();
  Int qr = mod_reduce(cfg.q, mod);
  QuotientSums out{Int(0), Int(0)};
  Int q_pow(1); // q^y
  for (unsigned long y = 0; y < points; ++y) {
    out.weighted = (out.weighted + f(y, q_pow) * q_pow) % mod;
    out.bracket = (out.bracket + q_pow) % mod;
    q_pow = q_pow * qr % mod;
  }
  return out;
}

// integrand [x+y]_(n,lambda) as residues, streamed over increasing y
class FallingIntegrand {
 public:
  FallingIntegrand(unsigned n, const QConfig& cfg)
      : n_(n), mod_(cfg.modulus()), qr_(mod_reduce(cfg.q, mod_)),
        lam_(lambda_residue(cfg)) {
    // [x]_q and q^x to start the incremental bracket at y = 0
    bracket_ = 0;
    q_pow_x_ = 1;
    for (unsigned t = 0; t < cfg.x; ++t) {
      bracket_ = (bracket_ + q_pow_x_) % mod_;
      q_pow_x_ = q_pow_x_ * qr_ % mod_;
    }
    next_y_ = 0;
  }

  // must be called with y = 0, 1, 2, ... in order
  Int operator()(unsigned long y) {
    if (y != next_y_) throw Error("integrand must be streamed in order");
    ++next_y_;
    Int value(1);
    Int factor = bracket_;
    for (unsigned i = 0; i < n_; ++i) {
      value = value * factor % mod_;
      factor = mod_reduce(factor - lam_, mod_);
    }
    // advance [x+y]_q -> [x+y+1]_q
    bracket_ = (bracket_ + q_pow_x_) % mod_;
    q_pow_x_ = q_pow_x_ * qr_ % mod_;
    return value;
  }

 private:
  unsigned n_;
  Int mod_, qr_, lam_;
  Int bracket_, q_pow_x_;
  unsigned long next_y_;
};

// exact rational target split into numerator/denominator residues plus the
// exact p-valuation of the denominator
struct ClearedTarget {
  Int num_residue;
  Int den_residue;
  unsigned long den_valuation;
};

ClearedTarget clear_target(const Rational& target, const QConfig& cfg) {
  Int mod = cfg.modulus();
  const Int& a = target.get_num();
  const Int& b = target.get_den();
  return {mod_reduce(a, mod), mod_reduce(b, mod),
          b == 0 ? 0 : int_valuation(b, cfg.p)};
}

LevelValuation level_from_difference(unsigned N, const Int& diff, const QConfig& cfg,
                                     long denominator_shift) {
  Int mod = cfg.modulus();
  Int d = mod_reduce(diff, mod);
  if (d == 0) return {N, static_cast<long>(cfg.K) - denominator_shift, true};
  long v = static_cast<long>(int_valuation(d, cfg.p));
  return {N, v - denominator_shift, false};
}

unsigned long checked_pow(unsigned long p, unsigned N) {
  unsigned long points = 1;
  for (unsigned i = 0; i < N; ++i) {
    if (points > (1ul << 40) / p) throw BudgetError("level p^N exceeds the point budget");
    points *= p;
  }
  return points;
}

} // namespace

Int bracket_level(const QConfig& cfg, unsigned long points) {
  auto sums = sum_over_points([](unsigned long, const Int&) { return Int(1); },
                              cfg, points);
  return sums.bracket;
}

PadicInt riemann_sum(const std::function<Int(unsigned long)>& f,
                     const QConfig& cfg, unsigned N) {
  cfg.validate();
  if (cfg.K <= N)
    throw PrecisionError("riemann_sum needs K > N");
  unsigned long points = checked_pow(cfg.p, N);
  auto sums = sum_over_points([&](unsigned long y, const Int&) { return f(y); },
                              cfg, points);
  PadicInt numerator(cfg.p, cfg.K, sums.weighted);
  PadicInt denominator(cfg.p, cfg.K, sums.bracket);
  return numerator / denominator;
}

std::vector<LevelValuation> monomial_integral_check(unsigned j, const QConfig& cfg,
                                                    const std::vector<unsigned>& levels) {
  cfg.validate();
  Int mod = cfg.modulus();
  // exact target (j+1)/[j+1]_q at the exact rational q
  Rational qr(cfg.q);
  Rational bracket(0);
  Rational qp(1);
  for (unsigned t = 0; t <= j; ++t) {
    bracket += qp;
    qp *= qr;
  }
  Rational target = Rational(static_cast<long>(j) + 1) / bracket;
  ClearedTarget ct = clear_target(target, cfg);

  Int q_to_j(1);
  {
    Int qq = mod_reduce(cfg.q, mod);
    for (unsigned t = 0; t < j; ++t) q_to_j = q_to_j * qq % mod;
  }

  std::vector<LevelValuation> out;
  for (unsigned N : levels) {
    if (cfg.K <= N) throw PrecisionError("monomial_integral_check needs K > N");
    unsigned long points = checked_pow(cfg.p, N);
    Int f_val(1); // q^(j y), streamed
    auto sums = sum_over_points(
        [&](unsigned long, const Int&) {
          Int value = f_val;
          f_val = f_val * q_to_j % mod;
          return value;
        },
        cfg, points);
    Int diff = sums.weighted * ct.den_residue - ct.num_residue * sums.bracket;
    long shift = static_cast<long>(N) + static_cast<long>(ct.den_valuation);
    out.push_back(level_from_difference(N, diff, cfg, shift));
  }
  return out;
}

std::vector<LevelValuation> check_theorem1(unsigned n, const QConfig& cfg,
                                           const std::vector<unsigned>& levels) {
  cfg.validate();
  Rational qx = Rational(cfg.q);
  Rational Qv(1);
  for (unsigned t = 0; t < cfg.x; ++t) Qv *= qx;
  Rational target = degenerate::dbeta(n).eval(qx, cfg.lambda, Qv);
  ClearedTarget ct = clear_target(target, cfg);

  std::vector<LevelValuation> out;
  for (unsigned N : levels) {
    if (cfg.K <= N) throw PrecisionError("check_theorem1 needs K > N");
    unsigned long points = checked_pow(cfg.p, N);
    FallingIntegrand integrand(n, cfg);
    auto sums = sum_over_points(
        [&](unsigned long y, const Int&) { return integrand(y); }, cfg, points);
    Int diff = sums.weighted * ct.den_residue - ct.num_residue * sums.bracket;
    long shift = static_cast<long>(N) + static_cast<long>(ct.den_valuation);
    out.push_back(level_from_difference(N, diff, cfg, shift));
  }
  return out;
}

LevelValuation check_order_r(unsigned n, unsigned r, const QConfig& cfg, unsigned N) {
  cfg.validate();
  if (r == 0) throw Error("order r must be >= 1");
  if (cfg.K <= r * N) throw PrecisionError("check_order_r needs K > r*N");
  unsigned long points = checked_pow(cfg.p, N);
  if (r > 1 && points > (1ul << 20)) throw BudgetError("r-fold sum exceeds the point budget");
  Int mod = cfg.modulus();
  Int qr = mod_reduce(cfg.q, mod);

  // counts of s = y_1 + ... + y_r with each y_i < p^N, reduced mod p^K
  std::vector<Int> counts{Int(1)};
  for (unsigned fold = 0; fold < r; ++fold) {
    std::vector<Int> next(counts.size() + points - 1, Int(0));
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] == 0) continue;
      for (unsigned long y = 0; y < points; ++y)
        next[s + y] = (next[s + y] + counts[s]) % mod;
    }
    counts = std::move(next);
  }

  // S = sum_s counts(s) [s+x]_q^n q^s, and P = [p^N]_q
  Int S(0);
  Int bracket(0), q_pow(1);
  for (unsigned t = 0; t < cfg.x; ++t) {
    bracket = (bracket + q_pow) % mod;
    q_pow = q_pow * qr % mod;
  }
  Int q_to_s(1);
  Int q_to_sx = q_pow; // q^(s+x)
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] != 0) {
      Int power(1);
      for (unsigned i = 0; i < n; ++i) power = power * bracket % mod;
      S = (S + counts[s] * power % mod * q_to_s) % mod;
    }
    bracket = (bracket + q_to_sx) % mod;
    q_to_sx = q_to_sx * qr % mod;
    q_to_s = q_to_s * qr % mod;
  }
  Int P = bracket_level(cfg, points);
  Int Pr(1);
  for (unsigned i = 0; i < r; ++i) Pr = Pr * P % mod;

  Rational qx(cfg.q);
  Rational Qv(1);
  for (unsigned t = 0; t < cfg.x; ++t) Qv *= qx;
  Rational target = carlitz::beta_order_r(n, r).eval(qx, Rational(0), Qv);
  ClearedTarget ct = clear_target(target, cfg);

  Int diff = S * ct.den_residue - ct.num_residue * Pr;
  long shift = static_cast<long>(r) * N + static_cast<long>(ct.den_valuation);
  return level_from_difference(N, diff, cfg, shift);
}

LevelValuation distribution_check(unsigned n, unsigned d, const QConfig& cfg, unsigned N) {
  cfg.validate();
  if (d == 0) throw Error("d must be >= 1");
  unsigned long points = checked_pow(cfg.p, N);
  FallingIntegrand f1(n, cfg);
  auto sums1 = sum_over_points([&](unsigned long y, const Int&) { return f1(y); },
                               cfg, points);
  FallingIntegrand f2(n, cfg);
  auto sums2 = sum_over_points([&](unsigned long y, const Int&) { return f2(y); },
                               cfg, points * d);
  Int diff = sums1.weighted * sums2.bracket - sums2.weighted * sums1.bracket;
  long v1 = static_cast<long>(int_valuation(sums1.bracket, cfg.p));
  long v2 = static_cast<long>(int_valuation(sums2.bracket, cfg.p));
  return level_from_difference(N, diff, cfg, v1 + v2);
}

} // namespace qbern::padic
