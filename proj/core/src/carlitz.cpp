#include "qbern/carlitz.hpp"

#include <stdexcept>

namespace qbern::carlitz {

namespace {

const RatFunc& var_q() {
  static const RatFunc v = RatFunc::variable(Var::q);
  return v;
}

RatFunc q_power(unsigned e) {
  return RatFunc(MultiPoly::variable(Var::q, e));
}

RatFunc Q_power(unsigned e) {
  return RatFunc(MultiPoly::variable(Var::Q, e));
}

} // namespace

RatFunc bracket_x() {
  // (1 - Q)/(1 - q)
  MultiPoly num = MultiPoly::one() - MultiPoly::variable(Var::Q);
  MultiPoly den = MultiPoly::one() - MultiPoly::variable(Var::q);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc bracket_int(unsigned n) {
  if (n == 0) return RatFunc();
  MultiPoly num = MultiPoly::one() - MultiPoly::variable(Var::q, n);
  MultiPoly den = MultiPoly::one() - MultiPoly::variable(Var::q);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc integral_monomial(unsigned j) {
  return RatFunc(Rational(static_cast<long>(j) + 1)) / bracket_int(j + 1);
}

void BetaCache::fill_numbers(unsigned n) {
  if (numbers_.empty()) numbers_.push_back(RatFunc(1));
  for (unsigned m = static_cast<unsigned>(numbers_.size()); m <= n; ++m) {
    // beta_m = ([m == 1] - q sum_{k<m} C(m,k) q^k beta_k) / (q^(m+1) - 1)
    RatFunc acc;
    for (unsigned k = 0; k < m; ++k)
      acc += RatFunc(Rational(binomial(m, k))) * q_power(k) * numbers_[k];
    RatFunc num = RatFunc(m == 1 ? 1 : 0) - var_q() * acc;
    MultiPoly den = MultiPoly::variable(Var::q, m + 1) - MultiPoly::one();
    numbers_.push_back(num / RatFunc(den));
  }
}

RatFunc BetaCache::number(unsigned n) {
  std::scoped_lock lock(mu_);
  fill_numbers(n);
  return numbers_[n];
}

RatFunc BetaCache::poly(unsigned n) {
  std::scoped_lock lock(mu_);
  fill_numbers(n);
  for (unsigned m = static_cast<unsigned>(polys_.size()); m <= n; ++m) {
    const RatFunc x = bracket_x();
    RatFunc acc;
    for (unsigned l = 0; l <= m; ++l)
      acc += RatFunc(Rational(binomial(m, l))) * numbers_[l] * Q_power(l) *
             pow(x, m - l);
    polys_.push_back(std::move(acc));
  }
  return polys_[n];
}

RatFunc BetaCache::poly_closed(unsigned n) {
  std::scoped_lock lock(mu_);
  for (unsigned m = static_cast<unsigned>(closed_.size()); m <= n; ++m) {
    RatFunc acc;
    for (unsigned j = 0; j <= m; ++j) {
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      acc += RatFunc(sign * Rational(binomial(m, j))) * Q_power(j) *
             RatFunc(Rational(static_cast<long>(j) + 1)) / bracket_int(j + 1);
    }
    RatFunc one_minus_q(MultiPoly::one() - MultiPoly::variable(Var::q));
    closed_.push_back(acc / pow(one_minus_q, m));
  }
  return closed_[n];
}

RatFunc BetaCache::via_integral(unsigned n) {
  std::scoped_lock lock(mu_);
  for (unsigned m = static_cast<unsigned>(integral_.size()); m <= n; ++m) {
    RatFunc acc;
    for (unsigned j = 0; j <= m; ++j) {
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      acc += RatFunc(sign * Rational(binomial(m, j))) * Q_power(j) *
             integral_monomial(j);
    }
    RatFunc one_minus_q(MultiPoly::one() - MultiPoly::variable(Var::q));
    integral_.push_back(acc / pow(one_minus_q, m));
  }
  return integral_[n];
}

RatFunc BetaCache::order_r(unsigned n, unsigned r) {
  if (r == 0) throw std::invalid_argument("order r must be >= 1");
  std::scoped_lock lock(mu_);
  auto key = std::make_pair(n, r);
  if (auto it = order_r_.find(key); it != order_r_.end()) return it->second;
  RatFunc acc;
  for (unsigned j = 0; j <= n; ++j) {
    Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    acc += RatFunc(sign * Rational(binomial(n, j))) * Q_power(j) *
           pow(integral_monomial(j), r);
  }
  RatFunc one_minus_q(MultiPoly::one() - MultiPoly::variable(Var::q));
  RatFunc value = acc / pow(one_minus_q, n);
  order_r_.emplace(key, value);
  return value;
}

namespace {
BetaCache& shared_cache() {
  static BetaCache cache;
  return cache;
}
} // namespace

RatFunc beta_number(unsigned n) { return shared_cache().number(n); }
RatFunc beta_poly(unsigned n) { return shared_cache().poly(n); }
RatFunc beta_poly_closed(unsigned n) { return shared_cache().poly_closed(n); }
RatFunc beta_via_integral(unsigned n) { return shared_cache().via_integral(n); }
RatFunc beta_order_r(unsigned n, unsigned r) { return shared_cache().order_r(n, r); }

} // namespace qbern::carlitz
