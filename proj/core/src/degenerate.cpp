#include "qbern/degenerate.hpp"

#include <stdexcept>
#include <vector>

#include "qbern/carlitz.hpp"
#include "qbern/stirling.hpp"

namespace qbern::degenerate {

namespace {

RatFunc L_power(unsigned e) {
  return RatFunc(MultiPoly::variable(Var::L, e));
}

RatFunc Q_power(unsigned e) {
  return RatFunc(MultiPoly::variable(Var::Q, e));
}

RatFunc q_power(unsigned e) {
  return RatFunc(MultiPoly::variable(Var::q, e));
}

RatFunc one_minus_q() {
  return RatFunc(MultiPoly::one() - MultiPoly::variable(Var::q));
}

// sum_m s1_or_s2(n,m) L^(n-m) values[m]
RatFunc stirling_transform(unsigned n, std::span<const RatFunc> values, bool first_kind) {
  RatFunc acc;
  for (unsigned m = 0; m <= n; ++m) {
    Int c = first_kind ? s1(n, m) : s2(n, m);
    if (c == 0 || values[m].is_zero()) continue;
    acc += RatFunc(Rational(c)) * L_power(n - m) * values[m];
  }
  return acc;
}

} // namespace

RatFunc dbeta(unsigned n) {
  std::vector<RatFunc> base;
  base.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) base.push_back(carlitz::beta_poly_closed(l));
  return stirling_transform(n, base, /*first_kind=*/true);
}

DegenerateBeta make_degenerate(unsigned n, unsigned r) {
  if (r == 0) throw std::invalid_argument("order r must be >= 1");
  return {n, r, r == 1 ? dbeta(n) : dbeta_order_r(n, r)};
}

RatFunc dbeta_corollary3(unsigned n) {
  RatFunc acc;
  for (unsigned l = 0; l <= n; ++l) {
    Int c = s1(n, l);
    if (c == 0) continue;
    RatFunc inner;
    for (unsigned j = 0; j <= l; ++j) {
      Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
      inner += RatFunc(sign * Rational(binomial(l, j))) * Q_power(j) *
               RatFunc(Rational(static_cast<long>(j) + 1)) / carlitz::bracket_int(j + 1);
    }
    acc += RatFunc(Rational(c)) / pow(one_minus_q(), l) * inner * L_power(n - l);
  }
  return acc;
}

RatFunc dbeta_theorem5(unsigned n) {
  const RatFunc x = carlitz::bracket_x();
  const RatFunc step = RatFunc::variable(Var::L);
  RatFunc acc;
  for (unsigned k = 0; k <= n; ++k) {
    RatFunc outer = RatFunc(Rational(binomial(n, k))) * falling_step(x, n - k, step);
    RatFunc inner;
    for (unsigned l = 0; l <= k; ++l) {
      Int c = s1(k, l);
      if (c == 0) continue;
      inner += L_power(k - l) * Q_power(l) * RatFunc(Rational(c)) *
               carlitz::beta_number(l);
    }
    acc += outer * inner;
  }
  return acc;
}

RatFunc dbeta_via_integral(unsigned n) {
  std::vector<RatFunc> base;
  base.reserve(n + 1);
  for (unsigned l = 0; l <= n; ++l) base.push_back(carlitz::beta_via_integral(l));
  return stirling_transform(n, base, /*first_kind=*/true);
}

RatFunc recover_beta(unsigned n, std::span<const RatFunc> source) {
  return stirling_transform(n, source, /*first_kind=*/false);
}

RatFunc recover_beta(unsigned n) {
  std::vector<RatFunc> source;
  source.reserve(n + 1);
  for (unsigned m = 0; m <= n; ++m) source.push_back(dbeta(m));
  return recover_beta(n, source);
}

RatFunc dbeta_order_r(unsigned n, unsigned r) {
  if (r == 0) throw std::invalid_argument("order r must be >= 1");
  std::vector<RatFunc> base;
  base.reserve(n + 1);
  for (unsigned m = 0; m <= n; ++m) base.push_back(carlitz::beta_order_r(m, r));
  return stirling_transform(n, base, /*first_kind=*/true);
}

RatFunc recover_beta_order_r(unsigned n, unsigned r) {
  if (r == 0) throw std::invalid_argument("order r must be >= 1");
  std::vector<RatFunc> source;
  source.reserve(n + 1);
  for (unsigned m = 0; m <= n; ++m) source.push_back(dbeta_order_r(m, r));
  return stirling_transform(n, source, /*first_kind=*/false);
}

RatFunc multiplication_rhs(unsigned n, unsigned m) {
  if (m == 0) throw std::invalid_argument("modulus m must be >= 1");
  const RatFunc bracket_m = carlitz::bracket_int(m);
  RatFunc acc;
  for (unsigned l = 0; l <= n; ++l) {
    Int c = s1(n, l);
    if (c == 0) continue;
    // [m]_q^(l-1); at l = 0 this is the reciprocal 1/[m]_q
    RatFunc weight = (l == 0) ? RatFunc(1) / bracket_m : pow(bracket_m, l - 1);
    // beta_(l, q^m)((x+i)/m): base change q -> q^m, then Q -> q^i Q
    RatFunc shifted_base = substitute(carlitz::beta_poly_closed(l), Var::q,
                                      q_power(m));
    for (unsigned i = 0; i < m; ++i) {
      RatFunc value = substitute(shifted_base, Var::Q, q_power(i) * RatFunc::variable(Var::Q));
      acc += RatFunc(Rational(c)) * L_power(n - l) * weight * q_power(i) * value;
    }
  }
  return acc;
}

namespace {

std::pair<RatFunc, RatFunc> difference_sides_impl(unsigned n, unsigned upper) {
  if (n == 0) throw std::invalid_argument("difference identity needs n >= 1");
  const RatFunc x = carlitz::bracket_x();
  const RatFunc q = RatFunc::variable(Var::q);

  RatFunc base = dbeta(n);
  RatFunc shifted = substitute(base, Var::Q, q * RatFunc::variable(Var::Q));
  RatFunc lhs = q * shifted - base;

  RatFunc rhs = (q - RatFunc(1)) * falling_step(x, n, RatFunc::variable(Var::L));
  for (unsigned l = 1; l <= upper; ++l) {
    Int c = s1(n, l);
    if (c == 0) continue;
    rhs += RatFunc(Rational(c)) * L_power(n - l) * RatFunc(Rational(static_cast<long>(l))) *
           pow(x, l - 1) * RatFunc::variable(Var::Q);
  }
  return {lhs, rhs};
}

} // namespace

std::pair<RatFunc, RatFunc> difference_sides(unsigned n) {
  return difference_sides_impl(n, n);
}

std::pair<RatFunc, RatFunc> difference_sides_paper_variant(unsigned n) {
  return difference_sides_impl(n, n - 1);
}

std::pair<RatFunc, RatFunc> eq23_basis_check(unsigned j) {
  RatFunc integral = carlitz::integral_monomial(j);
  RatFunc lhs = q_power(j + 1) * integral - integral;
  RatFunc q_minus_one = RatFunc::variable(Var::q) - RatFunc(1);
  RatFunc rhs = q_minus_one + q_minus_one * RatFunc(Rational(static_cast<long>(j)));
  return {lhs, rhs};
}

} // namespace qbern::degenerate
