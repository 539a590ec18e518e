#include <doctest.h>

#include <vector>

#include "qbern/carlitz.hpp"
#include "qbern/errors.hpp"
#include "test_support.hpp"

using namespace qbern;
using namespace qbern::carlitz;
using qtest::RF;

namespace {

// oracle: ordinary Bernoulli numbers from the classical recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0 (m >= 1), B_0 = 1
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

TEST_CASE("beta numbers solve the umbral recurrence") {
  CHECK(beta_number(0) == RatFunc(1));
  CHECK(beta_number(1) == RF("-1/(1 + q)"));
  CHECK(beta_number(2) == RF("q/((1 + q)*(1 + q + q^2))"));

  // closure: q sum_k C(n,k) q^k beta_k - beta_n = [n == 1] for 1 <= n <= 12
  // (the recurrence constrains n >= 1; beta_0 = 1 is the seed)
  for (unsigned n = 1; n <= 12; ++n) {
    RatFunc acc;
    for (unsigned k = 0; k <= n; ++k)
      acc += RatFunc(Rational(binomial(n, k))) *
             RatFunc(MultiPoly::variable(Var::q, k)) * beta_number(k);
    RatFunc residual = RF("q") * acc - beta_number(n);
    CHECK(residual == RatFunc(n == 1 ? 1 : 0));
  }
}

TEST_CASE("classical limit q -> 1 recovers the Bernoulli numbers") {
  auto bernoulli = bernoulli_numbers(12);
  CHECK(bernoulli[12] == rational_from_string("-691/2730"));
  for (unsigned n = 0; n <= 12; ++n) {
    RatFunc lim = limit_at(beta_number(n), Var::q, Rational(1));
    CHECK(lim == RatFunc(bernoulli[n]));
  }
}

TEST_CASE("polynomial expansion over the numbers") {
  CHECK(beta_poly(0) == RatFunc(1));
  CHECK(beta_poly(1) == RF("(1 - Q)/(1 - q) - Q/(1 + q)"));
  // x = 0 forces [x]_q = 0 and q^(lx) = 1
  for (unsigned n = 0; n <= 12; ++n)
    CHECK(substitute(beta_poly(n), Var::Q, RatFunc(1)) == beta_number(n));
}

TEST_CASE("closed form") {
  CHECK(beta_poly_closed(0) == RatFunc(1));
  CHECK(beta_poly_closed(1) == RF("(1/(1 - q)) * (1 - 2*Q/(1 + q))"));
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(beta_poly_closed(n) == beta_poly(n));
}

TEST_CASE("basis integrals") {
  CHECK(integral_monomial(0) == RatFunc(1));
  CHECK(integral_monomial(1) == RF("2/(1 + q)"));
  CHECK(integral_monomial(2) == RF("3/(1 + q + q^2)"));
}

TEST_CASE("integral construction agrees with the closed form") {
  CHECK(beta_via_integral(0) == RatFunc(1));
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(beta_via_integral(n) == beta_poly_closed(n));
  CHECK(substitute(beta_via_integral(1), Var::Q, RatFunc(1)) == RF("-1/(1 + q)"));
}

TEST_CASE("order-r polynomials") {
  for (unsigned r = 1; r <= 4; ++r) CHECK(beta_order_r(0, r) == RatFunc(1));
  for (unsigned n = 0; n <= 8; ++n) CHECK(beta_order_r(n, 1) == beta_poly_closed(n));
  CHECK(beta_order_r(1, 2) == RF("(1/(1 - q)) * (1 - Q*(2/(1 + q))^2)"));
  CHECK_THROWS_AS(beta_order_r(3, 0), std::invalid_argument);
}

TEST_CASE("poles of the beta numbers at q = 1 are removable") {
  for (unsigned n = 0; n <= 12; ++n)
    CHECK_NOTHROW(limit_at(beta_number(n), Var::q, Rational(1)));
}

TEST_CASE("bracket helpers") {
  CHECK(bracket_int(0) == RatFunc());
  CHECK(bracket_int(1) == RatFunc(1));
  CHECK(bracket_int(3) == RF("1 + q + q^2"));
  CHECK(bracket_x() == RF("(1 - Q)/(1 - q)"));
  CHECK(substitute(bracket_x(), Var::Q, RF("q^3")) == bracket_int(3));
}
