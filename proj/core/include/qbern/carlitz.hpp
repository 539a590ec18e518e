#ifndef QBERN_CARLITZ_HPP
#define QBERN_CARLITZ_HPP

#include <map>
#include <mutex>
#include <vector>

#include "qbern/ratfunc.hpp"

namespace qbern::carlitz {

/// The q-analogue [x]_q = (1 - Q)/(1 - q), with Q standing for q^x.
RatFunc bracket_x();

/// [n]_q = (1 - q^n)/(1 - q) for a concrete integer n >= 0.
RatFunc bracket_int(unsigned n);

/// Value of the basis integral of q^(j y): (j+1)/[j+1]_q.
RatFunc integral_monomial(unsigned j);

/// Memoized generators for the classical Carlitz q-Bernoulli families.
/// All construction paths are deterministic functions of the indices.
class BetaCache {
 public:
  /// beta_n as the solution of the umbral recurrence
  /// q (q beta + 1)^n - beta_n = [n == 1], beta_0 = 1.
  RatFunc number(unsigned n);

  /// beta_n(x) expanded over the numbers:
  /// sum_l C(n,l) beta_l Q^l [x]_q^(n-l).
  RatFunc poly(unsigned n);

  /// beta_n(x) in closed form:
  /// (1-q)^(-n) sum_j C(n,j) (-1)^j Q^j (j+1)/[j+1]_q.
  RatFunc poly_closed(unsigned n);

  /// beta_n(x) by basis expansion of [x+y]_q^n and termwise integration
  /// through integral_monomial.
  RatFunc via_integral(unsigned n);

  /// Order-r polynomial: the r-fold integral factors into
  /// (1-q)^(-n) sum_j C(n,j) (-1)^j Q^j ((j+1)/[j+1]_q)^r. r >= 1.
  RatFunc order_r(unsigned n, unsigned r);

 private:
  void fill_numbers(unsigned n);

  std::mutex mu_;
  std::vector<RatFunc> numbers_;
  std::vector<RatFunc> polys_;
  std::vector<RatFunc> closed_;
  std::vector<RatFunc> integral_;
  std::map<std::pair<unsigned, unsigned>, RatFunc> order_r_;
};

// Shared-cache entry points.
RatFunc beta_number(unsigned n);
RatFunc beta_poly(unsigned n);
RatFunc beta_poly_closed(unsigned n);
RatFunc beta_via_integral(unsigned n);
RatFunc beta_order_r(unsigned n, unsigned r);

} // namespace qbern::carlitz

#endif
