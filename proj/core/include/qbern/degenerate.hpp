#ifndef QBERN_DEGENERATE_HPP
#define QBERN_DEGENERATE_HPP

#include <span>
#include <utility>

#include "qbern/ratfunc.hpp"

namespace qbern::degenerate {

/// One member of the degenerate family, tagged with its indices.
/// Setting L = 0 in `value` gives the non-degenerate counterpart of the
/// same (n, r); setting Q = 1 gives the degenerate number (x = 0).
struct DegenerateBeta {
  unsigned n = 0;
  unsigned r = 1;
  RatFunc value;
};

DegenerateBeta make_degenerate(unsigned n, unsigned r = 1);

/// Degenerate polynomial beta_n(x|lambda) via the Stirling-1 transform of
/// the closed-form classical polynomials:
/// sum_l s1(n,l) L^(n-l) beta_l(x).
RatFunc dbeta(unsigned n);

/// The same object as one fully expanded double sum:
/// sum_l sum_j s1(n,l)/(1-q)^l C(l,j) (-1)^j Q^j (j+1)/[j+1]_q L^(n-l).
RatFunc dbeta_corollary3(unsigned n);

/// Alternative expansion over the beta numbers:
/// sum_k sum_l C(n,k) [x]_(n-k,L) L^(k-l) Q^l s1(k,l) beta_l.
RatFunc dbeta_theorem5(unsigned n);

/// Stirling-1 transform of the integral-constructed classical polynomials;
/// the symbolic content of the integral representation of dbeta.
RatFunc dbeta_via_integral(unsigned n);

/// Inverse transform: sum_m source[m] L^(n-m) s2(n,m). With source[m] =
/// dbeta(m) the result is L-free and equals beta_poly_closed(n).
RatFunc recover_beta(unsigned n, std::span<const RatFunc> source);
RatFunc recover_beta(unsigned n);

/// Degenerate order-r polynomial: sum_m L^(n-m) beta_order_r(m, r) s1(n,m).
/// r >= 1.
RatFunc dbeta_order_r(unsigned n, unsigned r);

/// Inverse of the order-r transform: sum_m L^(n-m) s2(n,m)
/// dbeta_order_r(m, r); L-free and equal to beta_order_r(n, r).
RatFunc recover_beta_order_r(unsigned n, unsigned r);

/// Right side of the multiplication (distribution) identity:
/// sum_l sum_i s1(n,l) L^(n-l) [m]_q^(l-1) q^i beta_(l,q^m)((x+i)/m),
/// the inner value realized by substituting q -> q^m then Q -> q^i Q.
/// Equals dbeta(n) for every m >= 1.
RatFunc multiplication_rhs(unsigned n, unsigned m);

/// Both sides of the difference identity
///   q beta_n(x+1|L) - beta_n(x|L)
///     = (q-1) [x]_(n,L) + sum_{l=1}^{n} s1(n,l) L^(n-l) l [x]_q^(l-1) Q
/// for n >= 1. The summation runs to l = n; see paper_variant below.
std::pair<RatFunc, RatFunc> difference_sides(unsigned n);

/// Same right side but with the sum truncated at l = n-1. Kept as a
/// regression witness: it drops the Q term and already fails at n = 1.
std::pair<RatFunc, RatFunc> difference_sides_paper_variant(unsigned n);

/// Both sides of the functional equation of the measure on the monomial
/// basis q^(j y); each equals (j+1)(q-1).
std::pair<RatFunc, RatFunc> eq23_basis_check(unsigned j);

} // namespace qbern::degenerate

#endif
