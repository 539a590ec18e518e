#ifndef QBERN_PADIC_HPP
#define QBERN_PADIC_HPP

#include <functional>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern::padic {

/// Integer modulo p^K with tracked effective precision. Operations never
/// report more digits than justified; division by a value of valuation v
/// costs v digits.
class PadicInt {
 public:
  PadicInt(unsigned long p, unsigned K, Int value = 0);
  PadicInt(unsigned long p, unsigned K, Int value, unsigned known_precision);

  unsigned long prime() const { return p_; }
  unsigned precision_cap() const { return K_; }
  unsigned known_precision() const { return prec_; }
  const Int& residue() const { return residue_; }
  const Int& modulus() const { return modulus_; }

  /// p-adic order of the residue, capped at the known precision (a value
  /// congruent to 0 at full known precision reports its precision).
  unsigned valuation() const;
  bool is_zero_at_precision() const;

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  /// Throws DivisionByZero when b is indistinguishable from zero, and
  /// PrecisionError when the quotient would not be p-integral.
  friend PadicInt operator/(const PadicInt& a, const PadicInt& b);

  PadicInt inverse() const { return PadicInt(p_, K_, 1) / *this; }
  PadicInt pow(unsigned long e) const;

  friend bool operator==(const PadicInt& a, const PadicInt& b);

 private:
  void check_compatible(const PadicInt& o) const;

  unsigned long p_;
  unsigned K_;
  Int modulus_; // p^K
  Int residue_; // in [0, p^K)
  unsigned prec_;
};

/// Evaluation point for the numeric oracle. The standing assumption
/// q = 1 (mod p) makes v(q - 1) >= 1, which for odd p satisfies
/// |q - 1|_p < p^(-1/(p-1)).
struct QConfig {
  unsigned long p = 3;
  unsigned K = 15;
  Int q = 4;            // exact integer value of q, q = 1 (mod p)
  Rational lambda = 0;  // denominator must be a p-adic unit
  unsigned x = 0;

  /// Throws qbern::Error on violated preconditions (p not an odd prime,
  /// q != 1 mod p, lambda denominator divisible by p).
  void validate() const;
  Int modulus() const;
};

/// One convergence measurement. `valuation` is the p-adic order of the
/// difference between the finite-level quotient and the exact target; when
/// the difference vanishes at working precision, `exact` is set and
/// `valuation` holds the justified floor (the precision ceiling).
struct LevelValuation {
  unsigned N = 0;
  long valuation = 0;
  bool exact = false;
};

/// Residue of [M]_q = 1 + q + ... + q^(M-1) modulo p^K.
Int bracket_level(const QConfig& cfg, unsigned long points);

/// Finite-level quotient (1/[p^N]_q) sum_{y<p^N} f(y) q^y. The term rule
/// returns the residue of f(y) modulo p^K. Requires K > N.
PadicInt riemann_sum(const std::function<Int(unsigned long)>& f,
                     const QConfig& cfg, unsigned N);

/// Valuation of (level-N quotient of the basis integrand q^(j y)) minus
/// the exact basis integral (j+1)/[j+1]_q, per level.
std::vector<LevelValuation> monomial_integral_check(unsigned j, const QConfig& cfg,
                                                    const std::vector<unsigned>& levels);

/// Valuation of (level-N quotient of the integrand [x+y]_(n,lambda))
/// minus dbeta(n) evaluated at (q, lambda, q^x), per level.
std::vector<LevelValuation> check_theorem1(unsigned n, const QConfig& cfg,
                                           const std::vector<unsigned>& levels);

/// r-fold analogue at a single level, against beta_order_r(n, r).
LevelValuation check_order_r(unsigned n, unsigned r, const QConfig& cfg, unsigned N);

/// Agreement between the p^N-point and the (d p^N)-point quotients of the
/// Theorem-1 integrand (the measure's distribution property).
LevelValuation distribution_check(unsigned n, unsigned d, const QConfig& cfg, unsigned N);

} // namespace qbern::padic

#endif
