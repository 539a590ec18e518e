#ifndef QBERN_RATFUNC_HPP
#define QBERN_RATFUNC_HPP

#include <cstdint>

#include "qbern/multipoly.hpp"

namespace qbern {

/// Rational function num/den over MultiPoly — the universal value type for
/// every q-Bernoulli family in the library.
///
/// Canonical form, maintained on construction and after every operation:
///   - den is not the zero polynomial and its leading coefficient (in the
///     graded-lex order) is positive;
///   - den is integer-primitive (coefficient content 1);
///   - common monomial factors of num and den are cancelled;
///   - when den involves a single variable, the gcd of den with the
///     matching content of num is cancelled as well.
///
/// Equality is cross-multiplication (a/b == c/d iff a*d == c*b); the
/// reductions above only bound term growth, correctness never depends on
/// them.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly::one()) {}
  RatFunc(const Rational& c) : num_(MultiPoly(c)), den_(MultiPoly::one()) {}
  RatFunc(long c) : RatFunc(Rational(c)) {}
  explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::one()) {}
  /// Throws qbern::DivisionByZero when den == 0.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  std::size_t term_count() const { return num_.term_count() + den_.term_count(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  /// Throws qbern::DivisionByZero when o == 0.
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  /// Cross-multiplication equality: num*o.den == o.num*den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// Exact evaluation; throws qbern::DivisionByZero when the denominator
  /// vanishes at the point.
  Rational eval(const Rational& vq, const Rational& vl, const Rational& vQ) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

RatFunc pow(const RatFunc& f, std::uint32_t k);

/// Ring-homomorphism substitution of a rational function for one variable.
/// Throws qbern::SubstitutionError when the denominator vanishes
/// identically under the substitution.
RatFunc substitute(const RatFunc& f, Var v, const RatFunc& image);

/// Limit of f as v -> point, by shifting v to point + eps and cancelling
/// the common lowest power of eps. Removable singularities succeed; a
/// genuine pole throws qbern::PoleError.
RatFunc limit_at(const RatFunc& f, Var v, const Rational& point);

} // namespace qbern

#endif
