#ifndef QBERN_MULTIPOLY_HPP
#define QBERN_MULTIPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qbern/rational.hpp"

namespace qbern {

/// The three indeterminates of the whole library: q itself, L for the
/// deformation parameter lambda, and Q for q^x treated as an independent
/// symbol (so polynomial identities in x become rational-function
/// identities in (q, L, Q)).
enum class Var : int { q = 0, L = 1, Q = 2 };

inline constexpr const char* var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::L: return "L";
    default: return "Q";
  }
}

/// Exponent triple (e_q, e_L, e_Q), ordered graded-lexicographically with
/// precedence q > L > Q. This order fixes the leading term and every
/// serialized term sequence.
struct Monomial {
  std::uint32_t e[3] = {0, 0, 0};

  Monomial() = default;
  Monomial(std::uint32_t eq, std::uint32_t el, std::uint32_t eQ) : e{eq, el, eQ} {}

  std::uint32_t degree() const { return e[0] + e[1] + e[2]; }
  std::uint32_t exp(Var v) const { return e[static_cast<int>(v)]; }
  bool is_constant() const { return degree() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e[0] == b.e[0] && a.e[1] == b.e[1] && a.e[2] == b.e[2];
  }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.e[0] <=> b.e[0]; c != 0) return c;
    if (auto c = a.e[1] <=> b.e[1]; c != 0) return c;
    return a.e[2] <=> b.e[2];
  }

  Monomial operator*(const Monomial& o) const {
    return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]};
  }
};

/// Sparse polynomial in (q, L, Q) over Rational.
/// Invariant: no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(Rational(1)); }
  static MultiPoly variable(Var v, std::uint32_t exp = 1);
  static MultiPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Largest term in the canonical order. Precondition: not zero.
  const std::pair<const Monomial, Rational>& leading() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  std::uint32_t degree(Var v) const;
  bool uses(Var v) const;
  /// Number of distinct variables present; when exactly one, *single names it.
  int variable_count(Var* single = nullptr) const;

  /// Minimum exponent of v over all terms (0 for the zero polynomial).
  std::uint32_t min_exponent(Var v) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  MultiPoly pow(std::uint32_t k) const;

  /// Divides every term by v^k; throws qbern::Error if some term has a
  /// smaller v-exponent.
  MultiPoly shift_down(Var v, std::uint32_t k) const;

  /// Exact rational evaluation at (q, L, Q) = (vq, vl, vQ).
  Rational eval(const Rational& vq, const Rational& vl, const Rational& vQ) const;

  /// View as a univariate polynomial in v: result[k] holds the terms with
  /// v-exponent k, with v stripped.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  /// Inverse of coefficients_in: sum of coeffs[k] * v^k.
  static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs);

 private:
  TermMap terms_;
};

} // namespace qbern

#endif
