#ifndef QBERN_RATIONAL_HPP
#define QBERN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qbern {

using Int = mpz_class;

/// Exact rational coefficients. mpq_class arithmetic keeps values
/// canonical (gcd(|num|, den) = 1, den >= 1, zero as 0/1); the helpers
/// below are the only constructors that take raw numerator/denominator
/// pairs and they canonicalize.
using Rational = mpq_class;

/// num/den as a canonical rational; throws qbern::DivisionByZero on den == 0.
Rational rational_from_parts(const Int& num, const Int& den);

/// Parses "p" or "p/q" (optional sign, decimal digits).
Rational rational_from_string(const std::string& s);

/// Canonical decimal form, "p" or "p/q".
std::string rational_to_string(const Rational& v);

/// p-adic valuation of a nonzero integer; 0 for v == 0 by convention here
/// (callers guard the zero case).
unsigned long int_valuation(const Int& v, unsigned long p);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

} // namespace qbern

#endif
