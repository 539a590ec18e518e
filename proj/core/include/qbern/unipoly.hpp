#ifndef QBERN_UNIPOLY_HPP
#define QBERN_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "qbern/rational.hpp"

// Dense univariate polynomial helpers over Rational, used by the
// rational-function reducer and the display-time factor recognizer.
// Representation: coefficient vector, constant term first; the zero
// polynomial is the empty vector, otherwise the top coefficient is nonzero.

namespace qbern::uni {

using Poly = std::vector<Rational>;

void trim(Poly& p);
bool is_zero(const Poly& p);
int degree(const Poly& p); // -1 for zero

Poly mul(const Poly& a, const Poly& b);

/// Quotient/remainder over the rationals. Precondition: b != 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws qbern::Error when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Polynomial gcd, computed by a primitive pseudo-remainder sequence over
/// the integers. The result is integer-primitive with positive leading
/// coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

} // namespace qbern::uni

#endif
