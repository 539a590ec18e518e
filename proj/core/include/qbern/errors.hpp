#ifndef QBERN_ERRORS_HPP
#define QBERN_ERRORS_HPP

#include <stdexcept>

namespace qbern {

/// Base class for every error raised by the algebra and oracle layers.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Division by the zero rational function, or by a p-adic value that is
/// indistinguishable from zero at the current working precision.
struct DivisionByZero : Error {
  using Error::Error;
};

/// A limit was requested at a genuine pole (denominator vanishes to
/// higher order than the numerator).
struct PoleError : Error {
  using Error::Error;
};

/// A substitution made a denominator vanish identically.
struct SubstitutionError : Error {
  using Error::Error;
};

/// p-adic working precision is too small for the requested operation.
struct PrecisionError : Error {
  using Error::Error;
};

/// An identity check exceeded its term-count budget.
struct BudgetError : Error {
  using Error::Error;
};

} // namespace qbern

#endif
