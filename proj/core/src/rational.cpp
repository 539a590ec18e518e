#include "qbern/rational.hpp"

#include "qbern/errors.hpp"

namespace qbern {

Rational rational_from_parts(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&] { return Error("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rational(n);
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return rational_from_parts(num, den);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

std::string rational_to_string(const Rational& v) {
  return v.get_str();
}

unsigned long int_valuation(const Int& v, unsigned long p) {
  if (v == 0) return 0;
  Int tmp;
  return mpz_remove(tmp.get_mpz_t(), v.get_mpz_t(), Int(p).get_mpz_t());
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace qbern
