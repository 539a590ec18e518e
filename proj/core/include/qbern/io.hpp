#ifndef QBERN_IO_HPP
#define QBERN_IO_HPP

#include <string>

#include "qbern/ratfunc.hpp"

namespace qbern {

// Text form: terms in canonical (descending graded-lex) order, each term
// "coeff*q^a*L^b*Q^c" with unit factors omitted, joined by " + ";
// a fraction prints as "num / (den)". Example: "q / (q^3 + 2*q^2 + 2*q + 1)".
std::string to_text(const MultiPoly& p);
std::string to_text(const RatFunc& f);

// JSON form: {"num": [[a,b,c,"coeff"], ...], "den": [...]} with the same
// term order and the coefficient as a decimal rational string.
std::string to_json(const RatFunc& f);

// Parsers for both forms. The text parser accepts the full expression
// grammar (+, -, *, /, ^, parentheses), so any serialized output round-trips.
RatFunc ratfunc_from_text(const std::string& s);
RatFunc ratfunc_from_json(const std::string& s);

// LaTeX rendering; denominators recognized as products of [k]_q factors
// render as such, anything else prints as a raw polynomial.
std::string to_latex(const RatFunc& f);

} // namespace qbern

#endif
