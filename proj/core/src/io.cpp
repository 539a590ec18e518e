#include "qbern/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "qbern/errors.hpp"
#include "qbern/unipoly.hpp"

namespace qbern {

namespace {

std::string term_text(const Monomial& m, const Rational& c) {
  std::string mono;
  for (Var v : {Var::q, Var::L, Var::Q}) {
    std::uint32_t e = m.exp(v);
    if (e == 0) continue;
    if (!mono.empty()) mono += '*';
    mono += var_name(v);
    if (e > 1) mono += "^" + std::to_string(e);
  }
  if (mono.empty()) return c.get_str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + "*" + mono;
}

} // namespace

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_text(it->first, it->second);
  }
  return out;
}

std::string to_text(const RatFunc& f) {
  if (f.is_polynomial()) return to_text(f.num());
  std::string num = to_text(f.num());
  if (f.num().term_count() > 1) num = "(" + num + ")";
  return num + " / (" + to_text(f.den()) + ")";
}

// ---------------------------------------------------------------------------
// text parser: expr := term (('+'|'-') term)*, term := factor (('*'|'/')
// factor)*, factor := ['-'] base ('^' uint)?, base := number | q | L | Q |
// '(' expr ')'. Division is ordinary field division, so rational
// coefficients like "2/3" and the fraction bar parse uniformly.

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      skip_ws();
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) acc *= factor();
      else if (eat('/')) acc /= factor();
      else return acc;
    }
  }

  RatFunc factor() {
    skip_ws();
    if (eat('-')) return -factor();
    RatFunc b = base();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      std::uint32_t e = 0;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected exponent");
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        e = e * 10 + static_cast<std::uint32_t>(s_[pos_++] - '0');
      return pow(b, e);
    }
    return b;
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'q') { ++pos_; return RatFunc::variable(Var::q); }
    if (c == 'L') { ++pos_; return RatFunc::variable(Var::L); }
    if (c == 'Q') { ++pos_; return RatFunc::variable(Var::Q); }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return RatFunc(Rational(Int(s_.substr(start, pos_ - start))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

} // namespace

RatFunc ratfunc_from_text(const std::string& s) { return Parser(s).parse(); }

// ---------------------------------------------------------------------------
// JSON form

namespace {

nlohmann::ordered_json poly_to_json(const MultiPoly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    arr.push_back({it->first.e[0], it->first.e[1], it->first.e[2],
                   it->second.get_str()});
  }
  return arr;
}

MultiPoly poly_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw Error("polynomial JSON must be an array");
  MultiPoly p;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 4)
      throw Error("polynomial term must be [a, b, c, coeff]");
    Monomial m{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(),
               t[2].get<std::uint32_t>()};
    p.add_term(m, rational_from_string(t[3].get<std::string>()));
  }
  return p;
}

} // namespace

std::string to_json(const RatFunc& f) {
  nlohmann::ordered_json obj;
  obj["num"] = poly_to_json(f.num());
  obj["den"] = poly_to_json(f.den());
  return obj.dump();
}

RatFunc ratfunc_from_json(const std::string& s) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("bad JSON: ") + e.what());
  }
  if (!obj.contains("num") || !obj.contains("den"))
    throw Error("rational-function JSON needs \"num\" and \"den\"");
  return RatFunc(poly_from_json(obj["num"]), poly_from_json(obj["den"]));
}

// ---------------------------------------------------------------------------
// LaTeX

namespace {

std::string latex_monomial(const Monomial& m) {
  std::string out;
  if (std::uint32_t e = m.exp(Var::q); e > 0)
    out += e == 1 ? "q" : "q^{" + std::to_string(e) + "}";
  if (std::uint32_t e = m.exp(Var::L); e > 0)
    out += e == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(e) + "}";
  if (std::uint32_t e = m.exp(Var::Q); e > 0)
    out += e == 1 ? "q^{x}" : "q^{" + std::to_string(e) + "x}";
  return out;
}

std::string latex_rational(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  std::string sign = c < 0 ? "-" : "";
  Int abs_num = abs(c.get_num());
  return sign + "\\frac{" + abs_num.get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string latex_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Rational& c = it->second;
    std::string mono = latex_monomial(it->first);
    std::string piece;
    if (mono.empty()) piece = latex_rational(abs(c));
    else if (abs(c) == 1) piece = mono;
    else piece = latex_rational(abs(c)) + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + piece;
    else out += (c < 0 ? " - " : " + ") + piece;
  }
  return out;
}

// try to write a univariate-in-q denominator as c * (1-q)^a * prod [k]_q^{e_k};
// a negative c is reported through `negated` so the caller can move the
// sign into the numerator
bool recognize_q_factors(const MultiPoly& den, std::string& out, bool& negated) {
  Var v = Var::q;
  if (!den.is_constant() && (den.variable_count(&v) != 1 || v != Var::q)) return false;
  uni::Poly d(den.is_zero() ? 0 : den.degree(Var::q) + 1, Rational(0));
  for (const auto& [m, c] : den.terms()) d[m.exp(Var::q)] = c;
  uni::trim(d);
  if (uni::is_zero(d)) return false;

  std::vector<std::pair<int, unsigned>> brackets; // (k, multiplicity)
  for (int k = uni::degree(d) + 1; k >= 2; --k) {
    uni::Poly bracket(k, Rational(1)); // [k]_q = 1 + q + ... + q^(k-1)
    unsigned e = 0;
    for (;;) {
      auto [quot, rem] = uni::divmod(d, bracket);
      if (!uni::is_zero(rem) || uni::is_zero(quot)) break;
      d = quot;
      ++e;
    }
    if (e > 0) brackets.emplace_back(k, e);
  }
  std::string factors;
  for (auto it = brackets.rbegin(); it != brackets.rend(); ++it) {
    factors += "[" + std::to_string(it->first) + "]_{q}";
    if (it->second > 1) factors += "^{" + std::to_string(it->second) + "}";
  }
  uni::Poly one_minus_q{Rational(1), Rational(-1)};
  unsigned a = 0;
  for (;;) {
    auto [quot, rem] = uni::divmod(d, one_minus_q);
    if (!uni::is_zero(rem) || uni::is_zero(quot)) break;
    d = quot;
    ++a;
  }
  if (uni::degree(d) != 0) return false; // leftover non-trivial factor
  std::string prefix;
  if (a > 0) {
    prefix = "(1-q)";
    if (a > 1) prefix += "^{" + std::to_string(a) + "}";
  }
  Rational scale = d[0];
  negated = scale < 0;
  std::string head;
  if (abs(scale) != 1) head = latex_rational(abs(scale));
  out = head + prefix + factors;
  if (out.empty()) out = "1";
  return true;
}

} // namespace

std::string to_latex(const RatFunc& f) {
  if (f.is_polynomial()) return latex_poly(f.num());
  std::string den;
  bool negated = false;
  if (!recognize_q_factors(f.den(), den, negated)) den = latex_poly(f.den());
  const MultiPoly num = negated ? -f.num() : f.num();
  return "\\frac{" + latex_poly(num) + "}{" + den + "}";
}

} // namespace qbern
