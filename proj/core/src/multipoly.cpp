#include "qbern/multipoly.hpp"

#include "qbern/errors.hpp"

namespace qbern {

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v, std::uint32_t exp) {
  MultiPoly p;
  if (exp == 0) return one();
  Monomial m;
  m.e[static_cast<int>(v)] = exp;
  p.terms_.emplace(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
         terms_.begin()->second == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

const std::pair<const Monomial, Rational>& MultiPoly::leading() const {
  return *terms_.rbegin();
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(v));
  return d;
}

bool MultiPoly::uses(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(v) > 0) return true;
  return false;
}

int MultiPoly::variable_count(Var* single) const {
  int count = 0;
  for (Var v : {Var::q, Var::L, Var::Q}) {
    if (uses(v)) {
      ++count;
      if (single) *single = v;
    }
  }
  return count;
}

std::uint32_t MultiPoly::min_exponent(Var v) const {
  std::uint32_t m = UINT32_MAX;
  for (const auto& [mono, c] : terms_) m = std::min(m, mono.exp(v));
  return terms_.empty() ? 0 : m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // iterate over the smaller operand on the outside
  const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
  const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
  Rational prod;
  for (const auto& [ma, ca] : outer.terms_) {
    for (const auto& [mb, cb] : inner.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly result = one();
  MultiPoly base(*this);
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::shift_down(Var v, std::uint32_t k) const {
  if (k == 0) return *this;
  MultiPoly r;
  const int idx = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    if (m.exp(v) < k) throw Error("shift_down: exponent underflow");
    Monomial n = m;
    n.e[idx] -= k;
    r.terms_.emplace(n, c);
  }
  return r;
}

Rational MultiPoly::eval(const Rational& vq, const Rational& vl, const Rational& vQ) const {
  // pow tables keyed by exponent keep repeated powers cheap
  auto pw = [](const Rational& base, std::uint32_t e) {
    Rational r(1);
    Rational b = base;
    while (e > 0) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e > 0) b *= b;
    }
    return r;
  };
  Rational acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * pw(vq, m.e[0]) * pw(vl, m.e[1]) * pw(vQ, m.e[2]);
  return acc;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<MultiPoly> out(degree(v) + 1);
  const int idx = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    std::uint32_t k = stripped.e[idx];
    stripped.e[idx] = 0;
    out[k].add_term(stripped, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
  MultiPoly r;
  const int idx = static_cast<int>(v);
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms_) {
      Monomial lifted = m;
      lifted.e[idx] += k;
      r.add_term(lifted, c);
    }
  }
  return r;
}

} // namespace qbern
