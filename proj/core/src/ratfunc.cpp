#include "qbern/ratfunc.hpp"

#include <utility>

#include "qbern/errors.hpp"
#include "qbern/unipoly.hpp"

namespace qbern {

namespace {

// gcd of coefficient numerators over lcm of coefficient denominators
Rational poly_content(const MultiPoly& p) {
  Int g(0), l(1);
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return r;
}

uni::Poly to_unipoly(const MultiPoly& p, Var v) {
  uni::Poly out(p.is_zero() ? 0 : p.degree(v) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) out[m.exp(v)] = c;
  uni::trim(out);
  return out;
}

// p grouped into univariate-in-v polynomials, keyed by the other exponents
std::map<Monomial, uni::Poly> slices_in(const MultiPoly& p, Var v) {
  const int idx = static_cast<int>(v);
  std::map<Monomial, uni::Poly> slices;
  for (const auto& [m, c] : p.terms()) {
    Monomial key = m;
    std::uint32_t k = key.e[idx];
    key.e[idx] = 0;
    auto& slice = slices[key];
    if (slice.size() <= k) slice.resize(k + 1, Rational(0));
    slice[k] = c;
  }
  for (auto& [key, slice] : slices) uni::trim(slice);
  return slices;
}

// divides every univariate-in-v slice of p by g; precondition: exact
MultiPoly divide_by_univariate(const MultiPoly& p, Var v, const uni::Poly& g) {
  const int idx = static_cast<int>(v);
  MultiPoly out;
  for (auto& [key, slice] : slices_in(p, v)) {
    uni::Poly quot = uni::divide_exact(slice, g);
    for (std::uint32_t k = 0; k < quot.size(); ++k) {
      if (quot[k] == 0) continue;
      Monomial m = key;
      m.e[idx] += k;
      out.add_term(m, quot[k]);
    }
  }
  return out;
}

} // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::one();
    return;
  }

  // cancel common monomial factors
  for (Var v : {Var::q, Var::L, Var::Q}) {
    std::uint32_t k = std::min(num_.min_exponent(v), den_.min_exponent(v));
    if (k > 0) {
      num_ = num_.shift_down(v, k);
      den_ = den_.shift_down(v, k);
    }
  }

  // univariate denominator: cancel gcd(den, content of num along that variable)
  Var v = Var::q;
  if (!den_.is_constant() && den_.variable_count(&v) == 1) {
    uni::Poly g = to_unipoly(den_, v);
    for (auto& [key, slice] : slices_in(num_, v)) {
      g = uni::gcd(g, slice);
      if (uni::degree(g) == 0) break;
    }
    if (uni::degree(g) >= 1) {
      num_ = divide_by_univariate(num_, v, g);
      den_ = divide_by_univariate(den_, v, g);
    }
  }

  // scale: den integer-primitive with positive leading coefficient
  Rational c = poly_content(den_);
  if (den_.leading().second < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  if (den_.is_zero()) throw DivisionByZero("division by the zero rational function");
  normalize();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RatFunc::eval(const Rational& vq, const Rational& vl, const Rational& vQ) const {
  Rational d = den_.eval(vq, vl, vQ);
  if (d == 0) throw DivisionByZero("denominator vanishes at the evaluation point");
  return num_.eval(vq, vl, vQ) / d;
}

RatFunc pow(const RatFunc& f, std::uint32_t k) {
  if (k == 0) return RatFunc(1);
  return RatFunc(f.num().pow(k), f.den().pow(k));
}

RatFunc substitute(const RatFunc& f, Var v, const RatFunc& image) {
  const MultiPoly& in = image.num();
  const MultiPoly& id = image.den();

  // P(v -> in/id) = N / id^deg, with N by Horner over the two polynomials
  auto subst_poly = [&](const MultiPoly& p) -> std::pair<MultiPoly, std::uint32_t> {
    if (!p.uses(v)) return {p, 0};
    auto coeffs = p.coefficients_in(v);
    const std::uint32_t d = static_cast<std::uint32_t>(coeffs.size()) - 1;
    MultiPoly n = coeffs[d];
    MultiPoly idp = MultiPoly::one();
    for (int j = static_cast<int>(d) - 1; j >= 0; --j) {
      idp = idp * id;
      n = n * in;
      if (!coeffs[j].is_zero()) n += coeffs[j] * idp;
    }
    return {n, d};
  };

  auto [na, da] = subst_poly(f.num());
  auto [nb, db] = subst_poly(f.den());
  if (nb.is_zero())
    throw SubstitutionError("denominator vanishes identically under substitution");
  if (id.is_one()) return RatFunc(std::move(na), std::move(nb));
  return RatFunc(na * id.pow(db), nb * id.pow(da));
}

namespace {

// coefficient of eps^k in P(v = point + eps)
MultiPoly shifted_coefficient(const std::vector<MultiPoly>& coeffs,
                              const Rational& point, std::uint32_t k) {
  MultiPoly ck;
  Rational pw(1); // point^(j-k)
  for (std::uint32_t j = k; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) ck += coeffs[j] * (Rational(binomial(j, k)) * pw);
    pw *= point;
  }
  return ck;
}

} // namespace

RatFunc limit_at(const RatFunc& f, Var v, const Rational& point) {
  if (f.is_zero()) return RatFunc();
  auto an = f.num().coefficients_in(v);
  auto ad = f.den().coefficients_in(v);

  // eps-valuation of the shifted denominator; den != 0 guarantees one exists
  std::uint32_t kd = 0;
  MultiPoly cd;
  for (;; ++kd) {
    cd = shifted_coefficient(ad, point, kd);
    if (!cd.is_zero()) break;
  }
  for (std::uint32_t kn = 0; kn < kd; ++kn) {
    if (!shifted_coefficient(an, point, kn).is_zero())
      throw PoleError("pole at " + std::string(var_name(v)) + " = " +
                      rational_to_string(point));
  }
  MultiPoly cn = shifted_coefficient(an, point, kd);
  return RatFunc(std::move(cn), std::move(cd));
}

} // namespace qbern
