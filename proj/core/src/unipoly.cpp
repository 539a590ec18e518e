#include "qbern/unipoly.hpp"

#include "qbern/errors.hpp"

namespace qbern::uni {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) { return p.empty(); }

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw DivisionByZero("univariate division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quot(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    std::size_t top = k + b.size() - 1;
    if (top >= rem.size() || rem[top] == 0) continue;
    Rational f = rem[top] / lead;
    quot[k] = f;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= f * b[j];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw Error("univariate division is not exact");
  return q;
}

namespace {

using IPoly = std::vector<Int>;

// integer-primitive part of a rational polynomial (positive leading coeff)
IPoly primitive_int(const Poly& p) {
  if (p.empty()) return {};
  Int lcm_den(1);
  for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  IPoly ip(p.size());
  Int content(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational scaled = p[i] * Rational(lcm_den);
    ip[i] = scaled.get_num(); // den is 1 after scaling
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ip[i].get_mpz_t());
  }
  if (content == 0) return {};
  if (ip.back() < 0) content = -content;
  for (auto& c : ip) c /= content;
  return ip;
}

void itrim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly ipp(IPoly p) {
  itrim(p);
  if (p.empty()) return p;
  Int content(0);
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) content = -content;
  for (auto& c : p) c /= content;
  return p;
}

// pseudo-remainder up to a nonzero scalar; the caller takes the primitive
// part next, so the exact classical scaling is irrelevant
IPoly iprem(IPoly a, const IPoly& b) {
  itrim(a);
  if (a.size() < b.size()) return a;
  const Int& lead = b.back();
  for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
    std::size_t top = k + b.size() - 1;
    if (top >= a.size() || a[top] == 0) continue;
    Int coeff = a[top];
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= coeff * b[j];
    itrim(a);
  }
  return a;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
  IPoly A = primitive_int(a);
  IPoly B = primitive_int(b);
  if (A.empty()) std::swap(A, B);
  if (B.empty()) {
    Poly out(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) out[i] = Rational(A[i]);
    return out;
  }
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    IPoly R = ipp(iprem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  A = ipp(std::move(A));
  Poly out(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) out[i] = Rational(A[i]);
  return out;
}

} // namespace qbern::uni
