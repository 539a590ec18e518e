#ifndef QBERN_STIRLING_HPP
#define QBERN_STIRLING_HPP

#include <vector>

#include "qbern/ratfunc.hpp"

namespace qbern {

/// Memoized triangles of signed Stirling numbers of the first kind and
/// Stirling numbers of the second kind. Rows are grown on demand;
/// requesting (n, k) fills every row up to n.
///
///   s1(n+1, k) = s1(n, k-1) - n * s1(n, k)
///   s2(n+1, k) = k * s2(n, k) + s2(n, k-1)
class StirlingTable {
 public:
  const Int& s1(unsigned n, unsigned k);
  const Int& s2(unsigned n, unsigned k);
  void ensure(unsigned n);
  unsigned rows() const { return static_cast<unsigned>(s1_.size()); }

 private:
  std::vector<std::vector<Int>> s1_;
  std::vector<std::vector<Int>> s2_;
  Int zero_ = 0;
};

// Shared thread-safe table. Values for k > n are 0.
Int s1(unsigned n, unsigned k);
Int s2(unsigned n, unsigned k);

/// Step falling factorial z (z - step) (z - 2 step) ... (z - (n-1) step);
/// n = 0 gives 1.
RatFunc falling_step(const RatFunc& z, unsigned n, const RatFunc& step);

} // namespace qbern

#endif
