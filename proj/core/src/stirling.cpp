#include "qbern/stirling.hpp"

#include <mutex>

namespace qbern {

void StirlingTable::ensure(unsigned n) {
  if (s1_.empty()) {
    s1_.push_back({Int(1)});
    s2_.push_back({Int(1)});
  }
  while (s1_.size() <= n) {
    unsigned m = static_cast<unsigned>(s1_.size()); // building row m from row m-1
    const auto& p1 = s1_.back();
    const auto& p2 = s2_.back();
    std::vector<Int> r1(m + 1), r2(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
      Int a1 = (k > 0) ? p1[k - 1] : Int(0);
      Int b1 = (k < m) ? p1[k] : Int(0);
      r1[k] = a1 - Int(m - 1) * b1;
      Int a2 = (k > 0) ? p2[k - 1] : Int(0);
      Int b2 = (k < m) ? p2[k] : Int(0);
      r2[k] = Int(k) * b2 + a2;
    }
    s1_.push_back(std::move(r1));
    s2_.push_back(std::move(r2));
  }
}

const Int& StirlingTable::s1(unsigned n, unsigned k) {
  if (k > n) return zero_;
  ensure(n);
  return s1_[n][k];
}

const Int& StirlingTable::s2(unsigned n, unsigned k) {
  if (k > n) return zero_;
  ensure(n);
  return s2_[n][k];
}

namespace {
StirlingTable& shared_table(std::unique_lock<std::mutex>& lock) {
  static std::mutex mu;
  static StirlingTable table;
  lock = std::unique_lock(mu);
  return table;
}
} // namespace

Int s1(unsigned n, unsigned k) {
  std::unique_lock<std::mutex> lock;
  return shared_table(lock).s1(n, k);
}

Int s2(unsigned n, unsigned k) {
  std::unique_lock<std::mutex> lock;
  return shared_table(lock).s2(n, k);
}

RatFunc falling_step(const RatFunc& z, unsigned n, const RatFunc& step) {
  RatFunc result(1);
  for (unsigned i = 0; i < n; ++i)
    result *= z - RatFunc(Rational(static_cast<long>(i))) * step;
  return result;
}

} // namespace qbern
