#ifndef QBERN_TABLE_HPP
#define QBERN_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbern/ratfunc.hpp"

namespace qbern {

enum class Family {
  CarlitzNumber,    // beta_n, function of q
  CarlitzPoly,      // beta_n(x), function of (q, Q)
  OrderR,           // beta^(r)_n(x)
  Degenerate,       // beta_n(x|lambda)
  DegenerateOrderR, // beta^(r)_n(x|lambda)
};

const char* to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);
bool family_needs_r(Family f);

/// Dispatch to the owning generator; r is ignored for the order-free
/// families and must be >= 1 otherwise.
RatFunc family_value(Family f, unsigned n, unsigned r = 1);

struct TableEntry {
  Family family = Family::CarlitzNumber;
  unsigned n = 0;
  std::optional<unsigned> r;
  std::string value; // canonical text serialization, byte-stable
};

std::vector<TableEntry> build_table(Family f, unsigned max_n,
                                    std::optional<unsigned> r = std::nullopt);

/// Deterministic JSON array of entries.
std::string table_to_json(const std::vector<TableEntry>& entries);

} // namespace qbern

#endif
