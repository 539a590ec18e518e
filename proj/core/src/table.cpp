#include "qbern/table.hpp"

#include <json.hpp>

#include "qbern/carlitz.hpp"
#include "qbern/degenerate.hpp"
#include "qbern/errors.hpp"
#include "qbern/io.hpp"

namespace qbern {

const char* to_string(Family f) {
  switch (f) {
    case Family::CarlitzNumber: return "carlitz-number";
    case Family::CarlitzPoly: return "carlitz-poly";
    case Family::OrderR: return "order-r";
    case Family::Degenerate: return "degenerate";
    default: return "degenerate-order-r";
  }
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::CarlitzNumber, Family::CarlitzPoly, Family::OrderR,
                   Family::Degenerate, Family::DegenerateOrderR})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

bool family_needs_r(Family f) {
  return f == Family::OrderR || f == Family::DegenerateOrderR;
}

RatFunc family_value(Family f, unsigned n, unsigned r) {
  switch (f) {
    case Family::CarlitzNumber: return carlitz::beta_number(n);
    case Family::CarlitzPoly: return carlitz::beta_poly_closed(n);
    case Family::OrderR: return carlitz::beta_order_r(n, r);
    case Family::Degenerate: return degenerate::dbeta(n);
    default: return degenerate::dbeta_order_r(n, r);
  }
}

std::vector<TableEntry> build_table(Family f, unsigned max_n, std::optional<unsigned> r) {
  if (family_needs_r(f) && !r)
    throw Error(std::string(to_string(f)) + " needs an order r >= 1");
  std::vector<TableEntry> entries;
  entries.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    TableEntry e;
    e.family = f;
    e.n = n;
    if (family_needs_r(f)) e.r = r;
    e.value = to_text(family_value(f, n, r.value_or(1)));
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string table_to_json(const std::vector<TableEntry>& entries) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json obj;
    obj["family"] = to_string(e.family);
    obj["n"] = e.n;
    if (e.r) obj["r"] = *e.r;
    obj["value"] = e.value;
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

} // namespace qbern
