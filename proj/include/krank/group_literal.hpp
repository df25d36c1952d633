#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "krank/group.hpp"
#include "krank/invariants.hpp"

namespace krank {

/// Textual description of a finite group, as written in model files and on
/// the command line.
struct GroupLiteral {
  enum class Kind { Trivial, Cyclic, Symmetric, Dihedral, Product, Table };

  Kind kind = Kind::Trivial;
  std::size_t n = 0;                       // cyclic, symmetric, dihedral
  std::vector<GroupLiteral> factors;       // product
  std::vector<std::vector<Element>> table; // table
  std::string label;                       // table (optional display name)

  static GroupLiteral trivial() { return {}; }
  static GroupLiteral cyclic(std::size_t n) { return {Kind::Cyclic, n, {}, {}, {}}; }
  static GroupLiteral symmetric(std::size_t n) { return {Kind::Symmetric, n, {}, {}, {}}; }
  static GroupLiteral dihedral(std::size_t n) { return {Kind::Dihedral, n, {}, {}, {}}; }
  static GroupLiteral product(std::vector<GroupLiteral> factors) {
    return {Kind::Product, 0, std::move(factors), {}, {}};
  }
  static GroupLiteral from_table(std::vector<std::vector<Element>> table, std::string label = {}) {
    return {Kind::Table, 0, {}, std::move(table), std::move(label)};
  }

  friend bool operator==(const GroupLiteral&, const GroupLiteral&) = default;
};

/// Parses `trivial`, `cyclic:n`, `symmetric:n`, `dihedral:n` and
/// `product:(a,b,...)` (factors may nest). Throws SchemaError.
GroupLiteral parse_group_literal(std::string_view text);

/// Inverse of parse_group_literal. Table literals render as `table<order>`,
/// which does not parse back.
std::string to_string(const GroupLiteral& g);

/// Builds the group. Throws NotAGroup / OrderBound / ParameterOutOfRange.
FiniteGroup build_group(const GroupLiteral& g);

nlohmann::json group_to_json(const GroupLiteral& g);
/// `path` is used in SchemaError messages.
GroupLiteral group_from_json(const nlohmann::json& j, const std::string& path = "$");

/// rank K_{-1}(Z[H]) values shipped with the catalog: 0 for the trivial group,
/// Z/2, Z/3 and every symmetric group. Empty for anything else.
std::optional<Rank> catalog_rank_minus1(const GroupLiteral& g);

/// Quaternion group of order 8 as a Cayley-table literal. Elements are
/// 1, i, j, k, -1, -i, -j, -k in that order.
GroupLiteral quaternion8_literal();

/// Every finite group used by the invariant checks (all of order <= 48).
std::vector<GroupLiteral> catalog_groups();

} // namespace krank
