#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "krank/assembly.hpp"
#include "krank/group_literal.hpp"

namespace krank {

struct FiniteGroupSpec {
  GroupLiteral group;
  std::optional<Rank> rank_minus1;

  friend bool operator==(const FiniteGroupSpec&, const FiniteGroupSpec&) = default;
};

struct ComplexSpec {
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;

  friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

struct VertexSpec {
  std::string name;
  GroupLiteral group;
  std::optional<Rank> rank_minus1;

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct EdgeSpec {
  std::string name;
  GroupLiteral group;
  std::optional<Rank> rank_minus1;
  std::size_t head = 0;
  std::size_t tail = 0;
  std::vector<std::size_t> head_map;
  std::vector<std::size_t> tail_map;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  BoundaryModel boundary = ZeroMap{};

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// The worked constructions shipped with the tool.
struct NamedExample {
  enum class Kind { FreeGroup, FreeProduct, Psl2z, Surface, FnSn, Finite };

  Kind kind = Kind::Psl2z;
  std::size_t param = 0;            // m, g or n
  std::vector<GroupLiteral> groups; // free_product factors, finite group

  static NamedExample free_group(std::size_t m) { return {Kind::FreeGroup, m, {}}; }
  static NamedExample free_product(std::vector<GroupLiteral> groups) {
    return {Kind::FreeProduct, 0, std::move(groups)};
  }
  static NamedExample psl2z() { return {Kind::Psl2z, 0, {}}; }
  static NamedExample surface(std::size_t g) { return {Kind::Surface, g, {}}; }
  static NamedExample fn_sn(std::size_t n) { return {Kind::FnSn, n, {}}; }
  static NamedExample finite(GroupLiteral g) { return {Kind::Finite, 0, {std::move(g)}}; }

  friend bool operator==(const NamedExample&, const NamedExample&) = default;
};

enum class ModelKind { FiniteGroup, CellComplex, GraphOfGroups, NamedExample };

struct ModelSpec {
  std::string name;
  std::variant<FiniteGroupSpec, ComplexSpec, GraphSpec, NamedExample> payload;

  ModelKind kind() const noexcept { return static_cast<ModelKind>(payload.index()); }

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

std::string_view kind_name(ModelKind kind) noexcept;
std::string_view example_name(NamedExample::Kind kind) noexcept;

/// Builds a named example from its name and `key=value` parameters
/// (free_group: m; free_product: groups=a,b,...; surface: g; fn_sn: n;
/// finite: group). Throws ParameterOutOfRange.
NamedExample make_named_example(std::string_view name,
                                const std::map<std::string, std::string>& params);

/// Expands a named example into concrete models (never NamedExample). The
/// first entry is the primary realization; free_group also yields the
/// equivalent loop graph. Throws ParameterOutOfRange.
std::vector<ModelSpec> expand_example(const NamedExample& e);

/// Constructs and validates the core model. Named examples realize their
/// primary expansion; a finite group becomes a one-vertex graph.
CoreModel realize(const ModelSpec& spec);

/// Parses and fully validates a model file. Throws SchemaError, NotAGroup,
/// NotAHomomorphism, NotInjective, ChainComplexViolation, ModelMismatch.
ModelSpec parse_model(std::string_view text);

/// JSON text accepted by parse_model.
std::string render_model(const ModelSpec& spec);

/// Named examples used by `verify` and the acceptance checks.
std::vector<ModelSpec> catalog_models();

} // namespace krank
