#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krank/group.hpp"
#include "krank/invariants.hpp"
#include "krank/matrix.hpp"

namespace krank {

/// Finite CW complex with trivial isotropy, given by its cellular boundary
/// matrices. boundaries()[p - 1] is the dims[p-1] x dims[p] matrix of the
/// boundary map on p-cells.
class CellComplex {
public:
  /// Throws ChainComplexViolation on a shape mismatch or when consecutive
  /// boundaries do not compose to zero.
  CellComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries,
              std::string label = "complex");

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<IntMatrix>& boundaries() const noexcept { return boundaries_; }
  std::size_t dimension() const noexcept { return dims_.size() - 1; }
  const std::string& label() const noexcept { return label_; }

private:
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> boundaries_;
  std::string label_;
};

/// Boundary map E_n -> V_n is zero in every degree.
struct ZeroMap {
  friend bool operator==(const ZeroMap&, const ZeroMap&) = default;
};

/// All edge groups trivial; the unit K_n(Z) of each edge maps into the unit
/// coordinates of its endpoints, so the map acts as the graph incidence
/// matrix there and as zero elsewhere.
struct UnitInclusion {
  friend bool operator==(const UnitInclusion&, const UnitInclusion&) = default;
};

/// Explicit ranks of E_n -> V_n. Degrees not listed in `pairs` take
/// tail_pattern[(n - 1) mod 4] for n > 1 (pattern order: n = 1, 2, 3, 0 mod 4)
/// and 0 for n <= 1.
struct UserSupplied {
  std::map<int, Rank> pairs;
  std::array<Rank, 4> tail_pattern{0, 0, 0, 0};

  Rank rank_at(int n) const;

  friend bool operator==(const UserSupplied&, const UserSupplied&) = default;
};

using BoundaryModel = std::variant<ZeroMap, UnitInclusion, UserSupplied>;

/// Finite graph of finite groups with edge-to-vertex injections.
class GraphOfGroups {
public:
  struct Vertex {
    std::string name;
    FiniteGroup group;
    std::optional<Rank> rank_minus1;
  };
  struct Edge {
    std::string name;
    FiniteGroup group;
    std::optional<Rank> rank_minus1;
    std::size_t head = 0;
    std::size_t tail = 0;
    std::vector<std::size_t> head_map;
    std::vector<std::size_t> tail_map;
  };

  /// Validates endpoints and that both maps of every edge are injective
  /// homomorphisms; throws NotAHomomorphism / NotInjective / ModelMismatch.
  GraphOfGroups(std::vector<Vertex> vertices, std::vector<Edge> edges, BoundaryModel boundary,
                std::string label = "graph");

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const BoundaryModel& boundary_model() const noexcept { return boundary_; }
  const std::string& label() const noexcept { return label_; }

  const KRankFunction& vertex_ranks(std::size_t v) const { return vertex_ranks_.at(v); }
  const KRankFunction& edge_ranks(std::size_t e) const { return edge_ranks_.at(e); }

  /// Vertex-by-edge incidence matrix: +1 at the head, -1 at the tail (a loop
  /// contributes a zero column).
  IntMatrix incidence_matrix() const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  BoundaryModel boundary_;
  std::string label_;
  std::vector<KRankFunction> vertex_ranks_;
  std::vector<KRankFunction> edge_ranks_;
};

using CoreModel = std::variant<CellComplex, GraphOfGroups>;

const std::string& model_label(const CoreModel& model);

struct RankRow {
  int n = 0;
  Rank rank = 0;
  std::string note;

  friend bool operator==(const RankRow&, const RankRow&) = default;
};

struct RankTable {
  std::string label;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<RankRow> rows;

  std::vector<Rank> values() const;
};

inline constexpr int kDefaultRangeLo = -2;
inline constexpr int kDefaultRangeHi = 13;

/// Rational Betti numbers b_0..b_d.
std::vector<Rank> betti_numbers(const CellComplex& x);

/// sum_p b_p * rank K_{n-p}(Z). Throws UnsupportedDimension above dimension 2.
Rank rank_trivial_isotropy(const CellComplex& x, int n);

struct EdgeVertexDims {
  Rank edges = 0;    // dim E_n
  Rank vertices = 0; // dim V_n

  friend bool operator==(const EdgeVertexDims&, const EdgeVertexDims&) = default;
};

EdgeVertexDims dims_e_v(const GraphOfGroups& g, int n);

/// Rank of E_n -> V_n under the graph's boundary model.
Rank boundary_rank(const GraphOfGroups& g, int n);

/// rank Cok_n + rank Ker_{n-1}.
Rank rank_graph_of_groups(const GraphOfGroups& g, int n);

RankTable rank_table(const CoreModel& model, int n_lo, int n_hi);

} // namespace krank
