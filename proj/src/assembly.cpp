#include "krank/assembly.hpp"

#include <algorithm>
#include <sstream>

#include "krank/errors.hpp"

namespace krank {

namespace {

int mod4(int n) noexcept { return ((n % 4) + 4) % 4; }

const char* boundary_name(const BoundaryModel& b) {
  if (std::holds_alternative<ZeroMap>(b)) return "zero";
  if (std::holds_alternative<UnitInclusion>(b)) return "unit_inclusion";
  return "user_supplied";
}

} // namespace

CellComplex::CellComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries,
                         std::string label)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)), label_(std::move(label)) {
  if (dims_.empty()) throw ChainComplexViolation("complex has no cells in dimension 0");
  if (boundaries_.size() != dims_.size() - 1) {
    throw ChainComplexViolation("expected " + std::to_string(dims_.size() - 1) +
                                " boundary matrices, got " + std::to_string(boundaries_.size()));
  }
  for (std::size_t p = 1; p < dims_.size(); ++p) {
    const auto& d = boundaries_[p - 1];
    if (d.rows() != dims_[p - 1] || d.cols() != dims_[p]) {
      throw ChainComplexViolation("boundary " + std::to_string(p) + " has shape " +
                                  std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                  ", expected " + std::to_string(dims_[p - 1]) + "x" +
                                  std::to_string(dims_[p]));
    }
  }
  for (std::size_t p = 1; p + 1 < dims_.size(); ++p) {
    if (!product_is_zero(boundaries_[p - 1], boundaries_[p])) {
      throw ChainComplexViolation("boundary " + std::to_string(p) + " composed with boundary " +
                                  std::to_string(p + 1) + " is not zero");
    }
  }
}

Rank UserSupplied::rank_at(int n) const {
  if (auto it = pairs.find(n); it != pairs.end()) return it->second;
  if (n <= 1) return 0;
  return tail_pattern[static_cast<std::size_t>(mod4(n - 1))];
}

GraphOfGroups::GraphOfGroups(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             BoundaryModel boundary, std::string label)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), boundary_(std::move(boundary)),
      label_(std::move(label)) {
  for (const auto& e : edges_) {
    if (e.head >= vertices_.size() || e.tail >= vertices_.size()) {
      throw ModelMismatch("edge '" + e.name + "' has an endpoint outside the vertex list");
    }
    check_injective_homomorphism(e.group, vertices_[e.head].group, e.head_map);
    check_injective_homomorphism(e.group, vertices_[e.tail].group, e.tail_map);
  }
  if (std::holds_alternative<UnitInclusion>(boundary_)) {
    for (const auto& e : edges_) {
      if (!e.group.is_trivial()) {
        throw ModelMismatch("unit_inclusion requires trivial edge groups; edge '" + e.name +
                            "' carries " + e.group.label());
      }
    }
  }
  vertex_ranks_.reserve(vertices_.size());
  for (const auto& v : vertices_) vertex_ranks_.push_back(k_rank_function(v.group, v.rank_minus1));
  edge_ranks_.reserve(edges_.size());
  for (const auto& e : edges_) edge_ranks_.push_back(k_rank_function(e.group, e.rank_minus1));
}

IntMatrix GraphOfGroups::incidence_matrix() const {
  IntMatrix m(vertices_.size(), edges_.size());
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    m(edges_[j].head, j) += 1;
    m(edges_[j].tail, j) -= 1;
  }
  return m;
}

const std::string& model_label(const CoreModel& model) {
  return std::visit([](const auto& m) -> const std::string& { return m.label(); }, model);
}

std::vector<Rank> RankTable::values() const {
  std::vector<Rank> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.rank);
  return out;
}

std::vector<Rank> betti_numbers(const CellComplex& x) {
  const auto& dims = x.dims();
  std::vector<std::size_t> ranks(dims.size() + 1, 0); // ranks[p] = rank of boundary p
  for (std::size_t p = 1; p < dims.size(); ++p) ranks[p] = rational_rank(x.boundaries()[p - 1]);
  std::vector<Rank> betti(dims.size());
  for (std::size_t p = 0; p < dims.size(); ++p) betti[p] = dims[p] - ranks[p] - ranks[p + 1];
  return betti;
}

Rank rank_trivial_isotropy(const CellComplex& x, int n) {
  if (x.dimension() > 2) {
    throw UnsupportedDimension("rational collapse is only assumed up to dimension 2; '" +
                               x.label() + "' has dimension " + std::to_string(x.dimension()));
  }
  const auto betti = betti_numbers(x);
  Rank total = 0;
  for (std::size_t p = 0; p < betti.size(); ++p) {
    total += betti[p] * rank_k_integers(n - static_cast<int>(p));
  }
  return total;
}

EdgeVertexDims dims_e_v(const GraphOfGroups& g, int n) {
  EdgeVertexDims d;
  if (n <= -2) return d;
  for (std::size_t e = 0; e < g.edges().size(); ++e) d.edges += g.edge_ranks(e).evaluate(n);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) d.vertices += g.vertex_ranks(v).evaluate(n);
  return d;
}

Rank boundary_rank(const GraphOfGroups& g, int n) {
  const auto dims = dims_e_v(g, n);
  const Rank bound = std::min(dims.edges, dims.vertices);
  return std::visit(
      [&](const auto& model) -> Rank {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, ZeroMap>) {
          return 0;
        } else if constexpr (std::is_same_v<T, UnitInclusion>) {
          const Rank unit = rank_k_integers(n);
          return unit == 0 ? 0 : static_cast<Rank>(rational_rank(g.incidence_matrix())) * unit;
        } else {
          const Rank r = model.rank_at(n);
          if (r > bound) {
            throw RankOutOfBounds("user-supplied boundary rank " + std::to_string(r) +
                                  " at n = " + std::to_string(n) + " exceeds min(dim E_n, dim V_n) = " +
                                  std::to_string(bound));
          }
          return r;
        }
      },
      g.boundary_model());
}

Rank rank_graph_of_groups(const GraphOfGroups& g, int n) {
  const Rank cok = dims_e_v(g, n).vertices - boundary_rank(g, n);
  const Rank ker = dims_e_v(g, n - 1).edges - boundary_rank(g, n - 1);
  return cok + ker;
}

namespace {

RankRow complex_row(const CellComplex& x, const std::vector<Rank>& betti, int n) {
  RankRow row{n, rank_trivial_isotropy(x, n), {}};
  std::ostringstream note;
  note << "cellular";
  for (std::size_t p = 0; p < betti.size(); ++p) {
    note << (p == 0 ? " " : " + ") << betti[p] << "*rkK" << (n - static_cast<int>(p)) << "(Z)";
  }
  row.note = note.str();
  return row;
}

RankRow graph_row(const GraphOfGroups& g, int n) {
  const auto dn = dims_e_v(g, n);
  const auto dprev = dims_e_v(g, n - 1);
  const Rank bn = boundary_rank(g, n);
  const Rank bprev = boundary_rank(g, n - 1);
  RankRow row{n, (dn.vertices - bn) + (dprev.edges - bprev), {}};
  std::ostringstream note;
  note << "graph[" << boundary_name(g.boundary_model()) << "] cok" << n << "=" << dn.vertices
       << "-" << bn << " ker" << (n - 1) << "=" << dprev.edges << "-" << bprev;
  row.note = note.str();
  return row;
}

} // namespace

RankTable rank_table(const CoreModel& model, int n_lo, int n_hi) {
  if (n_lo > n_hi) {
    throw ParameterOutOfRange("empty degree range " + std::to_string(n_lo) + ".." +
                              std::to_string(n_hi));
  }
  RankTable table{model_label(model), n_lo, n_hi, {}};
  table.rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  if (const auto* x = std::get_if<CellComplex>(&model)) {
    if (x->dimension() > 2) (void)rank_trivial_isotropy(*x, n_lo); // throws
    const auto betti = betti_numbers(*x);
    for (int n = n_lo; n <= n_hi; ++n) table.rows.push_back(complex_row(*x, betti, n));
  } else {
    const auto& g = std::get<GraphOfGroups>(model);
    for (int n = n_lo; n <= n_hi; ++n) table.rows.push_back(graph_row(g, n));
  }
  return table;
}

} // namespace krank
