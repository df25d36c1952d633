#include "krank/model.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "krank/errors.hpp"

namespace krank {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxFnSn = 6;

std::size_t identity_of(const GroupLiteral& g) { return build_group(g).identity(); }

std::string suffix(const std::string& what, std::size_t v) {
  return "(" + what + "=" + std::to_string(v) + ")";
}

ModelSpec free_product_graph(std::string name, const std::vector<GroupLiteral>& groups) {
  if (groups.size() < 2) throw ParameterOutOfRange("free_product needs at least two factors");
  GraphSpec graph;
  graph.boundary = UnitInclusion{};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    graph.vertices.push_back({"v" + std::to_string(i), groups[i], catalog_rank_minus1(groups[i])});
  }
  // Factors joined along a path v0 - v1 - ... with trivial edge groups.
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
    graph.edges.push_back({"e" + std::to_string(i), GroupLiteral::trivial(), std::nullopt, i, i + 1,
                           {identity_of(groups[i])}, {identity_of(groups[i + 1])}});
  }
  return {std::move(name), std::move(graph)};
}

// ---- JSON helpers -------------------------------------------------------

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(path + "." + key, "unknown field");
  }
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw SchemaError(path + "." + key, "missing required field");
  return j.at(key);
}

std::uint64_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw SchemaError(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::optional<Rank> optional_rank(const json& j, const std::string& path) {
  if (!j.contains("rank_minus1")) return std::nullopt;
  return as_count(j.at("rank_minus1"), path + ".rank_minus1");
}

std::vector<std::size_t> as_index_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of element indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_count(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t vertex_ref(const json& j, const std::vector<VertexSpec>& vertices,
                       const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v].name == name) return v;
    throw SchemaError(path, "unknown vertex '" + name + "'");
  }
  const auto v = as_count(j, path);
  if (v >= vertices.size()) throw SchemaError(path, "vertex index out of range");
  return v;
}

BoundaryModel boundary_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "zero") return ZeroMap{};
    if (s == "unit_inclusion") return UnitInclusion{};
    throw SchemaError(path, "unknown boundary model '" + s + "'");
  }
  if (!j.is_object() || !j.contains("user_supplied")) {
    throw SchemaError(path, "expected \"zero\", \"unit_inclusion\" or {\"user_supplied\": ...}");
  }
  reject_unknown(j, {"user_supplied"}, path);
  const auto& u = j.at("user_supplied");
  const std::string up = path + ".user_supplied";
  if (!u.is_object()) throw SchemaError(up, "expected an object");
  reject_unknown(u, {"pairs", "tail_pattern"}, up);
  UserSupplied model;
  if (u.contains("pairs")) {
    const auto& pairs = u.at("pairs");
    if (!pairs.is_array()) throw SchemaError(up + ".pairs", "expected an array of [n, rank]");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string pp = up + ".pairs[" + std::to_string(i) + "]";
      const auto& p = pairs[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer()) {
        throw SchemaError(pp, "expected [n, rank]");
      }
      const auto n = p[0].get<std::int64_t>();
      if (n < -1000000 || n > 1000000) throw SchemaError(pp, "degree out of range");
      if (!model.pairs.emplace(static_cast<int>(n), as_count(p[1], pp + "[1]")).second) {
        throw SchemaError(pp, "duplicate degree");
      }
    }
  }
  if (u.contains("tail_pattern")) {
    const auto& t = u.at("tail_pattern");
    if (!t.is_array() || t.size() != 4) throw SchemaError(up + ".tail_pattern", "expected 4 ranks");
    for (std::size_t i = 0; i < 4; ++i) {
      model.tail_pattern[i] = as_count(t[i], up + ".tail_pattern[" + std::to_string(i) + "]");
    }
  }
  return model;
}

json boundary_to_json(const BoundaryModel& b) {
  if (std::holds_alternative<ZeroMap>(b)) return "zero";
  if (std::holds_alternative<UnitInclusion>(b)) return "unit_inclusion";
  const auto& u = std::get<UserSupplied>(b);
  json pairs = json::array();
  for (const auto& [n, r] : u.pairs) pairs.push_back({n, r});
  return {{"user_supplied", {{"pairs", pairs}, {"tail_pattern", u.tail_pattern}}}};
}

NamedExample example_from_json(const json& j, const std::string& path) {
  const auto name = as_string(require(j, "example", path), path + ".example");
  const std::string pp = path + ".params";
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw SchemaError(pp, "expected an object");
  auto count = [&](const char* key) {
    reject_unknown(params, {key}, pp);
    return static_cast<std::size_t>(as_count(require(params, key, pp), pp + "." + key));
  };
  if (name == "free_group") return NamedExample::free_group(count("m"));
  if (name == "surface") return NamedExample::surface(count("g"));
  if (name == "fn_sn") return NamedExample::fn_sn(count("n"));
  if (name == "psl2z") {
    reject_unknown(params, {}, pp);
    return NamedExample::psl2z();
  }
  if (name == "finite") {
    reject_unknown(params, {"group"}, pp);
    return NamedExample::finite(group_from_json(require(params, "group", pp), pp + ".group"));
  }
  if (name == "free_product") {
    reject_unknown(params, {"groups"}, pp);
    const auto& groups = require(params, "groups", pp);
    if (!groups.is_array()) throw SchemaError(pp + ".groups", "expected an array of group literals");
    std::vector<GroupLiteral> out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      out.push_back(group_from_json(groups[i], pp + ".groups[" + std::to_string(i) + "]"));
    }
    return NamedExample::free_product(std::move(out));
  }
  throw SchemaError(path + ".example", "unknown example '" + name + "'");
}

json example_params(const NamedExample& e) {
  switch (e.kind) {
  case NamedExample::Kind::FreeGroup: return {{"m", e.param}};
  case NamedExample::Kind::Surface: return {{"g", e.param}};
  case NamedExample::Kind::FnSn: return {{"n", e.param}};
  case NamedExample::Kind::Psl2z: return json::object();
  case NamedExample::Kind::Finite: return {{"group", group_to_json(e.groups.at(0))}};
  case NamedExample::Kind::FreeProduct: {
    json groups = json::array();
    for (const auto& g : e.groups) groups.push_back(group_to_json(g));
    return {{"groups", groups}};
  }
  }
  return json::object();
}

std::size_t parse_param_size(const std::map<std::string, std::string>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw ParameterOutOfRange("missing parameter '" + key + "'");
  std::size_t v = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParameterOutOfRange("parameter '" + key + "' must be a nonnegative integer, got '" + s + "'");
  }
  return v;
}

void only_params(const std::map<std::string, std::string>& params,
                 std::initializer_list<std::string_view> allowed, std::string_view example) {
  for (const auto& [key, _] : params) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ParameterOutOfRange("example " + std::string(example) + " takes no parameter '" + key + "'");
  }
}

} // namespace

std::string_view kind_name(ModelKind kind) noexcept {
  switch (kind) {
  case ModelKind::FiniteGroup: return "finite_group";
  case ModelKind::CellComplex: return "cell_complex";
  case ModelKind::GraphOfGroups: return "graph_of_groups";
  case ModelKind::NamedExample: return "named_example";
  }
  return "";
}

std::string_view example_name(NamedExample::Kind kind) noexcept {
  switch (kind) {
  case NamedExample::Kind::FreeGroup: return "free_group";
  case NamedExample::Kind::FreeProduct: return "free_product";
  case NamedExample::Kind::Psl2z: return "psl2z";
  case NamedExample::Kind::Surface: return "surface";
  case NamedExample::Kind::FnSn: return "fn_sn";
  case NamedExample::Kind::Finite: return "finite";
  }
  return "";
}

NamedExample make_named_example(std::string_view name,
                                const std::map<std::string, std::string>& params) {
  if (name == "free_group") {
    only_params(params, {"m"}, name);
    return NamedExample::free_group(parse_param_size(params, "m"));
  }
  if (name == "surface") {
    only_params(params, {"g"}, name);
    return NamedExample::surface(parse_param_size(params, "g"));
  }
  if (name == "fn_sn") {
    only_params(params, {"n"}, name);
    return NamedExample::fn_sn(parse_param_size(params, "n"));
  }
  if (name == "psl2z") {
    only_params(params, {}, name);
    return NamedExample::psl2z();
  }
  try {
    if (name == "finite") {
      only_params(params, {"group"}, name);
      if (!params.contains("group")) throw ParameterOutOfRange("missing parameter 'group'");
      return NamedExample::finite(parse_group_literal(params.at("group")));
    }
    if (name == "free_product") {
      only_params(params, {"groups"}, name);
      if (!params.contains("groups")) throw ParameterOutOfRange("missing parameter 'groups'");
      // groups=a,b,... is the factor list of a product literal.
      auto wrapped = parse_group_literal("product:(" + params.at("groups") + ")");
      return NamedExample::free_product(std::move(wrapped.factors));
    }
  } catch (const SchemaError& e) {
    throw ParameterOutOfRange(std::string("bad group literal: ") + e.what());
  }
  throw ParameterOutOfRange("unknown example '" + std::string(name) +
                            "' (expected free_group, free_product, psl2z, surface, fn_sn, finite)");
}

std::vector<ModelSpec> expand_example(const NamedExample& e) {
  switch (e.kind) {
  case NamedExample::Kind::FreeGroup: {
    const std::size_t m = e.param;
    if (m < 1) throw ParameterOutOfRange("free_group requires m >= 1");
    const std::string name = "free_group" + suffix("m", m);
    ComplexSpec wedge{{1, m}, {IntMatrix(1, m)}};
    GraphSpec loops;
    loops.boundary = UnitInclusion{};
    loops.vertices.push_back({"v", GroupLiteral::trivial(), 0});
    for (std::size_t i = 0; i < m; ++i) {
      loops.edges.push_back({"e" + std::to_string(i), GroupLiteral::trivial(), 0, 0, 0, {0}, {0}});
    }
    return {{name, std::move(wedge)}, {name + "/graph", std::move(loops)}};
  }
  case NamedExample::Kind::FreeProduct:
    return {free_product_graph("free_product", e.groups)};
  case NamedExample::Kind::Psl2z:
    return {free_product_graph("psl2z", {GroupLiteral::cyclic(2), GroupLiteral::cyclic(3)})};
  case NamedExample::Kind::Surface: {
    const std::size_t g = e.param;
    if (g < 2) throw ParameterOutOfRange("surface requires genus g >= 2");
    // One 0-cell, 2g 1-cells, one 2-cell; every boundary vanishes.
    ComplexSpec surface{{1, 2 * g, 1}, {IntMatrix(1, 2 * g), IntMatrix(2 * g, 1)}};
    return {{"surface" + suffix("g", g), std::move(surface)}};
  }
  case NamedExample::Kind::FnSn: {
    const std::size_t n = e.param;
    if (n < 2 || n > kMaxFnSn) {
      throw ParameterOutOfRange("fn_sn requires 2 <= n <= " + std::to_string(kMaxFnSn));
    }
    // Vertex S_n, edge S_{n-1}; the two maps are the stabilizers of the last
    // point and of point 0.
    const std::size_t sub_order = symmetric(n - 1).order();
    std::vector<std::size_t> fix_last(sub_order), fix_first(sub_order);
    for (std::size_t i = 0; i < sub_order; ++i) {
      auto p = permutation_at(n - 1, i);
      Permutation last(p);
      last.push_back(static_cast<std::uint32_t>(n - 1));
      Permutation first{0};
      for (auto x : p) first.push_back(x + 1);
      fix_last[i] = permutation_index(last);
      fix_first[i] = permutation_index(first);
    }
    GraphSpec loop;
    loop.boundary = ZeroMap{};
    loop.vertices.push_back({"v", GroupLiteral::symmetric(n), 0});
    loop.edges.push_back({"e", GroupLiteral::symmetric(n - 1), 0, 0, 0, std::move(fix_last),
                          std::move(fix_first)});
    return {{"fn_sn" + suffix("n", n), std::move(loop)}};
  }
  case NamedExample::Kind::Finite: {
    const auto& g = e.groups.at(0);
    return {{"finite(" + to_string(g) + ")", FiniteGroupSpec{g, catalog_rank_minus1(g)}}};
  }
  }
  throw ParameterOutOfRange("unknown example");
}

CoreModel realize(const ModelSpec& spec) {
  return std::visit(
      [&](const auto& p) -> CoreModel {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FiniteGroupSpec>) {
          std::vector<GraphOfGroups::Vertex> v{{"v", build_group(p.group), p.rank_minus1}};
          return GraphOfGroups(std::move(v), {}, ZeroMap{}, spec.name);
        } else if constexpr (std::is_same_v<T, ComplexSpec>) {
          return CellComplex(p.dims, p.boundaries, spec.name);
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          std::vector<GraphOfGroups::Vertex> vertices;
          for (const auto& v : p.vertices) vertices.push_back({v.name, build_group(v.group), v.rank_minus1});
          std::vector<GraphOfGroups::Edge> edges;
          for (const auto& e : p.edges) {
            edges.push_back({e.name, build_group(e.group), e.rank_minus1, e.head, e.tail, e.head_map,
                             e.tail_map});
          }
          return GraphOfGroups(std::move(vertices), std::move(edges), p.boundary, spec.name);
        } else {
          return realize(expand_example(p).front());
        }
      },
      spec.payload);
}

ModelSpec parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  const std::string root = "$";
  if (!j.is_object()) throw SchemaError(root, "expected a JSON object");
  ModelSpec spec;
  spec.name = as_string(require(j, "name", root), root + ".name");
  const auto kind = as_string(require(j, "kind", root), root + ".kind");

  if (kind == "finite_group") {
    reject_unknown(j, {"name", "kind", "group", "rank_minus1"}, root);
    spec.payload = FiniteGroupSpec{group_from_json(require(j, "group", root), root + ".group"),
                                   optional_rank(j, root)};
  } else if (kind == "cell_complex") {
    reject_unknown(j, {"name", "kind", "dims", "boundaries"}, root);
    ComplexSpec c;
    const auto& dims = require(j, "dims", root);
    if (!dims.is_array() || dims.empty()) throw SchemaError(root + ".dims", "expected a nonempty array");
    for (std::size_t p = 0; p < dims.size(); ++p) {
      c.dims.push_back(as_count(dims[p], root + ".dims[" + std::to_string(p) + "]"));
    }
    const auto& bds = require(j, "boundaries", root);
    if (!bds.is_array() || bds.size() + 1 != c.dims.size()) {
      throw SchemaError(root + ".boundaries", "expected " + std::to_string(c.dims.size() - 1) + " matrices");
    }
    for (std::size_t p = 0; p < bds.size(); ++p) {
      const std::string mp = root + ".boundaries[" + std::to_string(p) + "]";
      const std::size_t rows = c.dims[p], cols = c.dims[p + 1];
      if (!bds[p].is_array() || bds[p].size() != rows) {
        throw SchemaError(mp, "expected " + std::to_string(rows) + " rows");
      }
      IntMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = bds[p][r];
        const std::string rp = mp + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != cols) throw SchemaError(rp, "expected " + std::to_string(cols) + " entries");
        for (std::size_t col = 0; col < cols; ++col) {
          if (!row[col].is_number_integer()) throw SchemaError(rp + "[" + std::to_string(col) + "]", "expected an integer");
          m(r, col) = row[col].get<std::int64_t>();
        }
      }
      c.boundaries.push_back(std::move(m));
    }
    spec.payload = std::move(c);
  } else if (kind == "graph_of_groups") {
    reject_unknown(j, {"name", "kind", "vertices", "edges", "boundary_model"}, root);
    GraphSpec g;
    const auto& vertices = require(j, "vertices", root);
    if (!vertices.is_array()) throw SchemaError(root + ".vertices", "expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string vp = root + ".vertices[" + std::to_string(i) + "]";
      const auto& v = vertices[i];
      if (!v.is_object()) throw SchemaError(vp, "expected an object");
      reject_unknown(v, {"name", "group", "rank_minus1"}, vp);
      g.vertices.push_back({as_string(require(v, "name", vp), vp + ".name"),
                            group_from_json(require(v, "group", vp), vp + ".group"),
                            optional_rank(v, vp)});
    }
    const auto& edges = j.contains("edges") ? j.at("edges") : json::array();
    if (!edges.is_array()) throw SchemaError(root + ".edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string ep = root + ".edges[" + std::to_string(i) + "]";
      const auto& e = edges[i];
      if (!e.is_object()) throw SchemaError(ep, "expected an object");
      reject_unknown(e, {"name", "group", "rank_minus1", "head", "tail", "head_map", "tail_map"}, ep);
      g.edges.push_back({as_string(require(e, "name", ep), ep + ".name"),
                         group_from_json(require(e, "group", ep), ep + ".group"),
                         optional_rank(e, ep),
                         vertex_ref(require(e, "head", ep), g.vertices, ep + ".head"),
                         vertex_ref(require(e, "tail", ep), g.vertices, ep + ".tail"),
                         as_index_array(require(e, "head_map", ep), ep + ".head_map"),
                         as_index_array(require(e, "tail_map", ep), ep + ".tail_map")});
    }
    g.boundary = boundary_from_json(require(j, "boundary_model", root), root + ".boundary_model");
    spec.payload = std::move(g);
  } else if (kind == "named_example") {
    reject_unknown(j, {"name", "kind", "example", "params"}, root);
    spec.payload = example_from_json(j, root);
  } else {
    throw SchemaError(root + ".kind", "unknown model kind '" + kind + "'");
  }

  (void)realize(spec); // validates groups, injections and boundaries
  return spec;
}

std::string render_model(const ModelSpec& spec) {
  json j = {{"name", spec.name}, {"kind", kind_name(spec.kind())}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FiniteGroupSpec>) {
          j["group"] = group_to_json(p.group);
          if (p.rank_minus1) j["rank_minus1"] = *p.rank_minus1;
        } else if constexpr (std::is_same_v<T, ComplexSpec>) {
          j["dims"] = p.dims;
          json bds = json::array();
          for (const auto& m : p.boundaries) bds.push_back(m.to_rows());
          j["boundaries"] = bds;
        } else if constexpr (std::is_same_v<T, GraphSpec>) {
          json vertices = json::array();
          for (const auto& v : p.vertices) {
            json jv = {{"name", v.name}, {"group", group_to_json(v.group)}};
            if (v.rank_minus1) jv["rank_minus1"] = *v.rank_minus1;
            vertices.push_back(jv);
          }
          json edges = json::array();
          for (const auto& e : p.edges) {
            json je = {{"name", e.name},
                       {"group", group_to_json(e.group)},
                       {"head", p.vertices.at(e.head).name},
                       {"tail", p.vertices.at(e.tail).name},
                       {"head_map", e.head_map},
                       {"tail_map", e.tail_map}};
            if (e.rank_minus1) je["rank_minus1"] = *e.rank_minus1;
            edges.push_back(je);
          }
          j["vertices"] = vertices;
          j["edges"] = edges;
          j["boundary_model"] = boundary_to_json(p.boundary);
        } else {
          j["example"] = example_name(p.kind);
          j["params"] = example_params(p);
        }
      },
      spec.payload);
  return j.dump(2) + "\n";
}

std::vector<ModelSpec> catalog_models() {
  const auto c = [](std::size_t n) { return GroupLiteral::cyclic(n); };
  const auto s = [](std::size_t n) { return GroupLiteral::symmetric(n); };
  std::vector<NamedExample> examples{
      NamedExample::psl2z(),
      NamedExample::free_group(1),
      NamedExample::free_group(2),
      NamedExample::free_group(3),
      NamedExample::free_product({c(2), c(2)}),
      NamedExample::free_product({c(2), s(3)}),
      NamedExample::free_product({c(3), s(3), s(4)}),
      NamedExample::surface(2),
      NamedExample::surface(3),
      NamedExample::fn_sn(2),
      NamedExample::fn_sn(3),
      NamedExample::fn_sn(4),
      NamedExample::fn_sn(5),
      NamedExample::finite(GroupLiteral::trivial()),
      NamedExample::finite(c(2)),
      NamedExample::finite(c(3)),
      NamedExample::finite(s(3)),
      NamedExample::finite(s(4)),
  };
  std::vector<ModelSpec> out;
  for (auto& e : examples) {
    std::string name(example_name(e.kind));
    if (e.kind == NamedExample::Kind::FreeProduct) {
      name += "(";
      for (std::size_t i = 0; i < e.groups.size(); ++i) name += (i ? "," : "") + to_string(e.groups[i]);
      name += ")";
    } else if (e.kind == NamedExample::Kind::Finite) {
      name += "(" + to_string(e.groups.front()) + ")";
    } else if (e.kind != NamedExample::Kind::Psl2z) {
      name += "(" + std::to_string(e.param) + ")";
    }
    out.push_back({std::move(name), std::move(e)});
  }
  return out;
}

} // namespace krank
