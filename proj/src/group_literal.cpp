#include "krank/group_literal.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "krank/errors.hpp"

namespace krank {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw SchemaError("group", "bad integer '" + std::string(text) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

// Splits on commas at parenthesis depth zero.
std::vector<std::string> split_top_level(std::string_view s, std::string_view whole) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw SchemaError("group", "unbalanced ')' in '" + std::string(whole) + "'");
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw SchemaError("group", "unbalanced '(' in '" + std::string(whole) + "'");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed, const std::string& path) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(path + "." + key, "unknown field");
  }
}

std::size_t json_size(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw SchemaError(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

} // namespace

GroupLiteral parse_group_literal(std::string_view text) {
  const std::string s = trim(text);
  if (s == "trivial") return GroupLiteral::trivial();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw SchemaError("group", "unknown group literal '" + s + "'");
  const std::string head = s.substr(0, colon);
  const std::string rest = trim(std::string_view(s).substr(colon + 1));
  if (head == "product") {
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw SchemaError("group", "product literal must look like product:(a,b,...), got '" + s + "'");
    }
    std::vector<GroupLiteral> factors;
    for (const auto& part : split_top_level(std::string_view(rest).substr(1, rest.size() - 2), s)) {
      factors.push_back(parse_group_literal(part));
    }
    return GroupLiteral::product(std::move(factors));
  }
  const std::size_t n = parse_size(rest, s);
  if (head == "cyclic") return GroupLiteral::cyclic(n);
  if (head == "symmetric") return GroupLiteral::symmetric(n);
  if (head == "dihedral") return GroupLiteral::dihedral(n);
  throw SchemaError("group", "unknown group kind '" + head + "'");
}

std::string to_string(const GroupLiteral& g) {
  switch (g.kind) {
  case GroupLiteral::Kind::Trivial: return "trivial";
  case GroupLiteral::Kind::Cyclic: return "cyclic:" + std::to_string(g.n);
  case GroupLiteral::Kind::Symmetric: return "symmetric:" + std::to_string(g.n);
  case GroupLiteral::Kind::Dihedral: return "dihedral:" + std::to_string(g.n);
  case GroupLiteral::Kind::Product: {
    std::string out = "product:(";
    for (std::size_t i = 0; i < g.factors.size(); ++i) out += (i ? "," : "") + to_string(g.factors[i]);
    return out + ")";
  }
  case GroupLiteral::Kind::Table:
    return g.label.empty() ? "table<" + std::to_string(g.table.size()) + ">" : g.label;
  }
  return {};
}

FiniteGroup build_group(const GroupLiteral& g) {
  switch (g.kind) {
  case GroupLiteral::Kind::Trivial: return trivial();
  case GroupLiteral::Kind::Cyclic: return cyclic(g.n);
  case GroupLiteral::Kind::Symmetric: return symmetric(g.n);
  case GroupLiteral::Kind::Dihedral: return dihedral(g.n);
  case GroupLiteral::Kind::Product: {
    if (g.factors.empty()) throw ParameterOutOfRange("product needs at least one factor");
    FiniteGroup acc = build_group(g.factors.front());
    for (std::size_t i = 1; i < g.factors.size(); ++i) acc = direct_product(acc, build_group(g.factors[i]));
    if (g.factors.size() == 1) return acc;
    // Relabel to the literal so diagnostics name what the user wrote.
    return acc.with_label(to_string(g));
  }
  case GroupLiteral::Kind::Table: return FiniteGroup::from_cayley_table(g.table, to_string(g));
  }
  throw ParameterOutOfRange("unknown group literal");
}

json group_to_json(const GroupLiteral& g) {
  switch (g.kind) {
  case GroupLiteral::Kind::Trivial: return {{"kind", "trivial"}};
  case GroupLiteral::Kind::Cyclic: return {{"kind", "cyclic"}, {"n", g.n}};
  case GroupLiteral::Kind::Symmetric: return {{"kind", "symmetric"}, {"n", g.n}};
  case GroupLiteral::Kind::Dihedral: return {{"kind", "dihedral"}, {"n", g.n}};
  case GroupLiteral::Kind::Product: {
    json factors = json::array();
    for (const auto& f : g.factors) factors.push_back(group_to_json(f));
    return {{"kind", "product"}, {"factors", factors}};
  }
  case GroupLiteral::Kind::Table: {
    json out = {{"kind", "table"}, {"table", g.table}};
    if (!g.label.empty()) out["label"] = g.label;
    return out;
  }
  }
  return {};
}

GroupLiteral group_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_group_literal(j.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(path, e.what());
    }
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError(path, "group literal must be an object with a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "trivial") {
    reject_unknown(j, {"kind"}, path);
    return GroupLiteral::trivial();
  }
  if (kind == "cyclic" || kind == "symmetric" || kind == "dihedral") {
    reject_unknown(j, {"kind", "n"}, path);
    if (!j.contains("n")) throw SchemaError(path + ".n", "missing");
    const auto n = json_size(j["n"], path + ".n");
    if (kind == "cyclic") return GroupLiteral::cyclic(n);
    if (kind == "symmetric") return GroupLiteral::symmetric(n);
    return GroupLiteral::dihedral(n);
  }
  if (kind == "product") {
    reject_unknown(j, {"kind", "factors"}, path);
    if (!j.contains("factors") || !j["factors"].is_array()) {
      throw SchemaError(path + ".factors", "expected an array of group literals");
    }
    std::vector<GroupLiteral> factors;
    for (std::size_t i = 0; i < j["factors"].size(); ++i) {
      factors.push_back(group_from_json(j["factors"][i], path + ".factors[" + std::to_string(i) + "]"));
    }
    return GroupLiteral::product(std::move(factors));
  }
  if (kind == "table") {
    reject_unknown(j, {"kind", "table", "label"}, path);
    if (!j.contains("table") || !j["table"].is_array()) throw SchemaError(path + ".table", "expected a square array");
    std::vector<std::vector<Element>> table;
    for (std::size_t r = 0; r < j["table"].size(); ++r) {
      const auto& row = j["table"][r];
      const std::string rp = path + ".table[" + std::to_string(r) + "]";
      if (!row.is_array()) throw SchemaError(rp, "expected an array");
      std::vector<Element> out;
      for (std::size_t c = 0; c < row.size(); ++c) {
        out.push_back(static_cast<Element>(json_size(row[c], rp + "[" + std::to_string(c) + "]")));
      }
      table.push_back(std::move(out));
    }
    std::string label;
    if (j.contains("label")) {
      if (!j["label"].is_string()) throw SchemaError(path + ".label", "expected a string");
      label = j["label"].get<std::string>();
    }
    return GroupLiteral::from_table(std::move(table), std::move(label));
  }
  throw SchemaError(path + ".kind", "unknown group kind '" + kind + "'");
}

std::optional<Rank> catalog_rank_minus1(const GroupLiteral& g) {
  switch (g.kind) {
  case GroupLiteral::Kind::Trivial: return 0;
  case GroupLiteral::Kind::Cyclic:
    if (g.n <= 3) return 0;
    return std::nullopt;
  case GroupLiteral::Kind::Symmetric: return 0;
  default: return std::nullopt;
  }
}

GroupLiteral quaternion8_literal() {
  // Unit quaternions as (sign, basis) with basis 0 = 1, 1 = i, 2 = j, 3 = k.
  // basis_mul[a][b] = {sign, basis} of e_a * e_b.
  constexpr std::array<std::array<std::array<int, 2>, 4>, 4> basis_mul{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      const int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
      const auto [s, basis] = basis_mul[a % 4][b % 4];
      const int sign = sa * sb * s;
      table[a][b] = static_cast<Element>((sign > 0 ? 0 : 4) + basis);
    }
  }
  return GroupLiteral::from_table(std::move(table), "quaternion:8");
}

std::vector<GroupLiteral> catalog_groups() {
  std::vector<GroupLiteral> out{GroupLiteral::trivial()};
  for (std::size_t n = 1; n <= 24; ++n) out.push_back(GroupLiteral::cyclic(n));
  for (std::size_t n = 2; n <= 24; ++n) out.push_back(GroupLiteral::dihedral(n));
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(GroupLiteral::symmetric(n));
  const auto c = [](std::size_t n) { return GroupLiteral::cyclic(n); };
  out.push_back(GroupLiteral::product({c(2), c(2)})); // Klein four
  out.push_back(quaternion8_literal());
  out.push_back(GroupLiteral::product({c(2), c(2), c(2)}));
  out.push_back(GroupLiteral::product({c(4), c(2)}));
  out.push_back(GroupLiteral::product({c(3), c(3)}));
  out.push_back(GroupLiteral::product({c(2), GroupLiteral::symmetric(3)}));
  out.push_back(GroupLiteral::product({GroupLiteral::symmetric(3), GroupLiteral::symmetric(3)}));
  out.push_back(GroupLiteral::product({c(2), GroupLiteral::dihedral(4)}));
  out.push_back(GroupLiteral::product({quaternion8_literal(), c(3)}));
  out.push_back(GroupLiteral::product({c(2), GroupLiteral::symmetric(4)}));
  return out;
}

} // namespace krank
