#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "krank/errors.hpp"
#include "krank/model.hpp"

using namespace krank;

namespace {

std::string data_file(const std::string& name) {
  std::ifstream f(std::string(KRANK_TEST_DATA) + "/" + name);
  REQUIRE(f);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string schema_path(std::string_view text) {
  try {
    (void)parse_model(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

bool has_table(const GroupLiteral& g) {
  if (g.kind == GroupLiteral::Kind::Table) return true;
  return std::any_of(g.factors.begin(), g.factors.end(), has_table);
}

} // namespace

TEST_CASE("group literal parsing") {
  CHECK(parse_group_literal("trivial") == GroupLiteral::trivial());
  CHECK(parse_group_literal("cyclic:7") == GroupLiteral::cyclic(7));
  CHECK(parse_group_literal("symmetric:4") == GroupLiteral::symmetric(4));
  CHECK(parse_group_literal("dihedral:5") == GroupLiteral::dihedral(5));
  const auto nested = parse_group_literal("product:(cyclic:2,product:(cyclic:3,symmetric:3))");
  CHECK(nested == GroupLiteral::product({GroupLiteral::cyclic(2),
                                         GroupLiteral::product({GroupLiteral::cyclic(3), GroupLiteral::symmetric(3)})}));
  CHECK(to_string(nested) == "product:(cyclic:2,product:(cyclic:3,symmetric:3))");
  CHECK(build_group(nested).order() == 36);

  for (const auto* bad : {"", "cyclic", "cyclic:x", "cyclic:-1", "product:(cyclic:2", "torus:3", "product:cyclic:2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_group_literal(bad), SchemaError);
  }
  for (const auto& lit : catalog_groups()) {
    if (!has_table(lit)) CHECK(parse_group_literal(to_string(lit)) == lit);
  }
}

TEST_CASE("group literal JSON round trip") {
  for (const auto& lit : catalog_groups()) {
    CAPTURE(to_string(lit));
    CHECK(group_from_json(group_to_json(lit)) == lit);
  }
  CHECK(group_from_json(nlohmann::json("cyclic:4")) == GroupLiteral::cyclic(4));
  try {
    (void)group_from_json(nlohmann::json::parse(R"({"kind":"cyclic","n":3,"order":3})"), "$.group");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "$.group.order");
  }
}

TEST_CASE("expand_example") {
  const auto free2 = expand_example(NamedExample::free_group(2));
  REQUIRE(free2.size() == 2);
  CHECK(free2[0].kind() == ModelKind::CellComplex);
  CHECK(free2[1].kind() == ModelKind::GraphOfGroups);
  CHECK(std::get<ComplexSpec>(free2[0].payload).dims == std::vector<std::size_t>{1, 2});
  CHECK(std::get<GraphSpec>(free2[1].payload).edges.size() == 2);

  const auto psl = expand_example(NamedExample::psl2z());
  REQUIRE(psl.size() == 1);
  const auto& g = std::get<GraphSpec>(psl[0].payload);
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(std::holds_alternative<UnitInclusion>(g.boundary));

  const auto surf = expand_example(NamedExample::surface(3));
  CHECK(std::get<ComplexSpec>(surf.at(0).payload).dims == std::vector<std::size_t>{1, 6, 1});

  const auto fn = expand_example(NamedExample::fn_sn(4));
  const auto& fg = std::get<GraphSpec>(fn.at(0).payload);
  CHECK(fg.vertices.at(0).group == GroupLiteral::symmetric(4));
  CHECK(fg.edges.at(0).group == GroupLiteral::symmetric(3));
  CHECK(std::holds_alternative<ZeroMap>(fg.boundary));

  CHECK_THROWS_AS((void)expand_example(NamedExample::free_group(0)), ParameterOutOfRange);
  CHECK_THROWS_AS((void)expand_example(NamedExample::surface(1)), ParameterOutOfRange);
  CHECK_THROWS_AS((void)expand_example(NamedExample::fn_sn(1)), ParameterOutOfRange);
  CHECK_THROWS_AS((void)expand_example(NamedExample::fn_sn(7)), ParameterOutOfRange);
  CHECK_THROWS_AS((void)expand_example(NamedExample::free_product({GroupLiteral::cyclic(2)})), ParameterOutOfRange);
}

TEST_CASE("make_named_example") {
  CHECK(make_named_example("free_group", {{"m", "3"}}) == NamedExample::free_group(3));
  CHECK(make_named_example("psl2z", {}) == NamedExample::psl2z());
  CHECK(make_named_example("free_product", {{"groups", "cyclic:2,symmetric:3"}}) ==
        NamedExample::free_product({GroupLiteral::cyclic(2), GroupLiteral::symmetric(3)}));
  CHECK(make_named_example("finite", {{"group", "dihedral:4"}}) == NamedExample::finite(GroupLiteral::dihedral(4)));
  CHECK_THROWS_AS((void)make_named_example("free_group", {}), ParameterOutOfRange);
  CHECK_THROWS_AS((void)make_named_example("free_group", {{"m", "two"}}), ParameterOutOfRange);
  CHECK_THROWS_AS((void)make_named_example("surface", {{"g", "2"}, {"h", "1"}}), ParameterOutOfRange);
  CHECK_THROWS_AS((void)make_named_example("klein_bottle", {}), ParameterOutOfRange);
}

TEST_CASE("render_model and parse_model round trip") {
  for (const auto& spec : catalog_models()) {
    CAPTURE(spec.name);
    CHECK(parse_model(render_model(spec)) == spec);
    for (const auto& concrete : expand_example(std::get<NamedExample>(spec.payload))) {
      CAPTURE(concrete.name);
      CHECK(parse_model(render_model(concrete)) == concrete);
    }
  }
  UserSupplied user;
  user.pairs = {{0, 1}, {5, 1}};
  user.tail_pattern = {1, 0, 0, 0};
  auto psl = expand_example(NamedExample::psl2z()).front();
  std::get<GraphSpec>(psl.payload).boundary = user;
  CHECK(parse_model(render_model(psl)) == psl);
}

TEST_CASE("model files from disk") {
  const auto psl = parse_model(data_file("psl2z.json"));
  CHECK(psl.kind() == ModelKind::GraphOfGroups);
  CHECK(rank_table(realize(psl), 5, 7).values() == std::vector<Rank>{3, 0, 1});

  const auto genus2 = parse_model(data_file("genus2.json"));
  CHECK(rank_table(realize(genus2), 0, 2).values() == std::vector<Rank>{1, 4, 1});

  const auto fn = parse_model(data_file("fn_s4.json"));
  CHECK(rank_table(realize(fn), 5, 6).values() == std::vector<Rank>{5, 3});

  const auto z5 = parse_model(data_file("cyclic5_missing.json"));
  CHECK(rank_table(realize(z5), 1, 5).values() == std::vector<Rank>{1, 0, 2, 0, 3});
  try {
    (void)rank_table(realize(z5), -1, 5);
    FAIL("expected MissingKMinus1Datum");
  } catch (const MissingKMinus1Datum& e) {
    CHECK(e.group() == "cyclic:5");
  }

  CHECK_THROWS_AS((void)parse_model(data_file("bad_injection.json")), NotInjective);
}

TEST_CASE("parse_model rejects invalid models") {
  CHECK(schema_path("[1,2]") == "$");
  CHECK(schema_path("{not json") == "$");
  CHECK(schema_path(R"({"kind":"finite_group","group":"cyclic:2"})") == "$.name");
  CHECK(schema_path(R"({"name":"x","kind":"torus"})") == "$.kind");
  CHECK(schema_path(R"({"name":"x","kind":"finite_group","group":"cyclic:2","colour":"red"})") == "$.colour");
  CHECK(schema_path(R"({"name":"x","kind":"finite_group","group":"cyclic:2","rank_minus1":-1})") == "$.rank_minus1");
  CHECK(schema_path(R"({"name":"x","kind":"cell_complex","dims":[1,2],"boundaries":[[[0]]]})") ==
        "$.boundaries[0][0]");
  CHECK(schema_path(R"({"name":"x","kind":"graph_of_groups",
      "vertices":[{"name":"v","group":"trivial"}],
      "edges":[{"name":"e","group":"trivial","head":"w","tail":"v","head_map":[0],"tail_map":[0]}],
      "boundary_model":"zero"})") == "$.edges[0].head");
  CHECK(schema_path(R"({"name":"x","kind":"graph_of_groups","vertices":[],"boundary_model":"sometimes"})") ==
        "$.boundary_model");
  CHECK(schema_path(R"({"name":"x","kind":"named_example","example":"free_group","params":{"k":2}})") ==
        "$.params.k");
  CHECK(schema_path(R"({"name":"x","kind":"named_example","example":"free_group","params":{}})") == "$.params.m");

  CHECK_THROWS_AS((void)parse_model(R"({"name":"x","kind":"cell_complex","dims":[1,1,1],
      "boundaries":[[[1]],[[1]]]})"),
                  ChainComplexViolation);
  CHECK_THROWS_AS((void)parse_model(R"({"name":"x","kind":"graph_of_groups",
      "vertices":[{"name":"v","group":"cyclic:4"}],
      "edges":[{"name":"e","group":"cyclic:2","head":0,"tail":0,"head_map":[0,1],"tail_map":[0,2]}],
      "boundary_model":"zero"})"),
                  NotAHomomorphism);
  CHECK_THROWS_AS((void)parse_model(R"({"name":"x","kind":"finite_group",
      "group":{"kind":"table","table":[[0,1],[1,1]]}})"),
                  NotAGroup);
  CHECK_THROWS_AS((void)parse_model(R"({"name":"x","kind":"graph_of_groups",
      "vertices":[{"name":"v","group":"cyclic:2"}],
      "edges":[{"name":"e","group":"cyclic:2","head":0,"tail":0,"head_map":[0,1],"tail_map":[0,1]}],
      "boundary_model":"unit_inclusion"})"),
                  ModelMismatch);
}

TEST_CASE("head and tail accept vertex indices as well as names") {
  const auto by_name = parse_model(data_file("psl2z.json"));
  auto text = data_file("psl2z.json");
  text.replace(text.find("\"head\": \"a\""), 11, "\"head\": 0");
  text.replace(text.find("\"tail\": \"b\""), 11, "\"tail\": 1");
  CHECK(parse_model(text) == by_name);
}
