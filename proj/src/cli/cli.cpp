#include "krank/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "krank/assembly.hpp"
#include "krank/errors.hpp"
#include "krank/group_literal.hpp"
#include "krank/invariants.hpp"
#include "krank/model.hpp"
#include "krank/render.hpp"
#include "krank/verify.hpp"

namespace krank {

namespace {

struct Range {
  int lo = kDefaultRangeLo;
  int hi = kDefaultRangeHi;
};

class UsageError : public Error {
public:
  using Error::Error;
};

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like <lo>..<hi>, got '" + text + "'");
  Range r{parse_int(std::string_view(text).substr(0, dots), "range bound"),
          parse_int(std::string_view(text).substr(dots + 2), "range bound")};
  if (r.lo > r.hi) throw UsageError("range " + text + " is empty");
  return r;
}

TableFormat parse_format(const std::string& text) {
  if (auto f = parse_table_format(text)) return *f;
  throw UsageError("unknown format '" + text + "' (expected text, csv or json)");
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw UsageError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open model file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string render_invariants(const GroupLiteral& lit, const FiniteGroup& g, const KRankFunction& f,
                              bool json_format) {
  const auto& inv = f.invariants();
  if (json_format) {
    nlohmann::json j = {{"group", to_string(lit)}, {"order", g.order()}, {"k", inv.k}, {"m", inv.m},
                        {"r", inv.r}, {"c", inv.c}, {"q", inv.q}};
    nlohmann::json pattern = {{"n<=-2", 0}, {"n=0", 1}, {"n=1", inv.r - inv.q},
                              {"n=1mod4,n>1", inv.r}, {"n=3mod4,n>1", inv.c}, {"n_even,n>1", 0}};
    pattern["n=-1"] = f.rank_minus1() ? nlohmann::json(*f.rank_minus1()) : nlohmann::json(nullptr);
    j["k_rank_pattern"] = pattern;
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "group: " << to_string(lit) << " (order " << g.order() << ")\n"
    << "k = " << inv.k << "  (conjugacy classes)\n"
    << "m = " << inv.m << "  (classes closed under inversion)\n"
    << "r = " << inv.r << "  (real conjugacy classes)\n"
    << "c = " << inv.c << "  (real classes of complex type)\n"
    << "q = " << inv.q << "  (conjugacy classes of cyclic subgroups)\n"
    << "rank K_n(Z[G]):\n";
  const auto line = [&](const char* when, const std::string& value) {
    s << "  " << std::left << std::setw(20) << when << value << '\n';
  };
  line("n <= -2", "0");
  line("n = -1", f.rank_minus1() ? std::to_string(*f.rank_minus1()) : "unknown (external datum)");
  line("n = 0", "1");
  line("n = 1", std::to_string(inv.r - inv.q) + "  (r - q)");
  line("n = 1 mod 4, n > 1", std::to_string(inv.r) + "  (r)");
  line("n = 3 mod 4, n > 1", std::to_string(inv.c) + "  (c)");
  line("n even, n > 1", "0");
  return s.str();
}

std::string render_verify(const std::vector<CheckResult>& results, int& failures) {
  std::ostringstream s;
  int pass = 0, errata = 0;
  failures = 0;
  for (const auto& r : results) {
    switch (r.status) {
    case CheckStatus::Pass: ++pass; s << "PASS     "; break;
    case CheckStatus::Erratum: ++errata; s << "ERRATUM  "; break;
    case CheckStatus::Fail: ++failures; s << "FAIL     "; break;
    }
    s << r.name;
    if (!r.detail.empty()) s << "  " << r.detail;
    s << '\n';
  }
  s << "summary: " << pass << " passed, " << errata << " known errata, " << failures << " failed\n";
  return s.str();
}

// CLI11 would read "-2..9" as an option; glue such values to their flag.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--range" && i + 1 < args.size() && args[i + 1].starts_with("-")) {
      out.push_back("--range=" + args[++i]);
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranks of algebraic K-theory groups K_n(Z[G]) by exact computation", "krank"};
  app.require_subcommand(1);

  std::string group_text, model_path, range_text = "-2..13", format_text = "text", output_path, filter;
  std::optional<Rank> rank_minus1;
  std::string example;
  std::vector<std::string> params;

  auto* inv_cmd = app.add_subcommand("invariants", "Print (k, m, r, c, q) and the K-rank pattern of a finite group");
  inv_cmd->add_option("--group", group_text, "Group literal: trivial, cyclic:n, symmetric:n, dihedral:n, product:(a,b,...)")
      ->required();
  inv_cmd->add_option("--rank-minus1", rank_minus1, "rank K_{-1}(Z[G]) if known");
  inv_cmd->add_option("--format", format_text, "text or json");

  auto* table_cmd = app.add_subcommand("rank-table", "Tabulate rank K_n(Z[G]) for a model file");
  table_cmd->add_option("--model", model_path, "Model file (JSON)")->required();
  table_cmd->add_option("--range", range_text, "Degree range <lo>..<hi>");
  table_cmd->add_option("--format", format_text, "text, csv or json");
  table_cmd->add_option("--output", output_path, "Write to a file instead of standard output");

  auto* example_cmd = app.add_subcommand("example", "Tabulate a named example");
  example_cmd->add_option("name", example, "free_group, free_product, psl2z, surface, fn_sn or finite")->required();
  example_cmd->add_option("--param", params, "Example parameter key=value (repeatable)");
  example_cmd->add_option("--range", range_text, "Degree range <lo>..<hi>");
  example_cmd->add_option("--format", format_text, "text, csv or json");
  example_cmd->add_option("--output", output_path, "Write to a file instead of standard output");

  auto* verify_cmd = app.add_subcommand("verify", "Run oracle cross-checks and published-table regressions");
  verify_cmd->add_option("--filter", filter, "Only run checks whose name contains this text");

  auto args = normalize(raw_args);
  std::vector<const char*> argv{"krank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::string text;
    int status = 0;
    if (*inv_cmd) {
      const bool json_format = parse_format(format_text) == TableFormat::Json;
      GroupLiteral lit;
      try {
        lit = parse_group_literal(group_text);
      } catch (const SchemaError& e) {
        throw UsageError(e.what());
      }
      const auto g = build_group(lit);
      const auto f = k_rank_function(g, rank_minus1 ? rank_minus1 : catalog_rank_minus1(lit));
      text = render_invariants(lit, g, f, json_format);
    } else if (*table_cmd) {
      const auto range = parse_range(range_text);
      const auto format = parse_format(format_text);
      const auto spec = parse_model(read_file(model_path));
      text = render_table(rank_table(realize(spec), range.lo, range.hi), format);
    } else if (*example_cmd) {
      const auto range = parse_range(range_text);
      const auto format = parse_format(format_text);
      std::map<std::string, std::string> kv;
      for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + p + "'");
        kv[p.substr(0, eq)] = p.substr(eq + 1);
      }
      const auto spec = expand_example(make_named_example(example, kv)).front();
      text = render_table(rank_table(realize(spec), range.lo, range.hi), format);
    } else if (*verify_cmd) {
      int failures = 0;
      text = render_verify(run_verify(filter), failures);
      status = failures == 0 ? 0 : 1;
    }
    write_output(text, output_path, out);
    return status;
  } catch (const MissingKMinus1Datum& e) {
    err << "error: " << e.what() << "\n"
        << "hint: degrees -1 and 0 need rank K_{-1}; start the range at 1 or add "
           "\"rank_minus1\" for group '"
        << e.group() << "'\n";
    return 3;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace krank
