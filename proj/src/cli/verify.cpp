#include "krank/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "krank/assembly.hpp"
#include "krank/conjugacy.hpp"
#include "krank/errors.hpp"
#include "krank/group_literal.hpp"
#include "krank/invariants.hpp"
#include "krank/model.hpp"
#include "krank/oracles/brute_force.hpp"
#include "krank/oracles/published_tables.hpp"

namespace krank {

namespace {

using oracles::is_known_erratum;

constexpr int kLo = kDefaultRangeLo;
constexpr int kHi = kDefaultRangeHi;

class Report {
public:
  explicit Report(std::string_view filter) : filter_(filter) {}

  // Runs `body` unless filtered out; an escaping exception is a failure.
  void check(const std::string& name, const std::function<void(std::vector<std::string>&)>& body) {
    if (!filter_.empty() && name.find(filter_) == std::string::npos) return;
    std::vector<std::string> problems;
    try {
      body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    if (problems.empty()) {
      results_.push_back({name, CheckStatus::Pass, {}});
    } else {
      std::string detail;
      for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
      results_.push_back({name, CheckStatus::Fail, detail});
    }
  }

  void erratum(const std::string& name, std::string detail) {
    if (!filter_.empty() && name.find(filter_) == std::string::npos) return;
    results_.push_back({name, CheckStatus::Erratum, std::move(detail)});
  }

  void fail(const std::string& name, std::string detail) {
    if (!filter_.empty() && name.find(filter_) == std::string::npos) return;
    results_.push_back({name, CheckStatus::Fail, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  std::string filter_;
  std::vector<CheckResult> results_;
};

std::string mismatch(int n, Rank computed, std::uint64_t expected) {
  std::ostringstream s;
  s << "n=" << n << ": computed " << computed << ", expected " << expected;
  return s.str();
}

Rank sum_p(std::size_t n) { return static_cast<Rank>(partition_count(static_cast<unsigned>(n))); }

RankTable table_of(const ModelSpec& spec) { return rank_table(realize(spec), kLo, kHi); }

// Compares a computed table to a published one; errata degrees are reported
// separately with the computed value checked against `erratum_value`.
void compare_published(Report& report, const std::string& name, const std::string& table_kind,
                       const RankTable& table, const std::function<std::uint64_t(int)>& published,
                       const std::function<Rank(int)>& erratum_value) {
  report.check(name, [&](auto& problems) {
    for (const auto& row : table.rows) {
      if (is_known_erratum(table_kind, row.n)) continue;
      if (row.rank != published(row.n)) problems.push_back(mismatch(row.n, row.rank, published(row.n)));
    }
  });
  for (const auto& row : table.rows) {
    if (!is_known_erratum(table_kind, row.n)) continue;
    const auto expected = erratum_value(row.n);
    const std::string ename = name + "@n=" + std::to_string(row.n);
    if (row.rank != expected) {
      report.fail(ename, "erratum degree: " + mismatch(row.n, row.rank, expected));
      continue;
    }
    std::string reason;
    for (const auto& e : oracles::known_errata())
      if (e.table == table_kind && e.degree == row.n) reason = e.reason;
    report.erratum(ename, "known erratum: computed " + std::to_string(row.rank) + ", published table claims " +
                              std::to_string(published(row.n)) + " (" + reason + ")");
  }
}

void oracle_checks(Report& report) {
  const auto groups = catalog_groups();

  report.check("oracle.conjugacy", [&](auto& problems) {
    for (const auto& lit : groups) {
      const auto g = build_group(lit);
      const auto fast = conjugacy_data(g);
      const auto slow = oracles::brute_conjugacy(g);
      std::set<std::set<Element>> fast_classes;
      for (const auto& c : fast.classes) fast_classes.emplace(c.begin(), c.end());
      if (fast_classes != slow.classes || fast.k != slow.k || fast.m != slow.m) {
        problems.push_back(to_string(lit) + ": conjugacy data disagrees with brute force");
      }
    }
  });

  report.check("oracle.cyclic_subgroups", [&](auto& problems) {
    for (const auto& lit : groups) {
      const auto g = build_group(lit);
      const auto fast = cyclic_subgroup_classes(g);
      const auto slow = oracles::brute_cyclic_subgroups(g);
      std::set<const std::set<std::set<Element>>*> hit;
      for (const auto& rep : fast.representatives) {
        const std::set<Element> s(rep.begin(), rep.end());
        for (const auto& orbit : slow.orbits)
          if (orbit.contains(s)) hit.insert(&orbit);
      }
      if (fast.q != slow.q || hit.size() != slow.q) {
        problems.push_back(to_string(lit) + ": q = " + std::to_string(fast.q) + ", brute force " +
                           std::to_string(slow.q));
      }
    }
  });

  report.check("oracle.partitions", [&](auto& problems) {
    for (unsigned n = 0; n <= 20; ++n) {
      if (partition_count(n) != oracles::enumerate_partitions(n)) {
        problems.push_back("p(" + std::to_string(n) + ") disagrees with enumeration");
      }
    }
  });

  report.check("oracle.rational_rank", [&](auto& problems) {
    std::mt19937 rng(20240101);
    std::uniform_int_distribution<int> shape(0, 12), entry(-9, 9), sparsity(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix m(static_cast<std::size_t>(shape(rng)), static_cast<std::size_t>(shape(rng)));
      const int zero_bias = sparsity(rng);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = (sparsity(rng) < zero_bias) ? 0 : entry(rng);
      if (rational_rank(m) != oracles::fraction_rank(m)) {
        problems.push_back("trial " + std::to_string(trial) + " disagrees");
      }
    }
  });
}

void invariant_checks(Report& report) {
  report.check("invariants.properties", [&](auto& problems) {
    for (const auto& lit : catalog_groups()) {
      const auto g = build_group(lit);
      const auto inv = rep_invariants(g);
      const auto name = to_string(lit);
      if (inv.r + inv.c != inv.k) problems.push_back(name + ": r + c != k");
      if (!(1 <= inv.q && inv.q <= inv.r && inv.r <= inv.k)) problems.push_back(name + ": 1 <= q <= r <= k fails");
      if ((inv.k - inv.m) % 2 != 0) problems.push_back(name + ": k - m odd");
      if (g.is_abelian()) {
        std::uint64_t involutions = 0;
        for (Element a = 0; a < g.order(); ++a) involutions += g.mul(a, a) == g.identity();
        if (inv.k != g.order() || inv.m != involutions) problems.push_back(name + ": abelian counts wrong");
      }
    }
  });

  report.check("invariants.rank_pattern", [&](auto& problems) {
    const auto z2 = rep_invariants(cyclic(2));
    const auto z3 = rep_invariants(cyclic(3));
    if (z2.r != 2 || z2.c != 0 || z2.q != 2) problems.push_back("Z/2 must give (r, c, q) = (2, 0, 2)");
    if (z3.r != 2 || z3.c != 1 || z3.q != 2) problems.push_back("Z/3 must give (r, c, q) = (2, 1, 2)");
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto inv = rep_invariants(symmetric(n));
      const auto p = oracles::enumerate_partitions(static_cast<unsigned>(n));
      if (inv.r != p || inv.c != 0 || inv.q != p || inv.k != p) {
        problems.push_back("S_" + std::to_string(n) + " must give (p(n), 0, p(n))");
      }
    }
  });

  report.check("invariants.rank_k_integers", [&](auto& problems) {
    const auto triv = k_rank_function(trivial());
    for (int n = -10; n <= 30; ++n) {
      if (rank_k_integers(n) != oracles::published_rank_integers(n) || triv.evaluate(n) != rank_k_integers(n)) {
        problems.push_back("n=" + std::to_string(n));
      }
    }
  });
}

void table_checks(Report& report) {
  compare_published(report, "table.psl2z", "psl2z",
                    table_of(expand_example(NamedExample::psl2z()).front()), oracles::published_psl2z,
                    [](int) { return Rank{0}; });

  for (std::size_t m = 1; m <= 3; ++m) {
    const auto specs = expand_example(NamedExample::free_group(m));
    const auto complex_table = table_of(specs.at(0));
    const auto graph_table = table_of(specs.at(1));
    const std::string name = "table.free_group(" + std::to_string(m) + ")";
    compare_published(report, name, "free_group", complex_table,
                      [m](int n) { return oracles::published_free_group(m, n); }, [](int) { return Rank{0}; });
    report.check(name + ".routes_agree", [&](auto& problems) {
      if (complex_table.values() != graph_table.values()) problems.push_back("cell complex and loop graph differ");
    });
  }

  const std::vector<std::pair<GroupLiteral, GroupLiteral>> pairs{
      {GroupLiteral::cyclic(2), GroupLiteral::cyclic(3)},
      {GroupLiteral::cyclic(2), GroupLiteral::cyclic(2)},
      {GroupLiteral::cyclic(3), GroupLiteral::symmetric(3)},
      {GroupLiteral::symmetric(3), GroupLiteral::symmetric(4)},
  };
  for (const auto& [a, b] : pairs) {
    const auto ia = rep_invariants(build_group(a)), ib = rep_invariants(build_group(b));
    const auto table = table_of(expand_example(NamedExample::free_product({a, b})).front());
    const std::string name = "table.free_product(" + to_string(a) + "," + to_string(b) + ")";
    compare_published(report, name, "free_product", table,
                      [&](int n) {
                        return n < -1 ? 0 : oracles::published_free_product(ia.r, ia.c, ia.q, ib.r, ib.c, ib.q, n);
                      },
                      [](int) { return Rank{0}; });
    // The displayed general formula subtracts rank K_{n-1}(Z); the case table
    // (and the direct computation) subtract rank K_n(Z).
    std::vector<int> off;
    for (const auto& row : table.rows) {
      if (row.n < 1) continue;
      const auto fa = oracles::published_finite(ia.r, ia.c, ia.q, row.n);
      const auto fb = oracles::published_finite(ib.r, ib.c, ib.q, row.n);
      if (oracles::published_free_product_formula(fa, fb, row.n) != static_cast<std::int64_t>(row.rank)) {
        off.push_back(row.n);
      }
    }
    if (!off.empty()) {
      std::string degrees;
      for (int n : off) degrees += (degrees.empty() ? "" : ",") + std::to_string(n);
      report.erratum(name + ".general_formula",
                     "known erratum: the general formula with rank K_{n-1}(Z) disagrees with the case table at n=" +
                         degrees + "; computed values follow the case table");
    }
  }

  for (std::size_t g = 2; g <= 3; ++g) {
    compare_published(report, "table.surface(" + std::to_string(g) + ")", "surface",
                      table_of(expand_example(NamedExample::surface(g)).front()),
                      [g](int n) { return oracles::published_surface(g, n); }, [](int) { return Rank{0}; });
  }

  for (std::size_t n = 2; n <= 5; ++n) {
    const auto table = table_of(expand_example(NamedExample::fn_sn(n)).front());
    const auto pn = sum_p(n), pn1 = sum_p(n - 1);
    const std::string name = "table.fn_sn(" + std::to_string(n) + ")";
    compare_published(report, name, "fn_sn", table,
                      [=](int i) { return i < -1 ? 0 : oracles::published_fn_sn(pn, pn1, i); },
                      [](int) { return Rank{0}; });
    report.check(name + ".decomposition", [&](auto& problems) {
      const auto big = rep_invariants(symmetric(n)), small = rep_invariants(symmetric(n - 1));
      for (const auto& row : table.rows) {
        const auto lhs = row.n == -1 ? 0 : oracles::published_finite(big.r, big.c, big.q, row.n);
        const auto rhs = row.n - 1 == -1 ? 0 : oracles::published_finite(small.r, small.c, small.q, row.n - 1);
        if (row.rank != lhs + rhs) problems.push_back(mismatch(row.n, row.rank, lhs + rhs));
      }
    });
  }

  report.check("table.totality", [&](auto& problems) {
    for (const auto& spec : catalog_models()) {
      const auto table = rank_table(realize(spec), -10, 30);
      for (const auto& row : table.rows) {
        if (row.n <= -2 && row.rank != 0) problems.push_back(spec.name + ": nonzero below -1");
      }
    }
  });
}

} // namespace

std::vector<CheckResult> run_verify(std::string_view filter) {
  Report report(filter);
  oracle_checks(report);
  invariant_checks(report);
  table_checks(report);
  return report.take();
}

} // namespace krank
