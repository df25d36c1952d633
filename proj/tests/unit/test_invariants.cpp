#include <doctest.h>

#include <limits>
#include <vector>

#include "krank/errors.hpp"
#include "krank/group_literal.hpp"
#include "krank/invariants.hpp"
#include "krank/oracles/brute_force.hpp"

using namespace krank;

namespace {

// Euler's pentagonal-number recurrence; independent of the library's
// parts-by-parts dynamic programme.
std::vector<BigInt> pentagonal_partitions(int limit) {
  std::vector<BigInt> p(static_cast<std::size_t>(limit) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= limit; ++n) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

} // namespace

TEST_CASE("rep_invariants of the small cyclic groups") {
  CHECK(rep_invariants(cyclic(2)) == RepInvariants{2, 2, 2, 0, 2});
  CHECK(rep_invariants(cyclic(3)) == RepInvariants{3, 1, 2, 1, 2});
  CHECK(rep_invariants(trivial()) == RepInvariants{1, 1, 1, 0, 1});
}

TEST_CASE("rep_invariants of S_4 and the symmetric family") {
  const auto s4 = rep_invariants(symmetric(4));
  CHECK(oracles::enumerate_partitions(4) == 5);
  CHECK(s4.r == 5);
  CHECK(s4.c == 0);
  CHECK(s4.q == 5);

  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto inv = rep_invariants(symmetric(n));
    const auto p = oracles::enumerate_partitions(n);
    CHECK(inv.r == p);
    CHECK(inv.c == 0);
    CHECK(inv.q == p);
    CHECK(partition_count(n) == p);
  }
}

TEST_CASE("RepInvariants relations hold on the catalog") {
  for (const auto& lit : catalog_groups()) {
    CAPTURE(to_string(lit));
    const auto inv = rep_invariants(build_group(lit));
    CHECK(inv.r == inv.m + (inv.k - inv.m) / 2);
    CHECK(inv.c == (inv.k - inv.m) / 2);
    CHECK(inv.r + inv.c == inv.k);
    CHECK(1 <= inv.q);
    CHECK(inv.q <= inv.r);
    CHECK(inv.r <= inv.k);
  }
}

TEST_CASE("k_rank_function evaluates every degree class") {
  const auto triv = k_rank_function(trivial());
  CHECK(triv.evaluate(5) == 1);
  CHECK(triv.evaluate(2) == 0);
  CHECK(triv.evaluate(0) == 1);
  CHECK(triv.evaluate(-1) == 0);

  const auto z2 = k_rank_function(cyclic(2), 0);
  CHECK(z2.evaluate(1) == 0);
  CHECK(z2.evaluate(5) == 2);
  CHECK(z2.evaluate(7) == 0);

  const auto z3 = k_rank_function(cyclic(3), 0);
  CHECK(z3.evaluate(7) == 1);
  CHECK(z3.evaluate(3) == 1);

  for (const auto& f : {triv, z2, z3}) CHECK(f.evaluate(-3) == 0);
}

TEST_CASE("k_rank_function without a K_{-1} datum") {
  const auto z2 = k_rank_function(cyclic(2));
  CHECK_FALSE(z2.rank_minus1().has_value());
  CHECK(z2.evaluate(-2) == 0);
  CHECK(z2.evaluate(0) == 1);
  try {
    (void)z2.evaluate(-1);
    FAIL("expected MissingKMinus1Datum");
  } catch (const MissingKMinus1Datum& e) {
    CHECK(e.group() == "cyclic:2");
  }
  CHECK(k_rank_function(cyclic(5), 4).evaluate(-1) == 4);
}

TEST_CASE("k_rank_function is 4-periodic above degree 1 with pattern (r, 0, c, 0)") {
  for (const auto& lit : catalog_groups()) {
    CAPTURE(to_string(lit));
    const auto f = k_rank_function(build_group(lit), 0);
    const auto& inv = f.invariants();
    CHECK(f.evaluate(1) == inv.r - inv.q);
    for (int n = 2; n <= 41; ++n) {
      const Rank expected = n % 4 == 1 ? inv.r : n % 4 == 3 ? inv.c : 0;
      CHECK(f.evaluate(n) == expected);
      CHECK(f.evaluate(n) == f.evaluate(n + 4));
    }
  }
}

TEST_CASE("rank_k_integers") {
  CHECK(rank_k_integers(0) == 1);
  CHECK(rank_k_integers(5) == 1);
  CHECK(rank_k_integers(9) == 1);
  for (int n : {1, 2, 3, 4, -1, -5, -3}) CHECK(rank_k_integers(n) == 0);
  const auto triv = k_rank_function(trivial());
  for (int n = -20; n <= 40; ++n) CHECK(rank_k_integers(n) == triv.evaluate(n));
}

TEST_CASE("partition_count") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(5) == 7);
  for (unsigned n = 0; n <= 20; ++n) CHECK(partition_count(n) == oracles::enumerate_partitions(n));

  const auto pent = pentagonal_partitions(500);
  for (unsigned n = 0; n <= 500; ++n) CHECK(partition_count(n) == pent[n]);
  // Exceeds 64 bits.
  CHECK(partition_count(500) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}
