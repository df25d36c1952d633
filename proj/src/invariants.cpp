#include "krank/invariants.hpp"

#include <utility>
#include <vector>

#include "krank/conjugacy.hpp"
#include "krank/errors.hpp"

namespace krank {

namespace {

// n mod 4 in {0, 1, 2, 3} for any sign of n.
int mod4(int n) noexcept { return ((n % 4) + 4) % 4; }

} // namespace

RepInvariants rep_invariants(const FiniteGroup& g) {
  const auto conj = conjugacy_data(g);
  RepInvariants inv;
  inv.k = conj.k;
  inv.m = conj.m;
  inv.c = (conj.k - conj.m) / 2;
  inv.r = conj.m + inv.c;
  inv.q = cyclic_subgroup_classes(g).q;
  return inv;
}

KRankFunction::KRankFunction(RepInvariants invariants, std::optional<Rank> rank_minus1,
                             std::string label)
    : invariants_(invariants), rank_minus1_(rank_minus1), label_(std::move(label)) {}

Rank KRankFunction::evaluate(int n) const {
  if (n <= -2) return 0;
  if (n == -1) {
    if (!rank_minus1_) throw MissingKMinus1Datum(label_);
    return *rank_minus1_;
  }
  if (n == 0) return 1;
  if (n == 1) return invariants_.r - invariants_.q;
  switch (mod4(n)) {
  case 1: return invariants_.r;
  case 3: return invariants_.c;
  default: return 0;
  }
}

KRankFunction k_rank_function(const FiniteGroup& g, std::optional<Rank> rank_minus1) {
  if (!rank_minus1 && g.is_trivial()) rank_minus1 = 0;
  return KRankFunction(rep_invariants(g), rank_minus1, g.label());
}

Rank rank_k_integers(int n) noexcept {
  return (n == 0 || (n > 1 && mod4(n) == 1)) ? 1 : 0;
}

BigInt partition_count(unsigned n) {
  // ways[t] after processing parts 1..p = partitions of t into parts <= p.
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned total = part; total <= n; ++total) ways[total] += ways[total - part];
  return ways[n];
}

} // namespace krank
