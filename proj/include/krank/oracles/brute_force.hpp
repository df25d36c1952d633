#pragma once

// Naive re-implementations used only to cross-check the library. Nothing here
// calls into the algorithms it checks; groups are accessed only through their
// multiplication table.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "krank/group.hpp"
#include "krank/matrix.hpp"

namespace krank::oracles {

struct BruteConjugacy {
  std::set<std::set<Element>> classes;
  std::size_t k = 0;
  std::size_t m = 0; // classes containing the inverses of their members
};

/// O(order^3): a ~ b iff some g has g a g^-1 = b, by exhaustive search.
BruteConjugacy brute_conjugacy(const FiniteGroup& g);

struct BruteCyclicSubgroups {
  /// Conjugacy orbits of cyclic subgroups, each subgroup an element set.
  std::set<std::set<std::set<Element>>> orbits;
  std::size_t q = 0;
};

BruteCyclicSubgroups brute_cyclic_subgroups(const FiniteGroup& g);

/// Counts partitions of n by listing every non-increasing sequence.
std::uint64_t enumerate_partitions(unsigned n);

/// Rank by Gauss-Jordan elimination over exact rationals.
std::size_t fraction_rank(const IntMatrix& m);

} // namespace krank::oracles
