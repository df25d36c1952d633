#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace krank {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// A finite group stored as a dense Cayley table over element indices
/// 0..order-1. Immutable once constructed; every factory validates or
/// constructs the group axioms.
class FiniteGroup {
public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  std::span<const Element> inverses() const noexcept { return inverse_; }

  /// Row-major copy of the multiplication table.
  std::vector<std::vector<Element>> table() const;

  bool is_abelian() const noexcept;

  FiniteGroup with_label(std::string label) const;
  bool is_trivial() const noexcept { return order_ == 1; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

  /// Validates the table (closure, associativity, identity, inverses).
  /// Throws NotAGroup naming the witnessing element or triple.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::string label);

  /// Closes the set generated by `generators` under composition. Elements are
  /// ordered breadth-first from the identity, following generators in order.
  /// Throws OrderBound when the closure exceeds `order_cap`.
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                       std::size_t degree, std::string label = {},
                                       std::size_t order_cap = kDefaultOrderCap);

private:
  // Trusted construction for tables that satisfy the axioms by construction.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string label);

  friend FiniteGroup cyclic(std::size_t n);
  friend FiniteGroup symmetric(std::size_t n, std::size_t order_cap);
  friend FiniteGroup dihedral(std::size_t n);
  friend FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                    std::size_t order_cap);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::string label_;
};

// Builders. Element orderings are fixed:
//   cyclic(n):      element i is g^i.
//   symmetric(n):   permutations in lexicographic one-line order; the
//                   product a*b is the composition "apply b, then a".
//   dihedral(n):    order 2n; element i < n is r^i, element n + i is s r^i,
//                   with s r s^-1 = r^-1.
//   direct_product: element (a, b) has index a * |H| + b.
FiniteGroup trivial();
FiniteGroup cyclic(std::size_t n);
FiniteGroup symmetric(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup dihedral(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t order_cap = kDefaultOrderCap);

/// Permutation at position `index` in the lexicographic enumeration of S_n.
Permutation permutation_at(std::size_t n, std::size_t index);
/// Inverse of permutation_at.
std::size_t permutation_index(std::span<const std::uint32_t> perm);

/// Checks that `map` (indexed by source elements) is an injective
/// homomorphism source -> target. Throws NotAHomomorphism naming (a, b) with
/// f(ab) != f(a)f(b), or NotInjective naming a non-identity kernel element.
void check_injective_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                  std::span<const std::size_t> map);

} // namespace krank
