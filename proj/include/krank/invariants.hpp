#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "krank/group.hpp"

namespace krank {

using Rank = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Counts derived from conjugacy data of a finite group H.
///   r: real conjugacy classes (classes of h and h^-1 fused)
///   c: real classes of complex type (h not conjugate to h^-1)
///   q: conjugacy classes of cyclic subgroups
/// These equal the numbers of real irreducible representations, those of
/// complex type, and rational irreducible representations respectively.
struct RepInvariants {
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::uint64_t c = 0;
  std::uint64_t q = 0;

  friend bool operator==(const RepInvariants&, const RepInvariants&) = default;
};

RepInvariants rep_invariants(const FiniteGroup& g);

/// The map n -> rank K_n(Z[H]) for a finite group H:
///   n <= -2 : 0
///   n == -1 : external datum (may be unknown)
///   n == 0  : 1
///   n == 1  : r - q
///   n > 1   : r if n = 1 mod 4, c if n = 3 mod 4, 0 if n even
class KRankFunction {
public:
  KRankFunction(RepInvariants invariants, std::optional<Rank> rank_minus1, std::string label);

  /// Throws MissingKMinus1Datum at n = -1 when the datum is unknown.
  Rank evaluate(int n) const;

  const RepInvariants& invariants() const noexcept { return invariants_; }
  const std::optional<Rank>& rank_minus1() const noexcept { return rank_minus1_; }
  const std::string& label() const noexcept { return label_; }

private:
  RepInvariants invariants_;
  std::optional<Rank> rank_minus1_;
  std::string label_;
};

/// When `rank_minus1` is absent it defaults to 0 for the trivial group and is
/// unknown otherwise.
KRankFunction k_rank_function(const FiniteGroup& g, std::optional<Rank> rank_minus1 = {});

/// rank K_n(Z): 1 if n = 0 or (n = 1 mod 4 and n > 1), else 0.
Rank rank_k_integers(int n) noexcept;

/// Number of integer partitions of n (exact).
BigInt partition_count(unsigned n);

} // namespace krank
