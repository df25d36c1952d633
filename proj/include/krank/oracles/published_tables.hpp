#pragma once

// Published closed-form rank tables, transcribed case by case. These are the
// regression targets for the computed tables; they are written directly from
// the published case analysis and share no code with the assembly.

#include <cstdint>
#include <string>
#include <vector>

namespace krank::oracles {

/// rank K_n(Z).
std::uint64_t published_rank_integers(int n);

/// rank K_n(Z[H]) for finite H from (r, c, q), n != -1.
std::uint64_t published_finite(std::uint64_t r, std::uint64_t c, std::uint64_t q, int n);

/// Free group on m generators.
std::uint64_t published_free_group(std::uint64_t m, int n);

/// G1 * G2 from the displayed case table (n >= 0).
std::uint64_t published_free_product(std::uint64_t r1, std::uint64_t c1, std::uint64_t q1,
                                     std::uint64_t r2, std::uint64_t c2, std::uint64_t q2, int n);

/// G1 * G2 from the displayed general formula
/// rank K_n(G1) + rank K_n(G2) - rank K_{n-1}(Z) (n >= 1).
std::int64_t published_free_product_formula(std::uint64_t rank_g1, std::uint64_t rank_g2, int n);

/// PSL_2(Z).
std::uint64_t published_psl2z(int n);

/// Fundamental group of the closed orientable surface of genus g.
std::uint64_t published_surface(std::uint64_t g, int n);

/// Z[S_n] from p(n).
std::uint64_t published_symmetric(std::uint64_t p_n, int i);

/// F_n x| S_n from p(n) and p(n-1).
std::uint64_t published_fn_sn(std::uint64_t p_n, std::uint64_t p_n_minus_1, int i);

/// A degree where the published table disagrees with the direct derivation.
struct KnownErratum {
  std::string table; // "surface" or "fn_sn"
  int degree;
  std::string reason;
};

const std::vector<KnownErratum>& known_errata();

bool is_known_erratum(const std::string& table, int degree);

} // namespace krank::oracles
