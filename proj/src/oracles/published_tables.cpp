#include "krank/oracles/published_tables.hpp"

namespace krank::oracles {

namespace {

bool is_mod4(int n, int r) { return ((n % 4) + 4) % 4 == r; }

} // namespace

std::uint64_t published_rank_integers(int n) {
  if ((is_mod4(n, 1) && n > 1) || n == 0) return 1;
  return 0;
}

std::uint64_t published_finite(std::uint64_t r, std::uint64_t c, std::uint64_t q, int n) {
  if (n > 1) {
    if (is_mod4(n, 1)) return r;
    if (is_mod4(n, 3)) return c;
    return 0;
  }
  if (n == 1) return r - q;
  if (n == 0) return 1;
  return 0; // n < -1
}

std::uint64_t published_free_group(std::uint64_t m, int n) {
  if ((is_mod4(n, 1) && n > 1) || n == 0) return 1;
  if ((is_mod4(n, 2) && n > 2) || n == 1) return m;
  return 0;
}

std::uint64_t published_free_product(std::uint64_t r1, std::uint64_t c1, std::uint64_t q1,
                                     std::uint64_t r2, std::uint64_t c2, std::uint64_t q2, int n) {
  if (n == 0) return 1;
  if (n == 1) return r1 + r2 - q1 - q2;
  if (is_mod4(n, 1) && n > 1) return r1 + r2 - 1;
  if (is_mod4(n, 3) && n > 1) return c1 + c2;
  return 0;
}

std::int64_t published_free_product_formula(std::uint64_t rank_g1, std::uint64_t rank_g2, int n) {
  return static_cast<std::int64_t>(rank_g1 + rank_g2) -
         static_cast<std::int64_t>(published_rank_integers(n - 1));
}

std::uint64_t published_psl2z(int n) {
  if (n == -1) return 0;
  if (n == 0) return 1;
  if (n == 1) return 0;
  if (is_mod4(n, 1) && n > 1) return 3;
  if (is_mod4(n, 3) && n > 1) return 1;
  return 0;
}

std::uint64_t published_surface(std::uint64_t g, int n) {
  if (n == 0 || n == 2 || ((is_mod4(n, 1) || is_mod4(n, 3)) && n > 1)) return 1;
  if (n == 1 || (is_mod4(n, 2) && n > 1)) return 2 * g;
  return 0;
}

std::uint64_t published_symmetric(std::uint64_t p_n, int i) {
  if (is_mod4(i, 1) && i > 1) return p_n;
  if (i == 0) return 1;
  return 0;
}

std::uint64_t published_fn_sn(std::uint64_t p_n, std::uint64_t p_n_minus_1, int i) {
  if (is_mod4(i, 1) && i > 1) return p_n;
  if (is_mod4(i, 2) && i > 1) return p_n_minus_1;
  if (i == 0 || i == 1) return 1;
  return 0;
}

const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> errata{
      {"surface", 3,
       "n = 3 needs rank K_3(Z) + 2g rank K_2(Z) + rank K_1(Z), and all three vanish"},
      {"fn_sn", 2,
       "i = 2 needs rank K_2(Z[S_n]) + rank K_1(Z[S_{n-1}]) = 0 + (r - q) = 0"},
  };
  return errata;
}

bool is_known_erratum(const std::string& table, int degree) {
  for (const auto& e : known_errata())
    if (e.table == table && e.degree == degree) return true;
  return false;
}

} // namespace krank::oracles
