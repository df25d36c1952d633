#include "krank/oracles/brute_force.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace krank::oracles {

namespace {

Element find_identity(const FiniteGroup& g) {
  for (Element e = 0; e < g.order(); ++e) {
    bool ok = true;
    for (Element a = 0; a < g.order() && ok; ++a) ok = g.mul(e, a) == a;
    if (ok) return e;
  }
  return 0;
}

Element find_inverse(const FiniteGroup& g, Element a, Element id) {
  for (Element b = 0; b < g.order(); ++b)
    if (g.mul(a, b) == id) return b;
  return id;
}

bool conjugate(const FiniteGroup& g, const std::vector<Element>& inv, Element a, Element b) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(g.mul(x, a), inv[x]) == b) return true;
  return false;
}

std::set<Element> generated(const FiniteGroup& g, Element x, Element id) {
  std::set<Element> s{id};
  Element p = x;
  while (s.insert(p).second) p = g.mul(p, x);
  return s;
}

void count_partitions(unsigned remaining, unsigned max_part, std::uint64_t& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    count_partitions(remaining - part, part, count);
  }
}

} // namespace

BruteConjugacy brute_conjugacy(const FiniteGroup& g) {
  const Element id = find_identity(g);
  std::vector<Element> inv(g.order());
  for (Element a = 0; a < g.order(); ++a) inv[a] = find_inverse(g, a, id);

  BruteConjugacy out;
  for (Element a = 0; a < g.order(); ++a) {
    std::set<Element> cls;
    for (Element b = 0; b < g.order(); ++b)
      if (conjugate(g, inv, a, b)) cls.insert(b);
    out.classes.insert(std::move(cls));
  }
  out.k = out.classes.size();
  for (const auto& cls : out.classes) {
    const Element a = *cls.begin();
    if (conjugate(g, inv, a, inv[a])) ++out.m;
  }
  return out;
}

BruteCyclicSubgroups brute_cyclic_subgroups(const FiniteGroup& g) {
  const Element id = find_identity(g);
  std::vector<Element> inv(g.order());
  for (Element a = 0; a < g.order(); ++a) inv[a] = find_inverse(g, a, id);

  std::set<std::set<Element>> subgroups;
  for (Element x = 0; x < g.order(); ++x) subgroups.insert(generated(g, x, id));

  BruteCyclicSubgroups out;
  for (const auto& s : subgroups) {
    std::set<std::set<Element>> orbit;
    for (Element x = 0; x < g.order(); ++x) {
      std::set<Element> conj;
      for (Element h : s) conj.insert(g.mul(g.mul(x, h), inv[x]));
      orbit.insert(std::move(conj));
    }
    out.orbits.insert(std::move(orbit));
  }
  out.q = out.orbits.size();
  return out;
}

std::uint64_t enumerate_partitions(unsigned n) {
  std::uint64_t count = 0;
  count_partitions(n, n, count);
  return count;
}

std::size_t fraction_rank(const IntMatrix& m) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> a(m.rows(), std::vector<cpp_rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    const cpp_rational pivot = a[rank][c];
    for (auto& x : a[rank]) x /= pivot;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const cpp_rational f = a[r][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

} // namespace krank::oracles
