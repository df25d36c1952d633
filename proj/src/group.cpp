#include "krank/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "krank/errors.hpp"

namespace krank {

namespace {

std::string element_name(Element a) { return "#" + std::to_string(a); }

// Composition "apply b, then a".
Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

void check_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) {
    throw NotAGroup("generator has length " + std::to_string(p.size()) +
                    ", expected degree " + std::to_string(degree));
  }
  std::vector<bool> seen(degree, false);
  for (auto x : p) {
    if (x >= degree || seen[x]) throw NotAGroup("generator is not a bijection");
    seen[x] = true;
  }
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

} // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  // Callers guarantee the group axioms; identity and inverses are read off.
  for (Element e = 0; e < order_; ++e) {
    if (mul(e, e) == e) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return rows;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup out = *this;
  out.label_ = std::move(label);
  return out;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty Cayley table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw NotAGroup("Cayley table row " + std::to_string(a) + " has length " +
                      std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
    for (auto v : table[a]) {
      if (v >= n) throw NotAGroup("Cayley table entry " + std::to_string(v) + " out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw NotAGroup("associativity fails for (" + element_name(a) + ", " +
                          element_name(b) + ", " + element_name(c) + ")");
        }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no identity element");

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(b, a) == *identity && at(a, b) == *identity;
    if (!found) throw NotAGroup("element " + element_name(a) + " has no inverse");
  }
  return FiniteGroup(n, std::move(flat), std::move(label));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           std::size_t degree, std::string label,
                                           std::size_t order_cap) {
  for (const auto& g : generators) check_bijection(g, degree);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  std::deque<Element> frontier{0};
  while (!frontier.empty()) {
    const Element cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      auto next = compose(g, elements[cur]);
      if (index.contains(next)) continue;
      if (elements.size() >= order_cap) {
        throw OrderBound("generated group exceeds order cap " + std::to_string(order_cap));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      frontier.push_back(static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = index.at(compose(elements[a], elements[b]));
  if (label.empty()) label = "perm<" + std::to_string(n) + ">";
  return FiniteGroup(n, std::move(flat), std::move(label));
}

FiniteGroup trivial() { return FiniteGroup::from_permutations({}, 1, "trivial"); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw ParameterOutOfRange("cyclic(n) requires n >= 1");
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(n, std::move(flat), "cyclic:" + std::to_string(n));
}

Permutation permutation_at(std::size_t n, std::size_t index) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  std::vector<std::size_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  Permutation out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::size_t digit = index / fact[i - 1];
    index %= fact[i - 1];
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

std::size_t permutation_index(std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    index = index * (n - i) + smaller;
  }
  return index;
}

FiniteGroup symmetric(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw ParameterOutOfRange("symmetric(n) requires n >= 1");
  const std::size_t order = factorial_capped(n, order_cap);
  if (order > order_cap) {
    throw OrderBound("symmetric(" + std::to_string(n) + ") exceeds order cap " +
                     std::to_string(order_cap));
  }
  std::vector<Permutation> perms(order);
  for (std::size_t i = 0; i < order; ++i) perms[i] = permutation_at(n, i);
  std::vector<Element> flat(order * order);
  Permutation prod(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      flat[a * order + b] = static_cast<Element>(permutation_index(prod));
    }
  }
  return FiniteGroup(order, std::move(flat), "symmetric:" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 2) throw ParameterOutOfRange("dihedral(n) requires n >= 2");
  const std::size_t order = 2 * n;
  // (s^x r^i)(s^y r^j) = s^(x+y) r^((-1)^y i + j)
  std::vector<Element> flat(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t x = a / n, i = a % n, y = b / n, j = b % n;
      const std::size_t rot = (y == 0 ? i : n - i) + j;
      flat[a * order + b] = static_cast<Element>(((x + y) % 2) * n + rot % n);
    }
  }
  return FiniteGroup(order, std::move(flat), "dihedral:" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  const std::size_t gn = g.order(), hn = h.order(), n = gn * hn;
  if (n > order_cap) {
    throw OrderBound("product of " + g.label() + " and " + h.label() + " exceeds order cap " +
                     std::to_string(order_cap));
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ga = static_cast<Element>(a / hn), ha = static_cast<Element>(a % hn);
      const auto gb = static_cast<Element>(b / hn), hb = static_cast<Element>(b % hn);
      flat[a * n + b] = static_cast<Element>(g.mul(ga, gb) * hn + h.mul(ha, hb));
    }
  }
  return FiniteGroup(n, std::move(flat), "product:(" + g.label() + "," + h.label() + ")");
}

void check_injective_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                                  std::span<const std::size_t> map) {
  if (map.size() != source.order()) {
    throw NotAHomomorphism("map has " + std::to_string(map.size()) + " entries, source " +
                           source.label() + " has order " + std::to_string(source.order()));
  }
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (map[a] >= target.order()) {
      throw NotAHomomorphism("image of " + element_name(static_cast<Element>(a)) +
                             " is out of range for " + target.label());
    }
  }
  for (Element a = 0; a < source.order(); ++a) {
    for (Element b = 0; b < source.order(); ++b) {
      const auto lhs = map[source.mul(a, b)];
      const auto rhs = target.mul(static_cast<Element>(map[a]), static_cast<Element>(map[b]));
      if (lhs != rhs) {
        throw NotAHomomorphism("f(ab) != f(a)f(b) for (a, b) = (" + element_name(a) + ", " +
                               element_name(b) + ")");
      }
    }
  }
  for (Element a = 0; a < source.order(); ++a) {
    if (a != source.identity() && map[a] == target.identity()) {
      throw NotInjective("non-identity element " + element_name(a) + " of " + source.label() +
                         " maps to the identity of " + target.label());
    }
  }
}

} // namespace krank
