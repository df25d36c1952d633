#include "krank/conjugacy.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace krank {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

} // namespace

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyData data;
  data.class_of.assign(n, kUnassigned);

  // Visiting the identity first puts it in class 0.
  std::vector<Element> visit_order{g.identity()};
  for (Element x = 0; x < n; ++x)
    if (x != g.identity()) visit_order.push_back(x);

  for (Element h : visit_order) {
    if (data.class_of[h] != kUnassigned) continue;
    const std::size_t id = data.classes.size();
    std::vector<Element> cls;
    for (Element x = 0; x < n; ++x) {
      const Element conj = g.mul(g.mul(x, h), g.inverse(x));
      if (data.class_of[conj] == kUnassigned) {
        data.class_of[conj] = id;
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    data.classes.push_back(std::move(cls));
  }

  data.k = data.classes.size();
  data.inversion_pairing.resize(data.k);
  for (std::size_t c = 0; c < data.k; ++c) {
    data.inversion_pairing[c] = data.class_of[g.inverse(data.classes[c].front())];
    if (data.inversion_pairing[c] == c) ++data.m;
  }
  return data;
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x) {
  std::vector<Element> out{g.identity()};
  for (Element p = x; p != g.identity(); p = g.mul(p, x)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

CyclicSubgroupClasses cyclic_subgroup_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();

  std::map<std::vector<Element>, std::size_t> index;
  std::vector<std::vector<Element>> subgroups;
  for (Element x = 0; x < n; ++x) {
    auto s = cyclic_subgroup(g, x);
    if (index.emplace(s, subgroups.size()).second) subgroups.push_back(std::move(s));
  }
  // Order by size then content so representatives are deterministic and the
  // trivial subgroup comes first.
  std::sort(subgroups.begin(), subgroups.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  index.clear();
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i], i);

  CyclicSubgroupClasses out;
  std::vector<bool> covered(subgroups.size(), false);
  std::vector<Element> conj;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (covered[i]) continue;
    out.representatives.push_back(subgroups[i]);
    for (Element x = 0; x < n; ++x) {
      conj.clear();
      for (Element h : subgroups[i]) conj.push_back(g.mul(g.mul(x, h), g.inverse(x)));
      std::sort(conj.begin(), conj.end());
      covered[index.at(conj)] = true;
    }
  }
  out.q = out.representatives.size();
  return out;
}

} // namespace krank
