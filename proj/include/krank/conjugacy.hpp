#pragma once

#include <cstddef>
#include <vector>

#include "krank/group.hpp"

namespace krank {

/// Conjugacy classes together with the pairing c -> class of inverses.
struct ConjugacyData {
  std::vector<std::vector<Element>> classes; // each sorted; class 0 holds the identity
  std::vector<std::size_t> class_of;         // element -> class index
  std::vector<std::size_t> inversion_pairing;
  std::size_t k = 0; // number of classes
  std::size_t m = 0; // number of self-paired classes
};

/// One representative per conjugacy class of cyclic subgroups. Each
/// representative is the sorted element list of <g> for some g.
struct CyclicSubgroupClasses {
  std::vector<std::vector<Element>> representatives;
  std::size_t q = 0;
};

ConjugacyData conjugacy_data(const FiniteGroup& g);

CyclicSubgroupClasses cyclic_subgroup_classes(const FiniteGroup& g);

/// Sorted element list of the cyclic subgroup generated by `x`.
std::vector<Element> cyclic_subgroup(const FiniteGroup& g, Element x);

} // namespace krank
