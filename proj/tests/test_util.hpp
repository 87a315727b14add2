#pragma once

#include <vector>

#include "core/semilattice.hpp"

namespace pmlat::testutil {

inline Poset named_poset(const std::vector<std::string>& names,
                         const std::vector<std::pair<int, int>>& strict) {
  std::vector<Elem> es;
  for (const auto& s : names) es.push_back(Elem::base(s));
  return poset_from_strict_pairs(std::move(es), strict);
}

// 0 below three pairwise-incomparable atoms below 1
inline SemilatticePtr m3_diamond() {
  Poset p = named_poset({"0", "a", "b", "c", "1"},
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  return std::make_shared<Semilattice>(Semilattice::from_poset(std::move(p)));
}

inline SemilatticePtr chain_semilattice(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return std::make_shared<Semilattice>(
      Semilattice::from_poset(chain_poset(names)));
}

}  // namespace pmlat::testutil
