#include "core/diagram.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

IndexLattice IndexLattice::make(Poset p) {
  IndexLattice ix;
  const int n = p.size();
  ix.meet_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = p.glb(a, b);
      if (!m)
        throw bad_input(cat("index poset is not a meet-semilattice: no meet for ('",
                            p.elem(a).label(), "','", p.elem(b).label(), "')"));
      ix.meet_[static_cast<size_t>(a) * n + b] = *m;
    }
  auto least = p.least();
  internal_check(least.has_value(), "finite meet-semilattice without least element");
  ix.least_ = *least;
  ix.height_.assign(n, 0);
  // longest chain below: process by downset size
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto downsize = [&](int i) {
    int c = 0;
    for (int j = 0; j < n; ++j)
      if (p.le(j, i)) ++c;
    return c;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = downsize(a), db = downsize(b);
    return da != db ? da < db : a < b;
  });
  for (int i : order) {
    int h = 0;
    for (int j = 0; j < n; ++j)
      if (p.lt(j, i)) h = std::max(h, ix.height_[j] + 1);
    ix.height_[i] = h;
  }
  ix.poset_ = std::move(p);
  return ix;
}

const std::vector<int>& Diagram::phi(int i, int j) const {
  auto it = transitions.find({i, j});
  if (it == transitions.end())
    throw bad_input(cat("missing transition map for index pair ('",
                        index.elem(i).label(), "','", index.elem(j).label(), "')"));
  return it->second;
}

Hom Diagram::hom(int i, int j) const {
  Hom h;
  h.source = objects[i];
  h.target = objects[j];
  h.map = phi(i, j);
  return h;
}

DiagramVerdict validate_diagram(const Diagram& d) {
  DiagramVerdict v;
  const int n = d.index.size();
  if (static_cast<int>(d.objects.size()) != n) {
    v.ok = false;
    v.what = "object list does not match index size";
    return v;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!d.index.le(i, j)) continue;
      auto it = d.transitions.find({i, j});
      if (it == d.transitions.end()) {
        v.ok = false;
        v.what = cat("missing transition map ('", d.index.elem(i).label(), "' -> '",
                     d.index.elem(j).label(), "')");
        return v;
      }
      Hom h = d.hom(i, j);
      HomVerdict hv = validate_hom(h);
      if (!hv.ok) {
        v.ok = false;
        v.what = cat("transition ('", d.index.elem(i).label(), "' -> '",
                     d.index.elem(j).label(), "') is not a ⟨∨,0⟩-homomorphism: ",
                     hv.what);
        return v;
      }
      if (i == j) {
        for (int x = 0; x < d.objects[i]->size(); ++x)
          if (h.map[x] != x) {
            v.ok = false;
            v.what = cat("transition at '", d.index.elem(i).label(),
                         "' is not the identity");
            return v;
          }
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!d.index.le(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (!d.index.le(j, k)) continue;
        const auto& fij = d.phi(i, j);
        const auto& fjk = d.phi(j, k);
        const auto& fik = d.phi(i, k);
        for (int x = 0; x < d.objects[i]->size(); ++x)
          if (fjk[fij[x]] != fik[x]) {
            v.ok = false;
            v.what = cat("composition law fails over ('", d.index.elem(i).label(),
                         "','", d.index.elem(j).label(), "','",
                         d.index.elem(k).label(), "') at '",
                         d.objects[i]->elem(x).label(), "'");
            return v;
          }
      }
    }
  return v;
}

}  // namespace pmlat
