#include "core/semilattice.hpp"

#include <algorithm>
#include <set>

#include "core/common.hpp"

namespace pmlat {

Semilattice Semilattice::from_poset(Poset p, bool declare_unit) {
  auto least = p.least();
  if (!least) throw bad_input("semilattice needs a least element");
  std::string why;
  auto ops = lattice_ops(p, &why);
  if (!ops) throw bad_input(cat("not a join-semilattice: ", why));
  Semilattice s;
  s.zero_ = *least;
  s.top_ = *p.greatest();  // finite + all joins => top exists
  s.join_ = std::move(ops->join);
  s.meet_ = std::move(ops->meet);
  s.unit_declared_ = declare_unit;
  s.poset_ = std::move(p);
  const int n = s.size();
  for (int x = 0; x < n; ++x) {
    if (x == s.zero_) continue;
    // join-closure of the strictly smaller elements
    std::vector<int> below;
    for (int y = 0; y < n; ++y)
      if (s.poset_.lt(y, x)) below.push_back(y);
    int acc = s.zero_;
    for (int y : below) acc = s.join_[static_cast<size_t>(acc) * n + y];
    if (acc != x) s.irred_.push_back(x);
  }
  return s;
}

Semilattice Semilattice::from_join_table(std::vector<Elem> elems,
                                         std::vector<int> join,
                                         bool declare_unit) {
  const int n = static_cast<int>(elems.size());
  if (join.size() != static_cast<size_t>(n) * n)
    throw bad_input("join table has wrong size");
  for (int v : join)
    if (v < 0 || v >= n) throw bad_input("join table entry out of range");
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      le[static_cast<size_t>(a) * n + b] =
          (join[static_cast<size_t>(a) * n + b] == b) ? 1 : 0;
  Poset p = Poset::make(std::move(elems), std::move(le));
  Semilattice s = from_poset(std::move(p), declare_unit);
  // the given table must agree with the derived lub table
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.join(a, b) != join[static_cast<size_t>(a) * n + b])
        throw bad_input(cat("join table is not the lub table at ('",
                            s.elem(a).label(), "','", s.elem(b).label(), "')"));
  return s;
}

int Semilattice::join_all(const std::vector<int>& xs) const {
  int acc = zero_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

bool Semilattice::operator==(const Semilattice& o) const {
  if (size() != o.size()) return false;
  if (!poset_.equals_as_labeled(o.poset_)) return false;
  auto embed = poset_.embedding_into(o.poset_);
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if ((*embed)[join(a, b)] != o.join((*embed)[a], (*embed)[b])) return false;
  return unit_declared_ == o.unit_declared_;
}

DistributivityVerdict is_distributive(const Semilattice& s) {
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = s.join(a, b);
      for (int c = 0; c < n; ++c) {
        if (!s.leq(c, ab)) continue;
        bool found = false;
        for (int x = 0; x < n && !found; ++x) {
          if (!s.leq(x, a)) continue;
          for (int y = 0; y < n && !found; ++y)
            if (s.leq(y, b) && s.join(x, y) == c) found = true;
        }
        if (!found) {
          DistributivityVerdict v;
          v.ok = false;
          v.a = a;
          v.b = b;
          v.c = c;
          v.message = cat("'", s.elem(c).label(), "' ≤ '", s.elem(a).label(),
                          "' ∨ '", s.elem(b).label(),
                          "' admits no splitting c = x∨y with x ≤ a, y ≤ b");
          return v;
        }
      }
    }
  return {};
}

std::vector<int> generated_subsemilattice(const Semilattice& s,
                                          const std::vector<int>& seed) {
  std::set<int> closed(seed.begin(), seed.end());
  closed.insert(s.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closed.begin(), closed.end());
    for (int a : cur)
      for (int b : cur)
        if (closed.insert(s.join(a, b)).second) grew = true;
  }
  return std::vector<int>(closed.begin(), closed.end());
}

bool Hom::separates_zero() const {
  for (size_t x = 0; x < map.size(); ++x)
    if (map[x] == target->zero() && static_cast<int>(x) != source->zero())
      return false;
  return true;
}

HomVerdict validate_hom(const Hom& h) {
  HomVerdict v;
  const int n = h.source->size();
  if (static_cast<int>(h.map.size()) != n) {
    v.ok = false;
    v.what = "map size mismatch";
    return v;
  }
  for (int x : h.map)
    if (x < 0 || x >= h.target->size()) {
      v.ok = false;
      v.what = "map entry out of range";
      return v;
    }
  if (h.map[h.source->zero()] != h.target->zero()) {
    v.ok = false;
    v.what = "zero not preserved";
    return v;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.map[h.source->join(a, b)] != h.target->join(h.map[a], h.map[b])) {
        v.ok = false;
        v.what = cat("join not preserved at ('", h.source->elem(a).label(),
                     "','", h.source->elem(b).label(), "')");
        v.a = a;
        v.b = b;
        return v;
      }
  return v;
}

Hom identity_hom(const SemilatticePtr& s) {
  Hom h;
  h.source = s;
  h.target = s;
  h.map.resize(s->size());
  for (int i = 0; i < s->size(); ++i) h.map[i] = i;
  return h;
}

Hom compose(const Hom& first, const Hom& then) {
  Hom h;
  h.source = first.source;
  h.target = then.target;
  h.map.resize(first.map.size());
  for (size_t i = 0; i < first.map.size(); ++i) h.map[i] = then.map[first.map[i]];
  return h;
}

SemilatticePtr two_element_semilattice() {
  return std::make_shared<Semilattice>(
      Semilattice::from_poset(chain_poset({"0", "1"}), /*declare_unit=*/true));
}

SemilatticePtr powerset_lattice(const std::vector<std::string>& atoms) {
  const unsigned k = static_cast<unsigned>(atoms.size());
  if (k > 20) throw bad_input("powerset lattice too large");
  const unsigned n = 1u << k;
  std::vector<Elem> elems;
  elems.reserve(n);
  for (unsigned m = 0; m < n; ++m) {
    std::string name = "{";
    bool first = true;
    for (unsigned i = 0; i < k; ++i)
      if (m & (1u << i)) {
        if (!first) name += ",";
        name += atoms[i];
        first = false;
      }
    name += "}";
    elems.push_back(Elem::base(name));
  }
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      le[static_cast<size_t>(a) * n + b] = ((a & b) == a) ? 1 : 0;
  return std::make_shared<Semilattice>(
      Semilattice::from_poset(Poset::make(std::move(elems), std::move(le)), true));
}

SemilatticePtr sub_join_semilattice(const SemilatticePtr& parent,
                                    const std::vector<int>& gens,
                                    bool declare_unit) {
  std::vector<int> members = generated_subsemilattice(*parent, gens);
  Poset p = parent->poset().induced(members);
  auto out = std::make_shared<Semilattice>(
      Semilattice::from_poset(std::move(p), declare_unit));
  // joins must be computed inside the subset and agree with the parent
  for (int a = 0; a < out->size(); ++a)
    for (int b = 0; b < out->size(); ++b) {
      int pa = *parent->find(out->elem(a));
      int pb = *parent->find(out->elem(b));
      internal_check(parent->elem(parent->join(pa, pb)) ==
                         out->elem(out->join(a, b)),
                     "join closure is not join-compatible with the parent");
    }
  return out;
}

Hom inclusion_hom(const SemilatticePtr& sub, const SemilatticePtr& parent) {
  Hom h;
  h.source = sub;
  h.target = parent;
  h.map.resize(sub->size());
  for (int i = 0; i < sub->size(); ++i) {
    auto p = parent->find(sub->elem(i));
    if (!p)
      throw bad_input(cat("inclusion impossible: '", sub->elem(i).label(),
                          "' missing from the parent"));
    h.map[i] = *p;
  }
  return h;
}

}  // namespace pmlat
