#include "core/poset.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

PosetVerdict validate_relation(const std::vector<Elem>& elems,
                               const std::vector<uint8_t>& le) {
  PosetVerdict v;
  const int n = static_cast<int>(elems.size());
  if (n == 0) {
    v.ok = false;
    v.violation = "duplicate";
    v.message = "poset needs at least one element";
    return v;
  }
  if (le.size() != static_cast<size_t>(n) * n) {
    v.ok = false;
    v.violation = "duplicate";
    v.message = "relation table has wrong size";
    return v;
  }
  std::map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = seen.emplace(elems[i].key(), i);
    if (!fresh) {
      v.ok = false;
      v.violation = "duplicate";
      v.a = it->second;
      v.b = i;
      v.message = cat("duplicate element label '", elems[i].label(), "'");
      return v;
    }
  }
  auto at = [&](int a, int b) { return le[static_cast<size_t>(a) * n + b] != 0; };
  for (int i = 0; i < n; ++i) {
    if (!at(i, i)) {
      v.ok = false;
      v.violation = "reflexive";
      v.a = v.b = i;
      v.message = cat("reflexivity fails at '", elems[i].label(), "'");
      return v;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && at(i, j) && at(j, i)) {
        v.ok = false;
        v.violation = "antisymmetric";
        v.a = i;
        v.b = j;
        v.message = cat("antisymmetry fails at ('", elems[i].label(), "','",
                        elems[j].label(), "')");
        return v;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k)) {
          v.ok = false;
          v.violation = "transitive";
          v.a = i;
          v.b = k;
          v.message = cat("transitivity fails at ('", elems[i].label(), "','",
                          elems[k].label(), "') via '", elems[j].label(), "'");
          return v;
        }
    }
  return v;
}

Poset Poset::make(std::vector<Elem> elems, std::vector<uint8_t> le) {
  PosetVerdict v = validate_relation(elems, le);
  if (!v.ok) throw bad_input(cat("invalid poset: ", v.message));
  Poset p;
  p.n_ = static_cast<int>(elems.size());
  p.elems_ = std::move(elems);
  p.le_ = std::move(le);
  for (int i = 0; i < p.n_; ++i) p.index_.emplace(p.elems_[i].key(), i);
  for (int a = 0; a < p.n_; ++a)
    for (int b = 0; b < p.n_; ++b) {
      if (!p.lt(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < p.n_ && cover; ++c)
        if (p.lt(a, c) && p.lt(c, b)) cover = false;
      if (cover) p.covers_.emplace_back(a, b);
    }
  return p;
}

bool Poset::covers(int a, int b) const {
  if (!lt(a, b)) return false;
  for (int c = 0; c < n_; ++c)
    if (lt(a, c) && lt(c, b)) return false;
  return true;
}

std::optional<int> Poset::find(const Elem& e) const {
  auto it = index_.find(e.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Poset::least() const {
  for (int i = 0; i < n_; ++i) {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j) ok = le(i, j);
    if (ok) return i;
  }
  return std::nullopt;
}

std::optional<int> Poset::greatest() const {
  for (int i = 0; i < n_; ++i) {
    bool ok = true;
    for (int j = 0; j < n_ && ok; ++j) ok = le(j, i);
    if (ok) return i;
  }
  return std::nullopt;
}

std::vector<int> Poset::upper_bounds(int a, int b) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (le(a, u) && le(b, u)) out.push_back(u);
  return out;
}

std::vector<int> Poset::lower_bounds(int a, int b) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (le(u, a) && le(u, b)) out.push_back(u);
  return out;
}

std::optional<int> Poset::max_of(const std::vector<int>& xs) const {
  for (int m : xs) {
    bool ok = true;
    for (int x : xs)
      if (!le(x, m)) {
        ok = false;
        break;
      }
    if (ok) return m;
  }
  return std::nullopt;
}

std::optional<int> Poset::min_of(const std::vector<int>& xs) const {
  for (int m : xs) {
    bool ok = true;
    for (int x : xs)
      if (!le(m, x)) {
        ok = false;
        break;
      }
    if (ok) return m;
  }
  return std::nullopt;
}

std::optional<int> Poset::lub(int a, int b) const {
  return min_of(upper_bounds(a, b));
}

std::optional<int> Poset::glb(int a, int b) const {
  return max_of(lower_bounds(a, b));
}

Poset Poset::induced(const std::vector<int>& idxs) const {
  const int m = static_cast<int>(idxs.size());
  std::vector<Elem> es;
  es.reserve(m);
  for (int i : idxs) es.push_back(elems_[i]);
  std::vector<uint8_t> rel(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rel[static_cast<size_t>(i) * m + j] = le(idxs[i], idxs[j]) ? 1 : 0;
  return Poset::make(std::move(es), std::move(rel));
}

std::optional<std::vector<int>> Poset::embedding_into(const Poset& host) const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) {
    auto h = host.find(elems_[i]);
    if (!h) return std::nullopt;
    out[i] = *h;
  }
  return out;
}

bool Poset::is_induced_subposet_of(const Poset& host,
                                   const std::vector<int>& embed) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (le(i, j) != host.le(embed[i], embed[j])) return false;
  return true;
}

bool Poset::equals_as_labeled(const Poset& other) const {
  if (n_ != other.n_) return false;
  auto embed = embedding_into(other);
  if (!embed) return false;
  return is_induced_subposet_of(other, *embed);
}

std::optional<LatticeOps> lattice_ops(const Poset& p, std::string* why_not) {
  const int n = p.size();
  LatticeOps ops;
  ops.join.assign(static_cast<size_t>(n) * n, -1);
  ops.meet.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto j = p.lub(a, b);
      if (!j) {
        if (why_not)
          *why_not = cat("no join for ('", p.elem(a).label(), "','",
                         p.elem(b).label(), "')");
        return std::nullopt;
      }
      auto m = p.glb(a, b);
      if (!m) {
        if (why_not)
          *why_not = cat("no meet for ('", p.elem(a).label(), "','",
                         p.elem(b).label(), "')");
        return std::nullopt;
      }
      ops.join[static_cast<size_t>(a) * n + b] = *j;
      ops.meet[static_cast<size_t>(a) * n + b] = *m;
    }
  return ops;
}

std::optional<LatticeOps> lattice_ops(const Poset& p) {
  return lattice_ops(p, nullptr);
}

Poset poset_from_strict_pairs(std::vector<Elem> elems,
                              const std::vector<std::pair<int, int>>& strict) {
  const int n = static_cast<int>(elems.size());
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) le[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : strict) le[static_cast<size_t>(a) * n + b] = 1;
  return Poset::make(std::move(elems), std::move(le));
}

Poset chain_poset(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  std::vector<Elem> es;
  es.reserve(n);
  for (const auto& s : names) es.push_back(Elem::base(s));
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) le[static_cast<size_t>(i) * n + j] = 1;
  return Poset::make(std::move(es), std::move(le));
}

}  // namespace pmlat
