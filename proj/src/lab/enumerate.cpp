#include "lab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "core/common.hpp"

namespace pmlat {

std::string canonical_form(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string cur;
    cur.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cur.push_back(p.le(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cat(n, ":", best);
}

namespace {

Poset poset_from_canonical(int n, const std::string& bits) {
  std::vector<Elem> elems;
  for (int i = 0; i < n; ++i) elems.push_back(Elem::base(cat(i)));
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[static_cast<size_t>(i) * n + j] = bits[static_cast<size_t>(i) * n + j] == '1';
  return Poset::make(std::move(elems), std::move(le));
}

}  // namespace

std::vector<Poset> all_posets_up_to(int nmax) {
  if (nmax < 1 || nmax > 7) throw bad_input("poset enumeration supports 1..7 elements");
  std::vector<Poset> out;
  std::vector<Poset> level;
  level.push_back(chain_poset({"0"}));
  out.push_back(level[0]);
  for (int n = 1; n < nmax; ++n) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Poset>> next;
    for (const Poset& p : level) {
      // down-sets and up-sets as bit masks
      std::vector<unsigned> downs, ups;
      for (unsigned m = 0; m < (1u << n); ++m) {
        bool down = true, up = true;
        for (int i = 0; i < n && (down || up); ++i) {
          if (!(m & (1u << i))) continue;
          for (int j = 0; j < n; ++j) {
            if (p.le(j, i) && !(m & (1u << j))) down = false;
            if (p.le(i, j) && !(m & (1u << j))) up = false;
          }
        }
        if (down) downs.push_back(m);
        if (up) ups.push_back(m);
      }
      for (unsigned dm : downs)
        for (unsigned um : ups) {
          if (dm & um) continue;
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) {
            if (!(dm & (1u << i))) continue;
            for (int j = 0; j < n && ok; ++j)
              if ((um & (1u << j)) && !p.le(i, j)) ok = false;
          }
          if (!ok) continue;
          const int m = n + 1;
          std::vector<Elem> elems;
          for (int i = 0; i < m; ++i) elems.push_back(Elem::base(cat(i)));
          std::vector<uint8_t> le(static_cast<size_t>(m) * m, 0);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              le[static_cast<size_t>(i) * m + j] = p.le(i, j) ? 1 : 0;
          le[static_cast<size_t>(n) * m + n] = 1;
          for (int i = 0; i < n; ++i) {
            if (dm & (1u << i)) le[static_cast<size_t>(i) * m + n] = 1;
            if (um & (1u << i)) le[static_cast<size_t>(n) * m + i] = 1;
          }
          Poset q = Poset::make(std::move(elems), std::move(le));
          std::string key = canonical_form(q);
          if (seen.insert(key).second)
            next.emplace_back(key, poset_from_canonical(m, key.substr(key.find(':') + 1)));
        }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, q] : next) {
      out.push_back(q);
      level.push_back(std::move(q));
    }
  }
  return out;
}

long enumerate_pmeasures(const Poset& p, const SemilatticePtr& s,
                         const std::vector<ValueConstraint>& fixed,
                         const std::function<bool(const MeasuredPoset&)>& sink,
                         const EnumerateOptions& opt) {
  const int n = p.size();
  const int sn = s->size();
  constexpr int kUnset = -2;
  std::vector<int> tab(static_cast<size_t>(n) * n, kUnset);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.le(x, y)) tab[static_cast<size_t>(x) * n + y] = s->zero();
  for (const auto& c : fixed) {
    int& slot = tab[static_cast<size_t>(c.x) * n + c.y];
    if (slot != kUnset && slot != c.value) return 0;  // contradicts an axiom/constraint
    slot = c.value;
  }

  std::vector<std::pair<int, int>> free_entries;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (tab[static_cast<size_t>(x) * n + y] == kUnset)
        free_entries.emplace_back(x, y);

  auto at = [&](int x, int y) { return tab[static_cast<size_t>(x) * n + y]; };
  // all triangles touching (x,y) whose three entries are assigned
  auto consistent_at = [&](int x, int y) {
    for (int z = 0; z < n; ++z) {
      int xy = at(x, y), xz = at(x, z), zy = at(z, y), yz = at(y, z), zx = at(z, x);
      if (xz != kUnset && zy != kUnset && xy != kUnset &&
          !s->leq(xy, s->join(xz, zy)))
        return false;
      if (xy != kUnset && yz != kUnset && xz != kUnset &&
          !s->leq(xz, s->join(xy, yz)))
        return false;
      if (zx != kUnset && xy != kUnset && zy != kUnset &&
          !s->leq(zy, s->join(zx, xy)))
        return false;
    }
    return true;
  };

  // fixed and forced entries must already be mutually consistent
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (at(x, y) != kUnset && !consistent_at(x, y)) return 0;

  long nodes = 0, found = 0;
  bool stop = false;
  std::function<void(size_t)> dfs = [&](size_t k) {
    if (stop) return;
    if (++nodes > opt.node_budget)
      throw budget_exceeded("p-measure enumeration exceeded its node budget");
    if (k == free_entries.size()) {
      MeasuredPoset m;
      m.poset = p;
      m.target = s;
      m.mu = tab;
      ++found;
      if (!sink(m)) stop = true;
      if (opt.max_results >= 0 && found >= opt.max_results) stop = true;
      return;
    }
    auto [x, y] = free_entries[k];
    for (int v = 0; v < sn && !stop; ++v) {
      tab[static_cast<size_t>(x) * n + y] = v;
      if (consistent_at(x, y)) dfs(k + 1);
    }
    tab[static_cast<size_t>(x) * n + y] = kUnset;
  };
  dfs(0);
  return found;
}

long count_pmeasures(const Poset& p, const SemilatticePtr& s,
                     const std::vector<ValueConstraint>& fixed,
                     const EnumerateOptions& opt) {
  return enumerate_pmeasures(p, s, fixed, [](const MeasuredPoset&) { return true; },
                             opt);
}

}  // namespace pmlat
