#include "ext/scheme.hpp"

#include <algorithm>
#include <set>

#include "core/common.hpp"

namespace pmlat {

SumResult sum_scheme(const IntervalScheme& s) {
  const Poset& p = s.base;
  std::set<std::string> seen;
  for (int i = 0; i < p.size(); ++i) seen.insert(p.elem(i).key());
  for (const auto& blk : s.blocks) {
    if (!(p.lt(blk.a, blk.b)))
      throw bad_input(cat("scheme block assigned to non-strict pair ('",
                          p.elem(blk.a).label(), "','", p.elem(blk.b).label(), "')"));
    for (int i = 0; i < blk.block.size(); ++i)
      if (!seen.insert(blk.block.elem(i).key()).second)
        throw bad_input(cat("scheme blocks are not disjoint: '",
                            blk.block.elem(i).label(), "' appears twice"));
  }

  // element list: base first, then blocks in given order; then sort
  // canonically so constructed posets are storage-order deterministic.
  struct Entry {
    Elem e;
    int lo, hi;      // base projections (base idx); lo == hi == own for base
    int blk, inblk;  // block id and index inside it, -1 for base
  };
  std::vector<Entry> entries;
  for (int i = 0; i < p.size(); ++i)
    entries.push_back({p.elem(i), i, i, -1, -1});
  for (size_t b = 0; b < s.blocks.size(); ++b)
    for (int i = 0; i < s.blocks[b].block.size(); ++i)
      entries.push_back({s.blocks[b].block.elem(i), s.blocks[b].a, s.blocks[b].b,
                         static_cast<int>(b), i});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.e.key() < y.e.key(); });

  const int n = static_cast<int>(entries.size());
  std::vector<Elem> elems;
  elems.reserve(n);
  for (const auto& en : entries) elems.push_back(en.e);
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool rel = p.le(entries[x].hi, entries[y].lo);
      if (!rel && entries[x].blk >= 0 && entries[x].blk == entries[y].blk)
        rel = s.blocks[entries[x].blk].block.le(entries[x].inblk, entries[y].inblk);
      le[static_cast<size_t>(x) * n + y] = rel ? 1 : 0;
    }

  SumResult out;
  out.sum = Poset::make(std::move(elems), std::move(le));
  out.witness = analyze_extension(p, out.sum);
  internal_check(out.witness.interval.holds(),
                 "scheme sum failed to be an interval extension");
  return out;
}

IntervalScheme decompose_to_scheme(const ExtensionWitness& w) {
  if (!w.interval.holds())
    throw bad_input("decompose_to_scheme needs an interval extension");
  IntervalScheme s;
  s.base = w.sub;
  std::map<std::pair<int, int>, std::vector<int>> classes;  // (a,b) sub idx -> Q idxs
  auto sub_idx = [&](int qi) {
    for (int i = 0; i < w.sub.size(); ++i)
      if (w.sub_in_super[i] == qi) return i;
    return -1;
  };
  for (int x = 0; x < w.super.size(); ++x) {
    if (w.in_sub(x)) continue;
    classes[{sub_idx(w.lower_proj[x]), sub_idx(w.upper_proj[x])}].push_back(x);
  }
  for (auto& [key, members] : classes) {
    IntervalScheme::Block blk;
    blk.a = key.first;
    blk.b = key.second;
    blk.block = w.super.induced(members);
    s.blocks.push_back(std::move(blk));
  }
  return s;
}

}  // namespace pmlat
