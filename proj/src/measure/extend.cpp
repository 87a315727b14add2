#include "measure/extend.hpp"

#include <algorithm>
#include <map>

#include "core/common.hpp"

namespace pmlat {

namespace {

struct BlockView {
  const IntervalMeasureFamily::Block* blk;
  std::map<int, int> pos;  // super idx -> member slot

  int val(int x, int y) const {
    size_t n = blk->members.size();
    return blk->mu[static_cast<size_t>(pos.at(x)) * n + pos.at(y)];
  }
  int dist(int x, int y, const Poset& q) const {
    if (q.le(x, y)) return val(y, x);
    if (q.le(y, x)) return val(x, y);
    throw bad_input("block distance of incomparable elements");
  }
};

}  // namespace

IntervalMeasureFamily family_skeleton(MeasuredPoset base, Poset super) {
  IntervalMeasureFamily f;
  ExtensionWitness w = analyze_extension(base.poset, super);
  if (!w.interval.holds())
    throw bad_input(cat("measure extension needs an interval extension: ",
                        w.interval.fails() ? w.interval.witness : w.rc.witness));
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int x = 0; x < super.size(); ++x) {
    int u = w.lower_proj[x], v = w.upper_proj[x];
    if (u == v) continue;  // x ∈ P
    classes[{u, v}].push_back(x);
  }
  for (auto& [key, members] : classes) {
    IntervalMeasureFamily::Block blk;
    blk.u = key.first;
    blk.v = key.second;
    members.push_back(key.first);
    members.push_back(key.second);
    std::sort(members.begin(), members.end());
    blk.members = members;
    blk.mu.assign(members.size() * members.size(), base.target->zero());
    f.blocks.push_back(std::move(blk));
  }
  f.base = std::move(base);
  f.super = std::move(super);
  return f;
}

MeasuredPoset extend_measure(const IntervalMeasureFamily& f) {
  const Poset& q = f.super;
  const Semilattice& d = *f.base.target;
  DistributivityVerdict dv = is_distributive(d);
  if (!dv.ok)
    throw bad_input(cat("measure extension needs a distributive lattice target: ",
                        dv.message));
  ExtensionWitness w = analyze_extension(f.base.poset, q);
  if (!w.interval.holds())
    throw bad_input(cat("measure extension needs an interval extension: ",
                        w.interval.fails() ? w.interval.witness : w.rc.witness));

  MeasureVerdict bmv = validate_pmeasure(f.base);
  if (!bmv.ok) throw bad_input(cat("base is not a p-measure: ", bmv.message));

  // index the blocks and check their shape, measure axioms, compatibility
  std::map<std::pair<int, int>, BlockView> views;
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int x = 0; x < q.size(); ++x) {
    int u = w.lower_proj[x], v = w.upper_proj[x];
    if (u != v) classes[{u, v}].push_back(x);
  }
  for (const auto& blk : f.blocks) {
    auto it = classes.find({blk.u, blk.v});
    if (it == classes.end())
      throw bad_input("family has a block for an unoccupied projection pair");
    std::vector<int> expect = it->second;
    expect.push_back(blk.u);
    expect.push_back(blk.v);
    std::sort(expect.begin(), expect.end());
    if (expect != blk.members)
      throw bad_input(cat("block members for pair ('", q.elem(blk.u).label(),
                          "','", q.elem(blk.v).label(),
                          "') do not match the ≡-class closure"));
    MeasuredPoset bm;
    bm.poset = q.induced(blk.members);
    bm.target = f.base.target;
    bm.mu = blk.mu;
    MeasureVerdict mv = validate_pmeasure(bm);
    if (!mv.ok)
      throw bad_input(cat("block measure for pair ('", q.elem(blk.u).label(), "','",
                          q.elem(blk.v).label(), "') invalid: ", mv.message));
    BlockView view;
    view.blk = &blk;
    for (size_t i = 0; i < blk.members.size(); ++i)
      view.pos.emplace(blk.members[i], static_cast<int>(i));
    // compatibility: block distance of the pair equals the base distance
    auto sub_idx = [&](int qi) {
      for (int i = 0; i < f.base.poset.size(); ++i)
        if (w.sub_in_super[i] == qi) return i;
      return -1;
    };
    int base_span = f.base.val(sub_idx(blk.v), sub_idx(blk.u));
    if (view.val(blk.v, blk.u) != base_span)
      throw bad_input(cat("block for pair ('", q.elem(blk.u).label(), "','",
                          q.elem(blk.v).label(),
                          "') is incompatible with the base distance"));
    views.emplace(std::make_pair(blk.u, blk.v), std::move(view));
  }
  for (const auto& [key, members] : classes)
    if (!views.count(key))
      throw bad_input(cat("no block measure for occupied pair ('",
                          q.elem(key.first).label(), "','",
                          q.elem(key.second).label(), "')"));

  auto sub_idx = [&](int qi) {
    for (int i = 0; i < f.base.poset.size(); ++i)
      if (w.sub_in_super[i] == qi) return i;
    return -1;
  };
  auto bvP = [&](int qx, int qy) { return f.base.val(sub_idx(qx), sub_idx(qy)); };
  // ⟦x ÷ x_P⟧ in x's block (0 for x ∈ P)
  auto ddown = [&](int x) {
    int u = w.lower_proj[x], v = w.upper_proj[x];
    if (u == v) return d.zero();
    return views.at({u, v}).dist(x, u, q);
  };
  auto dup = [&](int x) {
    int u = w.lower_proj[x], v = w.upper_proj[x];
    if (u == v) return d.zero();
    return views.at({u, v}).dist(v, x, q);
  };

  MeasuredPoset out;
  out.poset = q;
  out.target = f.base.target;
  const int n = q.size();
  out.mu.assign(static_cast<size_t>(n) * n, d.zero());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int value;
      if (w.equiv(x, y)) {
        int u = w.lower_proj[x], v = w.upper_proj[x];
        value = (u == v) ? d.zero() : views.at({u, v}).val(x, y);
      } else {
        int xlo = w.lower_proj[x], xhi = w.upper_proj[x];
        int ylo = w.lower_proj[y], yhi = w.upper_proj[y];
        int dx = ddown(x), dy = dup(y);
        value = bvP(xhi, ylo);
        value = d.meet(value, d.join(bvP(xlo, ylo), dx));
        value = d.meet(value, d.join(bvP(xhi, yhi), dy));
        value = d.meet(value, d.join(d.join(bvP(xlo, yhi), dx), dy));
      }
      out.set_val(x, y, value);
    }

  MeasureVerdict omv = validate_pmeasure(out);
  internal_check(omv.ok, cat("extended table is not a p-measure: ", omv.message));
  ExtensionCheck ec =
      check_extension(f.base, out, identity_hom(f.base.target));
  internal_check(ec.ok, cat("extension does not restrict to the base: ", ec.message));
  for (const auto& blk : f.blocks) {
    BlockView view;
    view.blk = &blk;
    for (size_t i = 0; i < blk.members.size(); ++i)
      view.pos.emplace(blk.members[i], static_cast<int>(i));
    for (int a : blk.members)
      for (int b : blk.members)
        internal_check(out.val(a, b) == view.val(a, b),
                       "extension does not restrict to a block measure");
  }
  return out;
}

}  // namespace pmlat
