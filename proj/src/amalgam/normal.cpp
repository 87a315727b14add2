#include "amalgam/normal.hpp"

#include <algorithm>
#include <set>

#include "core/common.hpp"

namespace pmlat {

const MeasuredPoset& MeasuredDiagram::block(int i) const {
  if (!blocks[i])
    throw bad_input(cat("diagram has no measured block at index '",
                        base.index.elem(i).label(), "'"));
  return *blocks[i];
}

std::string NormalVerdict::summary() const {
  auto one = [](const char* name, const TriState& t) {
    std::string s = name;
    s += ": ";
    s += t.holds() ? "holds" : (t.fails() ? cat("fails (", t.witness, ")") : "unchecked");
    return s;
  };
  return cat(one("blocks", blocks_valid), "; ", one("sub-posets", cond1), "; ",
             one("intersections", cond2), "; ", one("interpolation", cond3), "; ",
             one("interval", interval_normal), "; ", one("measures", measure_ext));
}

namespace {

NormalVerdict validate_impl(const MeasuredDiagram& d, bool poset_level_only) {
  NormalVerdict v;
  const IndexLattice& ix = d.base.index;
  const int n = ix.size();

  v.blocks_valid = TriState::yes();
  for (int i = 0; i < n && v.blocks_valid.holds(); ++i) {
    if (!d.blocks[i]) {
      v.blocks_valid = TriState::no(
          cat("no block at index '", ix.elem(i).label(), "'"));
      break;
    }
    if (poset_level_only) continue;
    if (*d.blocks[i]->target != *d.base.objects[i]) {
      v.blocks_valid = TriState::no(cat("block at '", ix.elem(i).label(),
                                        "' is not valued in its object"));
      break;
    }
    MeasureVerdict mv = validate_pmeasure(*d.blocks[i]);
    if (!mv.ok)
      v.blocks_valid = TriState::no(
          cat("block at '", ix.elem(i).label(), "': ", mv.message));
  }
  if (!v.blocks_valid.holds()) {
    v.cond1 = v.cond2 = v.cond3 = v.interval_normal = v.measure_ext = TriState::skip();
    return v;
  }

  v.cond1 = TriState::yes();
  for (int i = 0; i < n && v.cond1.holds(); ++i)
    for (int j = 0; j < n && v.cond1.holds(); ++j) {
      if (!ix.le(i, j)) continue;
      const Poset& qi = d.blocks[i]->poset;
      const Poset& qj = d.blocks[j]->poset;
      auto embed = qi.embedding_into(qj);
      if (!embed)
        v.cond1 = TriState::no(cat("block at '", ix.elem(i).label(),
                                   "' is not a subset of block at '",
                                   ix.elem(j).label(), "'"));
      else if (!qi.is_induced_subposet_of(qj, *embed))
        v.cond1 = TriState::no(cat("block at '", ix.elem(i).label(),
                                   "' does not carry the order induced from '",
                                   ix.elem(j).label(), "'"));
    }
  if (!v.cond1.holds()) {
    v.cond2 = v.cond3 = v.interval_normal = v.measure_ext = TriState::skip();
    return v;
  }

  v.cond2 = TriState::yes();
  for (int i = 0; i < n && v.cond2.holds(); ++i)
    for (int j = 0; j < n && v.cond2.holds(); ++j) {
      const Poset& qi = d.blocks[i]->poset;
      const Poset& qj = d.blocks[j]->poset;
      const Poset& qm = d.blocks[ix.meet(i, j)]->poset;
      for (int x = 0; x < qi.size() && v.cond2.holds(); ++x) {
        bool in_j = qj.find(qi.elem(x)).has_value();
        bool in_m = qm.find(qi.elem(x)).has_value();
        if (in_j != in_m)
          v.cond2 = TriState::no(
              cat("element '", qi.elem(x).label(), "' breaks Q_i ∩ Q_j = Q_{i∧j} ",
                  "for i = '", ix.elem(i).label(), "', j = '", ix.elem(j).label(), "'"));
      }
    }
  if (!v.cond2.holds()) {
    v.cond3 = v.interval_normal = v.measure_ext = TriState::skip();
    return v;
  }

  v.cond3 = TriState::yes();
  for (int i = 0; i < n && v.cond3.holds(); ++i)
    for (int j = 0; j < n && v.cond3.holds(); ++j)
      for (int k = 0; k < n && v.cond3.holds(); ++k) {
        if (!ix.le(i, k) || !ix.le(j, k)) continue;
        const Poset& qi = d.blocks[i]->poset;
        const Poset& qj = d.blocks[j]->poset;
        const Poset& qk = d.blocks[k]->poset;
        const Poset& qm = d.blocks[ix.meet(i, j)]->poset;
        for (int x = 0; x < qi.size() && v.cond3.holds(); ++x)
          for (int y = 0; y < qj.size() && v.cond3.holds(); ++y) {
            int xk = *qk.find(qi.elem(x));
            int yk = *qk.find(qj.elem(y));
            if (!qk.le(xk, yk)) continue;
            bool found = false;
            for (int z = 0; z < qm.size() && !found; ++z) {
              int zi = *qi.find(qm.elem(z));
              int zj = *qj.find(qm.elem(z));
              if (qi.le(x, zi) && qj.le(zj, y)) found = true;
            }
            if (!found)
              v.cond3 = TriState::no(cat(
                  "no interpolant in Q_{i∧j} for '", qi.elem(x).label(), "' ≤ '",
                  qj.elem(y).label(), "' with i = '", ix.elem(i).label(),
                  "', j = '", ix.elem(j).label(), "', k = '", ix.elem(k).label(), "'"));
          }
      }
  if (poset_level_only || !v.cond3.holds()) {
    v.interval_normal = v.measure_ext = TriState::skip();
    return v;
  }

  v.interval_normal = TriState::yes();
  for (int i = 0; i < n && v.interval_normal.holds(); ++i)
    for (int j = 0; j < n && v.interval_normal.holds(); ++j) {
      if (!ix.le(i, j) || i == j) continue;
      ExtensionWitness w =
          analyze_extension(d.blocks[i]->poset, d.blocks[j]->poset);
      if (!w.interval.holds())
        v.interval_normal = TriState::no(
            cat("block '", ix.elem(i).label(), "' inside '", ix.elem(j).label(),
                "': ", w.interval.fails() ? w.interval.witness : w.rc.witness));
    }

  v.measure_ext = TriState::yes();
  for (int i = 0; i < n && v.measure_ext.holds(); ++i)
    for (int j = 0; j < n && v.measure_ext.holds(); ++j) {
      if (!ix.le(i, j)) continue;
      ExtensionCheck c =
          check_extension(*d.blocks[i], *d.blocks[j], d.base.hom(i, j));
      if (!c.ok)
        v.measure_ext = TriState::no(cat("block '", ix.elem(i).label(),
                                         "' inside '", ix.elem(j).label(), "': ",
                                         c.message));
    }
  return v;
}

}  // namespace

NormalVerdict validate_normal_diagram(const MeasuredDiagram& d) {
  return validate_impl(d, false);
}

NormalVerdict validate_normal_poset_level(const MeasuredDiagram& d) {
  return validate_impl(d, true);
}

MeasuredDiagram restrict_diagram(const MeasuredDiagram& d,
                                 const std::vector<int>& keep) {
  const IndexLattice& ix = d.base.index;
  std::set<int> keepset(keep.begin(), keep.end());
  for (int a : keep)
    for (int b : keep)
      if (!keepset.count(ix.meet(a, b)))
        throw bad_input("diagram restriction needs a meet-closed index subset");
  MeasuredDiagram out;
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> to_new;
  for (size_t k = 0; k < sorted.size(); ++k) to_new[sorted[k]] = static_cast<int>(k);
  std::vector<int> idxs(sorted.begin(), sorted.end());
  out.base.index = IndexLattice::make(ix.poset().induced(idxs));
  for (int i : sorted) {
    out.base.objects.push_back(d.base.objects[i]);
    out.blocks.push_back(d.blocks[i]);
  }
  for (int i : sorted)
    for (int j : sorted)
      if (ix.le(i, j))
        out.base.transitions[{to_new[i], to_new[j]}] = d.base.phi(i, j);
  return out;
}

}  // namespace pmlat
