#include "amalgam/amalgam.hpp"

#include <algorithm>
#include <set>

#include "core/common.hpp"

namespace pmlat {

int StrongAmalgam::bveo(int x, int y) const {
  if (carrier.le(y, x)) return bvo(x, y);
  if (carrier.le(x, y)) return bvo(y, x);
  throw bad_input("bveo needs comparable arguments");
}

int StrongAmalgam::proj_down(int x, int i) const {
  std::vector<int> lows;
  for (const auto& [c, b] : inv[i])
    if (carrier.le(c, x)) lows.push_back(c);
  auto m = carrier.max_of(lows);
  internal_check(m.has_value(), "missing lower projection in the amalgam");
  return *m;
}

int StrongAmalgam::proj_up(int x, int i) const {
  std::vector<int> ups;
  for (const auto& [c, b] : inv[i])
    if (carrier.le(x, c)) ups.push_back(c);
  auto m = carrier.min_of(ups);
  internal_check(m.has_value(), "missing upper projection in the amalgam");
  return *m;
}

int StrongAmalgam::join_top(int a, int b) const {
  if (a == kTopSentinel || b == kTopSentinel) return kTopSentinel;
  return dtop->join(a, b);
}

int StrongAmalgam::meet_top(int a, int b) const {
  if (a == kTopSentinel) return b;
  if (b == kTopSentinel) return a;
  return dtop->meet(a, b);
}

StrongAmalgam amalgam_order(const MeasuredDiagram& d) {
  NormalVerdict nv = validate_normal_poset_level(d);
  if (!(nv.blocks_valid.holds() && nv.normal_posets()))
    throw bad_input(cat("amalgam needs a normal diagram: ", nv.summary()));

  StrongAmalgam a;
  a.sub = d;
  const IndexLattice& ix = a.sub.base.index;
  const int ni = ix.size();

  std::set<Elem> all;
  for (int i = 0; i < ni; ++i)
    for (int e = 0; e < a.sub.block(i).poset.size(); ++e)
      all.insert(a.sub.block(i).poset.elem(e));
  std::vector<Elem> elems(all.begin(), all.end());
  const int n = static_cast<int>(elems.size());

  // membership maps (carrier storage order is the sorted key order)
  std::map<std::string, int> pos;
  for (int c = 0; c < n; ++c) pos[elems[c].key()] = c;
  a.embed.assign(ni, {});
  a.inv.assign(ni, {});
  for (int i = 0; i < ni; ++i) {
    const Poset& q = a.sub.block(i).poset;
    a.embed[i].resize(q.size());
    for (int e = 0; e < q.size(); ++e) {
      int c = pos.at(q.elem(e).key());
      a.embed[i][e] = c;
      a.inv[i][c] = e;
    }
  }

  // ν(x): the membership index set is meet-closed by condition (2)
  a.nu.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    int m = -1;
    for (int i = 0; i < ni; ++i)
      if (a.inv[i].count(c)) m = (m < 0) ? i : ix.meet(m, i);
    internal_check(m >= 0 && a.inv[m].count(c),
                   "element membership set is not meet-closed");
    a.nu[c] = m;
  }
  a.rho.assign(n, 0);
  for (int c = 0; c < n; ++c) a.rho[c] = ix.height(a.nu[c]);

  // interpolation order; evaluated for every admissible index pair so the
  // well-definedness of the criterion is checked, not assumed
  auto criterion = [&](int x, int y, int i, int j) {
    const Poset& qi = a.sub.block(i).poset;
    const Poset& qj = a.sub.block(j).poset;
    int m = ix.meet(i, j);
    int xl = a.inv[i].at(x), yl = a.inv[j].at(y);
    for (const auto& [zc, zm] : a.inv[m]) {
      if (qi.le(xl, a.inv[i].at(zc)) && qj.le(a.inv[j].at(zc), yl)) return true;
    }
    return false;
  };
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int verdict = -1;
      for (int i = 0; i < ni; ++i) {
        if (!a.inv[i].count(x)) continue;
        for (int j = 0; j < ni; ++j) {
          if (!a.inv[j].count(y)) continue;
          bool r = criterion(x, y, i, j);
          if (verdict < 0) verdict = r ? 1 : 0;
          internal_check(verdict == (r ? 1 : 0),
                         "amalgam order criterion depends on the index pair");
        }
      }
      le[static_cast<size_t>(x) * n + y] = static_cast<uint8_t>(verdict == 1);
    }
  a.carrier = Poset::make(std::move(elems), std::move(le));

  // each block is an induced sub-poset of the amalgam
  for (int i = 0; i < ni; ++i) {
    const Poset& q = a.sub.block(i).poset;
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y)
        internal_check(q.le(x, y) == a.carrier.le(a.embed[i][x], a.embed[i][y]),
                       "block is not induced in the amalgam");
  }

  a.bullet_lo.assign(n, -1);
  a.bullet_hi.assign(n, -1);
  return a;
}

void compute_bullets(StrongAmalgam& a) {
  const IndexLattice& ix = a.sub.base.index;
  const int ni = ix.size();
  for (int i = 0; i < ni; ++i) {
    std::string why;
    if (!lattice_ops(a.sub.block(i).poset, &why))
      throw bad_input(cat("bullets need lattice blocks; block '",
                          ix.elem(i).label(), "': ", why));
  }
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < ni; ++j) {
      if (!ix.le(i, j) || i == j) continue;
      ExtensionWitness w =
          analyze_extension(a.sub.block(i).poset, a.sub.block(j).poset);
      if (!w.interval.holds())
        throw bad_input(cat("bullets need an interval-normal diagram; blocks '",
                            ix.elem(i).label(), "' ⊆ '", ix.elem(j).label(), "'"));
    }

  const int n = a.carrier.size();
  const int least = ix.least();
  for (int x = 0; x < n; ++x) {
    if (a.nu[x] == least) continue;
    std::vector<int> lows, ups;
    for (int y = 0; y < n; ++y) {
      if (!(ix.le(a.nu[y], a.nu[x]) && a.nu[y] != a.nu[x])) continue;
      if (a.carrier.lt(y, x)) lows.push_back(y);
      if (a.carrier.lt(x, y)) ups.push_back(y);
    }
    auto lo = a.carrier.max_of(lows);
    auto hi = a.carrier.min_of(ups);
    internal_check(lo.has_value() && hi.has_value(),
                   "bullet neighbours missing for an off-base element");
    a.bullet_lo[x] = *lo;
    a.bullet_hi[x] = *hi;

    // comparability of the valuations, the projection identities, and the
    // replacement law for indices not above ν(x)
    int nl = a.nu[*lo], nh = a.nu[*hi];
    internal_check(ix.le(nl, nh) || ix.le(nh, nl),
                   "bullet valuations are incomparable");
    int i = ix.le(nl, nh) ? nh : nl;
    internal_check(a.proj_down(x, i) == *lo && a.proj_up(x, i) == *hi,
                   "bullets disagree with the block projections");
    for (int y = 0; y < n; ++y) {
      if (ix.le(a.nu[x], a.nu[y])) continue;
      if (a.carrier.le(x, y))
        internal_check(a.carrier.le(*hi, y), "upper bullet law fails");
      if (a.carrier.le(y, x))
        internal_check(a.carrier.le(y, *lo), "lower bullet law fails");
    }
  }
  a.bullets_ready = true;
}

LatticeOps amalgam_lattice_ops(const StrongAmalgam& a) {
  const IndexLattice& ix = a.sub.base.index;
  const int n = a.carrier.size();
  std::vector<LatticeOps> block_ops;
  for (int i = 0; i < ix.size(); ++i) {
    std::string why;
    auto ops = lattice_ops(a.sub.block(i).poset, &why);
    if (!ops)
      throw bad_input(cat("amalgam lattice tables need lattice blocks; block '",
                          ix.elem(i).label(), "': ", why));
    block_ops.push_back(std::move(*ops));
  }

  LatticeOps ops;
  ops.join.assign(static_cast<size_t>(n) * n, -1);
  ops.meet.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j, m;
      if (a.carrier.le(x, y)) {
        j = y;
        m = x;
      } else if (a.carrier.le(y, x)) {
        j = x;
        m = y;
      } else {
        int mi = ix.meet(a.nu[x], a.nu[y]);
        const Poset& qm = a.sub.block(mi).poset;
        const auto& mo = block_ops[mi];
        int xl = a.inv[mi].at(a.proj_down(x, mi));
        int yl = a.inv[mi].at(a.proj_down(y, mi));
        m = a.embed[mi][mo.meet[static_cast<size_t>(xl) * qm.size() + yl]];
        int xu = a.inv[mi].at(a.proj_up(x, mi));
        int yu = a.inv[mi].at(a.proj_up(y, mi));
        j = a.embed[mi][mo.join[static_cast<size_t>(xu) * qm.size() + yu]];
        internal_check(a.in_block(mi, j) && a.in_block(mi, m),
                       "incomparable joins/meets left the meet block");
      }
      ops.join[static_cast<size_t>(x) * n + y] = j;
      ops.meet[static_cast<size_t>(x) * n + y] = m;
    }

  std::string why;
  auto direct = lattice_ops(a.carrier, &why);
  internal_check(direct.has_value(), cat("strong amalgam is not a lattice: ", why));
  internal_check(direct->join == ops.join && direct->meet == ops.meet,
                 "amalgam lattice recipe disagrees with direct lub/glb");

  // blocks are sublattices
  for (int i = 0; i < ix.size(); ++i) {
    const Poset& q = a.sub.block(i).poset;
    for (int x = 0; x < q.size(); ++x)
      for (int y = 0; y < q.size(); ++y) {
        int cj = ops.join[static_cast<size_t>(a.embed[i][x]) * n + a.embed[i][y]];
        int cm = ops.meet[static_cast<size_t>(a.embed[i][x]) * n + a.embed[i][y]];
        internal_check(
            a.in_block(i, cj) && a.in_block(i, cm) &&
                a.inv[i].at(cj) ==
                    block_ops[i].join[static_cast<size_t>(x) * q.size() + y] &&
                a.inv[i].at(cm) ==
                    block_ops[i].meet[static_cast<size_t>(x) * q.size() + y],
            "block is not a sublattice of the amalgam");
      }
  }
  return ops;
}

DbVerdict check_db1_db2_with(const StrongAmalgam& a) {
  internal_check(a.bullets_ready, "DB checks need bullets");
  const IndexLattice& ix = a.sub.base.index;
  const int ni = ix.size();
  DbVerdict v;

  v.db1 = TriState::yes();
  for (int i = 0; i < ni && v.db1.holds(); ++i)
    for (int j = 0; j < ni && v.db1.holds(); ++j) {
      if (!ix.le(i, j) || i == j) continue;
      const MeasuredPoset& qj = a.sub.block(j);
      std::vector<int> sub_in_super;
      for (int e = 0; e < a.sub.block(i).poset.size(); ++e)
        sub_in_super.push_back(
            *qj.poset.find(a.sub.block(i).poset.elem(e)));
      DoublingVerdict dv = doubling_of_subset(qj, sub_in_super);
      if (!dv.ok)
        v.db1 = TriState::no(cat("block '", ix.elem(i).label(), "' in '",
                                 ix.elem(j).label(), "': ", dv.message));
    }

  auto db2_scan = [&](bool incomparable_only) -> TriState {
    for (int i = 0; i < ni; ++i) {
      const MeasuredPoset& qi = a.sub.block(i);
      for (const auto& [xc, xl] : a.inv[i])
        for (const auto& [yc, yl] : a.inv[i]) {
          if (ix.le(a.nu[xc], a.nu[yc])) continue;
          if (incomparable_only && a.carrier.comparable(xc, yc)) continue;
          int lo = a.bullet_lo[xc], hi = a.bullet_hi[xc];
          internal_check(lo >= 0 && hi >= 0, "bullets missing for a DB2 pair");
          internal_check(a.in_block(i, lo) && a.in_block(i, hi),
                         "bullets left the block of a DB2 pair");
          int lol = a.inv[i].at(lo), hil = a.inv[i].at(hi);
          int span = qi.dist(hil, lol);
          if (qi.dist(xl, lol) == span && qi.val(xl, yl) != qi.val(hil, yl))
            return TriState::no(
                cat("⟦x,y⟧ ≠ ⟦x•,y⟧ for x = '", qi.poset.elem(xl).label(),
                    "', y = '", qi.poset.elem(yl).label(), "' in block '",
                    ix.elem(i).label(), "'"));
          if (qi.dist(hil, xl) == span && qi.val(yl, xl) != qi.val(yl, lol))
            return TriState::no(
                cat("⟦y,x⟧ ≠ ⟦y,x•⟧ for x = '", qi.poset.elem(xl).label(),
                    "', y = '", qi.poset.elem(yl).label(), "' in block '",
                    ix.elem(i).label(), "'"));
        }
    }
    return TriState::yes();
  };
  v.db2 = db2_scan(false);
  TriState reduced = db2_scan(true);
  internal_check(v.db2.holds() == reduced.holds(),
                 "the incomparable-only DB2 reduction disagrees with the full scan");
  return v;
}

DbVerdict check_db1_db2(const MeasuredDiagram& d) {
  StrongAmalgam a = amalgam_order(d);
  compute_bullets(a);
  return check_db1_db2_with(a);
}

void compute_bvo(StrongAmalgam& a, SemilatticePtr dtop, std::string top_label,
                 std::vector<std::vector<int>> phi_top) {
  const IndexLattice& ix = a.sub.base.index;
  const int ni = ix.size();
  const int n = a.carrier.size();
  if (static_cast<int>(phi_top.size()) != ni)
    throw bad_input("one transition into the top object is needed per index");
  for (int i = 0; i < ni; ++i) {
    Hom h;
    h.source = a.sub.base.objects[i];
    h.target = dtop;
    h.map = phi_top[i];
    HomVerdict hv = validate_hom(h);
    if (!hv.ok)
      throw bad_input(cat("transition from '", ix.elem(i).label(),
                          "' into the top object: ", hv.what));
  }
  a.dtop = std::move(dtop);
  a.top_label = std::move(top_label);
  a.phi_top = std::move(phi_top);

  a.bvo_tab.assign(static_cast<size_t>(n) * n, kTopSentinel);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int value = kTopSentinel;
      bool first = true;
      for (int k = 0; k < ni; ++k) {
        if (!ix.le(a.nu[x], k) || !ix.le(a.nu[y], k)) continue;
        const MeasuredPoset& qk = a.sub.block(k);
        int v = a.phi_top[k][qk.val(a.inv[k].at(x), a.inv[k].at(y))];
        if (first) {
          value = v;
          first = false;
        } else if (value != v) {
          throw bad_input(cat("⟦x,y⟧° ill-defined at ('",
                              a.carrier.elem(x).label(), "','",
                              a.carrier.elem(y).label(),
                              "'): extension identities broken"));
        }
      }
      a.bvo_tab[static_cast<size_t>(x) * n + y] = value;
    }

  const int least = ix.least();
  a.oplus.assign(n, 0);
  a.ominus.assign(n, 0);
  a.pdoubles = TriState::yes();
  for (int x = 0; x < n; ++x) {
    if (a.nu[x] == least) continue;
    int lo = a.bullet_lo[x], hi = a.bullet_hi[x];
    internal_check(lo >= 0 && hi >= 0, "bvo classification needs bullets");
    int down = a.bveo(x, lo), up = a.bveo(hi, x), span = a.bveo(hi, lo);
    internal_check(down != kTopSentinel && up != kTopSentinel &&
                       span != kTopSentinel,
                   "bullet distances escaped the top object");
    if (down == span) a.oplus[x] = 1;
    if (up == span) a.ominus[x] = 1;
    if (!a.oplus[x] && !a.ominus[x] && a.pdoubles.holds())
      a.pdoubles = TriState::no(cat("'", a.carrier.elem(x).label(),
                                    "' lies in neither P⊕ nor P⊖"));
  }
  a.has_top = true;
}

void compute_amalgam_measure(StrongAmalgam& a) {
  internal_check(a.has_top, "amalgam measure needs the ⟦x,y⟧° phase");
  const IndexLattice& ix = a.sub.base.index;
  const int n = a.carrier.size();

  auto below_top = [&](int x, int y) {  // some index bounds both valuations
    for (int k = 0; k < ix.size(); ++k)
      if (ix.le(a.nu[x], k) && ix.le(a.nu[y], k)) return true;
    return false;
  };

  MeasuredPoset out;
  out.poset = a.carrier;
  out.target = a.dtop;
  out.mu.assign(static_cast<size_t>(n) * n, a.dtop->zero());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int acc = a.bvo(x, y);
      for (int t = 0; t < n; ++t) {  // ⟦x,y⟧⁺ over t ∈ P(y), then ⟦x,y⟧⁻ over P(x)
        if (ix.le(a.nu[t], a.nu[y]) && a.nu[t] != a.nu[y]) {
          int term = a.join_top(a.bvo(x, t), a.bvo(t, y));
          acc = a.meet_top(acc, term);
        }
        if (ix.le(a.nu[t], a.nu[x]) && a.nu[t] != a.nu[x]) {
          int term = a.join_top(a.bvo(x, t), a.bvo(t, y));
          acc = a.meet_top(acc, term);
        }
      }
      for (int u = 0; u < n; ++u) {
        if (!a.ominus[u] || !(ix.le(a.nu[u], a.nu[x]) && a.nu[u] != a.nu[x]))
          continue;
        for (int v = 0; v < n; ++v) {
          if (!a.oplus[v] || !(ix.le(a.nu[v], a.nu[y]) && a.nu[v] != a.nu[y]))
            continue;
          int term = a.join_top(a.join_top(a.bvo(x, u), a.bvo(u, v)), a.bvo(v, y));
          acc = a.meet_top(acc, term);
        }
      }
      internal_check(acc != kTopSentinel,
                     "amalgam measure value escaped the top object");
      out.set_val(x, y, acc);
    }

  // ν(x) ∨ ν(y) < ℓ forces ⟦x,y⟧ = ⟦x,y⟧°
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (below_top(x, y))
        internal_check(out.val(x, y) == a.bvo(x, y),
                       "⟦x,y⟧ differs from ⟦x,y⟧° below the top level");

  MeasureVerdict mv = validate_pmeasure(out);
  internal_check(mv.ok, cat("amalgam table is not a p-measure: ", mv.message));

  // extends every block through its transition, and doubles over it
  for (int i = 0; i < ix.size(); ++i) {
    const MeasuredPoset& qi = a.sub.block(i);
    for (int x = 0; x < qi.poset.size(); ++x)
      for (int y = 0; y < qi.poset.size(); ++y)
        internal_check(out.val(a.embed[i][x], a.embed[i][y]) ==
                           a.phi_top[i][qi.val(x, y)],
                       "amalgam measure does not extend a block");
    DoublingVerdict dv = doubling_of_subset(out, a.embed[i]);
    internal_check(dv.ok, cat("amalgam is not a doubling extension of block '",
                              ix.elem(i).label(), "': ", dv.message));
  }

  a.measure = std::move(out);
  a.measured = true;
}

StrongAmalgam measured_amalgam(const MeasuredDiagram& full, int ell) {
  const IndexLattice& ix = full.base.index;
  if (ell < 0 || ell >= ix.size()) throw bad_input("top index out of range");
  std::vector<int> keep;
  for (int i = 0; i < ix.size(); ++i)
    if (ix.le(i, ell) && i != ell) keep.push_back(i);
  if (keep.empty())
    throw bad_input(cat("nothing lies strictly below top index '",
                        ix.elem(ell).label(), "'"));
  SemilatticePtr dtop = full.base.objects[ell];
  DistributivityVerdict dist = is_distributive(*dtop);
  if (!dist.ok)
    throw bad_input(cat("top object must be a distributive lattice: ",
                        dist.message));

  MeasuredDiagram sub = restrict_diagram(full, keep);
  NormalVerdict nv = validate_normal_diagram(sub);
  if (!nv.ok())
    throw bad_input(cat("diagram below the top is not a normal interval "
                        "diagram of measured posets: ", nv.summary()));

  StrongAmalgam a = amalgam_order(sub);
  compute_bullets(a);
  DbVerdict dbv = check_db1_db2_with(a);
  if (!dbv.db1.holds())
    throw bad_input(cat("(DB1) fails: ", dbv.db1.witness));
  if (!dbv.db2.holds())
    throw bad_input(cat("(DB2) fails: ", dbv.db2.witness));

  std::vector<std::vector<int>> phi_top;
  for (int i : keep) phi_top.push_back(full.base.phi(i, ell));
  compute_bvo(a, dtop, ix.elem(ell).label(), std::move(phi_top));
  internal_check(a.pdoubles.holds(),
                 cat("P ∖ Q_0 = P⊕ ∪ P⊖ fails under (DB1): ", a.pdoubles.witness));
  compute_amalgam_measure(a);
  return a;
}

namespace {

// Meet over chains of length exactly k of the ⟦·,·⟧°-joins, as a
// (meet, join)-semiring matrix power. The zero diagonal makes length-k
// subsume all shorter lengths.
std::vector<int> chain_power(const StrongAmalgam& a, int k) {
  const int n = a.carrier.size();
  std::vector<int> cur(a.bvo_tab);
  for (int step = 1; step < k; ++step) {
    std::vector<int> next(static_cast<size_t>(n) * n, kTopSentinel);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int acc = kTopSentinel;
        for (int z = 0; z < n; ++z)
          acc = a.meet_top(acc, a.join_top(cur[static_cast<size_t>(x) * n + z],
                                           a.bvo(z, y)));
        next[static_cast<size_t>(x) * n + y] = acc;
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SimpleBvdVerdict check_simplebvd(const StrongAmalgam& a, int chain_bound) {
  internal_check(a.measured, "simplebvd check needs the amalgam measure");
  if (chain_bound < 3) throw bad_input("chain bound must be at least 3");
  const int n = a.carrier.size();

  // interior-pair meet, written out directly
  std::vector<int> shorter(static_cast<size_t>(n) * n, kTopSentinel);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int acc = kTopSentinel;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          acc = a.meet_top(
              acc, a.join_top(a.join_top(a.bvo(x, u), a.bvo(u, v)), a.bvo(v, y)));
      shorter[static_cast<size_t>(x) * n + y] = acc;
    }

  std::vector<int> three = chain_power(a, 3);
  std::vector<int> bounded = chain_power(a, chain_bound);

  SimpleBvdVerdict v;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      size_t idx = static_cast<size_t>(x) * n + y;
      int stored = a.measure.val(x, y);
      if (shorter[idx] != stored || three[idx] != stored ||
          bounded[idx] != stored) {
        v.ok = false;
        v.x = x;
        v.y = y;
        v.message = cat("chain meets disagree at ('", a.carrier.elem(x).label(),
                        "','", a.carrier.elem(y).label(), "')");
        return v;
      }
    }
  return v;
}

PropagationVerdict check_propagation(const StrongAmalgam& a) {
  internal_check(a.measured, "propagation check needs the amalgam measure");
  const IndexLattice& ix = a.sub.base.index;
  const int n = a.carrier.size();
  PropagationVerdict v;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.oplus[x] && !ix.le(a.nu[x], a.nu[y]) &&
          a.measure.val(x, y) != a.measure.val(a.bullet_hi[x], y)) {
        v.ok = false;
        v.x = x;
        v.y = y;
        v.message = cat("⟦x,y⟧ ≠ ⟦x•,y⟧ at ('", a.carrier.elem(x).label(), "','",
                        a.carrier.elem(y).label(), "')");
        return v;
      }
      if (a.ominus[y] && !ix.le(a.nu[y], a.nu[x]) &&
          a.measure.val(x, y) != a.measure.val(x, a.bullet_lo[y])) {
        v.ok = false;
        v.x = x;
        v.y = y;
        v.message = cat("⟦x,y⟧ ≠ ⟦x,y•⟧ at ('", a.carrier.elem(x).label(), "','",
                        a.carrier.elem(y).label(), "')");
        return v;
      }
    }
  return v;
}

}  // namespace pmlat
