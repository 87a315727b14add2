#include "measure/pmeasure.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

int MeasuredPoset::dist(int x, int y) const {
  if (poset.le(x, y)) return val(y, x);
  if (poset.le(y, x)) return val(x, y);
  throw bad_input(cat("distance of incomparable elements '", poset.elem(x).label(),
                      "', '", poset.elem(y).label(), "'"));
}

MeasuredPoset MeasuredPoset::zero_measure(Poset p, SemilatticePtr target) {
  MeasuredPoset m;
  const int n = p.size();
  m.poset = std::move(p);
  m.mu.assign(static_cast<size_t>(n) * n, target->zero());
  m.target = std::move(target);
  return m;
}

MeasureVerdict validate_pmeasure(const MeasuredPoset& m) {
  MeasureVerdict v;
  const int n = m.poset.size();
  const Semilattice& s = *m.target;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (m.poset.le(x, y) && m.val(x, y) != s.zero()) {
        v.ok = false;
        v.axiom = "vanishing";
        v.x = x;
        v.y = y;
        v.message = cat("μ('", m.poset.elem(x).label(), "','",
                        m.poset.elem(y).label(), "') nonzero on a ≤ pair");
        return v;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!s.leq(m.val(x, z), s.join(m.val(x, y), m.val(y, z)))) {
          v.ok = false;
          v.axiom = "triangle";
          v.x = x;
          v.y = y;
          v.z = z;
          v.message = cat("triangular inequality fails at ('",
                          m.poset.elem(x).label(), "','", m.poset.elem(y).label(),
                          "','", m.poset.elem(z).label(), "')");
          return v;
        }
  return v;
}

P1Verdict check_P1(const MeasuredPoset& m) {
  P1Verdict v;
  const int n = m.poset.size();
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w && m.poset.le(u, w) && m.val(w, u) == m.target->zero()) {
        v.ok = false;
        v.u = u;
        v.v = w;
        v.message = cat("μ('", m.poset.elem(w).label(), "','",
                        m.poset.elem(u).label(), "') = 0 on a strict pair");
        return v;
      }
  return v;
}

namespace {

// Reflexive-transitive closure of the allowed-step relation for one (a,b).
// Any allowed chain is increasing, so a u→v path automatically stays inside
// the interval [u,v].
std::vector<uint8_t> step_closure(const MeasuredPoset& m, int a, int b) {
  const int n = m.poset.size();
  const Semilattice& s = *m.target;
  std::vector<uint8_t> reach(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool edge = m.poset.le(x, y) &&
                  (s.leq(m.val(y, x), a) || s.leq(m.val(y, x), b));
      reach[static_cast<size_t>(x) * n + y] = (edge || x == y) ? 1 : 0;
    }
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x) {
      if (!reach[static_cast<size_t>(x) * n + k]) continue;
      for (int y = 0; y < n; ++y)
        if (reach[static_cast<size_t>(k) * n + y])
          reach[static_cast<size_t>(x) * n + y] = 1;
    }
  return reach;
}

}  // namespace

P2Verdict check_P2(const MeasuredPoset& m, P2Mode mode) {
  P2Verdict v;
  const int n = m.poset.size();
  const Semilattice& s = *m.target;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      std::vector<uint8_t> reach;
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
          if (!m.poset.le(u, w)) continue;
          bool applicable = s.leq(m.val(w, u), s.join(a, b));
          if (mode == P2Mode::bounded_pairs && !applicable) continue;
          if (!applicable) continue;  // implication holds vacuously
          if (reach.empty()) reach = step_closure(m, a, b);
          if (!reach[static_cast<size_t>(u) * n + w]) {
            v.ok = false;
            v.u = u;
            v.v = w;
            v.a = a;
            v.b = b;
            v.message =
                cat("no admissible decomposition of ('", m.poset.elem(w).label(),
                    "','", m.poset.elem(u).label(), "') for semilattice pair ('",
                    s.elem(a).label(), "','", s.elem(b).label(), "')");
            return v;
          }
        }
    }
  return v;
}

P3Verdict check_P3(const MeasuredPoset& m) {
  auto least = m.poset.least();
  if (!least) throw bad_input("P3 needs a least element in the measured poset");
  std::vector<int> seed;
  for (int x = 0; x < m.poset.size(); ++x) seed.push_back(m.val(x, *least));
  std::vector<int> gen = generated_subsemilattice(*m.target, seed);
  P3Verdict v;
  if (static_cast<int>(gen.size()) == m.target->size()) return v;
  v.ok = false;
  for (int x = 0; x < m.target->size(); ++x)
    if (!std::binary_search(gen.begin(), gen.end(), x)) v.missing.push_back(x);
  v.message = cat(v.missing.size(), " semilattice element(s) not generated, e.g. '",
                  m.target->elem(v.missing[0]).label(), "'");
  return v;
}

ExtensionCheck check_extension(const MeasuredPoset& sub, const MeasuredPoset& super,
                               const Hom& phi) {
  if (*phi.source != *sub.target || *phi.target != *super.target)
    throw bad_input("homomorphism endpoints do not match the two measure targets");
  auto embed = sub.poset.embedding_into(super.poset);
  if (!embed || !sub.poset.is_induced_subposet_of(super.poset, *embed))
    throw bad_input("measured sub-poset is not induced in the extension");
  ExtensionCheck c;
  for (int x = 0; x < sub.poset.size(); ++x)
    for (int y = 0; y < sub.poset.size(); ++y)
      if (super.val((*embed)[x], (*embed)[y]) != phi.map[sub.val(x, y)]) {
        c.ok = false;
        c.x = x;
        c.y = y;
        c.message = cat("value at ('", sub.poset.elem(x).label(), "','",
                        sub.poset.elem(y).label(),
                        "') is not the homomorphic image of the sub-poset value");
        return c;
      }
  return c;
}

DoublingVerdict doubling_of_subset(const MeasuredPoset& super,
                                   const std::vector<int>& sub_in_super) {
  DoublingVerdict v;
  const Poset& q = super.poset;
  const Semilattice& s = *super.target;
  for (int x = 0; x < q.size(); ++x) {
    std::vector<int> lows, ups;
    for (int p : sub_in_super) {
      if (q.le(p, x)) lows.push_back(p);
      if (q.le(x, p)) ups.push_back(p);
    }
    auto lo = q.max_of(lows);
    auto hi = q.min_of(ups);
    if (!lo || !hi)
      throw bad_input(cat("doubling needs a relatively complete extension; '",
                          q.elem(x).label(), "' lacks a projection"));
    int down = super.dist(x, *lo);
    int up = super.dist(*hi, x);
    bool comparable = s.leq(down, up) || s.leq(up, down);
    int span = super.dist(*hi, *lo);
    bool alt = (span == down) || (span == up);
    internal_check(comparable == alt,
                   "the two doubling formulations disagree");
    if (!comparable) {
      v.ok = false;
      v.x = x;
      v.message = cat("⟦x ÷ x_P⟧ and ⟦x^P ÷ x⟧ incomparable at x = '",
                      q.elem(x).label(), "'");
      return v;
    }
  }
  return v;
}

DoublingVerdict check_doubling(const MeasuredPoset& sub, const MeasuredPoset& super) {
  if (*sub.target != *super.target)
    throw bad_input("doubling check needs both posets measured into the same target");
  ExtensionWitness w = analyze_extension(sub.poset, super.poset);
  if (!w.rc.holds())
    throw bad_input(cat("doubling needs a relatively complete extension: ",
                        w.rc.witness));
  ExtensionCheck ec = check_extension(sub, super, identity_hom(sub.target));
  if (!ec.ok) {
    DoublingVerdict v;
    v.ok = false;
    v.message = cat("measure not preserved: ", ec.message);
    return v;
  }
  return doubling_of_subset(super, w.sub_in_super);
}

}  // namespace pmlat
