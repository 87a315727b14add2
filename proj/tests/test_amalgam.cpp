#include "doctest.h"

#include "amalgam/amalgam.hpp"
#include "core/common.hpp"
#include "test_util.hpp"

using namespace pmlat;
using testutil::named_poset;

namespace {

// Λ = {bot, l, r} (meet-semilattice, no top needed), identical objects,
// identity transitions; blocks supplied by the caller.
MeasuredDiagram v_diagram(const SemilatticePtr& s, MeasuredPoset qbot,
                          MeasuredPoset ql, MeasuredPoset qr) {
  MeasuredDiagram d;
  d.base.index = IndexLattice::make(named_poset({"bot", "l", "r"}, {{0, 1}, {0, 2}}));
  d.base.objects = {s, s, s};
  for (int i = 0; i < 3; ++i) d.base.transitions[{i, i}] = identity_hom(s).map;
  d.base.transitions[{0, 1}] = identity_hom(s).map;
  d.base.transitions[{0, 2}] = identity_hom(s).map;
  d.blocks = {std::move(qbot), std::move(ql), std::move(qr)};
  return d;
}

MeasuredPoset measured(const Poset& p, const SemilatticePtr& s,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& vals) {
  MeasuredPoset m = MeasuredPoset::zero_measure(p, s);
  for (const auto& [x, y, v] : vals)
    m.set_val(*p.find(Elem::base(x)), *p.find(Elem::base(y)), *s->find_name(v));
  REQUIRE(validate_pmeasure(m).ok);
  return m;
}

// the 2×2 diagram used for measured amalgams: bot, l, r below a top object
struct SquareFixture {
  MeasuredDiagram full;  // blocks at bot, l, r; none at top
  int top = 3;
};

SquareFixture square_two_blocks() {
  auto s2 = two_element_semilattice();
  auto pq = powerset_lattice({"p", "q"});
  SquareFixture f;
  Diagram d;
  d.index = IndexLattice::make(
      named_poset({"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  d.objects = {s2, pq, pq, pq};
  std::vector<int> up(2);
  up[s2->zero()] = pq->zero();
  up[s2->top()] = pq->top();
  for (int i = 0; i < 4; ++i)
    d.transitions[{i, i}] = identity_hom(d.objects[i]).map;
  d.transitions[{0, 1}] = up;
  d.transitions[{0, 2}] = up;
  d.transitions[{0, 3}] = up;
  d.transitions[{1, 3}] = identity_hom(pq).map;
  d.transitions[{2, 3}] = identity_hom(pq).map;
  REQUIRE(validate_diagram(d).ok);

  MeasuredPoset qbot = measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}});
  MeasuredPoset ql =
      measured(named_poset({"0", "u", "1"}, {{0, 1}, {0, 2}, {1, 2}}), pq,
               {{"u", "0", "{p}"}, {"1", "u", "{p,q}"}, {"1", "0", "{p,q}"}});
  MeasuredPoset qr =
      measured(named_poset({"0", "v", "1"}, {{0, 1}, {0, 2}, {1, 2}}), pq,
               {{"v", "0", "{q}"}, {"1", "v", "{p,q}"}, {"1", "0", "{p,q}"}});
  f.full.base = d;
  f.full.blocks = {qbot, ql, qr, std::nullopt};
  return f;
}

}  // namespace

TEST_CASE("validate_normal_diagram: single block and mutations") {
  auto s2 = two_element_semilattice();
  MeasuredPoset q0 = measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}});
  {
    MeasuredDiagram d;
    d.base.index = IndexLattice::make(chain_poset({"bot"}));
    d.base.objects = {s2};
    d.base.transitions[{0, 0}] = identity_hom(s2).map;
    d.blocks = {q0};
    CHECK(validate_normal_diagram(d).ok());
  }
  // sharing an element between incomparable blocks outside the meet block
  {
    MeasuredPoset ql = measured(
        named_poset({"0", "w", "1"}, {{0, 1}, {0, 2}, {1, 2}}), s2,
        {{"1", "0", "1"}, {"w", "0", "1"}, {"1", "w", "1"}});
    MeasuredDiagram d = v_diagram(s2, q0, ql, ql);
    auto v = validate_normal_diagram(d);
    CHECK_FALSE(v.ok());
    CHECK(v.cond2.fails());
    CHECK_THROWS_AS(amalgam_order(d), bad_input);
  }
}

TEST_CASE("amalgam_order: V-shape gives incomparable midpoints") {
  auto s2 = two_element_semilattice();
  MeasuredPoset q0 = measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}});
  MeasuredPoset ql =
      measured(named_poset({"0", "x", "1"}, {{0, 1}, {0, 2}, {1, 2}}), s2,
               {{"1", "0", "1"}, {"x", "0", "1"}, {"1", "x", "1"}});
  MeasuredPoset qr =
      measured(named_poset({"0", "y", "1"}, {{0, 1}, {0, 2}, {1, 2}}), s2,
               {{"1", "0", "1"}, {"y", "0", "1"}, {"1", "y", "1"}});
  MeasuredDiagram d = v_diagram(s2, q0, ql, qr);
  REQUIRE(validate_normal_diagram(d).ok());

  StrongAmalgam a = amalgam_order(d);
  CHECK(a.carrier.size() == 4);
  int x = *a.carrier.find(Elem::base("x"));
  int y = *a.carrier.find(Elem::base("y"));
  CHECK_FALSE(a.carrier.comparable(x, y));
  CHECK(a.nu[x] == 1);
  CHECK(a.nu[y] == 2);
  CHECK(a.nu[*a.carrier.find(Elem::base("0"))] == 0);

  // single-index diagram: P = Q_0
  {
    MeasuredDiagram single;
    single.base.index = IndexLattice::make(chain_poset({"bot"}));
    single.base.objects = {s2};
    single.base.transitions[{0, 0}] = identity_hom(s2).map;
    single.blocks = {q0};
    StrongAmalgam sa = amalgam_order(single);
    CHECK(sa.carrier.equals_as_labeled(q0.poset));
  }

  // lattice tables: x ∨ y = 1 and x ∧ y = 0, both landing in Q_bot
  LatticeOps ops = amalgam_lattice_ops(a);
  int one = *a.carrier.find(Elem::base("1"));
  int zero = *a.carrier.find(Elem::base("0"));
  CHECK(ops.join[static_cast<size_t>(x) * 4 + y] == one);
  CHECK(ops.meet[static_cast<size_t>(x) * 4 + y] == zero);
  CHECK(a.in_block(0, ops.join[static_cast<size_t>(x) * 4 + y]));

  // bullets: x• = 0, x• = 1
  compute_bullets(a);
  CHECK(a.bullet_lo[x] == zero);
  CHECK(a.bullet_hi[x] == one);
  CHECK(a.bullet_lo[zero] == -1);  // least-block elements have none

  // blocks are relatively complete inside the amalgam, with the projection
  // coincidence x↾_i = x↾_{i∧j} for x ∈ Q_j
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < a.carrier.size(); ++c) {
      int lo = a.proj_down(c, i);
      int hi = a.proj_up(c, i);
      CHECK(a.carrier.le(lo, c));
      CHECK(a.carrier.le(c, hi));
      int j = a.nu[c];
      int m = a.sub.base.index.meet(i, j);
      CHECK(a.proj_down(c, m) == lo);
      CHECK(a.proj_up(c, m) == hi);
    }
  }
}

TEST_CASE("measured amalgam of the two-block square: exact tables") {
  SquareFixture f = square_two_blocks();
  StrongAmalgam a = measured_amalgam(f.full, f.top);
  const auto& pq = *a.dtop;
  REQUIRE(a.carrier.size() == 4);
  int zero = *a.carrier.find(Elem::base("0"));
  int one = *a.carrier.find(Elem::base("1"));
  int u = *a.carrier.find(Elem::base("u"));
  int v = *a.carrier.find(Elem::base("v"));

  // ⟦x,y⟧°: the adjoined top exactly where no index bounds both valuations,
  // homomorphic images of block values elsewhere
  CHECK(a.bvo(u, v) == kTopSentinel);
  CHECK(a.bvo(v, u) == kTopSentinel);
  CHECK(pq.elem(a.bvo(u, zero)).name() == "{p}");
  CHECK(pq.elem(a.bvo(one, zero)).name() == "{p,q}");

  // the classification: both midpoints are closest to their upper bullet
  CHECK(a.ominus[u]);
  CHECK_FALSE(a.oplus[u]);
  CHECK(a.ominus[v]);
  CHECK_FALSE(a.oplus[v]);

  // hand evaluation of the four-meet definition
  auto name = [&](int idx) { return pq.elem(idx).name(); };
  CHECK(name(a.measure.val(one, zero)) == "{p,q}");
  CHECK(name(a.measure.val(u, zero)) == "{p}");
  CHECK(name(a.measure.val(one, u)) == "{p,q}");
  CHECK(name(a.measure.val(v, zero)) == "{q}");
  CHECK(name(a.measure.val(one, v)) == "{p,q}");
  CHECK(name(a.measure.val(u, v)) == "{p}");
  CHECK(name(a.measure.val(v, u)) == "{q}");
  CHECK(a.measure.val(zero, u) == pq.zero());

  // independent evaluation of the interior-pair meet over the ⟦x,y⟧° table
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int acc = kTopSentinel;
      for (int t = 0; t < 4; ++t)
        for (int w = 0; w < 4; ++w)
          acc = a.meet_top(acc, a.join_top(a.join_top(a.bvo(x, t), a.bvo(t, w)),
                                           a.bvo(w, y)));
      CHECK(acc == a.measure.val(x, y));
    }

  // independent evaluation of the four-meet definition with the index sets
  // explicitly restricted to terms living inside the top object
  {
    const IndexLattice& ix = a.sub.base.index;
    auto lt_nu = [&](int t, int z) {
      return ix.le(a.nu[t], a.nu[z]) && a.nu[t] != a.nu[z];
    };
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        int acc = a.bvo(x, y);
        for (int t = 0; t < 4; ++t) {
          if (lt_nu(t, y) && a.bvo(x, t) != kTopSentinel)
            acc = a.meet_top(acc, pq.join(a.bvo(x, t), a.bvo(t, y)));
          if (lt_nu(t, x) && a.bvo(t, y) != kTopSentinel)
            acc = a.meet_top(acc, pq.join(a.bvo(x, t), a.bvo(t, y)));
        }
        for (int t = 0; t < 4; ++t)
          for (int w = 0; w < 4; ++w)
            if (a.ominus[t] && lt_nu(t, x) && a.oplus[w] && lt_nu(w, y) &&
                a.bvo(t, w) != kTopSentinel)
              acc = a.meet_top(acc, pq.join(pq.join(a.bvo(x, t), a.bvo(t, w)),
                                            a.bvo(w, y)));
        CHECK(acc == a.measure.val(x, y));
      }
  }

  SimpleBvdVerdict sv = check_simplebvd(a, 5);
  CHECK(sv.ok);
  PropagationVerdict pv = check_propagation(a);
  CHECK(pv.ok);

  // chain law for ⟦x,y⟧° along chains of length up to 4 below the top
  const int n = a.carrier.size();
  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int x3 = 0; x3 < n; ++x3) {
          if (a.bvo(x0, x3) != kTopSentinel) {
            int rhs = a.join_top(a.join_top(a.bvo(x0, x1), a.bvo(x1, x2)),
                                 a.bvo(x2, x3));
            if (rhs != kTopSentinel) CHECK(pq.leq(a.bvo(x0, x3), rhs));
          }
          for (int x4 = 0; x4 < n; ++x4) {
            if (a.bvo(x0, x4) == kTopSentinel) continue;
            int rhs = a.join_top(
                a.join_top(a.join_top(a.bvo(x0, x1), a.bvo(x1, x2)),
                           a.bvo(x2, x3)),
                a.bvo(x3, x4));
            if (rhs != kTopSentinel) CHECK(pq.leq(a.bvo(x0, x4), rhs));
          }
        }

  // ⟦x,y⟧ ≤ ⟦x,t⟧° ∨ ⟦t,y⟧° and the two-interior-point variant
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int t = 0; t < n; ++t) {
        int rhs = a.join_top(a.bvo(x, t), a.bvo(t, y));
        if (rhs != kTopSentinel) CHECK(pq.leq(a.measure.val(x, y), rhs));
      }
      for (int t = 0; t < n; ++t)
        for (int w = 0; w < n; ++w) {
          int rhs = a.join_top(a.join_top(a.bvo(x, t), a.bvo(t, w)), a.bvo(w, y));
          if (rhs != kTopSentinel) CHECK(pq.leq(a.measure.val(x, y), rhs));
        }
    }
}

TEST_CASE("degenerate square: every strict value collapses to the full set") {
  // both flanks use the single-atom powerset, so everything maps onto {p,q}
  auto s2 = two_element_semilattice();
  auto p1 = powerset_lattice({"p"});
  auto pq = powerset_lattice({"p", "q"});
  Diagram d;
  d.index = IndexLattice::make(
      named_poset({"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  d.objects = {s2, p1, p1, pq};
  auto embed_unit = [](const SemilatticePtr& from, const SemilatticePtr& to) {
    std::vector<int> m(from->size());
    m[from->zero()] = to->zero();
    m[from->top()] = to->top();
    return m;
  };
  for (int i = 0; i < 4; ++i) d.transitions[{i, i}] = identity_hom(d.objects[i]).map;
  d.transitions[{0, 1}] = embed_unit(s2, p1);
  d.transitions[{0, 2}] = embed_unit(s2, p1);
  d.transitions[{0, 3}] = embed_unit(s2, pq);
  d.transitions[{1, 3}] = embed_unit(p1, pq);
  d.transitions[{2, 3}] = embed_unit(p1, pq);
  REQUIRE(validate_diagram(d).ok);

  MeasuredPoset qbot = measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}});
  MeasuredPoset ql =
      measured(named_poset({"0", "u", "1"}, {{0, 1}, {0, 2}, {1, 2}}), p1,
               {{"u", "0", "{p}"}, {"1", "u", "{p}"}, {"1", "0", "{p}"}});
  MeasuredPoset qr =
      measured(named_poset({"0", "v", "1"}, {{0, 1}, {0, 2}, {1, 2}}), p1,
               {{"v", "0", "{p}"}, {"1", "v", "{p}"}, {"1", "0", "{p}"}});
  MeasuredDiagram full;
  full.base = d;
  full.blocks = {qbot, ql, qr, std::nullopt};

  StrongAmalgam a = measured_amalgam(full, 3);
  int u = *a.carrier.find(Elem::base("u"));
  int v = *a.carrier.find(Elem::base("v"));
  CHECK(a.measure.val(u, v) == a.dtop->top());
  CHECK(a.measure.val(v, u) == a.dtop->top());
  CHECK(check_simplebvd(a, 5).ok);
}

TEST_CASE("measured_amalgam refuses DB1 violations with a witness") {
  auto s2 = two_element_semilattice();
  auto pq = powerset_lattice({"p", "q"});
  Diagram d;
  d.index = IndexLattice::make(chain_poset({"bot", "l", "top"}));
  d.objects = {s2, pq, pq};
  std::vector<int> up(2);
  up[s2->zero()] = pq->zero();
  up[s2->top()] = pq->top();
  for (int i = 0; i < 3; ++i) d.transitions[{i, i}] = identity_hom(d.objects[i]).map;
  d.transitions[{0, 1}] = up;
  d.transitions[{0, 2}] = up;
  d.transitions[{1, 2}] = identity_hom(pq).map;
  MeasuredPoset qbot = measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}});
  // incomparable side distances at the midpoint: not a doubling extension
  MeasuredPoset ql =
      measured(named_poset({"0", "m", "1"}, {{0, 1}, {0, 2}, {1, 2}}), pq,
               {{"m", "0", "{p}"}, {"1", "m", "{q}"}, {"1", "0", "{p,q}"}});
  MeasuredDiagram full;
  full.base = d;
  full.blocks = {qbot, ql, std::nullopt};
  CHECK_THROWS_WITH_AS(measured_amalgam(full, 2),
                       doctest::Contains("(DB1) fails"), bad_input);

  DbVerdict db = check_db1_db2(restrict_diagram(full, {0, 1}));
  CHECK_FALSE(db.db1.holds());
  CHECK(db.db2.holds());  // both replacement hypotheses stay unsatisfied here
}

TEST_CASE("single-block amalgam measure is the homomorphic image") {
  auto s2 = two_element_semilattice();
  auto pq = powerset_lattice({"p", "q"});
  Diagram d;
  d.index = IndexLattice::make(chain_poset({"bot", "top"}));
  d.objects = {s2, pq};
  std::vector<int> up(2);
  up[s2->zero()] = pq->zero();
  up[s2->top()] = pq->top();
  d.transitions[{0, 0}] = identity_hom(s2).map;
  d.transitions[{1, 1}] = identity_hom(pq).map;
  d.transitions[{0, 1}] = up;
  MeasuredDiagram full;
  full.base = d;
  full.blocks = {measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}}),
                 std::nullopt};
  StrongAmalgam a = measured_amalgam(full, 1);
  CHECK(a.carrier.size() == 2);
  int one = *a.carrier.find(Elem::base("1"));
  int zero = *a.carrier.find(Elem::base("0"));
  CHECK(a.measure.val(one, zero) == pq->top());
  CHECK(a.measure.val(zero, one) == pq->zero());
  CHECK(check_simplebvd(a, 5).ok);
  CHECK(check_propagation(a).ok);
}

TEST_CASE("check_db1_db2: vacuous on a single block") {
  auto s2 = two_element_semilattice();
  MeasuredDiagram d;
  d.base.index = IndexLattice::make(chain_poset({"bot"}));
  d.base.objects = {s2};
  d.base.transitions[{0, 0}] = identity_hom(s2).map;
  d.blocks = {measured(chain_poset({"0", "1"}), s2, {{"1", "0", "1"}})};
  DbVerdict db = check_db1_db2(d);
  CHECK(db.ok());
}
