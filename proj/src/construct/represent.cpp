#include "construct/represent.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "core/common.hpp"
#include "ext/scheme.hpp"
#include "measure/extend.hpp"

namespace pmlat {

void VerifyReport::add(std::string name, bool ok, std::string detail) {
  all_green = all_green && ok;
  lines.push_back({std::move(name), ok, std::move(detail)});
}

LevelResult level_step(const MeasuredDiagram& working, int ell,
                       const RepresentOptions& opt) {
  LevelResult res;
  res.ell = ell;
  res.amalgam = measured_amalgam(working, ell);
  const MeasuredPoset& pl = res.amalgam.measure;
  const std::string level_label = working.base.index.elem(ell).label();

  std::vector<std::pair<int, int>> primes = pl.poset.cover_pairs();
  if (opt.shuffle_seed != 0) {
    std::mt19937 rng(opt.shuffle_seed);
    std::shuffle(primes.begin(), primes.end(), rng);
  }

  long total = pl.poset.size();
  for (auto [x, y] : primes) {
    res.gadgets.push_back(build_gadget(pl, x, y, level_label));
    total += res.gadgets.back().block.size();
    if (total > opt.budget)
      throw budget_exceeded(cat("level '", level_label, "' needs more than ",
                                opt.budget, " elements (gadget growth is "
                                "exponential in the join-irreducible count)"));
  }

  IntervalScheme scheme;
  scheme.base = pl.poset;
  for (const auto& g : res.gadgets)
    scheme.blocks.push_back({g.lower, g.upper, g.block});
  SumResult sum = sum_scheme(scheme);
  internal_check(sum.witness.covering.holds(),
                 "prime-interval scheme sum is not a covering extension");

  IntervalMeasureFamily family;
  family.base = pl;
  family.super = sum.sum;
  for (const auto& g : res.gadgets) {
    IntervalMeasureFamily::Block blk;
    blk.u = *sum.sum.find(g.lower_elem);
    blk.v = *sum.sum.find(g.upper_elem);
    std::vector<int> bar_to_sum(g.bar.poset.size());
    for (int i = 0; i < g.bar.poset.size(); ++i)
      bar_to_sum[i] = *sum.sum.find(g.bar.poset.elem(i));
    std::vector<int> members = bar_to_sum;
    std::sort(members.begin(), members.end());
    blk.members = members;
    blk.mu.assign(members.size() * members.size(), -1);
    std::map<int, int> slot;
    for (size_t i = 0; i < members.size(); ++i) slot[members[i]] = static_cast<int>(i);
    for (int i = 0; i < g.bar.poset.size(); ++i)
      for (int j = 0; j < g.bar.poset.size(); ++j)
        blk.mu[static_cast<size_t>(slot.at(bar_to_sum[i])) * members.size() +
               slot.at(bar_to_sum[j])] = g.bar.val(i, j);
    family.blocks.push_back(std::move(blk));
  }
  res.ql = extend_measure(family);

  // the new level is a lattice (blocks are lattices over a lattice base)
  std::string why;
  internal_check(lattice_ops(res.ql.poset, &why).has_value(),
                 cat("constructed level is not a lattice: ", why));
  return res;
}

namespace {

std::string fresh_name(const std::set<std::string>& taken, const std::string& stem) {
  if (!taken.count(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string cand = cat(stem, i);
    if (!taken.count(cand)) return cand;
  }
}

MeasuredPoset base_block(const Semilattice& d0) {
  MeasuredPoset q0;
  q0.poset = chain_poset({"0", "1"});
  internal_check(d0.size() == 2, "base object must have two elements");
  return q0;
}

}  // namespace

ConstructionRun represent_diagram(const Diagram& d, const RepresentOptions& opt) {
  ConstructionRun run;
  run.input = d;
  run.budget = opt.budget;

  DiagramVerdict dv = validate_diagram(d);
  if (!dv.ok) throw bad_input(cat("invalid diagram: ", dv.what));
  const int n = d.index.size();
  for (int i = 0; i < n; ++i) {
    DistributivityVerdict dov = is_distributive(*d.objects[i]);
    if (!dov.ok)
      throw bad_input(cat("object at '", d.index.elem(i).label(),
                          "' is not distributive: ", dov.message));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.index.le(i, j) && d.phi(i, j)[d.objects[i]->top()] != d.objects[j]->top())
        throw bad_input(cat("transition ('", d.index.elem(i).label(), "' -> '",
                            d.index.elem(j).label(), "') does not preserve the unit"));

  // working diagram; prepend a fresh root when the base object is not 2
  Diagram lambda = d;
  run.prepended = d.objects[d.index.least()]->size() != 2;
  if (run.prepended) {
    std::set<std::string> taken;
    for (int i = 0; i < n; ++i) taken.insert(d.index.elem(i).label());
    std::string root = fresh_name(taken, "root");
    std::vector<Elem> elems;
    elems.push_back(Elem::base(root));
    for (int i = 0; i < n; ++i) elems.push_back(d.index.poset().elem(i));
    const int m = n + 1;
    std::vector<uint8_t> le(static_cast<size_t>(m) * m, 0);
    le[0] = 1;
    for (int j = 1; j < m; ++j) le[static_cast<size_t>(0) * m + j] = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        le[static_cast<size_t>(i + 1) * m + (j + 1)] = d.index.le(i, j) ? 1 : 0;
    Diagram ext;
    ext.index = IndexLattice::make(Poset::make(std::move(elems), std::move(le)));
    ext.objects.push_back(two_element_semilattice());
    for (int i = 0; i < n; ++i) ext.objects.push_back(d.objects[i]);
    for (const auto& [key, map] : d.transitions)
      ext.transitions[{key.first + 1, key.second + 1}] = map;
    for (int j = 0; j < n; ++j) {
      std::vector<int> map(2);
      map[ext.objects[0]->zero()] = d.objects[j]->zero();
      map[ext.objects[0]->top()] = d.objects[j]->top();
      ext.transitions[{0, j + 1}] = map;
    }
    ext.transitions[{0, 0}] = identity_hom(ext.objects[0]).map;
    lambda = std::move(ext);
    DiagramVerdict edv = validate_diagram(lambda);
    internal_check(edv.ok, cat("extended diagram invalid: ", edv.what));
  }

  run.zero_separating = true;
  for (int i = 0; i < lambda.index.size(); ++i)
    for (int j = 0; j < lambda.index.size(); ++j)
      if (lambda.index.le(i, j)) {
        Hom h = lambda.hom(i, j);
        run.zero_separating = run.zero_separating && h.separates_zero();
      }

  run.output.base = lambda;
  run.output.blocks.assign(lambda.index.size(), std::nullopt);

  const int least = lambda.index.least();
  MeasuredPoset q0 = base_block(*lambda.objects[least]);
  q0.target = lambda.objects[least];
  const int nn = q0.poset.size();
  q0.mu.assign(static_cast<size_t>(nn) * nn, q0.target->zero());
  q0.set_val(*q0.poset.find(Elem::base("1")), *q0.poset.find(Elem::base("0")),
             q0.target->top());
  run.output.blocks[least] = std::move(q0);
  run.process_order.push_back(least);

  // remaining indices by (height, label)
  std::vector<int> rest;
  for (int i = 0; i < lambda.index.size(); ++i)
    if (i != least) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    int ha = lambda.index.height(a), hb = lambda.index.height(b);
    if (ha != hb) return ha < hb;
    return lambda.index.elem(a).key() < lambda.index.elem(b).key();
  });
  for (int ell : rest) {
    LevelResult lr = level_step(run.output, ell, opt);
    run.output.blocks[ell] = lr.ql;
    run.levels.emplace(ell, std::move(lr));
    run.process_order.push_back(ell);
  }

  // the finished family must be a normal interval diagram with (DB1)/(DB2)
  NormalVerdict nv = validate_normal_diagram(run.output);
  internal_check(nv.ok(), cat("constructed diagram invalid: ", nv.summary()));
  DbVerdict db = check_db1_db2(run.output);
  internal_check(db.ok(), cat("constructed diagram loses the doubling laws: ",
                              db.db1.holds() ? db.db2.witness : db.db1.witness));
  TheoremVerdict tv = check_theorem_conditions(run.output, run.zero_separating);
  internal_check(tv.ok(), "constructed diagram fails a theorem condition");
  return run;
}

TheoremVerdict check_theorem_conditions(const MeasuredDiagram& md,
                                        bool strict_irreducible) {
  TheoremVerdict tv;
  const IndexLattice& ix = md.base.index;
  const int n = ix.size();

  tv.density = TriState::yes();
  for (int i = 0; i < n && tv.density.holds(); ++i)
    for (int j = 0; j < n && tv.density.holds(); ++j) {
      if (!ix.le(i, j) || i == j) continue;
      const Poset& qi = md.block(i).poset;
      const Poset& qj = md.block(j).poset;
      for (int x = 0; x < qi.size() && tv.density.holds(); ++x)
        for (int y = 0; y < qi.size() && tv.density.holds(); ++y) {
          if (!qi.lt(x, y)) continue;
          int xj = *qj.find(qi.elem(x));
          int yj = *qj.find(qi.elem(y));
          bool found = false;
          for (int z = 0; z < qj.size() && !found; ++z)
            if (qj.lt(xj, z) && qj.lt(z, yj)) found = true;
          if (!found)
            tv.density = TriState::no(
                cat("no element of block '", ix.elem(j).label(), "' splits '",
                    qi.elem(x).label(), "' < '", qi.elem(y).label(),
                    "' from block '", ix.elem(i).label(), "'"));
        }
    }

  tv.prime_vals = TriState::yes();
  for (int i = 0; i < n && tv.prime_vals.holds(); ++i) {
    const MeasuredPoset& qi = md.block(i);
    const Semilattice& di = *md.base.objects[i];
    const auto& irr = di.join_irreducibles();
    for (auto [u, v] : qi.poset.cover_pairs()) {
      int val = qi.val(v, u);
      bool is_irr = std::find(irr.begin(), irr.end(), val) != irr.end();
      bool okv = strict_irreducible ? is_irr : (is_irr || val == di.zero());
      if (!okv) {
        tv.prime_vals = TriState::no(cat(
            "cover value at ('", qi.poset.elem(u).label(), "','",
            qi.poset.elem(v).label(), "') in block '", ix.elem(i).label(),
            "' is not ", strict_irreducible ? "join-irreducible"
                                            : "join-irreducible-or-zero"));
        break;
      }
    }
  }

  tv.atoms = TriState::yes();
  for (int i = 0; i < n && tv.atoms.holds(); ++i) {
    const MeasuredPoset& qi = md.block(i);
    const Semilattice& di = *md.base.objects[i];
    auto least = qi.poset.least();
    if (!least) {
      tv.atoms = TriState::no(cat("block '", ix.elem(i).label(),
                                  "' has no least element"));
      break;
    }
    for (int p : di.join_irreducibles()) {
      bool found = false;
      for (int x = 0; x < qi.poset.size() && !found; ++x)
        if (qi.poset.covers(*least, x) && qi.val(x, *least) == p) found = true;
      if (!found) {
        tv.atoms = TriState::no(cat("join-irreducible '", di.elem(p).label(),
                                    "' of object '", ix.elem(i).label(),
                                    "' is not realized over an atom"));
        break;
      }
    }
  }
  return tv;
}

namespace {

void verify_run_body(const ConstructionRun& run, VerifyReport& rep) {
  const IndexLattice& ix = run.output.base.index;

  NormalVerdict nv = validate_normal_diagram(run.output);
  rep.add("normal-interval-diagram", nv.ok(), nv.ok() ? "" : nv.summary());

  DbVerdict db = check_db1_db2(run.output);
  rep.add("db1", db.db1.holds(), db.db1.witness);
  rep.add("db2", db.db2.holds(), db.db2.witness);

  // per-level re-checks over the processed ideals
  std::vector<int> processed;
  for (int ell : run.process_order) {
    processed.push_back(ell);
    if (processed.size() == 1) continue;
    MeasuredDiagram sub = restrict_diagram(run.output, processed);
    NormalVerdict lv = validate_normal_diagram(sub);
    DbVerdict ldb = check_db1_db2(sub);
    rep.add(cat("level-", ix.elem(ell).label(), "-normal"), lv.ok(),
            lv.ok() ? "" : lv.summary());
    rep.add(cat("level-", ix.elem(ell).label(), "-db"), ldb.ok(),
            ldb.ok() ? "" : (ldb.db1.holds() ? ldb.db2.witness : ldb.db1.witness));
  }

  TheoremVerdict tv = check_theorem_conditions(run.output, run.zero_separating);
  rep.add("density", tv.density.holds(), tv.density.witness);
  rep.add("prime-interval-values", tv.prime_vals.holds(), tv.prime_vals.witness);
  rep.add("atom-realization", tv.atoms.holds(), tv.atoms.witness);

  // P1-P3 and the distributivity cross-check at every maximal index
  for (int m = 0; m < ix.size(); ++m) {
    bool maximal = true;
    for (int j = 0; j < ix.size() && maximal; ++j)
      if (j != m && ix.le(m, j)) maximal = false;
    if (!maximal) continue;
    const MeasuredPoset& qm = run.output.block(m);
    const std::string tag = cat("top-", ix.elem(m).label());
    MeasureVerdict mv = validate_pmeasure(qm);
    rep.add(cat(tag, "-pmeasure"), mv.ok, mv.message);
    if (run.zero_separating) {
      P1Verdict p1 = check_P1(qm);
      rep.add(cat(tag, "-P1"), p1.ok, p1.message);
    }
    P2Verdict p2 = check_P2(qm);
    rep.add(cat(tag, "-P2"), p2.ok, p2.message);
    P3Verdict p3 = check_P3(qm);
    rep.add(cat(tag, "-P3"), p3.ok, p3.message);
    if (p2.ok && p3.ok) {
      DistributivityVerdict dv = is_distributive(*qm.target);
      rep.add(cat(tag, "-distributivity-necessity"), dv.ok, dv.message);
    }
  }
}

}  // namespace

VerifyReport verify_run(const ConstructionRun& run) {
  VerifyReport rep;
  try {
    verify_run_body(run, rep);
  } catch (const std::exception& e) {
    rep.add("verify-run-exception", false, e.what());
  }
  return rep;
}

SemilatticeRepresentation represent_semilattice(const SemilatticePtr& s,
                                                const RepresentOptions& opt) {
  DistributivityVerdict dv = is_distributive(*s);
  if (!dv.ok)
    throw bad_input(cat("semilattice is not distributive (witness a = '",
                        s->elem(dv.a).label(), "', b = '", s->elem(dv.b).label(),
                        "', c = '", s->elem(dv.c).label(), "'): ", dv.message));

  SemilatticeRepresentation out;
  if (s->size() == 1) {
    // the one-point semilattice: the singleton measured poset is the
    // restriction route's output and satisfies (P1)-(P3) outright
    MeasuredPoset rep;
    rep.poset = chain_poset({"0"});
    rep.target = s;
    rep.mu.assign(1, s->zero());
    out.rep = rep;
    out.run.output.base.index = IndexLattice::make(chain_poset({"0"}));
    out.run.output.base.objects = {s};
    out.run.output.base.transitions[{0, 0}] = identity_hom(s).map;
    out.run.output.blocks = {rep};
    out.run.process_order = {0};
    out.run.zero_separating = true;
    out.run.input = out.run.output.base;
  } else if (s->size() == 2) {
    // two-element targets are the base case itself: the one-index diagram
    Diagram d;
    d.index = IndexLattice::make(chain_poset({"0"}));
    d.objects = {s};
    d.transitions[{0, 0}] = identity_hom(s).map;
    out.run = represent_diagram(d, opt);
    out.rep = out.run.output.block(0);
  } else {
    Diagram d;
    d.index = IndexLattice::make(chain_poset({"0", "1"}));
    d.objects = {two_element_semilattice(), s};
    std::vector<int> up(2);
    up[d.objects[0]->zero()] = s->zero();
    up[d.objects[0]->top()] = s->top();
    d.transitions[{0, 0}] = identity_hom(d.objects[0]).map;
    d.transitions[{1, 1}] = identity_hom(s).map;
    d.transitions[{0, 1}] = up;
    out.run = represent_diagram(d, opt);
    out.rep = out.run.output.block(1);
  }

  out.bundle = verify_run(out.run);
  const MeasuredPoset& rep = out.rep;

  // meet-semilattice with zero; bounded pairs have joins
  bool meets = rep.poset.least().has_value();
  bool bounded_joins = true;
  for (int a = 0; a < rep.poset.size() && meets; ++a)
    for (int b = 0; b < rep.poset.size() && meets; ++b) {
      if (!rep.poset.glb(a, b)) meets = false;
      if (!rep.poset.upper_bounds(a, b).empty() && !rep.poset.lub(a, b))
        bounded_joins = false;
    }
  out.bundle.add("meet-semilattice-with-zero", meets);
  out.bundle.add("bounded-subsets-have-joins", bounded_joins);

  if (out.run.zero_separating) {
    bool nonzero = true;
    for (int a = 0; a < rep.poset.size() && nonzero; ++a)
      for (int b = 0; b < rep.poset.size() && nonzero; ++b)
        if (rep.poset.lt(a, b) && rep.val(b, a) == rep.target->zero())
          nonzero = false;
    out.bundle.add("strict-pairs-have-nonzero-value", nonzero);
  }
  return out;
}

MeasuredPoset represent_via_adjoined_unit(const SemilatticePtr& s,
                                          const RepresentOptions& opt) {
  std::set<std::string> taken;
  for (int i = 0; i < s->size(); ++i) taken.insert(s->elem(i).name());
  std::string unit_name = fresh_name(taken, "unit");

  const int n = s->size();
  std::vector<Elem> elems;
  for (int i = 0; i < n; ++i) elems.push_back(s->elem(i));
  elems.push_back(Elem::base(unit_name));
  const int m = n + 1;
  std::vector<uint8_t> le(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      le[static_cast<size_t>(i) * m + j] = s->leq(i, j) ? 1 : 0;
  for (int i = 0; i < m; ++i) {
    le[static_cast<size_t>(i) * m + n] = 1;
    le[static_cast<size_t>(i) * m + i] = 1;
  }
  auto s1 = std::make_shared<Semilattice>(
      Semilattice::from_poset(Poset::make(std::move(elems), std::move(le)), true));

  SemilatticeRepresentation big = represent_semilattice(s1, opt);
  if (!big.bundle.all_green)
    throw internal_check_error("adjoined-unit representation failed verification");

  // restrict to the lower subset {x : ⟦x,0⟧ ∈ S}
  const MeasuredPoset& p = big.rep;
  int least = *p.poset.least();
  int fresh_idx = *s1->find_name(unit_name);
  std::vector<int> keep;
  for (int x = 0; x < p.poset.size(); ++x)
    if (p.val(x, least) != fresh_idx) keep.push_back(x);
  for (int x : keep)  // lower subset check
    for (int y = 0; y < p.poset.size(); ++y)
      if (p.poset.le(y, x))
        internal_check(p.val(y, least) != fresh_idx,
                       "restriction set is not a lower subset");

  MeasuredPoset out;
  out.poset = p.poset.induced(keep);
  out.target = s;
  const int k = static_cast<int>(keep.size());
  out.mu.assign(static_cast<size_t>(k) * k, s->zero());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = p.val(keep[i], keep[j]);
      auto back = s->find(s1->elem(v));
      internal_check(back.has_value(), "restricted value escaped the semilattice");
      out.mu[static_cast<size_t>(i) * k + j] = *back;
    }
  return out;
}

}  // namespace pmlat
