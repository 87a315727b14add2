#include "lab/cube.hpp"

#include <algorithm>

#include "core/common.hpp"
#include "lab/enumerate.hpp"

namespace pmlat {

namespace {

std::string set_name(std::initializer_list<int> xs) {
  std::string out = "{";
  bool first = true;
  for (int x : xs) {
    if (!first) out += ",";
    out += cat(x);
    first = false;
  }
  return out + "}";
}

int find_set(const Semilattice& s, std::initializer_list<int> xs) {
  auto idx = s.find_name(set_name(xs));
  internal_check(idx.has_value(), cat("missing set ", set_name(xs)));
  return *idx;
}

// subsets of {0,1,2} in a fixed order: sizes ascending, then lexicographic
const std::vector<std::vector<int>> kCubeSets = {
    {}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};

std::string cube_set_name(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += cat(s[i]);
  }
  return out + "}";
}

}  // namespace

CubeFixture build_cube() {
  CubeFixture f;

  // Λ = powerset of {0,1,2} ordered by inclusion
  {
    const int n = 8;
    std::vector<Elem> elems;
    for (const auto& s : kCubeSets) elems.push_back(Elem::base(cube_set_name(s)));
    std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool sub = std::includes(kCubeSets[j].begin(), kCubeSets[j].end(),
                                 kCubeSets[i].begin(), kCubeSets[i].end());
        le[static_cast<size_t>(i) * n + j] = sub ? 1 : 0;
      }
    f.b_full.index = IndexLattice::make(Poset::make(std::move(elems), std::move(le)));
  }
  f.top_index = 7;

  SemilatticePtr p5 = powerset_lattice({"0", "1", "2", "3", "4"});

  f.c = {{find_set(*p5, {0, 4}), find_set(*p5, {3}), find_set(*p5, {2}),
          find_set(*p5, {1, 4})},
         {find_set(*p5, {0, 4}), find_set(*p5, {1, 4}), find_set(*p5, {2}),
          find_set(*p5, {3, 4})},
         {find_set(*p5, {0, 4}), find_set(*p5, {1}), find_set(*p5, {3}),
          find_set(*p5, {2, 4})}};
  f.a = {find_set(*p5, {0, 1, 4}), find_set(*p5, {0, 3, 4}),
         find_set(*p5, {0, 2, 4})};
  f.b = {find_set(*p5, {2, 3, 4}), find_set(*p5, {1, 2, 4}),
         find_set(*p5, {1, 3, 4})};
  const int full5 = find_set(*p5, {0, 1, 2, 3, 4});

  // coverage: ⋃_j c_{i,j} = {0,...,4} for every i
  for (int i = 0; i < 3; ++i) {
    int acc = p5->zero();
    for (int j = 0; j < 4; ++j) acc = p5->join(acc, f.c[i][j]);
    f.gate.add(cat("coverage-row-", i), acc == full5);
  }

  // the eight objects
  std::vector<SemilatticePtr> objects(8);
  objects[0] = sub_join_semilattice(p5, {full5}, true);  // B_∅ = {∅, 5}
  for (int i = 0; i < 3; ++i)
    objects[1 + i] = sub_join_semilattice(p5, {f.a[i], f.b[i]}, true);
  // pair sets in kCubeSets order: {0,1} (k=2), {0,2} (k=1), {1,2} (k=0)
  const int pair_complement[3] = {2, 1, 0};
  for (int pi = 0; pi < 3; ++pi) {
    int k = pair_complement[pi];
    objects[4 + pi] = sub_join_semilattice(
        p5, {f.c[k][0], f.c[k][1], f.c[k][2], f.c[k][3]}, true);
  }
  objects[7] = p5;
  f.b_full.objects = objects;

  // inclusion transitions; each B_p must be a ⟨∨,0,1⟩-subsemilattice of B_q
  const IndexLattice& ix = f.b_full.index;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (!ix.le(i, j)) continue;
      Hom inc = inclusion_hom(objects[i], objects[j]);
      f.gate.add(cat("inclusion-", ix.elem(i).label(), "-in-", ix.elem(j).label()),
                 validate_hom(inc).ok && inc.preserves_unit() &&
                     inc.map[objects[i]->zero()] == objects[j]->zero());
      f.b_full.transitions[{i, j}] = inc.map;
    }
  DiagramVerdict bdv = validate_diagram(f.b_full);
  f.gate.add("b-diagram-valid", bdv.ok, bdv.what);

  for (int i = 0; i < 8; ++i) {
    DistributivityVerdict dv = is_distributive(*objects[i]);
    f.gate.add(cat("object-distributive-", ix.elem(i).label()), dv.ok, dv.message);
  }

  // blocks over Λ*: Q_∅, the three chains, the three diamonds
  auto named_poset = [&](const std::vector<std::string>& names,
                         const std::vector<std::pair<int, int>>& strict) {
    std::vector<Elem> es;
    for (const auto& s : names) es.push_back(Elem::base(s));
    return poset_from_strict_pairs(std::move(es), strict);
  };

  std::vector<std::optional<MeasuredPoset>> blocks(8);
  std::vector<long> uniq(7, 0);
  auto unique_measure = [&](const Poset& p, const SemilatticePtr& s,
                            const std::vector<ValueConstraint>& fixed, int slot) {
    std::optional<MeasuredPoset> keep;
    long cnt = enumerate_pmeasures(
        p, s, fixed,
        [&](const MeasuredPoset& m) {
          if (!keep) keep = m;
          return true;
        },
        {});
    uniq[slot] = cnt;
    internal_check(cnt == 1, cat("expected a unique p-measure, found ", cnt));
    return *keep;
  };

  {
    Poset q0 = named_poset({"0", "1"}, {{0, 1}});
    int one = *q0.find(Elem::base("1"));
    int zero = *q0.find(Elem::base("0"));
    blocks[0] = unique_measure(
        q0, objects[0], {{one, zero, *objects[0]->find(p5->elem(full5))}}, 0);
  }
  for (int i = 0; i < 3; ++i) {
    std::string xi = cat("x", i);
    Poset q = named_poset({"0", xi, "1"}, {{0, 1}, {0, 2}, {1, 2}});
    int zi = *q.find(Elem::base("0"));
    int mi = *q.find(Elem::base(xi));
    int oi = *q.find(Elem::base("1"));
    const Semilattice& bi = *objects[1 + i];
    blocks[1 + i] = unique_measure(
        q, objects[1 + i],
        {{mi, zi, *bi.find(p5->elem(f.a[i]))}, {oi, mi, *bi.find(p5->elem(f.b[i]))}},
        1 + i);
  }
  for (int pi = 0; pi < 3; ++pi) {
    int k = pair_complement[pi];
    int i = kCubeSets[4 + pi][0], j = kCubeSets[4 + pi][1];
    std::string xi = cat("x", i), xj = cat("x", j);
    Poset q = named_poset({"0", xi, xj, "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    int e0 = *q.find(Elem::base("0"));
    int e1 = *q.find(Elem::base("1"));
    int ei = *q.find(Elem::base(xi));
    int ej = *q.find(Elem::base(xj));
    const Semilattice& bij = *objects[4 + pi];
    // uniqueness is relative to the diagram: the flank values are already
    // pinned by the extension identities, only the two cross values are new
    blocks[4 + pi] = unique_measure(
        q, objects[4 + pi],
        {{ei, ej, *bij.find(p5->elem(f.c[k][1]))},
         {ej, ei, *bij.find(p5->elem(f.c[k][2]))},
         {ei, e0, *bij.find(p5->elem(f.a[i]))},
         {e1, ei, *bij.find(p5->elem(f.b[i]))},
         {ej, e0, *bij.find(p5->elem(f.a[j]))},
         {e1, ej, *bij.find(p5->elem(f.b[j]))},
         {e1, e0, *bij.find(p5->elem(full5))}},
        4 + pi);
  }

  // the Λ*-diagram of measured blocks
  std::vector<int> star{0, 1, 2, 3, 4, 5, 6};
  MeasuredDiagram full;
  full.base = f.b_full;
  full.blocks = blocks;
  f.q_star = restrict_diagram(full, star);
  NormalVerdict nv = validate_normal_diagram(f.q_star);
  f.gate.add("q-star-normal-interval-diagram", nv.ok(), nv.summary());

  f.uniqueness = uniq;
  for (int s = 0; s < 7; ++s)
    f.gate.add(cat("unique-measure-block-", s), uniq[s] == 1);

  if (!f.gate.all_green) {
    std::string bad;
    for (const auto& l : f.gate.lines)
      if (!l.ok) bad += cat(" [", l.name, ": ", l.detail, "]");
    throw internal_check_error(cat("cube reconstruction violates the text:", bad));
  }
  return f;
}

CubeObstruction cube_obstruction(const CubeFixture& f) {
  CubeObstruction out;
  const SemilatticePtr& p5 = f.b_full.objects[7];
  int v01 = f.c[2][1], v12 = f.c[0][1], v02 = f.c[1][1];
  out.v01 = p5->elem(v01).name();
  out.v12 = p5->elem(v12).name();
  out.v02 = p5->elem(v02).name();
  out.triangle_violated = !p5->leq(v02, p5->join(v01, v12));

  // exhaustive oracle: no p-measure on the amalgam carrier agrees with all
  // blocks (their values taken through the inclusions into P(5))
  StrongAmalgam amal = amalgam_order(f.q_star);
  const IndexLattice& ix = f.q_star.base.index;
  std::vector<ValueConstraint> fixed;
  for (int i = 0; i < ix.size(); ++i) {
    const MeasuredPoset& qi = f.q_star.block(i);
    Hom inc = inclusion_hom(f.q_star.base.objects[i], p5);
    for (int x = 0; x < qi.poset.size(); ++x)
      for (int y = 0; y < qi.poset.size(); ++y)
        fixed.push_back({amal.embed[i][x], amal.embed[i][y], inc.map[qi.val(x, y)]});
  }
  out.extension_count = count_pmeasures(amal.carrier, p5, fixed, {});

  out.summary = cat("forced triangle: ⟦x_0,x_2⟧ = ", out.v02, " ≰ ⟦x_0,x_1⟧ ∨ ⟦x_1,x_2⟧ = ",
                    out.v01, " ∪ ", out.v12, "; admissible extensions on the amalgam: ",
                    out.extension_count);
  internal_check(out.triangle_violated && out.extension_count == 0,
                 "cube obstruction did not materialize");
  return out;
}

}  // namespace pmlat
