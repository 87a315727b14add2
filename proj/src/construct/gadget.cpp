#include "construct/gadget.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

namespace {

// Q̄ elements as pairs of bit masks over 1_{x,y,ℓ}: lower copy (X, 0),
// upper copy (full, Y), bottom (0,0) = x, top (full, full) = y.
struct BarPoint {
  unsigned a = 0, b = 0;
  Elem elem = Elem::base("");
};

}  // namespace

Gadget build_gadget(const MeasuredPoset& base, int x, int y,
                    const std::string& level) {
  if (!base.poset.covers(x, y))
    throw bad_input(cat("gadget needs a prime interval; '",
                        base.poset.elem(x).label(), "' ⊀ '",
                        base.poset.elem(y).label(), "'"));
  const Semilattice& d = *base.target;
  Gadget g;
  g.level = level;
  g.lower = x;
  g.upper = y;
  g.lower_elem = base.poset.elem(x);
  g.upper_elem = base.poset.elem(y);

  const int span = base.val(y, x);
  for (int p : d.join_irreducibles())
    if (d.leq(p, span)) {
      g.one_idx.push_back(p);
      g.one_names.push_back(d.elem(p).name());
    }
  g.degenerate = (span == d.zero());
  internal_check(g.degenerate == g.one_idx.empty(),
                 "a positive value lies above no join-irreducible");

  std::vector<BarPoint> pts;
  const unsigned k = static_cast<unsigned>(g.one_idx.size());
  const unsigned full = (k == 0) ? 0 : ((1u << k) - 1);
  auto bits_of = [&](unsigned mask) {
    std::vector<std::string> names;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1u << i)) names.push_back(g.one_names[i]);
    return names;
  };

  pts.push_back({0, 0, g.lower_elem});
  if (g.degenerate) {
    pts.push_back({0, 0, Elem::gadget(level, g.lower_elem, g.upper_elem,
                                      Elem::Point::filler, {})});
    pts.push_back({0, 0, g.upper_elem});
  } else {
    for (unsigned m = 1; m <= full; ++m)
      pts.push_back({m, 0, Elem::gadget(level, g.lower_elem, g.upper_elem,
                                        Elem::Point::lower_copy, bits_of(m))});
    for (unsigned m = 1; m < full; ++m)
      pts.push_back({full, m, Elem::gadget(level, g.lower_elem, g.upper_elem,
                                           Elem::Point::upper_copy, bits_of(m))});
    pts.push_back({full, full, g.upper_elem});
  }

  const int n = static_cast<int>(pts.size());
  std::vector<Elem> elems;
  elems.reserve(n);
  for (const auto& p : pts) elems.push_back(p.elem);
  std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
  if (g.degenerate) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) le[static_cast<size_t>(i) * n + j] = 1;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        le[static_cast<size_t>(i) * n + j] =
            ((pts[i].a & pts[j].a) == pts[i].a && (pts[i].b & pts[j].b) == pts[i].b)
                ? 1
                : 0;
  }

  MeasuredPoset bar;
  bar.poset = Poset::make(std::move(elems), std::move(le));
  bar.target = base.target;
  bar.mu.assign(static_cast<size_t>(n) * n, d.zero());
  if (!g.degenerate) {
    auto join_mask = [&](unsigned mask) {
      int acc = d.zero();
      for (unsigned i = 0; i < k; ++i)
        if (mask & (1u << i)) acc = d.join(acc, g.one_idx[i]);
      return acc;
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& p = pts[i];
        const auto& q = pts[j];
        int v;
        if (p.b == 0 && q.b == 0)
          v = join_mask(p.a & ~q.a & full);
        else if (p.a == full && q.a == full)
          v = join_mask(p.b & ~q.b & full);
        else if (p.b == 0)
          v = d.zero();  // lower copy below an upper-copy point
        else
          v = join_mask((~q.a & full) | p.b);
        bar.mu[static_cast<size_t>(i) * n + j] = v;
      }
  }

  MeasureVerdict mv = validate_pmeasure(bar);
  internal_check(mv.ok, cat("gadget measure is not a p-measure: ", mv.message));

  int bx = *bar.poset.find(g.lower_elem);
  int by = *bar.poset.find(g.upper_elem);
  // coherence with the base: ⟦y,x⟧ agreement and per-element comparability
  internal_check(bar.val(by, bx) == span,
                 "gadget span does not reproduce the base distance");
  for (int z = 0; z < n; ++z) {
    int down = bar.dist(z, bx), up = bar.dist(by, z);
    internal_check(d.leq(down, up) || d.leq(up, down),
                   "gadget distances to the endpoints are incomparable");
  }

  // size law for the truncated block
  std::vector<int> inner;
  for (int i = 0; i < n; ++i)
    if (i != bx && i != by) inner.push_back(i);
  if (!g.degenerate)
    internal_check(static_cast<int>(inner.size()) == (2 << k) - 3,
                   "gadget block size law fails");
  g.block = bar.poset.induced(inner);
  g.bar = std::move(bar);
  return g;
}

}  // namespace pmlat
