#include "ext/extension.hpp"

#include <algorithm>

#include "core/common.hpp"

namespace pmlat {

bool ExtensionWitness::in_sub(int qi) const {
  return std::find(sub_in_super.begin(), sub_in_super.end(), qi) !=
         sub_in_super.end();
}

ExtensionWitness analyze_extension(const Poset& sub, const Poset& super) {
  ExtensionWitness w;
  auto embed = sub.embedding_into(super);
  if (!embed) throw bad_input("sub-poset has elements missing from the extension");
  if (!sub.is_induced_subposet_of(super, *embed))
    throw bad_input("sub-poset does not carry the induced order");
  w.sub = sub;
  w.super = super;
  w.sub_in_super = *embed;

  const int n = super.size();
  w.lower_proj.assign(n, -1);
  w.upper_proj.assign(n, -1);
  std::vector<char> in_sub(n, 0);
  for (int qi : w.sub_in_super) in_sub[qi] = 1;

  for (int x = 0; x < n; ++x) {
    std::vector<int> lows, ups;
    for (int qi : w.sub_in_super) {
      if (super.le(qi, x)) lows.push_back(qi);
      if (super.le(x, qi)) ups.push_back(qi);
    }
    if (auto m = super.max_of(lows)) w.lower_proj[x] = *m;
    if (auto m = super.min_of(ups)) w.upper_proj[x] = *m;
  }

  w.rc = TriState::yes();
  for (int x = 0; x < n && w.rc.holds(); ++x) {
    if (w.lower_proj[x] < 0)
      w.rc = TriState::no(cat("'", super.elem(x).label(),
                              "' has no largest sub-poset element below it"));
    else if (w.upper_proj[x] < 0)
      w.rc = TriState::no(cat("'", super.elem(x).label(),
                              "' has no least sub-poset element above it"));
  }
  if (!w.rc.holds()) {
    w.interval = TriState::skip();
    w.covering = TriState::skip();
    return w;
  }

  w.interval = TriState::yes();
  for (int x = 0; x < n && w.interval.holds(); ++x)
    for (int y = 0; y < n && w.interval.holds(); ++y) {
      if (!super.le(x, y)) continue;
      if (!w.below_across(x, y) && !w.equiv(x, y))
        w.interval = TriState::no(cat("'", super.elem(x).label(), "' ≤ '",
                                      super.elem(y).label(),
                                      "' neither projects apart nor shares projections"));
    }
  if (!w.interval.holds()) {
    w.covering = TriState::skip();
    return w;
  }

  w.covering = TriState::yes();
  for (int x = 0; x < n && w.covering.holds(); ++x) {
    int lo = w.lower_proj[x], hi = w.upper_proj[x];
    if (lo == hi) continue;
    // cover relation taken in the sub-poset
    int slo = -1, shi = -1;
    for (int i = 0; i < sub.size(); ++i) {
      if (w.sub_in_super[i] == lo) slo = i;
      if (w.sub_in_super[i] == hi) shi = i;
    }
    if (!sub.covers(slo, shi))
      w.covering = TriState::no(cat("projections of '", super.elem(x).label(),
                                    "' do not form a prime interval"));
  }
  return w;
}

std::optional<LatticeOps> interval_lattice_ops(const ExtensionWitness& w,
                                               std::string* why_not) {
  auto fail = [&](const std::string& m) -> std::optional<LatticeOps> {
    if (why_not) *why_not = m;
    return std::nullopt;
  };
  if (!w.interval.holds()) return fail("interval extension does not hold");
  std::string why;
  auto sub_ops = lattice_ops(w.sub, &why);
  if (!sub_ops) return fail(cat("sub-poset is not a lattice: ", why));

  const Poset& q = w.super;
  const int n = q.size();

  // closed intervals [x_P, x^P], each must be a lattice
  std::map<std::pair<int, int>, std::pair<std::vector<int>, LatticeOps>> intervals;
  for (int x = 0; x < n; ++x) {
    std::pair<int, int> k{w.lower_proj[x], w.upper_proj[x]};
    if (k.first == k.second || intervals.count(k)) continue;
    std::vector<int> members;
    for (int z = 0; z < n; ++z)
      if (q.le(k.first, z) && q.le(z, k.second)) members.push_back(z);
    Poset ip = q.induced(members);
    auto iops = lattice_ops(ip, &why);
    if (!iops)
      return fail(cat("closed interval ['", q.elem(k.first).label(), "','",
                      q.elem(k.second).label(), "'] is not a lattice: ", why));
    intervals.emplace(k, std::make_pair(std::move(members), std::move(*iops)));
  }

  LatticeOps ops;
  ops.join.assign(static_cast<size_t>(n) * n, -1);
  ops.meet.assign(static_cast<size_t>(n) * n, -1);
  auto interval_op = [&](int x, int y, bool join_side) {
    std::pair<int, int> k{w.lower_proj[x], w.upper_proj[x]};
    const auto& [members, iops] = intervals.at(k);
    int xi = -1, yi = -1;
    for (size_t i = 0; i < members.size(); ++i) {
      if (members[i] == x) xi = static_cast<int>(i);
      if (members[i] == y) yi = static_cast<int>(i);
    }
    const auto& t = join_side ? iops.join : iops.meet;
    return members[t[static_cast<size_t>(xi) * members.size() + yi]];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int j, m;
      if (q.le(x, y)) {
        j = y;
        m = x;
      } else if (q.le(y, x)) {
        j = x;
        m = y;
      } else if (!w.equiv(x, y)) {
        // project and work in the sub-poset lattice
        auto sub_idx = [&](int qi) {
          for (int i = 0; i < w.sub.size(); ++i)
            if (w.sub_in_super[i] == qi) return i;
          return -1;
        };
        int xu = sub_idx(w.upper_proj[x]), yu = sub_idx(w.upper_proj[y]);
        int xl = sub_idx(w.lower_proj[x]), yl = sub_idx(w.lower_proj[y]);
        const int sn = w.sub.size();
        j = w.sub_in_super[sub_ops->join[static_cast<size_t>(xu) * sn + yu]];
        m = w.sub_in_super[sub_ops->meet[static_cast<size_t>(xl) * sn + yl]];
      } else {
        j = interval_op(x, y, true);
        m = interval_op(x, y, false);
      }
      ops.join[static_cast<size_t>(x) * n + y] = j;
      ops.meet[static_cast<size_t>(x) * n + y] = m;
    }

  // the formula route must agree with direct lub/glb computation
  auto direct = lattice_ops(q, &why);
  internal_check(direct.has_value(),
                 cat("interval formulas built lattice tables but the extension "
                     "is not a lattice: ", why));
  internal_check(direct->join == ops.join && direct->meet == ops.meet,
                 "interval lattice formulas disagree with direct lub/glb");
  return ops;
}

ComposeReport compose_check(const Poset& p, const Poset& q, const Poset& r) {
  ComposeReport rep;
  ExtensionWitness pq = analyze_extension(p, q);
  ExtensionWitness qr = analyze_extension(q, r);
  ExtensionWitness pr = analyze_extension(p, r);
  rep.rc_pq = pq.rc.holds();
  rep.rc_qr = qr.rc.holds();
  rep.rc_pr = pr.rc.holds();
  rep.int_pq = pq.interval.holds();
  rep.int_qr = qr.interval.holds();
  rep.int_pr = pr.interval.holds();
  rep.cov_pq = pq.covering.holds();
  rep.cov_qr = qr.covering.holds();
  rep.cov_pr = pr.covering.holds();

  internal_check(!(rep.rc_pq && rep.rc_qr) || rep.rc_pr,
                 "relatively complete extensions failed to compose");
  internal_check(!(rep.int_pq && rep.cov_qr) || rep.int_pr,
                 "interval-then-covering failed to give an interval extension");
  internal_check(!(rep.cov_pq && rep.cov_qr) || rep.cov_pr,
                 "covering extensions failed to compose");
  rep.int_int_counterexample = rep.int_pq && rep.int_qr && !rep.int_pr;
  return rep;
}

}  // namespace pmlat
