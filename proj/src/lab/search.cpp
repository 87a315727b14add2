#include "lab/search.hpp"

#include "core/common.hpp"
#include "lab/enumerate.hpp"

namespace pmlat {

std::optional<NonComposingTriple> find_noncomposing_interval_triple(int max_size) {
  if (max_size < 1 || max_size > 7)
    throw bad_input("non-composing search supports sizes 1..7");
  std::vector<Poset> posets = all_posets_up_to(max_size);
  for (const Poset& r : posets) {
    const int n = r.size();
    for (unsigned qm = 1; qm < (1u << n); ++qm) {
      std::vector<int> qidx;
      for (int i = 0; i < n; ++i)
        if (qm & (1u << i)) qidx.push_back(i);
      Poset q = r.induced(qidx);
      ExtensionWitness qr = analyze_extension(q, r);
      if (!qr.interval.holds()) continue;
      if (qr.covering.holds()) continue;  // need Q ≰cov R
      for (unsigned pm = 1; pm < qm; ++pm) {
        if ((pm & qm) != pm) continue;
        std::vector<int> pidx;
        for (int i = 0; i < n; ++i)
          if (pm & (1u << i)) pidx.push_back(i);
        Poset p = r.induced(pidx);
        ExtensionWitness pq = analyze_extension(p, q);
        if (!pq.covering.holds()) continue;  // wants P ≤cov Q (hence ≤int)
        ExtensionWitness pr = analyze_extension(p, r);
        if (pr.interval.holds()) continue;
        // rc composes, so only the interval dichotomy may have failed
        internal_check(pr.rc.holds(),
                       "non-composing witness lost relative completeness");
        return NonComposingTriple{std::move(p), std::move(q), std::move(r)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace pmlat
