#pragma once

#include <functional>

#include "measure/pmeasure.hpp"

namespace pmlat {

// Lexicographically minimal relation matrix over all relabelings, prefixed
// with the size. Equal strings ⟺ isomorphic posets.
std::string canonical_form(const Poset& p);

// Representatives of every poset on 1..nmax elements up to isomorphism,
// sorted by (size, canonical form). Grown by extending each poset with one
// element per (down-set, up-set) pair.
std::vector<Poset> all_posets_up_to(int nmax);

struct ValueConstraint {
  int x, y;   // poset indices
  int value;  // target index
};

struct EnumerateOptions {
  long node_budget = 50'000'000;  // DFS nodes before giving up
  long max_results = -1;          // stop after this many (negative: all)
};

// Streams every table μ : P×P → S satisfying the p-measure axioms and the
// fixed values. Returns the number of solutions found; the sink may stop the
// search by returning false. Throws budget_exceeded past the node budget.
long enumerate_pmeasures(const Poset& p, const SemilatticePtr& s,
                         const std::vector<ValueConstraint>& fixed,
                         const std::function<bool(const MeasuredPoset&)>& sink,
                         const EnumerateOptions& opt = {});

// Count-only convenience.
long count_pmeasures(const Poset& p, const SemilatticePtr& s,
                     const std::vector<ValueConstraint>& fixed,
                     const EnumerateOptions& opt = {});

}  // namespace pmlat
