#pragma once

#include "measure/pmeasure.hpp"

namespace pmlat {

// The filler for one prime interval x ≺ y at level ℓ: the truncated ordinal
// sum of two copies of the powerset lattice of 1_{x,y,ℓ}, or a single
// filler point when ⟦y,x⟧ = 0. `bar` is the measured poset on
// Q̄ = {x} ∪ block ∪ {y}.
struct Gadget {
  std::string level;
  int lower = -1, upper = -1;  // indices in the base measured poset
  Elem lower_elem = Elem::base(""), upper_elem = Elem::base("");
  std::vector<std::string> one_names;  // names of J(D_ℓ) elements ≤ ⟦y,x⟧
  std::vector<int> one_idx;            // the same, as target indices
  bool degenerate = false;
  Poset block;        // new elements only
  MeasuredPoset bar;  // block ∪ endpoints with the doubled-Boolean measure
};

// Builds the gadget for x ≺ y in `base` (measured into the level's target).
// Verifies the gadget measure axioms, the size law, and the two coherence
// conditions against the base distance. Throws bad_input unless x ≺ y.
Gadget build_gadget(const MeasuredPoset& base, int x, int y,
                    const std::string& level);

}  // namespace pmlat
