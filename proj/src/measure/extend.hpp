#pragma once

#include "measure/pmeasure.hpp"

namespace pmlat {

// Input bundle for extending a p-measure along an interval extension:
// the measured base P, the extension Q, and one p-measure per occupied
// projection pair (u,v), living on the ≡-class closure
// {z ∈ Q : z_P = u, z^P = v} ∪ {u, v}. Compatibility requires the block
// distance ⟦v ÷ u⟧ to equal the base distance.
struct IntervalMeasureFamily {
  MeasuredPoset base;  // target must be a finite distributive lattice
  Poset super;

  struct Block {
    int u = -1, v = -1;       // super indices of the projection pair
    std::vector<int> members;  // super indices of the class closure, sorted
    std::vector<int> mu;       // |members|² table into base.target
  };
  std::vector<Block> blocks;
};

// The common extension: block values on ≡-classes, the four-meetand formula
// elsewhere. Validates every precondition, and asserts the output is a
// p-measure extending the base and all blocks.
MeasuredPoset extend_measure(const IntervalMeasureFamily& f);

// Rebuilds the family skeleton (blocks and membership) for Q over P; block
// tables are left zero for the caller to fill.
IntervalMeasureFamily family_skeleton(MeasuredPoset base, Poset super);

}  // namespace pmlat
