#pragma once

#include <optional>

#include "core/diagram.hpp"
#include "measure/pmeasure.hpp"

namespace pmlat {

// A Λ-indexed diagram of semilattices together with one measured poset per
// index. Blocks may be absent (e.g. at a designated top whose measure is the
// thing being constructed).
struct MeasuredDiagram {
  Diagram base;
  std::vector<std::optional<MeasuredPoset>> blocks;

  const MeasuredPoset& block(int i) const;
};

struct NormalVerdict {
  TriState blocks_valid;    // every block present, target-matched, a p-measure
  TriState cond1;           // Q_i induced sub-poset of Q_j for i ≤ j
  TriState cond2;           // Q_i ∩ Q_j = Q_{i∧j} as element sets
  TriState cond3;           // interpolation through Q_{i∧j}
  TriState interval_normal; // Q_i ≤int Q_j for i ≤ j
  TriState measure_ext;     // 𝑸_j extends 𝑸_i w.r.t. φ_{i,j}

  bool normal_posets() const {
    return cond1.holds() && cond2.holds() && cond3.holds();
  }
  bool ok() const {
    return blocks_valid.holds() && normal_posets() && interval_normal.holds() &&
           measure_ext.holds();
  }
  std::string summary() const;
};

// All conditions, each with a witness on failure.
NormalVerdict validate_normal_diagram(const MeasuredDiagram& d);
// Only the poset-level conditions (1)-(3); measure and interval checks skipped.
NormalVerdict validate_normal_poset_level(const MeasuredDiagram& d);

// Sub-diagram on the given index subset (which must be meet-closed).
MeasuredDiagram restrict_diagram(const MeasuredDiagram& d, const std::vector<int>& keep);

}  // namespace pmlat
