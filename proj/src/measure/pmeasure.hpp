#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/semilattice.hpp"
#include "ext/extension.hpp"

namespace pmlat {

// A poset P with a table μ : P×P → S. Valid instances satisfy the
// triangular inequality and μ(x,y) = 0 whenever x ≤ y.
struct MeasuredPoset {
  Poset poset;
  SemilatticePtr target;
  std::vector<int> mu;  // n*n, indices into target

  int val(int x, int y) const {
    return mu[static_cast<size_t>(x) * poset.size() + y];
  }
  void set_val(int x, int y, int v) {
    mu[static_cast<size_t>(x) * poset.size() + y] = v;
  }
  // ⟦x ÷ y⟧ = μ(max, min); throws bad_input on incomparable arguments.
  int dist(int x, int y) const;

  static MeasuredPoset zero_measure(Poset p, SemilatticePtr target);
};

struct MeasureVerdict {
  bool ok = true;
  std::string axiom;  // "vanishing" | "triangle"
  int x = -1, y = -1, z = -1;
  std::string message;
};

MeasureVerdict validate_pmeasure(const MeasuredPoset& m);

struct P1Verdict {
  bool ok = true;
  int u = -1, v = -1;
  std::string message;
};

// μ(v,u) = 0 implies u = v, for u ≤ v.
P1Verdict check_P1(const MeasuredPoset& m);

struct P2Verdict {
  bool ok = true;
  int u = -1, v = -1, a = -1, b = -1;
  std::string message;
};

enum class P2Mode { all_pairs, bounded_pairs };

// For every u ≤ v and (a,b) with ⟦v,u⟧ ≤ a∨b there is a decomposition
// u = x_0 ≤ … ≤ x_n = v with every step value ≤ a or ≤ b. Decided by
// directed reachability over the step-allowed comparable pairs.
P2Verdict check_P2(const MeasuredPoset& m, P2Mode mode = P2Mode::all_pairs);

struct P3Verdict {
  bool ok = true;
  std::string message;
  std::vector<int> missing;  // target elements not generated
};

// {⟦x,0⟧ : x ∈ P} generates the target. Throws bad_input when P has no
// least element.
P3Verdict check_P3(const MeasuredPoset& m);

struct ExtensionCheck {
  bool ok = true;
  int x = -1, y = -1;
  std::string message;
};

// ⟦x,y⟧_super = φ(⟦x,y⟧_sub) on all pairs of sub. Throws bad_input when φ's
// endpoints do not match the two targets or sub is not induced in super.
ExtensionCheck check_extension(const MeasuredPoset& sub, const MeasuredPoset& super,
                               const Hom& phi);

struct DoublingVerdict {
  bool ok = true;
  int x = -1;  // super index of the witness
  std::string message;
};

// ⟦x ÷ x_P⟧ ∼ ⟦x^P ÷ x⟧ for every x of super, distances in super's measure,
// projections onto the given subset. Used with sub = an induced block.
DoublingVerdict doubling_of_subset(const MeasuredPoset& super,
                                   const std::vector<int>& sub_in_super);

// Public form: both posets measured into the same target; verifies the
// extension identity, rc, and the per-element comparability, and asserts the
// two stated formulations agree. Throws bad_input when rc fails.
DoublingVerdict check_doubling(const MeasuredPoset& sub, const MeasuredPoset& super);

}  // namespace pmlat
