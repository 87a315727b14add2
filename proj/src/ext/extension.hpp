#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/poset.hpp"

namespace pmlat {

struct TriState {
  enum class V { holds, fails, unchecked };
  V v = V::unchecked;
  std::string witness;  // set when fails

  bool holds() const { return v == V::holds; }
  bool fails() const { return v == V::fails; }
  static TriState yes() { return {V::holds, ""}; }
  static TriState no(std::string w) { return {V::fails, std::move(w)}; }
  static TriState skip() { return {V::unchecked, ""}; }
};

// Result of classifying a poset pair P ⊆ Q. Projections x_P / x^P are total
// maps into Q-indices with -1 as the undefined marker, so rc-failures keep
// the offending element at hand.
struct ExtensionWitness {
  Poset sub;    // P with the induced order
  Poset super;  // Q
  std::vector<int> sub_in_super;           // P-index -> Q-index
  std::vector<int> lower_proj, upper_proj;  // per Q-index -> Q-index or -1
  TriState rc, interval, covering;

  bool in_sub(int qi) const;
  // x ≡_P y and x ≪_P y on Q-indices; only meaningful when rc holds.
  bool equiv(int x, int y) const {
    return lower_proj[x] == lower_proj[y] && upper_proj[x] == upper_proj[y];
  }
  bool below_across(int x, int y) const {  // x ≪_P y
    return super.le(upper_proj[x], lower_proj[y]);
  }
};

// Computes projections and the rc/int/cov flags for P inside Q.
// Throws bad_input when P is not an induced sub-poset of Q.
ExtensionWitness analyze_extension(const Poset& sub, const Poset& super);

// Lattice tables of Q per the interval-extension formulas: comparable pairs
// take max/min, x ≢ y uses projections, x ≡ y works inside the closed
// interval [x_P, x^P]. Requires interval to hold; returns nullopt with a
// witness when P or some closed interval is not a lattice. The result is
// cross-checked against direct lub/glb computation.
std::optional<LatticeOps> interval_lattice_ops(const ExtensionWitness& w,
                                               std::string* why_not = nullptr);

// Evaluation of the composition laws on a triple P ⊆ Q ⊆ R.
// rc∘rc, int∘cov and cov∘cov must never fail (theorems; violation throws
// internal_check_error). int∘int may fail and is only recorded.
struct ComposeReport {
  bool rc_pq = false, rc_qr = false, rc_pr = false;
  bool int_pq = false, int_qr = false, int_pr = false;
  bool cov_pq = false, cov_qr = false, cov_pr = false;
  bool int_int_counterexample = false;  // P ≤int Q ≤int R but P ≰int R
};

ComposeReport compose_check(const Poset& p, const Poset& q, const Poset& r);

}  // namespace pmlat
