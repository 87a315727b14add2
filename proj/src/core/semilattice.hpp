#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/poset.hpp"

namespace pmlat {

// A finite ⟨∨,0⟩-semilattice. Finiteness makes every instance a lattice
// (meets exist), but only the join structure and the zero are part of the
// signature; `unit` records whether the top is treated as part of it.
class Semilattice {
 public:
  // Validates: least element exists and every pair has a lub; a declared
  // unit must be the top. Throws bad_input otherwise.
  static Semilattice from_poset(Poset p, bool declare_unit = false);
  // Validates the given join table against the order it generates.
  static Semilattice from_join_table(std::vector<Elem> elems,
                                     std::vector<int> join,
                                     bool declare_unit = false);

  int size() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  bool leq(int a, int b) const { return poset_.le(a, b); }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * size() + b]; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * size() + b]; }
  int zero() const { return zero_; }
  int top() const { return top_; }
  bool unit_declared() const { return unit_declared_; }
  std::optional<int> unit() const {
    return unit_declared_ ? std::optional<int>(top_) : std::nullopt;
  }

  const Elem& elem(int i) const { return poset_.elem(i); }
  std::optional<int> find(const Elem& e) const { return poset_.find(e); }
  std::optional<int> find_name(const std::string& name) const {
    return poset_.find(Elem::base(name));
  }

  // p ≠ 0 not expressible as a join of strictly smaller elements.
  const std::vector<int>& join_irreducibles() const { return irred_; }

  int join_all(const std::vector<int>& xs) const;

  bool operator==(const Semilattice& o) const;
  bool operator!=(const Semilattice& o) const { return !(*this == o); }

 private:
  Semilattice() = default;
  Poset poset_;
  std::vector<int> join_, meet_;
  int zero_ = -1, top_ = -1;
  bool unit_declared_ = false;
  std::vector<int> irred_;
};

using SemilatticePtr = std::shared_ptr<const Semilattice>;

struct DistributivityVerdict {
  bool ok = true;
  int a = -1, b = -1, c = -1;  // witness triple on failure
  std::string message;
};

// Brute force: for all c ≤ a∨b there are x ≤ a, y ≤ b with c = x∨y.
DistributivityVerdict is_distributive(const Semilattice& s);

// Least subset containing seed ∪ {0} closed under join (sorted indices).
std::vector<int> generated_subsemilattice(const Semilattice& s,
                                          const std::vector<int>& seed);

// A ⟨∨,0⟩-homomorphism between semilattices.
struct Hom {
  SemilatticePtr source, target;
  std::vector<int> map;  // per source element, index into target

  int operator()(int x) const { return map[x]; }
  bool preserves_unit() const { return map[source->top()] == target->top(); }
  bool separates_zero() const;
};

struct HomVerdict {
  bool ok = true;
  std::string what;
  int a = -1, b = -1;
};

HomVerdict validate_hom(const Hom& h);

Hom identity_hom(const SemilatticePtr& s);
Hom compose(const Hom& first, const Hom& then);  // then ∘ first

// Fresh two-element semilattice {0,1} with declared unit.
SemilatticePtr two_element_semilattice();

// Powerset of the given atoms under union, elements named "{a,b}" with
// members in atom order. Unit declared.
SemilatticePtr powerset_lattice(const std::vector<std::string>& atoms);

// Join-closure of `gens` inside `parent`, as a semilattice of its own whose
// elements keep the parent names.
SemilatticePtr sub_join_semilattice(const SemilatticePtr& parent,
                                    const std::vector<int>& gens,
                                    bool declare_unit = false);

// The name-lookup homomorphism of a subsemilattice into its parent.
// Throws bad_input when some element is missing.
Hom inclusion_hom(const SemilatticePtr& sub, const SemilatticePtr& parent);

}  // namespace pmlat
