#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/semilattice.hpp"

namespace pmlat {

// A finite meet-semilattice of indices with derived heights. Finiteness
// gives a least element once binary meets exist.
class IndexLattice {
 public:
  IndexLattice() = default;  // empty placeholder; real instances come from make()
  static IndexLattice make(Poset p);  // throws bad_input when some glb is missing

  int size() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  bool le(int a, int b) const { return poset_.le(a, b); }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * size() + b]; }
  int least() const { return least_; }
  int height(int i) const { return height_[i]; }
  const Elem& elem(int i) const { return poset_.elem(i); }

 private:
  Poset poset_;
  std::vector<int> meet_;
  int least_ = -1;
  std::vector<int> height_;
};

// A Λ-indexed diagram of ⟨∨,0⟩-semilattices with transition homomorphisms
// for every comparable index pair.
struct Diagram {
  IndexLattice index;
  std::vector<SemilatticePtr> objects;                 // per index element
  std::map<std::pair<int, int>, std::vector<int>> transitions;  // (i,j), i ≤ j

  const std::vector<int>& phi(int i, int j) const;
  Hom hom(int i, int j) const;
};

struct DiagramVerdict {
  bool ok = true;
  std::string what;  // first violation, human-readable
};

// Per-map homomorphism checks, identities, and the composition law.
DiagramVerdict validate_diagram(const Diagram& d);

}  // namespace pmlat
