#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/tagged.hpp"

namespace pmlat {

// Verdict of the order-axiom scan. `ok` false carries the axiom name and the
// first violating pair (element labels resolved in `message`).
struct PosetVerdict {
  bool ok = true;
  std::string violation;  // "duplicate" | "reflexive" | "antisymmetric" | "transitive"
  int a = -1, b = -1;
  std::string message;
};

PosetVerdict validate_relation(const std::vector<Elem>& elems,
                               const std::vector<uint8_t>& le);

// A finite poset: element list plus the full reflexive order matrix.
// Cover pairs are derived at construction. Immutable.
class Poset {
 public:
  // Empty placeholder value; real instances come from make().
  Poset() = default;

  // Throws bad_input when the relation is not a partial order or labels repeat.
  static Poset make(std::vector<Elem> elems, std::vector<uint8_t> le);

  int size() const { return n_; }
  bool le(int a, int b) const { return le_[static_cast<size_t>(a) * n_ + b] != 0; }
  bool lt(int a, int b) const { return a != b && le(a, b); }
  bool comparable(int a, int b) const { return le(a, b) || le(b, a); }
  bool covers(int a, int b) const;  // a ≺ b
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

  const Elem& elem(int i) const { return elems_[i]; }
  const std::vector<Elem>& elems() const { return elems_; }
  std::optional<int> find(const Elem& e) const;
  const std::vector<uint8_t>& relation() const { return le_; }

  std::optional<int> least() const;
  std::optional<int> greatest() const;

  std::vector<int> upper_bounds(int a, int b) const;
  std::vector<int> lower_bounds(int a, int b) const;
  std::optional<int> lub(int a, int b) const;
  std::optional<int> glb(int a, int b) const;

  // Maximum of an arbitrary subset, when the subset has one.
  std::optional<int> max_of(const std::vector<int>& xs) const;
  std::optional<int> min_of(const std::vector<int>& xs) const;

  // Sub-poset induced on `idxs` (kept in the given order).
  Poset induced(const std::vector<int>& idxs) const;

  // Locates this poset's elements inside `host` by label. Returns the index
  // map when every element exists in host, nullopt otherwise.
  std::optional<std::vector<int>> embedding_into(const Poset& host) const;
  // True when this poset's order equals the order host induces on its image.
  bool is_induced_subposet_of(const Poset& host, const std::vector<int>& embed) const;

  // Same labels and same order, regardless of storage order.
  bool equals_as_labeled(const Poset& other) const;

 private:
  int n_ = 0;
  std::vector<Elem> elems_;
  std::vector<uint8_t> le_;
  std::vector<std::pair<int, int>> covers_;
  std::map<std::string, int> index_;
};

struct LatticeOps {
  std::vector<int> join, meet;  // n*n tables
};

// Both tables iff every pair has a lub and a glb; nullopt otherwise.
std::optional<LatticeOps> lattice_ops(const Poset& p);
// Variant reporting the first pair and bound kind that fails.
std::optional<LatticeOps> lattice_ops(const Poset& p, std::string* why_not);

// Convenience: build a poset from strict pairs (indices a < b, closure NOT
// taken: the given pairs must already be the full strict order).
Poset poset_from_strict_pairs(std::vector<Elem> elems,
                              const std::vector<std::pair<int, int>>& strict);

// Chain 0 < 1 < ... < n-1 over Base names.
Poset chain_poset(const std::vector<std::string>& names);

}  // namespace pmlat
