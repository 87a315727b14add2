#pragma once

#include <memory>
#include <string>
#include <vector>

namespace pmlat {

// An element label. Either a plain named point ("base") or a gadget point
// created when a prime interval [lower, upper] is filled at some diagram
// level. Gadget points remember the level, both interval endpoints, and
// their position inside the doubled Boolean block, which makes blocks from
// distinct levels and distinct prime intervals pairwise disjoint by
// construction. Equality is structural via a canonical key.
class Elem {
 public:
  enum class Kind { base, gadget };
  enum class Point { lower_copy, upper_copy, filler };

  static Elem base(std::string name);
  static Elem gadget(std::string level, const Elem& lower, const Elem& upper,
                     Point point, std::vector<std::string> bits);

  Kind kind() const;
  bool is_base() const { return kind() == Kind::base; }

  // base only
  const std::string& name() const;

  // gadget only
  const std::string& level() const;
  Elem lower() const;
  Elem upper() const;
  Point point() const;
  const std::vector<std::string>& bits() const;  // sorted irreducible names

  // Canonical serialization; two elements are equal iff their keys are.
  const std::string& key() const;
  // Short stable hex digest of the key (FNV-1a 64), for DOT node ids.
  std::string digest() const;
  // Human-oriented short label for diagrams and messages.
  std::string label() const;

  bool operator==(const Elem& o) const { return key() == o.key(); }
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<(const Elem& o) const { return key() < o.key(); }

 private:
  struct Node;
  explicit Elem(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace pmlat
