#pragma once

#include <vector>

#include "ext/extension.hpp"

namespace pmlat {

// A standard interval scheme: a base poset plus pairwise disjoint blocks
// assigned to strict pairs (a, b) of the base. Empty blocks are allowed.
struct IntervalScheme {
  Poset base;
  struct Block {
    int a, b;  // base indices, a < b
    Poset block;
  };
  std::vector<Block> blocks;
};

struct SumResult {
  Poset sum;
  ExtensionWitness witness;  // base inside sum; interval holds by construction
};

// Q = P + Σ Q_{a,b}: x ≤ y iff x^P ≤ y_P or x,y share a block and are
// block-ordered there. Throws bad_input on disjointness violations.
SumResult sum_scheme(const IntervalScheme& s);

// Blocks Q_{a,b} = {x ∈ Q : x_P = a, x^P = b}. Requires interval to hold.
IntervalScheme decompose_to_scheme(const ExtensionWitness& w);

}  // namespace pmlat
