#pragma once

#include <optional>

#include "ext/extension.hpp"

namespace pmlat {

struct NonComposingTriple {
  Poset p, q, r;
};

// Smallest induced triple (by |R|, then subset masks, then canonical order)
// with P ≤int Q ≤int R and P ≰int R, additionally P ≤cov Q and Q ≰cov R.
// Search runs over poset representatives up to isomorphism with |R| ≤
// max_size. Returns nullopt when no triple exists within the budget.
std::optional<NonComposingTriple> find_noncomposing_interval_triple(int max_size);

}  // namespace pmlat
