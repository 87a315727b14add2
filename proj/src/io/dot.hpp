#pragma once

#include <string>

#include "measure/pmeasure.hpp"

namespace pmlat {

// Hasse diagram: cover edges only, bottom-to-top rank, deterministic order.
std::string emit_dot(const Poset& p);

// Same, with each cover edge x ≺ y labelled ⟦y,x⟧; zero values get no label.
std::string emit_dot(const MeasuredPoset& m);

}  // namespace pmlat
