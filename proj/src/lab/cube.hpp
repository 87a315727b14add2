#pragma once

#include "amalgam/amalgam.hpp"
#include "construct/represent.hpp"

namespace pmlat {

// The cube obstruction: a Λ*-indexed normal interval diagram of measured
// lattices (Λ* = powerset of {0,1,2} minus its top) valued in Boolean
// sublattices of the powerset of {0,...,4}, whose block measures admit no
// common extension over the top.
struct CubeFixture {
  Diagram b_full;          // all eight Boolean objects over the full cube
  MeasuredDiagram q_star;  // the seven measured blocks over Λ*
  int top_index = -1;      // index of {0,1,2} inside b_full's Λ

  // constants as indices into B_{012} (the powerset of 5)
  std::vector<std::vector<int>> c;  // c[i][j], i < 3, j < 4
  std::vector<int> a, b;            // a_i, b_i

  std::vector<long> uniqueness;  // admissible-measure count per Λ* block
  VerifyReport gate;             // every textual constraint, all green
};

// Builds and gates the fixture; throws when any constraint fails.
CubeFixture build_cube();

struct CubeObstruction {
  std::string v01, v12, v02;  // forced ⟦x_0,x_1⟧, ⟦x_1,x_2⟧, ⟦x_0,x_2⟧
  bool triangle_violated = false;
  long extension_count = -1;  // admissible measures on the amalgam carrier
  std::string summary;
};

CubeObstruction cube_obstruction(const CubeFixture& f);

}  // namespace pmlat
