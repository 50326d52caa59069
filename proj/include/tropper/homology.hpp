// Homology of chain complexes of free abelian groups, including complexes
// twisted by a GL(n,Z) local system, via Smith normal form.
#pragma once

#include <string>
#include <vector>

#include "tropper/intlinalg.hpp"

namespace tropper {

struct ChainComplex {
  std::vector<int> dims;        // rank of C_q, q = 0..top
  std::vector<IntMat> boundary; // boundary[q]: C_q -> C_{q-1}; boundary[0] is empty
};

struct HomologyGroup {
  long rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

// Checks boundary shapes and that consecutive boundaries compose to zero.
void validate_complex(const ChainComplex& c);

HomologyGroup homology(const ChainComplex& c, int q);

// Circle subdivided into `segments` arcs carrying a rank-n local system;
// the last arc applies the monodromy matrix.
ChainComplex circle_with_monodromy(const IntMat& t, int segments = 3);

// JSON form: {"dims": [..], "boundary": [null-or-matrix, ..]} or
// {"circle_monodromy": matrix, "segments": int}.
ChainComplex complex_from_json(const std::string& text);

}  // namespace tropper
