// Small verifiable combinatorial facts used by the period machinery.
#pragma once

#include "tropper/rational.hpp"

namespace tropper {

// Fractional part of the normalized local contribution at a vertex of the
// given valency: 0 for even valency, 1/2 for odd.  Requires valency >= 3.
Rational gamma_v_fraction(long valency);

// Let A be the m-th together with the n-th roots of unity and B the
// (m+n)-th roots not in A.  True iff A- and B-points strictly alternate
// around the circle; checked with exact rational angles.
bool alternating_roots(long m, long n);

}  // namespace tropper
