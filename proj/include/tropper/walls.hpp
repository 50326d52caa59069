// Wall-crossing automorphisms and consistency checks.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropper/scene.hpp"
#include "tropper/series.hpp"

namespace tropper {

// The substitution z^m -> f^{dir * <d_check, m>} z^m applied termwise, mod
// t^{k+1}.  Requires the wall function to have constant term 1.
Series wall_crossing_apply(const Wall& w, int direction, const Series& g, int k);

// Compose the signed crossings in order and test whether the result is the
// identity on every coordinate monomial mod t^{k+1}.
bool check_consistency_codim0(const Scene& s,
                              const std::vector<std::pair<std::string, int>>& loop, int k);

// Mod-t reductions of slab functions must agree on each rho; returns the
// list of violations.
std::vector<std::string> check_consistency_codim1(const Scene& s);

}  // namespace tropper
