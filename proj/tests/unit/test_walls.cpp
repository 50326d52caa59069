#include <doctest.h>

#include <string>

#include "tropper/walls.hpp"

using namespace tropper;

namespace {
const std::string kFix = FIXTURE_DIR;

Series mono2(int a, int b) {
  Monomial m;
  m.lam = {a, b};
  return Series::monomial(2, m);
}
}  // namespace

TEST_CASE("wall crossing twists transverse monomials only") {
  Scene s = load_scene(kFix + "/ks.toml");
  const Wall* wx = s.find_wall("wx");
  REQUIRE(wx);
  // y picks up the factor 1 + x t; x is tangent and stays fixed.
  Series y = mono2(0, 1);
  Series image = wall_crossing_apply(*wx, +1, y, 2);
  CHECK(image == y * parse_series("1+x*t", {"x", "y"}, 2));
  CHECK(wall_crossing_apply(*wx, +1, mono2(1, 0), 2) == mono2(1, 0));
  // Crossing back inverts the automorphism.
  Series back = wall_crossing_apply(*wx, -1, image, 2);
  CHECK(back == y);
}

TEST_CASE("the basic scattering loop closes only with the outgoing ray") {
  Scene s = load_scene(kFix + "/ks.toml");
  std::vector<std::pair<std::string, int>> loop{
      {"wx", +1}, {"wy", +1}, {"wx", -1}, {"wy", -1}, {"wd", +1}};
  CHECK(check_consistency_codim0(s, loop, 2));
  loop.pop_back();
  CHECK(!check_consistency_codim0(s, loop, 2));
}

TEST_CASE("codimension-one consistency compares slab reductions mod t") {
  Scene ok = load_scene(kFix + "/kp2.toml");
  CHECK(check_consistency_codim1(ok).empty());
}
