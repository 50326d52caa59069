#include <doctest.h>

#include <string>

#include "tropper/cycle.hpp"

using namespace tropper;

namespace {
const std::string kFix = FIXTURE_DIR;

const char* kSplitScene = R"(
dim = 2
k = 2
coords = ["x", "y"]

[[cell]]
id = "right"
halfspaces = [[1, 0, 0]]

[[cell]]
id = "left"
halfspaces = [[-1, 0, 0]]

[[rho]]
id = "r"
cells = ["right", "left"]
basis_0 = [[0, 1]]
zeta_0 = [1, 0]
zeta_1 = [-1, 0]
origin_0 = [0, 0]

[[kink]]
rho = "r"
kappa = 1

[[slab]]
id = "b"
rho = "r"
vars = ["v"]
f = "1"

[[cycle]]
id = "loop"

[[cycle.vertex]]
id = "P"
at = "r"
pos = [0, 0]

[[cycle.vertex]]
id = "B"
at = "left"
pos = [-2, 2]

[[cycle.vertex]]
id = "Q"
at = "r"
pos = [0, 5]

[[cycle.vertex]]
id = "A"
at = "right"
pos = [2, 1]

[[cycle.edge]]
tail = "A"
head = "P"
cell = "right"
xi = [2, 1]

[[cycle.edge]]
tail = "P"
head = "B"
cell = "left"
xi = [2, 1]

[[cycle.edge]]
tail = "B"
head = "Q"
cell = "left"
xi = [2, 1]

[[cycle.edge]]
tail = "Q"
head = "A"
cell = "right"
xi = [2, 1]
)";

const char* kPlainScene = R"(
dim = 2
coords = ["x", "y"]

[[cell]]
id = "all"
)";

Cycle segment(const std::string& cell, std::vector<Rational> a, std::vector<Rational> b,
              std::vector<Integer> xi) {
  Cycle c;
  c.id = "seg";
  c.vertices.push_back({"t", cell, std::move(a)});
  c.vertices.push_back({"h", cell, std::move(b)});
  c.edges.push_back({"t", "h", cell, std::move(xi)});
  return c;
}

}  // namespace

TEST_CASE("balancing holds on the two-zero figure eight and detects damage") {
  Scene s = load_scene(kFix + "/kp1.toml");
  const Cycle* c = s.find_cycle("main");
  REQUIRE(c);
  CHECK(check_balancing(s, *c).empty());

  Cycle broken = *c;
  broken.edges[1].xi = {Integer(1), Integer(-1)};
  CHECK(!check_balancing(s, broken).empty());
}

TEST_CASE("crossings of the figure eight in vertex order") {
  Scene s = load_scene(kFix + "/kp1.toml");
  auto ev = find_crossings(s, *s.find_cycle("main"));
  REQUIRE(ev.size() == 4);
  CHECK(ev[0].vertex == "P1");
  CHECK(ev[1].vertex == "P2");
  CHECK(ev[2].vertex == "P4");
  CHECK(ev[3].vertex == "P3");
  CHECK(ev[0].c == 1);
  CHECK(ev[1].c == -1);
  CHECK(ev[2].c == 1);
  CHECK(ev[3].c == -1);
  CHECK(ev[0].m == std::vector<long>{-1});
  CHECK(ev[1].m == std::vector<long>{0});
  CHECK(ev[2].m == std::vector<long>{1});
  CHECK(ev[3].m == std::vector<long>{0});
  for (const auto& e : ev) {
    CHECK(e.active);
    CHECK(e.kappa == 1);
    CHECK(e.slab == "b0");
  }
}

TEST_CASE("crossings of the three-chart wedge cycle") {
  Scene s = load_scene(kFix + "/kp2.toml");
  auto ev = find_crossings(s, *s.find_cycle("main"));
  REQUIRE(ev.size() == 12);
  int on_bp = 0, active = 0, deep = 0;
  for (const auto& e : ev) {
    if (e.active) ++active;
    if (e.slab == "bp") {
      ++on_bp;
      if (e.m == std::vector<long>{-1, -1})
        ++deep;
      else
        CHECK(e.m == std::vector<long>{0, 0});
    }
  }
  CHECK(on_bp == 4);
  CHECK(deep == 1);
  CHECK(active == 8);
}

TEST_CASE("cycles already in standard position pass through untouched") {
  Scene s = load_scene(kFix + "/kp1.toml");
  Cycle n = normalize_cycle(s, *s.find_cycle("main"));
  CHECK(n.vertices.size() == 8);
  CHECK(n.edges.size() == 8);
  CHECK(check_balancing(s, n).empty());
  auto before = find_crossings(s, *s.find_cycle("main"));
  auto after = find_crossings(s, n);
  REQUIRE(after.size() == before.size());
  for (size_t i = 0; i < after.size(); ++i) {
    CHECK(after[i].c == before[i].c);
    CHECK(after[i].m == before[i].m);
  }
}

TEST_CASE("a section with normal component 2 splits into parallel strands") {
  Scene s = parse_scene(kSplitScene);
  REQUIRE(validate_scene(s).empty());
  const Cycle* c = s.find_cycle("loop");
  REQUIRE(check_balancing(s, *c).empty());
  auto before = find_crossings(s, *c);
  REQUIRE(before.size() == 2);
  CHECK(before[0].c == 2);
  CHECK(before[1].c == -2);

  Cycle n = normalize_cycle(s, *c);
  CHECK(check_balancing(s, n).empty());
  auto after = find_crossings(s, n);
  // xi = (2,1) = 2 zeta + m: two strands with <d,xi> = 1 and one tangent
  // strand, at each of the two crossings.
  REQUIRE(after.size() == 6);
  int plus = 0, minus = 0, tangent = 0;
  long csum = 0;
  for (const auto& e : after) {
    csum += e.c;
    if (e.c == 1) ++plus;
    if (e.c == -1) ++minus;
    if (e.c == 0) {
      ++tangent;
      CHECK(!e.active);
    }
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
  CHECK(tangent == 2);
  CHECK(csum == 0);
}

TEST_CASE("surface intersection numbers") {
  Scene s = parse_scene(kPlainScene);
  Cycle a = segment("all", {Rational(-1), Rational(0)}, {Rational(1), Rational(0)},
                    {Integer(1), Integer(0)});
  Cycle b = segment("all", {Rational(0), Rational(-1)}, {Rational(0), Rational(1)},
                    {Integer(0), Integer(1)});
  CHECK(intersection_pairing(s, a, b) == 1);
  CHECK(intersection_pairing(s, b, a) == 1);

  // Larger sections scale the determinant.
  Cycle b2 = segment("all", {Rational(0), Rational(-1)}, {Rational(0), Rational(1)},
                     {Integer(1), Integer(3)});
  CHECK(intersection_pairing(s, a, b2) == 3);

  // Disjoint parallel segments do not meet.
  Cycle far = segment("all", {Rational(-1), Rational(5)}, {Rational(1), Rational(5)},
                      {Integer(1), Integer(0)});
  CHECK(intersection_pairing(s, a, far) == 0);

  // Endpoint touching resolves by perturbation to a well-defined count.
  Cycle touch = segment("all", {Rational(0), Rational(0)}, {Rational(0), Rational(1)},
                        {Integer(0), Integer(1)});
  long v = intersection_pairing(s, a, touch);
  CHECK((v == 0 || v == 1));
}
