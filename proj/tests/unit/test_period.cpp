#include <doctest.h>

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "tropper/amoeba.hpp"
#include "tropper/period.hpp"

using namespace tropper;

namespace {
const std::string kFix = FIXTURE_DIR;

std::pair<std::vector<long>, std::vector<MultValue>> load_pairings(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  std::vector<long> c1;
  for (const auto& v : j.at("c1")) c1.push_back(v.get<long>());
  std::vector<MultValue> glue;
  for (const auto& g : j.at("gluing")) glue.push_back(parse_mult_value(g.get<std::string>()));
  return {c1, glue};
}

std::vector<Integer> column(const IntMat& m, int j) {
  std::vector<Integer> v;
  for (int i = 0; i < m.rows; ++i) v.push_back(m.at(i, j));
  return v;
}
}  // namespace

TEST_CASE("exponentiated vertex values of the two-zero slab") {
  Scene s = load_scene(kFix + "/kp1.toml");
  const Slab* b0 = s.find_slab("b0");
  REQUIRE(b0);
  RonkinValue left = ronkin_series(*b0, {-1}, 4);
  CHECK(left.str() == "log(a)");
  CHECK(left.exponentiated() == "a");
  CHECK(left.tail.is_zero());

  // Between the zeros the function is a product of binomials in u alone, so
  // the tail cancels exactly.
  CHECK(ronkin_series(*b0, {0}, 4).is_trivial());

  RonkinValue right = ronkin_series(*b0, {1}, 4);
  CHECK(right.str() == "log(b)");
  CHECK(right.exponentiated() == "b");
}

TEST_CASE("ronkin values form a group under product and power") {
  Scene s = load_scene(kFix + "/kp2.toml");
  RonkinValue r = ronkin_series(*s.find_slab("bp"), {0, 0}, 3);
  RonkinValue sq = r.pow(2);
  RonkinValue prod = r * r;
  CHECK(sq.coeff == prod.coeff);
  CHECK(sq.unit == prod.unit);
  CHECK(sq.tail == prod.tail);
  RonkinValue cancel = r * r.pow(-1);
  CHECK(cancel.is_trivial());
}

TEST_CASE("period of the figure eight around two simple zeros") {
  Scene s = load_scene(kFix + "/kp1.toml");
  const Cycle* c = s.find_cycle("main");
  PeriodExpression p = period(s, *c, 4);
  CHECK(p.t_exponent == 0);
  CHECK(p.gluing.is_identity());
  CHECK(p.ronkin.str() == "log(a) + log(b)");
  CHECK(p.ronkin.exponentiated() == "a*b");
  REQUIRE(p.report.size() == 4);
  CHECK(p.report[0].ronkin.exponentiated() == "a");
  CHECK(p.report[1].ronkin.is_trivial());
  CHECK(p.report[2].ronkin.exponentiated() == "b");
  CHECK(p.report[3].ronkin.is_trivial());
  CHECK(pair_c1(s, *c) == 0);
  CHECK(monodromy(s, *c) == pair_c1(s, *c));
  CHECK(pair_gluing(s, *c).is_identity());
}

TEST_CASE("period of the wedge cycle tracks the deformation parameter") {
  Scene s = load_scene(kFix + "/kp2.toml");
  const Cycle* c = s.find_cycle("main");
  PeriodExpression p = period(s, *c, 3);
  CHECK(p.t_exponent == 0);
  CHECK(p.gluing.is_identity());
  CHECK(p.ronkin.str() == "log(s) + 6*s + -45*s^2 + 560*s^3");
  CHECK(monodromy(s, *c) == 0);
}

TEST_CASE("normalizing the slab empties the ronkin tail") {
  Scene s = load_scene(kFix + "/kp2.toml");
  Slab bp = *s.find_slab("bp");
  bp.f = bp.f + normalize_slab(bp.f, 3);
  CHECK(ronkin_series(bp, {0, 0}, 3).is_trivial());
  // The deep chamber keeps its pure log(s) value.
  CHECK(ronkin_series(bp, {-1, -1}, 3).exponentiated() == "s");
}

TEST_CASE("series and quadrature values of a vertex agree numerically") {
  Scene s = load_scene(kFix + "/kp2.toml");
  RonkinValue r = ronkin_series(*s.find_slab("bp"), {0, 0}, 6);
  double series_val = eval_series(r.tail, {}, {{"s", 0.01}}, 1.0).real();
  auto num = ronkin_numeric(s.find_slab("bp")->f, {0, 0}, {-1.0, -1.0}, {{"s", 0.01}});
  CHECK(series_val == doctest::Approx(num.real()).epsilon(1e-5));
  CHECK(std::abs(num.imag()) < 1e-7);
}

TEST_CASE("picard sublattice of four explicit pairings") {
  auto [c1, glue] = load_pairings(kFix + "/picard4.json");
  PicardLattice p = picard_sublattice(c1, glue);
  CHECK(p.rank == 1);
  REQUIRE(p.basis.cols == 1);
  auto v = column(p.basis, 0);
  CHECK((v == std::vector<Integer>{0, 0, 1, 0} || v == std::vector<Integer>{0, 0, -1, 0}));

  // Brute force over a box: membership in the lattice matches the defining
  // conditions.
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long cc = -3; cc <= 3; ++cc)
        for (long d = -3; d <= 3; ++d) {
          std::vector<long> x{a, b, cc, d};
          long dot_c1 = 0;
          MultValue g;
          for (int i = 0; i < 4; ++i) {
            dot_c1 += c1[i] * x[i];
            g = g * glue[i].pow(x[i]);
          }
          bool in_def = (dot_c1 == 0) && g.is_identity();
          std::vector<Integer> xi{a, b, cc, d};
          CHECK(in_column_lattice(p.basis, xi) == in_def);
        }
}

TEST_CASE("picard rank drops by one for twenty independent classes") {
  auto [c1_t, glue_t] = load_pairings(kFix + "/picard20_trivial.json");
  CHECK(picard_sublattice(c1_t, glue_t).rank == 19);

  auto [c1, glue] = load_pairings(kFix + "/picard20_torsion.json");
  PicardLattice p = picard_sublattice(c1, glue);
  CHECK(p.rank == 19);
  for (int j = 0; j < p.basis.cols; ++j) {
    auto v = column(p.basis, j);
    Integer dv = 0;
    MultValue g;
    for (size_t i = 0; i < v.size(); ++i) {
      dv += Integer(c1[i]) * v[i];
      g = g * glue[i].pow(v[i].get_si());
    }
    CHECK(dv == 0);
    CHECK(g.is_identity());
  }
}

TEST_CASE("json serialization of a period expression") {
  Scene s = load_scene(kFix + "/kp1.toml");
  std::string out = period_to_json(period(s, *s.find_cycle("main"), 4));
  nlohmann::json j = nlohmann::json::parse(out);
  CHECK(j.at("t_exponent").get<long>() == 0);
  CHECK(j.at("gluing").at("is_identity").get<bool>());
  CHECK(j.at("ronkin").at("exponentiated").get<std::string>() == "a*b");
  CHECK(j.at("report").size() == 4);
}
