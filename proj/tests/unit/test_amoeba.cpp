#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "tropper/amoeba.hpp"
#include "tropper/scene.hpp"

using namespace tropper;

namespace {
const std::string kFix = FIXTURE_DIR;
}

TEST_CASE("complement order of 1 + u jumps at the zero modulus") {
  Series f = parse_series("1+u", {"u"}, 2);
  CHECK(complement_order(f, {std::log(0.5)}, {}).m == std::vector<long>{0});
  CHECK(complement_order(f, {std::log(2.0)}, {}).m == std::vector<long>{1});
  CHECK_THROWS(complement_order(f, {0.0}, {}));  // on the amoeba
}

TEST_CASE("complement orders of a slab with two zeros") {
  Scene s = load_scene(kFix + "/kp1.toml");
  const Series& f = s.find_slab("b0")->f;
  std::map<std::string, double> p{{"a", 0.3}, {"b", 0.25}};
  // Zeros of (a/u + 1)(1 + b u) at moduli 0.3 and 4.
  CHECK(complement_order(f, {std::log(0.1)}, p).m == std::vector<long>{-1});
  CHECK(complement_order(f, {0.0}, p).m == std::vector<long>{0});
  CHECK(complement_order(f, {std::log(10.0)}, p).m == std::vector<long>{1});
}

TEST_CASE("winding quadrature agrees with root counting in dimension one") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> base(-1.5, 1.5);
  int tested = 0;
  while (tested < 20) {
    Series f = Series::constant(1, 1, 0);
    for (int e = -2; e <= 3; ++e) {
      if (e == 0) continue;
      Monomial m;
      m.lam = {e};
      f.add_term(m, GaussianRational(Rational(static_cast<long>(coeff(rng) * 64), 64)));
    }
    std::vector<double> x{base(rng)};
    if (min_modulus_on_torus(f, x, {}) < 0.05) continue;
    ComplementOrder by_roots = complement_order(f, x, {});
    CHECK(winding_order(f, x, {}) == by_roots.m);
    ++tested;
  }
}

TEST_CASE("two-dimensional orders via lopsidedness and winding") {
  Scene s = load_scene(kFix + "/kp2.toml");
  const Series& f = s.find_slab("bp")->f;
  std::map<std::string, double> p{{"s", 0.01}};
  CHECK(complement_order(f, {-1.0, -1.0}, p).m == std::vector<long>{0, 0});
  CHECK(complement_order(f, {-3.0, -3.0}, p).m == std::vector<long>{-1, -1});
  CHECK(complement_order(f, {2.0, 0.0}, p).m == std::vector<long>{1, 0});
  CHECK(complement_order(f, {0.0, 2.0}, p).m == std::vector<long>{0, 1});
}

TEST_CASE("numeric torus average of the shifted log") {
  // Constant: the average is just the log.
  Series c = parse_series("3", {"u"}, 0);
  auto rc = ronkin_numeric(c, {0}, {0.0}, {});
  CHECK(rc.real() == doctest::Approx(std::log(3.0)).epsilon(1e-9));
  CHECK(std::abs(rc.imag()) < 1e-9);

  // One factor with its zero outside the torus averages to zero.
  Series f = parse_series("1+a*u", {"u"}, 0);
  auto r0 = ronkin_numeric(f, {0}, {0.0}, {{"a", 0.2}});
  CHECK(std::abs(r0) < 1e-9);

  // Left of both zeros of the two-zero slab, with m = -1, the average
  // picks out log a.
  Scene sc = load_scene(kFix + "/kp1.toml");
  const Series& g = sc.find_slab("b0")->f;
  auto rl = ronkin_numeric(g, {-1}, {std::log(0.1)}, {{"a", 0.3}, {"b", 0.25}});
  CHECK(rl.real() == doctest::Approx(std::log(0.3)).epsilon(1e-8));
  CHECK(std::abs(rl.imag()) < 1e-8);
}

TEST_CASE("raster marks the amoeba of 1 + u near the origin") {
  Series f = parse_series("1+u", {"u"}, 0);
  AmoebaRaster r = amoeba_raster(f, {}, 0.0, {-2.0, 2.0}, 41);
  REQUIRE(r.nx == 41);
  int lo = 0, mid = 20, hi = 40;
  CHECK(r.value[mid] <= r.threshold);
  CHECK(r.value[lo] > r.threshold);
  CHECK(r.value[hi] > r.threshold);
  CHECK(raster_svg(r).find("<svg") != std::string::npos);
  CHECK(raster_csv(r).find(',') != std::string::npos);
}
