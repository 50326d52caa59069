#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "tropper/homology.hpp"

using namespace tropper;

namespace {
const std::string kFix = FIXTURE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}
}  // namespace

TEST_CASE("circle with trivial rank-1 system has two free groups") {
  ChainComplex c = complex_from_json(slurp(kFix + "/circle_trivial.json"));
  validate_complex(c);
  CHECK(homology(c, 0).rank == 1);
  CHECK(homology(c, 1).rank == 1);
  CHECK(homology(c, 0).torsion.empty());
}

TEST_CASE("circle twisted by a unipotent monodromy loses a generator") {
  ChainComplex c = complex_from_json(slurp(kFix + "/circle_ff.json"));
  validate_complex(c);
  // Monodromy (1 0; 1 1): invariants and coinvariants both have rank 1.
  CHECK(homology(c, 0).rank == 1);
  CHECK(homology(c, 1).rank == 1);

  ChainComplex id2 = circle_with_monodromy(IntMat::identity(2), 3);
  CHECK(homology(id2, 1).rank == 2);

  // Monodromy -1 on Z: no invariants, coinvariants are Z/2.
  IntMat neg(1, 1);
  neg.at(0, 0) = -1;
  ChainComplex tw = circle_with_monodromy(neg, 4);
  CHECK(homology(tw, 1).rank == 0);
  CHECK(homology(tw, 0).rank == 0);
  CHECK(homology(tw, 0).torsion == std::vector<Integer>{2});
}

TEST_CASE("torsion appears through the invariant factors") {
  ChainComplex c;
  c.dims = {1, 1};
  c.boundary.resize(2);
  c.boundary[1] = IntMat(1, 1);
  c.boundary[1].at(0, 0) = 2;
  validate_complex(c);
  CHECK(homology(c, 0).rank == 0);
  CHECK(homology(c, 0).torsion == std::vector<Integer>{2});
  CHECK(homology(c, 1).rank == 0);
}

TEST_CASE("complexes that fail d^2 = 0 are rejected") {
  ChainComplex c;
  c.dims = {1, 1, 1};
  c.boundary.resize(3);
  c.boundary[1] = IntMat(1, 1);
  c.boundary[1].at(0, 0) = 1;
  c.boundary[2] = IntMat(1, 1);
  c.boundary[2].at(0, 0) = 1;
  CHECK_THROWS(validate_complex(c));
  c.boundary[1].at(0, 0) = 0;
  CHECK_NOTHROW(validate_complex(c));
}
