#include <doctest.h>

#include "tropper/intlinalg.hpp"

using namespace tropper;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

bool is_zero(const IntMat& m) {
  for (const auto& x : m.a)
    if (x != 0) return false;
  return true;
}

IntMat sub(const IntMat& a, const IntMat& b) {
  IntMat d = a;
  for (size_t i = 0; i < d.a.size(); ++i) d.a[i] -= b.a[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form diagonalizes with divisor chain") {
  IntMat m = mat({{2, 4}, {6, 8}});
  SmithForm s = smith_normal_form(m);
  CHECK(is_zero(sub(s.u * m * s.v, s.d)));
  auto div = s.divisors();
  REQUIRE(div.size() == 2);
  CHECK(div[0] == 2);
  CHECK(div[1] == 4);
  CHECK(s.rank() == 2);
}

TEST_CASE("smith normal form of rank-deficient and empty matrices") {
  IntMat m = mat({{1, 2, 3}, {2, 4, 6}});
  SmithForm s = smith_normal_form(m);
  CHECK(s.rank() == 1);
  CHECK(s.divisors() == std::vector<Integer>{1});
  CHECK(smith_normal_form(IntMat(0, 3)).rank() == 0);
}

TEST_CASE("kernel sublattice is saturated") {
  // Kernel of (2 4) is generated by (2,-1), not (4,-2).
  IntMat k = kernel_sublattice(mat({{2, 4}}));
  REQUIRE(k.cols == 1);
  Integer a = k.at(0, 0), b = k.at(1, 0);
  CHECK(a * 2 + b * 4 == 0);
  CHECK(content({a, b}) == 1);
}

TEST_CASE("primitive normal vanishes on the basis and has chosen sign") {
  IntMat basis = mat({{1, 0, 0}, {0, 1, 0}});
  auto d = primitive_normal(basis, {Integer(0), Integer(0), Integer(-7)});
  CHECK(d == std::vector<Integer>{0, 0, -1});
  auto d2 = primitive_normal(mat({{2, 1}}), {Integer(1), Integer(0)});
  CHECK(dot(d2, {Integer(2), Integer(1)}) == 0);
  CHECK(dot(d2, {Integer(1), Integer(0)}) > 0);
  CHECK(content(d2) == 1);
}

TEST_CASE("unique rational solve") {
  auto x = solve_unique(mat({{2, 0}, {0, 3}}), {Rational(1), Rational(1)});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == Rational(1, 2));
  CHECK(x[1] == Rational(1, 3));
  CHECK(solve_unique(mat({{1, 1}}), {Rational(1)}).empty());           // underdetermined
  CHECK(solve_unique(mat({{1}, {1}}), {Rational(1), Rational(2)}).empty());  // inconsistent
}

TEST_CASE("column lattice membership") {
  IntMat m = mat({{2, 0}, {0, 3}});
  CHECK(in_column_lattice(m, {Integer(4), Integer(3)}));
  CHECK(!in_column_lattice(m, {Integer(1), Integer(0)}));
}
