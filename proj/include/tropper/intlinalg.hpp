// Exact integer linear algebra: Smith normal form, saturated kernels,
// primitive covectors.
#pragma once

#include <vector>

#include "tropper/rational.hpp"

namespace tropper {

// Dense integer matrix, row major.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Integer(0)) {}
  static IntMat identity(int n);

  Integer& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Integer& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IntMat operator*(const IntMat& o) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;
  IntMat transposed() const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// U * M * V = D with U, V unimodular and D diagonal, diag entries nonnegative
// and each dividing the next.
struct SmithForm {
  IntMat u, d, v;
  int rank() const;
  std::vector<Integer> divisors() const;  // the nonzero diagonal, in order
};

SmithForm smith_normal_form(const IntMat& m);

// Basis (as columns) of the saturated lattice { v : M v = 0 }.
IntMat kernel_sublattice(const IntMat& m);

// gcd of the entries; 0 for the zero vector.
Integer content(const std::vector<Integer>& v);

// v / content(v); throws on the zero vector.
std::vector<Integer> primitive(const std::vector<Integer>& v);

// The primitive integer covector vanishing on the rows of `basis`
// (an (n-1) x n matrix of full rank), with sign fixed by <d, orient> > 0.
std::vector<Integer> primitive_normal(const IntMat& basis, const std::vector<Integer>& orient);

inline long dot(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s.get_si();
}

// Solve M x = b over the rationals; empty result if inconsistent or the
// solution is not unique.
std::vector<Rational> solve_unique(const IntMat& m, const std::vector<Rational>& b);

// True if v lies in the column span of M over the integers.
bool in_column_lattice(const IntMat& m, const std::vector<Integer>& v);

}  // namespace tropper
