#include "tropper/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropper {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix size mismatch");
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Integer> IntMat::apply(const std::vector<Integer>& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("vector size mismatch");
  std::vector<Integer> r(rows, Integer(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMat IntMat::transposed() const {
  IntMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

int SmithForm::rank() const {
  int n = std::min(d.rows, d.cols), r = 0;
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> out;
  int n = std::min(d.rows, d.cols);
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row[i] += f * row[j]
void add_row(IntMat& m, int i, int j, const Integer& f) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}
void add_col(IntMat& m, int i, int j, const Integer& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}
void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s{IntMat::identity(m.rows), m, IntMat::identity(m.cols)};
  IntMat& d = s.d;
  int n = std::min(d.rows, d.cols);
  for (int k = 0; k < n; ++k) {
    // Find a pivot: a nonzero entry in the remaining block.
    int pr = -1, pc = -1;
    for (int i = k; i < d.rows && pr < 0; ++i)
      for (int j = k; j < d.cols; ++j)
        if (d.at(i, j) != 0) { pr = i; pc = j; break; }
    if (pr < 0) break;
    if (pr != k) { swap_rows(d, k, pr); swap_rows(s.u, k, pr); }
    if (pc != k) { swap_cols(d, k, pc); swap_cols(s.v, k, pc); }
    // Reduce the cross until the pivot divides everything in its row/column.
    bool again = true;
    while (again) {
      again = false;
      for (int i = k + 1; i < d.rows; ++i) {
        if (d.at(i, k) == 0) continue;
        Integer q = d.at(i, k) / d.at(k, k);
        add_row(d, i, k, -q);
        add_row(s.u, i, k, -q);
        if (d.at(i, k) != 0) {  // remainder smaller than pivot, swap it up
          swap_rows(d, k, i);
          swap_rows(s.u, k, i);
          again = true;
        }
      }
      for (int j = k + 1; j < d.cols; ++j) {
        if (d.at(k, j) == 0) continue;
        Integer q = d.at(k, j) / d.at(k, k);
        add_col(d, j, k, -q);
        add_col(s.v, j, k, -q);
        if (d.at(k, j) != 0) {
          swap_cols(d, k, j);
          swap_cols(s.v, k, j);
          again = true;
        }
      }
      if (again) continue;
      // Pivot must divide the rest of the block for the divisor chain.
      for (int i = k + 1; i < d.rows && !again; ++i)
        for (int j = k + 1; j < d.cols; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            add_row(d, k, i, 1);
            add_row(s.u, k, i, 1);
            again = true;
            break;
          }
    }
    if (d.at(k, k) < 0) { negate_row(d, k); negate_row(s.u, k); }
  }
  return s;
}

IntMat kernel_sublattice(const IntMat& m) {
  SmithForm s = smith_normal_form(m);
  int n = std::min(m.rows, m.cols);
  std::vector<int> keep;
  for (int j = 0; j < m.cols; ++j)
    if (j >= n || s.d.at(j, j) == 0) keep.push_back(j);
  IntMat k(m.cols, static_cast<int>(keep.size()));
  for (int i = 0; i < m.cols; ++i)
    for (size_t j = 0; j < keep.size(); ++j) k.at(i, static_cast<int>(j)) = s.v.at(i, keep[j]);
  return k;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::vector<Integer> primitive(const std::vector<Integer>& v) {
  Integer g = content(v);
  if (g == 0) throw std::domain_error("zero vector has no primitive part");
  std::vector<Integer> r = v;
  for (auto& x : r) x /= g;
  return r;
}

std::vector<Integer> primitive_normal(const IntMat& basis, const std::vector<Integer>& orient) {
  IntMat ker = kernel_sublattice(basis);
  if (ker.cols != 1) throw std::invalid_argument("basis does not have corank one");
  std::vector<Integer> d(ker.rows);
  for (int i = 0; i < ker.rows; ++i) d[i] = ker.at(i, 0);
  d = primitive(d);
  long p = dot(d, orient);
  if (p == 0) throw std::invalid_argument("orientation vector lies in the hyperplane");
  if (p < 0)
    for (auto& x : d) x = -x;
  return d;
}

std::vector<Rational> solve_unique(const IntMat& m, const std::vector<Rational>& b) {
  // Gaussian elimination over Q.
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = Rational(m.at(i, j));
    aug[i][cols] = b[i];
  }
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (aug[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(aug[p], aug[r]);
    Rational inv = 1 / aug[r][c];
    for (int j = c; j <= cols; ++j) aug[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (int j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (aug[i][cols] != 0) return {};  // inconsistent
  if (r != cols) return {};            // underdetermined
  std::vector<Rational> x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][cols];
  return x;
}

bool in_column_lattice(const IntMat& m, const std::vector<Integer>& v) {
  // v in im(M) over Z  iff  U v is divisible by the diagonal of D.
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> w = s.u.apply(v);
  int n = std::min(m.rows, m.cols);
  for (int i = 0; i < s.d.rows; ++i) {
    Integer di = (i < n) ? s.d.at(i, i) : Integer(0);
    if (di == 0) {
      if (w[i] != 0) return false;
    } else if (w[i] % di != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace tropper
