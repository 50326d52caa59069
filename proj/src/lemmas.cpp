#include "tropper/lemmas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropper {

Rational gamma_v_fraction(long valency) {
  if (valency < 3) throw std::invalid_argument("valency must be at least 3");
  return valency % 2 == 0 ? Rational(0) : Rational(1, 2);
}

bool alternating_roots(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("orders must be positive");
  auto frac = [](long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  std::set<Rational> a;
  for (long j = 0; j < m; ++j) a.insert(frac(j, m));
  for (long j = 0; j < n; ++j) a.insert(frac(j, n));
  std::vector<std::pair<Rational, int>> pts;  // angle, 0 = A, 1 = B
  for (const Rational& x : a) pts.emplace_back(x, 0);
  for (long j = 0; j < m + n; ++j) {
    Rational x = frac(j, m + n);
    if (!a.count(x)) pts.emplace_back(x, 1);
  }
  std::sort(pts.begin(), pts.end());
  if (pts.size() % 2 != 0) return false;
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i].second == pts[(i + 1) % pts.size()].second) return false;
  return true;
}

}  // namespace tropper
