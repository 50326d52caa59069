#include "tropper/walls.hpp"

#include <stdexcept>

namespace tropper {

Series wall_crossing_apply(const Wall& w, int direction, const Series& g, int k) {
  if (!w.f.constant_term().is_one())
    throw std::domain_error("wall function must have constant term 1");
  Series out(g.lambda_dim, k);
  Series f = w.f;
  f.tmax = k;
  for (const auto& [mono, c] : g.terms) {
    std::vector<Integer> m(mono.lam.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = mono.lam[i];
    long e = direction * dot(w.d_check, m);
    Series term = Series::monomial(g.lambda_dim, mono, c, k);
    if (e != 0) term = term * series_pow(f, static_cast<int>(e));
    out += term;
  }
  return out;
}

bool check_consistency_codim0(const Scene& s,
                              const std::vector<std::pair<std::string, int>>& loop, int k) {
  for (int i = 0; i < s.dim; ++i) {
    Monomial mono;
    mono.lam.assign(s.dim, 0);
    mono.lam[i] = 1;
    Series g = Series::monomial(s.dim, mono, 1, k);
    for (const auto& [wall_id, dir] : loop) {
      const Wall* w = s.find_wall(wall_id);
      if (!w) throw std::invalid_argument("unknown wall " + wall_id);
      g = wall_crossing_apply(*w, dir, g, k);
    }
    if (!(g == Series::monomial(s.dim, mono, 1, k))) return false;
  }
  return true;
}

std::vector<std::string> check_consistency_codim1(const Scene& s) {
  std::vector<std::string> bad;
  for (const auto& r : s.rhos) {
    const Slab* first = nullptr;
    for (const auto& sl : s.slabs) {
      if (sl.rho != r.id) continue;
      if (!first) {
        first = &sl;
        continue;
      }
      if (!(sl.f.t_slice(0) == first->f.t_slice(0)))
        bad.push_back("slabs " + first->id + " and " + sl.id + " on " + r.id +
                      " disagree mod t");
    }
  }
  return bad;
}

}  // namespace tropper
