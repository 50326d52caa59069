#include "tropper/cycle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tropper/amoeba.hpp"

namespace tropper {

namespace {

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

std::string vec_str(const std::vector<Integer>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

// Complement order of the slab on rho at a point given in the chart of
// rho.cells[0], in Lambda_rho coordinates.
std::vector<long> slab_order(const Scene& s, const Rho& r, const Slab& sl,
                             const std::vector<Rational>& pos) {
  std::vector<Rational> lam = lambda_coordinates(r, 0, pos);
  return complement_order(sl.f, to_doubles(lam), s.param_values, 0.0).m;
}

struct VertexEdges {
  std::vector<const CycleEdge*> in, out;
};

std::map<std::string, VertexEdges> incidence(const Cycle& c) {
  std::map<std::string, VertexEdges> m;
  for (const auto& v : c.vertices) m[v.id];
  for (const auto& e : c.edges) {
    m.at(e.head).in.push_back(&e);
    m.at(e.tail).out.push_back(&e);
  }
  return m;
}

CrossingEvent build_event(const Scene& s, const CycleVertex& v, const CycleEdge& in,
                          const CycleEdge& out) {
  const Rho* r = s.find_rho(v.at);
  const Slab* sl = s.slab_on(r->id);
  if (!sl) throw std::domain_error("no slab on " + r->id + " at vertex " + v.id);
  CrossingEvent ev;
  ev.vertex = v.id;
  ev.rho = r->id;
  ev.slab = sl->id;
  ev.cell_in = in.cell;
  ev.cell_out = out.cell;
  ev.xi_in = in.xi;
  ev.xi_out = out.xi;
  ev.pos = v.pos;
  int side = rho_side(*r, in.cell);
  ev.d_check = r->d_check[side];
  ev.c = dot(ev.d_check, ev.xi_in);
  ev.kappa = r->kappa;
  ev.active = ev.c != 0;
  ev.m = slab_order(s, *r, *sl, v.pos);
  return ev;
}

}  // namespace

std::vector<Rational> vertex_position_in(const Scene& s, const CycleVertex& v,
                                         const std::string& cell_id) {
  if (const Rho* r = s.find_rho(v.at)) {
    if (cell_id == r->cells[0]) return v.pos;
    if (cell_id == r->cells[1]) return transport_point(*r, r->cells[0], v.pos);
    throw std::invalid_argument("cell " + cell_id + " not adjacent to " + r->id);
  }
  if (v.at != cell_id)
    throw std::invalid_argument("vertex " + v.id + " lives in " + v.at + ", not " + cell_id);
  return v.pos;
}

std::vector<std::string> check_balancing(const Scene& s, const Cycle& c) {
  std::vector<std::string> bad;
  auto inc = incidence(c);
  for (const auto& v : c.vertices) {
    const auto& ve = inc.at(v.id);
    const Rho* r = s.find_rho(v.at);
    std::vector<Integer> sum(s.dim, Integer(0));
    bool ok = true;
    for (int dir = 0; dir < 2; ++dir)
      for (const CycleEdge* e : (dir == 0 ? ve.in : ve.out)) {
        std::vector<Integer> xi = e->xi;
        if (r && e->cell == r->cells[1]) {
          const Slab* sl = s.slab_on(r->id);
          if (!sl) {
            bad.push_back("no slab on " + r->id + " at vertex " + v.id);
            ok = false;
            break;
          }
          std::vector<long> m = slab_order(s, *r, *sl, v.pos);
          xi = transport_vector(*r, r->cells[1], xi, &m);
        } else if (!r && e->cell != v.at) {
          bad.push_back("edge at vertex " + v.id + " lies in " + e->cell + ", not " + v.at);
          ok = false;
          break;
        }
        for (int i = 0; i < s.dim; ++i) sum[i] += (dir == 0 ? xi[i] : -xi[i]);
      }
    if (!ok) continue;
    bool zero = true;
    for (const Integer& x : sum) zero = zero && x == 0;
    if (!zero) bad.push_back("vertex " + v.id + " unbalanced: signed xi sum " + vec_str(sum));
  }
  return bad;
}

std::vector<CrossingEvent> find_crossings(const Scene& s, const Cycle& c) {
  std::vector<CrossingEvent> events;
  auto inc = incidence(c);
  for (const auto& v : c.vertices) {
    if (!s.find_rho(v.at)) continue;
    const auto& ve = inc.at(v.id);
    if (ve.in.size() != 1 || ve.out.size() != 1)
      throw std::domain_error("vertex " + v.id + " on " + v.at + " is not bivalent");
    events.push_back(build_event(s, v, *ve.in[0], *ve.out[0]));
  }
  return events;
}

namespace {

struct CycleBuilder {
  Cycle out;
  int counter = 0;

  std::string fresh(const std::string& hint) {
    for (;;) {
      std::string id = hint + "_" + std::to_string(++counter);
      bool taken = false;
      for (const auto& v : out.vertices) taken = taken || v.id == id;
      if (!taken) return id;
    }
  }
};

}  // namespace

Cycle normalize_cycle(const Scene& s, const Cycle& c) {
  // Stage 1: a bivalent vertex at every interior wall crossing.
  CycleBuilder b;
  b.out.id = c.id;
  b.out.vertices = c.vertices;
  for (const auto& e : c.edges) {
    std::vector<Rational> p0 = vertex_position_in(s, c.vertex(e.tail), e.cell);
    std::vector<Rational> p1 = vertex_position_in(s, c.vertex(e.head), e.cell);
    std::vector<std::pair<Rational, std::vector<Rational>>> cuts;
    for (const auto& w : s.walls) {
      if (w.cell != e.cell) continue;
      Rational den(0), num = w.offset;
      for (size_t i = 0; i < w.normal.size(); ++i) {
        den += Rational(w.normal[i]) * (p1[i] - p0[i]);
        num -= Rational(w.normal[i]) * p0[i];
      }
      if (den == 0) continue;
      Rational tt = num / den;
      if (!(tt > 0 && tt < 1)) continue;
      std::vector<Rational> q(p0.size());
      for (size_t i = 0; i < q.size(); ++i) q[i] = p0[i] + tt * (p1[i] - p0[i]);
      bool inside = true;
      for (const auto& [n, cst] : w.bounds) {
        Rational acc(0);
        for (size_t i = 0; i < q.size(); ++i) acc += Rational(n[i]) * q[i];
        inside = inside && acc >= cst;
      }
      if (inside) cuts.emplace_back(tt, q);
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& bb) { return a.first < bb.first; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const auto& a, const auto& bb) { return a.first == bb.first; }),
               cuts.end());
    std::string prev = e.tail;
    for (const auto& [tt, q] : cuts) {
      std::string id = b.fresh(e.tail);
      b.out.vertices.push_back({id, e.cell, q});
      b.out.edges.push_back({prev, id, e.cell, e.xi});
      prev = id;
    }
    b.out.edges.push_back({prev, e.head, e.cell, e.xi});
  }

  // Stage 2: split slab vertices so each strand carries an elementary
  // section, xi = a zeta + b m -> |a| + |b| strands.
  Cycle& cur = b.out;
  Cycle res;
  res.id = cur.id;
  auto inc = incidence(cur);
  std::vector<std::string> dropped_vertices;
  std::vector<const CycleEdge*> dropped_edges;
  std::vector<CycleVertex> new_vertices;
  std::vector<CycleEdge> new_edges;
  const Rational delta(1, 64);
  for (const auto& v : cur.vertices) {
    const Rho* r = s.find_rho(v.at);
    if (!r) continue;
    const auto& ve = inc.at(v.id);
    if (ve.in.size() != 1 || ve.out.size() != 1) continue;
    const CycleEdge& in = *ve.in[0];
    const CycleEdge& out = *ve.out[0];
    if (in.cell == out.cell) continue;
    int side = rho_side(*r, in.cell);
    long a = dot(r->d_check[side], in.xi);
    std::vector<Integer> lam(in.xi.size());
    for (size_t i = 0; i < lam.size(); ++i) lam[i] = in.xi[i] - a * r->zeta[side][i];
    Integer bcont = content(lam);
    if (std::abs(a) == 1 || (a == 0 && bcont == 1)) continue;
    const Slab* sl = s.slab_on(r->id);
    if (!sl) throw std::domain_error("no slab on " + r->id + " at vertex " + v.id);
    std::vector<long> m0 = slab_order(s, *r, *sl, v.pos);
    std::vector<std::vector<Integer>> copies;
    for (long j = 0; j < std::abs(a); ++j) {
      std::vector<Integer> z(in.xi.size());
      for (size_t i = 0; i < z.size(); ++i) z[i] = (a > 0 ? 1 : -1) * r->zeta[side][i];
      copies.push_back(z);
    }
    if (bcont != 0) {
      std::vector<Integer> mp = primitive(lam);
      for (Integer j = 0; j < bcont; ++j) copies.push_back(mp);
    }
    dropped_vertices.push_back(v.id);
    dropped_edges.push_back(&in);
    dropped_edges.push_back(&out);
    // Offset the strands along the first Lambda_rho direction of the chart
    // of cells[0], where the vertex position lives.
    for (size_t j = 0; j < copies.size(); ++j) {
      std::vector<Rational> pos = v.pos;
      for (size_t i = 0; i < pos.size(); ++i)
        pos[i] += Rational(j) * delta * Rational(r->basis[0].at(0, static_cast<int>(i)));
      long cc = dot(r->d_check[side], copies[j]);
      if (cc != 0 && slab_order(s, *r, *sl, pos) != m0)
        throw std::domain_error("strand offset at " + v.id +
                                " changes the complement order; move the vertex");
      std::string id = b.fresh(v.id);
      new_vertices.push_back({id, v.at, pos});
      new_edges.push_back({in.tail, id, in.cell, copies[j]});
      new_edges.push_back({id, out.head, out.cell, transport_vector(*r, in.cell, copies[j], &m0)});
    }
  }
  for (const auto& v : cur.vertices)
    if (std::find(dropped_vertices.begin(), dropped_vertices.end(), v.id) ==
        dropped_vertices.end())
      res.vertices.push_back(v);
  for (const auto& e : cur.edges) {
    bool drop = false;
    for (const CycleEdge* d : dropped_edges) drop = drop || d == &e;
    if (!drop) res.edges.push_back(e);
  }
  for (auto& v : new_vertices) res.vertices.push_back(std::move(v));
  for (auto& e : new_edges) res.edges.push_back(std::move(e));
  return res;
}

namespace {

struct Segment {
  std::string cell;
  std::vector<Rational> p0, p1;
  std::vector<Integer> xi;
};

std::vector<Segment> segments(const Scene& s, const Cycle& c,
                              const std::vector<Rational>& shift) {
  std::vector<Segment> out;
  for (const auto& e : c.edges) {
    Segment seg;
    seg.cell = e.cell;
    seg.p0 = vertex_position_in(s, c.vertex(e.tail), e.cell);
    seg.p1 = vertex_position_in(s, c.vertex(e.head), e.cell);
    for (size_t i = 0; i < shift.size(); ++i) {
      seg.p0[i] += shift[i];
      seg.p1[i] += shift[i];
    }
    seg.xi = e.xi;
    out.push_back(std::move(seg));
  }
  return out;
}

// Signed crossing contributions; nullopt on a degenerate incidence
// (endpoint hit or overlapping parallels), which asks for a perturbation.
std::optional<long> pairing_attempt(const std::vector<Segment>& sa,
                                    const std::vector<Segment>& sb) {
  long total = 0;
  for (const auto& x : sa)
    for (const auto& y : sb) {
      if (x.cell != y.cell) continue;
      Rational dax = x.p1[0] - x.p0[0], day = x.p1[1] - x.p0[1];
      Rational dbx = y.p1[0] - y.p0[0], dby = y.p1[1] - y.p0[1];
      Rational det = dax * dby - day * dbx;
      Rational rx = y.p0[0] - x.p0[0], ry = y.p0[1] - x.p0[1];
      if (det == 0) {
        if (rx * day - ry * dax == 0) return std::nullopt;  // collinear
        continue;
      }
      Rational tt = (rx * dby - ry * dbx) / det;
      Rational uu = (rx * day - ry * dax) / det;
      if (tt == 0 || tt == 1 || uu == 0 || uu == 1) return std::nullopt;
      if (!(tt > 0 && tt < 1 && uu > 0 && uu < 1)) continue;
      long sgn = det > 0 ? 1 : -1;
      Integer cross = x.xi[0] * y.xi[1] - x.xi[1] * y.xi[0];
      total += sgn * cross.get_si();
    }
  return total;
}

}  // namespace

long intersection_pairing(const Scene& s, const Cycle& a, const Cycle& b) {
  if (s.dim != 2) throw std::invalid_argument("intersection pairing needs dimension 2");
  std::vector<Segment> sa = segments(s, a, {Rational(0), Rational(0)});
  for (int attempt = 0; attempt < 12; ++attempt) {
    Rational eps = attempt == 0 ? Rational(0) : Rational(1, 64) / (1 << attempt);
    std::vector<Segment> sb = segments(s, b, {eps * Rational(1, 97), eps * Rational(1, 89)});
    if (auto r = pairing_attempt(sa, sb)) return *r;
  }
  throw std::domain_error("cycles stay non-transverse after perturbation");
}

}  // namespace tropper
