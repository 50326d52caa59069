#include "tropper/scene.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "tropper/toml.hpp"

namespace tropper {

namespace {

Rational dot_qz(const std::vector<Integer>& n, const std::vector<Rational>& p) {
  Rational s(0);
  for (size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * p[i];
  return s;
}

std::vector<Integer> to_int_vec(const std::vector<long>& v) {
  std::vector<Integer> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

IntMat to_mat(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMat invert_unimodular(const IntMat& m) {
  SmithForm s = smith_normal_form(m);
  for (int i = 0; i < std::min(m.rows, m.cols); ++i)
    if (s.d.at(i, i) != 1) throw std::invalid_argument("transition matrix is not unimodular");
  // M = U^-1 V^-1 => M^-1 = V U.
  return s.v * s.u;
}

}  // namespace

bool Cell::contains(const std::vector<Rational>& p) const {
  for (const auto& [n, c] : halfspaces)
    if (dot_qz(n, p) < c) return false;
  return true;
}

bool Cell::strictly_contains(const std::vector<Rational>& p) const {
  for (const auto& [n, c] : halfspaces)
    if (dot_qz(n, p) <= c) return false;
  return true;
}

const CycleVertex& Cycle::vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw std::out_of_range("no cycle vertex " + id);
}

const Cell* Scene::find_cell(const std::string& id) const {
  for (const auto& c : cells)
    if (c.id == id) return &c;
  return nullptr;
}
const Rho* Scene::find_rho(const std::string& id) const {
  for (const auto& r : rhos)
    if (r.id == id) return &r;
  return nullptr;
}
const Slab* Scene::find_slab(const std::string& id) const {
  for (const auto& s : slabs)
    if (s.id == id) return &s;
  return nullptr;
}
const Slab* Scene::slab_on(const std::string& rho_id) const {
  for (const auto& s : slabs)
    if (s.rho == rho_id) return &s;
  return nullptr;
}
const Wall* Scene::find_wall(const std::string& id) const {
  for (const auto& w : walls)
    if (w.id == id) return &w;
  return nullptr;
}
const Cycle* Scene::find_cycle(const std::string& id) const {
  for (const auto& c : cycles)
    if (c.id == id) return &c;
  return nullptr;
}

MultValue Scene::gluing_value(const std::string& cell, const std::string& rho,
                              const std::vector<Integer>& xi) const {
  auto it = gluing.find({cell, rho});
  MultValue v;
  if (it == gluing.end()) return v;  // trivial gluing
  const auto& vals = it->second;
  for (size_t j = 0; j < xi.size() && j < vals.size(); ++j) v = v * vals[j].pow(xi[j].get_si());
  return v;
}

int rho_side(const Rho& r, const std::string& cell) {
  if (r.cells[0] == cell) return 0;
  if (r.cells[1] == cell) return 1;
  throw std::invalid_argument("cell " + cell + " is not adjacent to " + r.id);
}

std::vector<Integer> transport_vector(const Rho& r, const std::string& from_cell,
                                      const std::vector<Integer>& v, const std::vector<long>* m) {
  int side = rho_side(r, from_cell);
  const IntMat& t = (side == 0) ? r.transition : r.transition_inv;
  std::vector<Integer> out = t.apply(v);
  if (m) {
    long c = dot(r.d_check[side], v);
    if (c != 0) {
      const IntMat& target_basis = r.basis[1 - side];  // rows span Lambda_rho there
      for (int i = 0; i < target_basis.rows; ++i)
        for (int j = 0; j < target_basis.cols; ++j)
          out[j] += Integer(c) * Integer((*m)[i]) * target_basis.at(i, j);
    }
  }
  return out;
}

std::vector<Rational> transport_point(const Rho& r, const std::string& from_cell,
                                      const std::vector<Rational>& p) {
  int side = rho_side(r, from_cell);
  const IntMat& t = (side == 0) ? r.transition : r.transition_inv;
  std::vector<Rational> rel(p.size());
  for (size_t i = 0; i < p.size(); ++i) rel[i] = p[i] - r.origin[side][i];
  std::vector<Rational> out(p.size(), Rational(0));
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j) out[i] += Rational(t.at(i, j)) * rel[j];
  for (size_t i = 0; i < p.size(); ++i) out[i] += r.origin[1 - side][i];
  return out;
}

std::vector<Rational> lambda_coordinates(const Rho& r, int side, const std::vector<Rational>& p) {
  std::vector<Rational> rel(p.size());
  for (size_t i = 0; i < p.size(); ++i) rel[i] = p[i] - r.origin[side][i];
  // Solve basis^T . X = rel.
  IntMat bt = r.basis[side].transposed();
  std::vector<Rational> x = solve_unique(bt, rel);
  if (x.empty() && bt.cols > 0)
    throw std::invalid_argument("point does not lie on " + r.id);
  return x;
}

MultValue parse_mult_value(const std::string& text) {
  MultValue v;
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty() || s == "1") return v;
  size_t pos = 0;
  bool lead_minus = false;
  if (s[0] == '-') {
    lead_minus = true;
    pos = 1;
  }
  auto next_factor = [&]() -> std::string {
    size_t start = pos;
    int depth = 0;
    while (pos < s.size() && (s[pos] != '*' || depth > 0)) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    std::string f = s.substr(start, pos - start);
    if (pos < s.size()) ++pos;  // skip '*'
    return f;
  };
  while (pos < s.size()) {
    std::string f = next_factor();
    if (f.empty()) throw std::invalid_argument("bad multiplicative value: " + text);
    if (f == "1") continue;
    if (f == "-1") {
      v = v * MultValue::root_of_unity(Rational(1, 2));
      continue;
    }
    if (f == "i") {
      v = v * MultValue::root_of_unity(Rational(1, 4));
      continue;
    }
    if (f.rfind("e(", 0) == 0 && f.back() == ')') {
      v = v * MultValue::root_of_unity(rational_from_string(f.substr(2, f.size() - 3)));
      continue;
    }
    long e = 1;
    auto caret = f.find('^');
    std::string name = f;
    if (caret != std::string::npos) {
      name = f.substr(0, caret);
      e = std::stol(f.substr(caret + 1));
    }
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw std::invalid_argument("bad multiplicative value factor: " + f);
    v = v * MultValue::generator(name, e);
  }
  if (lead_minus) v = v * MultValue::root_of_unity(Rational(1, 2));
  return v;
}

namespace {

std::vector<std::pair<std::vector<Integer>, Rational>> parse_halfspaces(const toml::Value& v) {
  std::vector<std::pair<std::vector<Integer>, Rational>> out;
  for (const auto& row : v.as_array()) {
    auto nums = row.rational_vector();
    if (nums.size() < 2) throw std::invalid_argument("halfspace row too short");
    std::vector<Integer> n;
    for (size_t i = 0; i + 1 < nums.size(); ++i) {
      if (nums[i].get_den() != 1) throw std::invalid_argument("halfspace normals must be integral");
      n.push_back(nums[i].get_num());
    }
    out.emplace_back(std::move(n), nums.back());
  }
  return out;
}

}  // namespace

Scene parse_scene(const std::string& text) {
  toml::Value root = toml::parse(text);
  Scene sc;
  sc.dim = root.has("dim") ? static_cast<int>(root.at("dim").as_int()) : 2;
  sc.k = root.has("k") ? static_cast<int>(root.at("k").as_int()) : 4;
  if (root.has("coords"))
    for (const auto& c : root.at("coords").as_array()) sc.coords.push_back(c.as_string());
  else
    for (int i = 0; i < sc.dim; ++i) sc.coords.push_back("z" + std::to_string(i));
  if (root.has("params"))
    for (const auto& p : root.at("params").as_array()) sc.params.push_back(p.as_string());
  if (root.has("param_values"))
    for (const auto& [k, v] : root.at("param_values").tab) sc.param_values[k] = v.as_double();

  if (root.has("cell"))
    for (const auto& t : root.at("cell").as_array()) {
      Cell c;
      c.id = t.at("id").as_string();
      if (t.has("halfspaces")) c.halfspaces = parse_halfspaces(t.at("halfspaces"));
      sc.cells.push_back(std::move(c));
    }

  if (root.has("rho"))
    for (const auto& t : root.at("rho").as_array()) {
      Rho r;
      r.id = t.at("id").as_string();
      const auto& cs = t.at("cells").as_array();
      if (cs.size() != 2) throw std::invalid_argument("rho needs exactly two cells");
      r.cells = {cs[0].as_string(), cs[1].as_string()};
      r.basis[0] = to_mat(t.at("basis_0").int_matrix());
      r.basis[1] = t.has("basis_1") ? to_mat(t.at("basis_1").int_matrix()) : r.basis[0];
      r.zeta[0] = to_int_vec(t.at("zeta_0").int_vector());
      r.zeta[1] = to_int_vec(t.at("zeta_1").int_vector());
      r.origin[0] = t.has("origin_0") ? t.at("origin_0").rational_vector()
                                      : std::vector<Rational>(sc.dim, Rational(0));
      r.transition = t.has("transition") ? to_mat(t.at("transition").int_matrix())
                                         : IntMat::identity(sc.dim);
      r.transition_inv = invert_unimodular(r.transition);
      if (t.has("origin_1")) {
        r.origin[1] = t.at("origin_1").rational_vector();
      } else {
        // Transition with aligned origins.
        r.origin[1].assign(sc.dim, Rational(0));
        for (int i = 0; i < sc.dim; ++i)
          for (int j = 0; j < sc.dim; ++j)
            r.origin[1][i] += Rational(r.transition.at(i, j)) * r.origin[0][j];
      }
      if (t.has("boundary")) r.boundary = t.at("boundary").as_bool();
      r.d_check[0] = primitive_normal(r.basis[0], r.zeta[0]);
      r.d_check[1] = primitive_normal(r.basis[1], r.zeta[1]);
      sc.rhos.push_back(std::move(r));
    }

  if (root.has("kink"))
    for (const auto& t : root.at("kink").as_array()) {
      std::string id = t.at("rho").as_string();
      for (auto& r : sc.rhos)
        if (r.id == id) r.kappa = t.at("kappa").as_int();
    }

  if (root.has("slab"))
    for (const auto& t : root.at("slab").as_array()) {
      Slab s;
      s.id = t.at("id").as_string();
      s.rho = t.at("rho").as_string();
      for (const auto& v : t.at("vars").as_array()) s.vars.push_back(v.as_string());
      s.expr = t.at("f").as_string();
      s.f = parse_series(s.expr, s.vars, sc.k);
      sc.slabs.push_back(std::move(s));
    }

  if (root.has("wall"))
    for (const auto& t : root.at("wall").as_array()) {
      Wall w;
      w.id = t.at("id").as_string();
      w.cell = t.at("cell").as_string();
      w.f = parse_series(t.at("f").as_string(), sc.coords, sc.k);
      w.d_check = to_int_vec(t.at("d_check").int_vector());
      // The exponent m is the unique nonconstant lattice monomial of f.
      for (const auto& [mono, c] : w.f.terms)
        if (!mono.lam_zero()) {
          w.m.clear();
          for (int e : mono.lam) w.m.push_back(e);
        }
      if (t.has("normal")) {
        w.normal = to_int_vec(t.at("normal").int_vector());
        w.offset = t.has("offset") ? t.at("offset").as_rational() : Rational(0);
      }
      if (t.has("bounds")) {
        for (auto& [n, c] : parse_halfspaces(t.at("bounds"))) w.bounds.emplace_back(n, c);
      }
      sc.walls.push_back(std::move(w));
    }

  if (root.has("gluing"))
    for (const auto& t : root.at("gluing").as_array()) {
      std::vector<MultValue> vals;
      for (const auto& v : t.at("values").as_array()) vals.push_back(parse_mult_value(v.as_string()));
      sc.gluing[{t.at("cell").as_string(), t.at("rho").as_string()}] = std::move(vals);
    }

  if (root.has("cycle"))
    for (const auto& t : root.at("cycle").as_array()) {
      Cycle c;
      c.id = t.at("id").as_string();
      if (t.has("vertex"))
        for (const auto& vt : t.at("vertex").as_array()) {
          CycleVertex v;
          v.id = vt.at("id").as_string();
          v.at = vt.at("at").as_string();
          v.pos = vt.at("pos").rational_vector();
          c.vertices.push_back(std::move(v));
        }
      if (t.has("edge"))
        for (const auto& et : t.at("edge").as_array()) {
          CycleEdge e;
          e.tail = et.at("tail").as_string();
          e.head = et.at("head").as_string();
          e.cell = et.at("cell").as_string();
          e.xi = to_int_vec(et.at("xi").int_vector());
          c.edges.push_back(std::move(e));
        }
      sc.cycles.push_back(std::move(c));
    }

  return sc;
}

Scene load_scene(const std::string& path) {
  std::string text;
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
  std::fclose(f);
  return parse_scene(text);
}

std::vector<std::string> validate_scene(const Scene& s) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) { bad.push_back(msg); };

  std::set<std::string> cell_ids;
  for (const auto& c : s.cells) {
    if (!cell_ids.insert(c.id).second) complain("duplicate cell id " + c.id);
    for (const auto& [n, o] : c.halfspaces)
      if (static_cast<int>(n.size()) != s.dim) complain("cell " + c.id + ": halfspace dimension");
  }
  for (const auto& r : s.rhos) {
    for (int side = 0; side < 2; ++side) {
      if (!s.find_cell(r.cells[side])) {
        complain("rho " + r.id + ": unknown cell " + r.cells[side]);
        continue;
      }
      if (r.basis[side].rows != s.dim - 1 || r.basis[side].cols != s.dim)
        complain("rho " + r.id + ": basis must be (n-1) x n");
      if (static_cast<int>(r.zeta[side].size()) != s.dim)
        complain("rho " + r.id + ": zeta dimension");
    }
    if (!r.boundary && r.cells[0] == r.cells[1])
      complain("rho " + r.id + ": interior rho needs two distinct cells");
    if (r.kappa <= 0) complain("rho " + r.id + ": kink must be positive");
    // The transition must identify the Lambda_rho bases.
    IntMat mapped = r.basis[0] * r.transition.transposed();
    if (!(mapped == r.basis[1]))
      complain("rho " + r.id + ": transition does not restrict to the identity on Lambda_rho");
  }
  for (const auto& sl : s.slabs) {
    const Rho* r = s.find_rho(sl.rho);
    if (!r) {
      complain("slab " + sl.id + ": unknown rho " + sl.rho);
      continue;
    }
    if (static_cast<int>(sl.vars.size()) != s.dim - 1)
      complain("slab " + sl.id + ": needs n-1 variables");
  }
  for (const auto& w : s.walls) {
    if (!s.find_cell(w.cell)) complain("wall " + w.id + ": unknown cell " + w.cell);
    if (!w.m.empty() && dot(w.d_check, w.m) != 0)
      complain("wall " + w.id + ": exponent not tangent to the wall");
    int nontrivial = 0;
    for (const auto& [mono, c] : w.f.terms)
      if (!mono.is_constant()) {
        ++nontrivial;
        if (mono.t <= 0) complain("wall " + w.id + ": t-order must be positive");
      }
    if (nontrivial != 1 || !w.f.constant_term().is_one())
      complain("wall " + w.id + ": function must be 1 + a z^m t^l");
  }
  for (const auto& [key, vals] : s.gluing) {
    if (!s.find_cell(key.first)) complain("gluing: unknown cell " + key.first);
    if (!s.find_rho(key.second)) complain("gluing: unknown rho " + key.second);
    if (static_cast<int>(vals.size()) != s.dim) complain("gluing: need one value per coordinate");
  }
  for (const auto& c : s.cycles) {
    std::set<std::string> vids;
    for (const auto& v : c.vertices) {
      if (!vids.insert(v.id).second) complain("cycle " + c.id + ": duplicate vertex " + v.id);
      if (static_cast<int>(v.pos.size()) != s.dim)
        complain("cycle " + c.id + ": vertex " + v.id + " position dimension");
      if (!s.find_cell(v.at) && !s.find_rho(v.at))
        complain("cycle " + c.id + ": vertex " + v.id + " host " + v.at + " unknown");
    }
    for (const auto& e : c.edges) {
      if (!vids.count(e.tail) || !vids.count(e.head))
        complain("cycle " + c.id + ": edge endpoints unresolved");
      if (!s.find_cell(e.cell)) complain("cycle " + c.id + ": edge cell " + e.cell + " unknown");
      bool zero = true;
      for (const auto& x : e.xi)
        if (x != 0) zero = false;
      if (zero) complain("cycle " + c.id + ": edge section must be nonzero");
    }
  }
  return bad;
}

}  // namespace tropper
