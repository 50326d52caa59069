#include "tropper/period.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <stdexcept>

namespace tropper {

RonkinValue RonkinValue::pow(long e) const {
  RonkinValue r;
  GaussianRational base = coeff;
  long n = e;
  if (n < 0) {
    base = GaussianRational(1) / base;
    n = -n;
  }
  for (long j = 0; j < n; ++j) r.coeff *= base;
  r.unit = unit.pow(static_cast<int>(e));
  r.tail = tail * GaussianRational(Rational(e));
  return r;
}

RonkinValue RonkinValue::operator*(const RonkinValue& o) const {
  RonkinValue r;
  r.coeff = coeff * o.coeff;
  r.unit = unit * o.unit;
  r.tail = tail + o.tail;
  return r;
}

std::string RonkinValue::str() const {
  std::vector<std::string> parts;
  if (!coeff.is_one()) parts.push_back("log(" + coeff.str() + ")");
  auto log_of = [&](const std::string& name, int e) {
    if (e == 0) return;
    std::string p = "log(" + name + ")";
    if (e != 1) p = std::to_string(e) + "*" + p;
    parts.push_back(p);
  };
  log_of("t", unit.t);
  for (const auto& [name, e] : unit.par) log_of(name, e);
  if (!tail.is_zero()) parts.push_back(tail.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string RonkinValue::exponentiated() const {
  std::vector<std::string> parts;
  if (!coeff.is_one()) parts.push_back(coeff.str());
  if (!unit.is_constant()) parts.push_back(unit.str());
  if (!tail.is_zero()) parts.push_back("exp(" + tail.str() + ")");
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

RonkinValue ronkin_series(const Slab& slab, const std::vector<long>& m, int k) {
  if (m.size() != static_cast<size_t>(slab.f.lambda_dim))
    throw std::invalid_argument("complement order has wrong dimension for slab " + slab.id);
  Series fm(slab.f.lambda_dim, slab.f.tmax);
  for (const auto& [mono, c] : slab.f.terms) {
    Monomial sh = mono;
    for (size_t i = 0; i < m.size(); ++i) sh.lam[i] -= static_cast<int>(m[i]);
    fm.terms[sh] = c;
  }
  UnitSplit us = split_unit(fm, k);
  Series zero = series_log(us.rest).zero_exponent_part();
  RonkinValue r;
  r.coeff = us.coeff;
  r.unit = us.unit;
  r.unit.lam.clear();
  r.tail = Series(0, slab.f.tmax);
  for (const auto& [mono, c] : zero.terms) {
    Monomial flat = mono;
    flat.lam.clear();
    r.tail.terms[flat] = c;
  }
  return r;
}

long pair_c1(const Scene& s, const Cycle& c) {
  long sum = 0;
  for (const auto& ev : find_crossings(s, c)) sum += ev.c * ev.kappa;
  return sum;
}

long monodromy(const Scene& s, const Cycle& c) { return pair_c1(s, c); }

MultValue pair_gluing(const Scene& s, const Cycle& c) {
  MultValue total;
  for (const auto& ev : find_crossings(s, c)) {
    total = total * s.gluing_value(ev.cell_out, ev.rho, ev.xi_out);
    total = total * s.gluing_value(ev.cell_in, ev.rho, ev.xi_in).inverse();
  }
  return total;
}

RonkinValue ronkin_pairing(const Scene& s, const Cycle& c, int k) {
  RonkinValue total;
  for (const auto& ev : find_crossings(s, c)) {
    if (!ev.active) continue;
    const Slab* sl = s.find_slab(ev.slab);
    total = total * ronkin_series(*sl, ev.m, k).pow(ev.c);
  }
  return total;
}

PeriodExpression period(const Scene& s, const Cycle& c, int k) {
  PeriodExpression p;
  for (const auto& ev : find_crossings(s, c)) {
    VertexContribution row;
    row.event = ev;
    row.t_term = ev.c * ev.kappa;
    row.gluing_ratio = s.gluing_value(ev.cell_out, ev.rho, ev.xi_out) *
                       s.gluing_value(ev.cell_in, ev.rho, ev.xi_in).inverse();
    if (ev.active) row.ronkin = ronkin_series(*s.find_slab(ev.slab), ev.m, k).pow(ev.c);
    p.t_exponent += row.t_term;
    p.gluing = p.gluing * row.gluing_ratio;
    p.ronkin = p.ronkin * row.ronkin;
    p.report.push_back(std::move(row));
  }
  return p;
}

PicardLattice picard_sublattice(const std::vector<long>& c1,
                                const std::vector<MultValue>& glue) {
  size_t n = c1.size();
  if (glue.size() != n) throw std::invalid_argument("pairing lists differ in length");
  std::vector<std::string> names;
  bool any_angle = false;
  for (const auto& g : glue) {
    if (g.angle != 0) any_angle = true;
    for (const auto& [name, e] : g.exps)
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
  int cols = static_cast<int>(n) + (any_angle ? 1 : 0);
  std::vector<std::vector<Integer>> rows;
  {
    std::vector<Integer> row(cols, Integer(0));
    for (size_t i = 0; i < n; ++i) row[i] = c1[i];
    rows.push_back(row);
  }
  for (const auto& name : names) {
    std::vector<Integer> row(cols, Integer(0));
    for (size_t i = 0; i < n; ++i) {
      auto it = glue[i].exps.find(name);
      if (it != glue[i].exps.end()) row[i] = it->second;
    }
    rows.push_back(row);
  }
  if (any_angle) {
    // Roots of unity contribute modulo 1: scale by the common denominator
    // and absorb the integer ambiguity into an auxiliary variable.
    Integer d(1);
    for (const auto& g : glue) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), g.angle.get_den().get_mpz_t());
    std::vector<Integer> row(cols, Integer(0));
    for (size_t i = 0; i < n; ++i) {
      Rational scaled = glue[i].angle * Rational(d);
      row[i] = scaled.get_num();
    }
    row[cols - 1] = d;
    rows.push_back(row);
  }
  IntMat m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  IntMat ker = kernel_sublattice(m);
  PicardLattice out;
  out.rank = ker.cols;
  out.basis = IntMat(static_cast<int>(n), ker.cols);
  for (int r = 0; r < out.basis.rows; ++r)
    for (int c = 0; c < ker.cols; ++c) out.basis.at(r, c) = ker.at(r, c);
  return out;
}

namespace {

std::string coeff_string(const Monomial& m, const GaussianRational& c) {
  std::string out = c.str();
  if (c.im != 0) out = "(" + out + ")";
  for (const auto& [name, e] : m.par) {
    out += "*" + name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json series_json_value(const Series& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : s.terms) {
    nlohmann::json term;
    term["lambda"] = m.lam;
    term["t"] = m.t;
    term["coeff"] = coeff_string(m, c);
    arr.push_back(term);
  }
  return arr;
}

}  // namespace

std::string series_to_json(const Series& s) { return series_json_value(s).dump(2); }

std::string period_to_json(const PeriodExpression& p) {
  nlohmann::json j;
  j["gluing"] = {{"value", p.gluing.str()}, {"is_identity", p.gluing.is_identity()}};
  j["t_exponent"] = p.t_exponent;
  j["ronkin"] = {{"log", p.ronkin.str()},
                 {"exponentiated", p.ronkin.exponentiated()},
                 {"tail", series_json_value(p.ronkin.tail)}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : p.report) {
    nlohmann::json row;
    row["vertex"] = r.event.vertex;
    row["rho"] = r.event.rho;
    row["slab"] = r.event.slab;
    row["cell_in"] = r.event.cell_in;
    row["cell_out"] = r.event.cell_out;
    row["c"] = r.event.c;
    row["kappa"] = r.event.kappa;
    row["m"] = r.event.m;
    row["t_term"] = r.t_term;
    row["gluing_ratio"] = r.gluing_ratio.str();
    row["ronkin"] = r.ronkin.str();
    row["log_t_part"] = std::to_string(r.t_term) + "*log(t)";
    rows.push_back(row);
  }
  j["report"] = rows;
  return j.dump(2);
}

}  // namespace tropper
