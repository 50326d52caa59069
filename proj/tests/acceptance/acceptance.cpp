// End-to-end checks of the shipped fixtures and the randomized property
// suites.  Prints one line per criterion and exits nonzero on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropper/amoeba.hpp"
#include "tropper/homology.hpp"
#include "tropper/lemmas.hpp"
#include "tropper/period.hpp"
#include "tropper/walls.hpp"

using namespace tropper;

namespace {

const std::string kFix = FIXTURE_DIR;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// ---- criterion 1: symbolic period of the two-zero figure eight ----

void crit_kp1_period() {
  Scene s = load_scene(kFix + "/kp1.toml");
  PeriodExpression p = period(s, *s.find_cycle("main"), 4);
  expect(p.t_exponent == 0, "t-exponent");
  expect(p.gluing.is_identity(), "gluing");
  expect(p.ronkin.exponentiated() == "a*b", "value " + p.ronkin.exponentiated());
}

// ---- criterion 2: slab correction of 1 + x + y + s/(xy) ----

void crit_normalize_slab() {
  Series f = parse_series("1+x+y+s*x^-1*y^-1", {"x", "y"}, 3);
  Series g = normalize_slab(f, 3);
  Series want(2, f.tmax);
  auto put = [&](int e, long c) {
    Monomial m;
    m.lam = {0, 0};
    m.par = {{"s", e}};
    want.add_term(m, GaussianRational(c));
  };
  put(1, -2);
  put(2, 5);
  put(3, -32);
  expect(g == want, "correction " + g.str());
  expect(normalize_slab(f + g, 3).is_zero(), "idempotence");
}

// ---- criterion 3: wedge period before and after normalization ----

void crit_kp2_period() {
  Scene s = load_scene(kFix + "/kp2.toml");
  PeriodExpression p = period(s, *s.find_cycle("main"), 3);
  expect(p.gluing.is_identity(), "gluing");
  expect(p.t_exponent == 0, "t-exponent");
  Monomial su;
  su.par = {{"s", 1}};
  expect(p.ronkin.coeff.is_one() && p.ronkin.unit == su, "unit factor");
  // Independent oracle for the tail: 3 * sum_c (-1)^(c-1) (3c-1)!/(c!)^3 s^c.
  Series want(0, s.find_slab("bp")->f.tmax);
  for (long c = 1; c <= 3; ++c) {
    Integer num = 1;
    for (long j = 2; j <= 3 * c - 1; ++j) num *= j;
    Integer den = 1;
    for (long j = 2; j <= c; ++j) den *= j;
    Rational coeff = Rational(num) / Rational(den * den * den) * 3;
    if (c % 2 == 0) coeff = -coeff;
    Monomial m;
    m.par = {{"s", static_cast<int>(c)}};
    want.add_term(m, GaussianRational(coeff));
  }
  expect(p.ronkin.tail == want, "tail " + p.ronkin.tail.str());

  Scene norm = s;
  for (auto& sl : norm.slabs)
    if (sl.id == "bp") sl.f = sl.f + normalize_slab(sl.f, 3);
  PeriodExpression q = period(norm, *norm.find_cycle("main"), 3);
  expect(q.ronkin.exponentiated() == "s", "normalized value " + q.ronkin.exponentiated());
  expect(q.gluing.is_identity() && q.t_exponent == 0, "normalized prefactors");
}

// ---- criterion 4: torus averages of binomial products vanish ----

void crit_ronkin_binomials() {
  std::mt19937 rng(404);
  auto coeff = [&]() {
    long r = static_cast<long>(rng() % 39) - 19;  // |r/64| <= 0.297
    if (r == 0) r = 7;
    return Rational(r, 64);
  };
  for (int dim = 1; dim <= 2; ++dim) {
    std::vector<std::string> vars(dim == 1 ? std::vector<std::string>{"u"}
                                           : std::vector<std::string>{"x", "y"});
    for (int trial = 0; trial < 25; ++trial) {
      Series f = Series::constant(dim, 1, 8);
      int n_factors = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < n_factors; ++j) {
        Monomial m;
        m.lam.assign(dim, 0);
        while (m.lam_zero())
          for (int q = 0; q < dim; ++q) m.lam[q] = static_cast<int>(rng() % 5) - 2;
        m.t = 1 + static_cast<int>(rng() % 2);
        Series bin = Series::constant(dim, 1, 8);
        bin.add_term(m, GaussianRational(coeff()));
        f = f * bin;
      }
      Slab sl;
      sl.id = "r";
      sl.f = f;
      sl.vars = vars;
      expect(ronkin_series(sl, std::vector<long>(dim, 0), 4).is_trivial(),
             "series value nonzero");
      std::vector<double> origin(dim, 0.0);
      auto num = ronkin_numeric(f, std::vector<long>(dim, 0), origin, {}, 0.7);
      expect(std::abs(num) < 1e-8, "numeric value " + std::to_string(std::abs(num)));
    }
  }
}

// ---- criterion 5: winding quadrature vs root counting ----

void crit_complement_orders() {
  std::mt19937 rng(505);
  int tested = 0;
  while (tested < 100) {
    Series f(1, 0);
    for (int e = -3; e <= 3; ++e) {
      long r = static_cast<long>(rng() % 129) - 64;
      if (r == 0 && e == 0) r = 32;
      Monomial m;
      m.lam = {e};
      if (r != 0) f.add_term(m, GaussianRational(Rational(r, 64)));
    }
    if (f.is_zero()) continue;
    double x = (static_cast<double>(rng() % 2000) / 1000.0) - 1.0;
    if (min_modulus_on_torus(f, {x}, {}) < 0.05) continue;
    ComplementOrder co = complement_order(f, {x}, {});
    expect(winding_order(f, {x}, {}) == co.m, "order mismatch");
    ++tested;
  }
  Scene s = load_scene(kFix + "/kp1.toml");
  const Series& g = s.find_slab("b0")->f;
  std::map<std::string, double> p{{"a", 0.3}, {"b", 0.25}};
  expect(complement_order(g, {std::log(0.1)}, p).m == std::vector<long>{-1}, "left order");
  expect(complement_order(g, {0.0}, p).m == std::vector<long>{0}, "middle order");
  expect(complement_order(g, {std::log(10.0)}, p).m == std::vector<long>{1}, "right order");
}

// ---- criterion 6: the basic scattering loop ----

void crit_scattering() {
  Scene s = load_scene(kFix + "/ks.toml");
  std::vector<std::pair<std::string, int>> loop{
      {"wx", +1}, {"wy", +1}, {"wx", -1}, {"wy", -1}, {"wd", +1}};
  expect(check_consistency_codim0(s, loop, 2), "full loop not consistent");
  loop.pop_back();
  expect(!check_consistency_codim0(s, loop, 2), "truncated loop consistent");
}

// ---- criterion 7: the twist count equals the c1 pairing ----

void crit_monodromy() {
  for (const std::string& name : {"kp1", "kp2"}) {
    Scene s = load_scene(kFix + "/" + name + ".toml");
    for (const auto& c : s.cycles)
      expect(monodromy(s, c) == pair_c1(s, c), "mismatch on " + name);
  }
  Scene s = load_scene(kFix + "/kp1.toml");
  expect(pair_c1(s, *s.find_cycle("main")) == 0, "figure eight count");
}

// ---- criterion 8: rank-19 sublattice of twenty pairings ----

std::pair<std::vector<long>, std::vector<MultValue>> read_pairings(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Failure("cannot read " + path);
  nlohmann::json j;
  in >> j;
  std::vector<long> c1;
  for (const auto& v : j.at("c1")) c1.push_back(v.get<long>());
  std::vector<MultValue> glue;
  for (const auto& g : j.at("gluing")) glue.push_back(parse_mult_value(g.get<std::string>()));
  return {c1, glue};
}

void crit_picard() {
  std::mt19937 rng(808);
  for (const std::string& name : {"picard20_trivial", "picard20_torsion"}) {
    auto [c1, glue] = read_pairings(kFix + "/" + name + ".json");
    PicardLattice p = picard_sublattice(c1, glue);
    expect(p.rank == 19, name + " rank " + std::to_string(p.rank));

    auto satisfies = [&](const std::vector<Integer>& v) {
      Integer d = 0;
      MultValue g;
      for (size_t i = 0; i < v.size(); ++i) {
        d += Integer(c1[i]) * v[i];
        g = g * glue[i].pow(v[i].get_si());
      }
      return d == 0 && g.is_identity();
    };
    for (int j = 0; j < p.basis.cols; ++j) {
      std::vector<Integer> v;
      for (int i = 0; i < p.basis.rows; ++i) v.push_back(p.basis.at(i, j));
      expect(satisfies(v), name + " basis vector outside the lattice");
    }
    // Search the coefficient box: vectors supported on two coordinates with
    // entries in [-5,5], plus random full vectors from the same box.
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (long vi = -5; vi <= 5; ++vi)
          for (long vj = -5; vj <= 5; ++vj) {
            std::vector<Integer> v(20, Integer(0));
            v[i] = vi;
            v[j] = vj;
            expect(in_column_lattice(p.basis, v) == satisfies(v),
                   name + " membership mismatch in the box");
          }
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Integer> v(20);
      for (auto& e : v) e = static_cast<long>(rng() % 11) - 5;
      expect(in_column_lattice(p.basis, v) == satisfies(v),
             name + " membership mismatch on a random vector");
    }
  }
}

// ---- criterion 9: combinatorial lemmas ----

void crit_lemmas() {
  for (long m = 1; m <= 40; ++m)
    for (long n = 1; n <= 40; ++n)
      expect(alternating_roots(m, n),
             "alternation fails at " + std::to_string(m) + "," + std::to_string(n));
  for (long v = 3; v <= 12; ++v)
    expect(gamma_v_fraction(v) == (v % 2 ? Rational(1, 2) : Rational(0)),
           "parity at valency " + std::to_string(v));
}

// ---- criterion 10: property suites ----

Cycle figure_eight(std::mt19937& rng, long q) {
  auto frac = [&](long lo8, long hi8) {
    long span = hi8 - lo8 + 1;
    return Rational(lo8 + static_cast<long>(rng() % span), 8);
  };
  Cycle c;
  c.id = "rand";
  // Slab orders: m = -1 left of log 0.3, 0 between, +1 right of log 4.
  Rational p1 = frac(-32, -16), p2 = frac(-8, 0);
  Rational p4 = frac(16, 32), p3 = frac(2, 10);
  c.vertices = {
      {"P1", "rho", {p1, Rational(0)}},  {"M1", "up", {p1, Rational(1)}},
      {"P2", "rho", {p2, Rational(0)}},  {"M2", "down", {p2, Rational(-1)}},
      {"P4", "rho", {p4, Rational(0)}},  {"M3", "up", {p4, Rational(1)}},
      {"P3", "rho", {p3, Rational(0)}},  {"M4", "down", {p3, Rational(-1)}},
  };
  std::vector<Integer> vert{Integer(0), Integer(-q)};
  std::vector<Integer> diag{Integer(q), Integer(-q)};
  c.edges = {
      {"P1", "M1", "up", vert},   {"M1", "P2", "up", vert},
      {"P2", "M2", "down", vert}, {"M2", "P4", "down", vert},
      {"P4", "M3", "up", diag},   {"M3", "P3", "up", diag},
      {"P3", "M4", "down", diag}, {"M4", "P1", "down", diag},
  };
  return c;
}

void crit_properties() {
  // (a) reduction to standard position preserves all three pairings.
  Scene s = load_scene(kFix + "/kp1.toml");
  s.gluing[{"up", "rho"}] = {parse_mult_value("g"), parse_mult_value("h")};
  s.gluing[{"down", "rho"}] = {parse_mult_value("e(1/3)*g"), parse_mult_value("h^2")};
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 20; ++trial) {
    long q = 1 + static_cast<long>(rng() % 3);
    Cycle c = figure_eight(rng, q);
    expect(check_balancing(s, c).empty(), "random cycle unbalanced");
    Cycle n = normalize_cycle(s, c);
    expect(check_balancing(s, n).empty(), "reduced cycle unbalanced");
    expect(pair_c1(s, c) == pair_c1(s, n), "c1 pairing changed");
    expect(pair_gluing(s, c) == pair_gluing(s, n), "gluing pairing changed");
    RonkinValue a = ronkin_pairing(s, c, 4), b = ronkin_pairing(s, n, 4);
    expect(a.coeff == b.coeff && a.unit == b.unit && a.tail == b.tail,
           "ronkin pairing changed");
    expect(a.exponentiated() == "a^" + std::to_string(q) + "*b^" + std::to_string(q) ||
               (q == 1 && a.exponentiated() == "a*b"),
           "unexpected value " + a.exponentiated());
  }

  // (b) the period of a disjoint union is the product of the periods.
  Scene w = load_scene(kFix + "/kp2.toml");
  const Cycle* main_c = w.find_cycle("main");
  PeriodExpression whole = period(w, *main_c, 3);
  long t_sum = 0;
  MultValue glue_prod;
  RonkinValue ronkin_prod;
  for (char d = '1'; d <= '4'; ++d) {
    Cycle part;
    part.id = std::string("loop") + d;
    for (const auto& v : main_c->vertices)
      if (v.id.back() == d) part.vertices.push_back(v);
    for (const auto& e : main_c->edges)
      if (e.tail.back() == d) part.edges.push_back(e);
    expect(part.edges.size() == 5, "loop extraction");
    PeriodExpression p = period(w, part, 3);
    t_sum += p.t_exponent;
    glue_prod = glue_prod * p.gluing;
    ronkin_prod = ronkin_prod * p.ronkin;
  }
  expect(t_sum == whole.t_exponent, "t-exponents not additive");
  expect(glue_prod == whole.gluing, "gluing not multiplicative");
  expect(ronkin_prod.coeff == whole.ronkin.coeff && ronkin_prod.unit == whole.ronkin.unit &&
             ronkin_prod.tail == whole.ronkin.tail,
         "ronkin not multiplicative");

  // (c) log/exp and factorization round-trips through order six.
  for (int k = 2; k <= 6; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      Series f = Series::constant(2, 1, k);
      for (int j = 0; j < 4; ++j) {
        Monomial m;
        m.lam = {static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2};
        m.t = 1 + static_cast<int>(rng() % 2);
        f.add_term(m, GaussianRational(Rational(static_cast<long>(rng() % 9) - 4,
                                                1 + static_cast<long>(rng() % 3))));
      }
      expect(series_exp(series_log(f)) == f, "log/exp round-trip");
      BinomialFactorization bf = factorize_binomials(f, k);
      expect(bf.exact, "factorization left a remainder");
      Series prod = Series::monomial(2, bf.unit, bf.coeff, k);
      for (const auto& fac : bf.factors) prod = prod * fac;
      Series diff = prod - f;
      for (const auto& [m, c] : diff.terms)
        expect(bf.remainder.wt->weight(m) > bf.remainder.wt->cap,
               "factorization differs below the cap");
    }
  }
}

struct Criterion {
  int id;
  const char* label;
  double limit;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "symbolic period of the two-zero figure eight", 1.0, crit_kp1_period},
      {2, "slab correction for 1+x+y+s/(xy)", 10.0, crit_normalize_slab},
      {3, "wedge period before and after slab normalization", 10.0, crit_kp2_period},
      {4, "torus averages of binomial products vanish", 30.0, crit_ronkin_binomials},
      {5, "winding quadrature matches root counting", 10.0, crit_complement_orders},
      {6, "scattering loop closes only with the outgoing ray", 1.0, crit_scattering},
      {7, "twist count equals the c1 pairing", 10.0, crit_monodromy},
      {8, "rank-19 sublattice of twenty pairings", 5.0, crit_picard},
      {9, "alternation and parity lemmas", 5.0, crit_lemmas},
      {10, "reduction invariance, additivity, round-trips", 60.0, crit_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      c.run();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = err.empty() && secs <= c.limit;
    if (!ok) ++failures;
    std::printf("criterion %2d: %s - %s (%.2fs)%s%s\n", c.id, ok ? "pass" : "FAIL", c.label, secs,
                err.empty() ? "" : ": ", err.c_str());
  }
  return failures == 0 ? 0 : 1;
}
