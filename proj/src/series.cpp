#include "tropper/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tropper {

Monomial Monomial::operator*(const Monomial& o) const {
  if (lam.size() != o.lam.size()) throw std::invalid_argument("monomial dimension mismatch");
  Monomial r = *this;
  for (size_t j = 0; j < lam.size(); ++j) r.lam[j] += o.lam[j];
  r.t += o.t;
  for (const auto& [k, e] : o.par) {
    int v = (r.par.count(k) ? r.par[k] : 0) + e;
    if (v == 0)
      r.par.erase(k);
    else
      r.par[k] = v;
  }
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int n) const {
  Monomial r = *this;
  for (auto& e : r.lam) e *= n;
  r.t *= n;
  if (n == 0) {
    r.par.clear();
  } else {
    for (auto& [k, e] : r.par) e *= n;
  }
  return r;
}

std::string Monomial::str() const {
  std::string s;
  auto app = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (size_t j = 0; j < lam.size(); ++j) app("z" + std::to_string(j), lam[j]);
  app("t", t);
  for (const auto& [k, e] : par) app(k, e);
  return s.empty() ? "1" : s;
}

Rational Weighting::weight(const Monomial& m) const {
  Rational w(0);
  for (size_t j = 0; j < m.lam.size() && j < lam.size(); ++j) w += lam[j] * m.lam[j];
  w += t * m.t;
  for (const auto& [k, e] : m.par) {
    auto it = par.find(k);
    if (it != par.end()) w += it->second * e;
  }
  return w;
}

Series Series::constant(int lam_dim, GaussianRational c, int t_max) {
  Series s(lam_dim, t_max);
  Monomial m;
  m.lam.assign(lam_dim, 0);
  s.add_term(m, c);
  return s;
}

Series Series::monomial(int lam_dim, const Monomial& m, GaussianRational c, int t_max) {
  Series s(lam_dim, t_max);
  s.add_term(m, c);
  return s;
}

GaussianRational Series::coeff(const Monomial& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? GaussianRational() : it->second;
}

GaussianRational Series::constant_term() const {
  Monomial m;
  m.lam.assign(lambda_dim, 0);
  return coeff(m);
}

void Series::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.lam.size()) != lambda_dim)
    throw std::invalid_argument("term dimension mismatch");
  if (m.t > tmax) return;
  if (wt && wt->weight(m) > wt->cap) return;
  auto [it, fresh] = terms.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Series& Series::operator+=(const Series& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  r += o;
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r = *this;
  r -= o;
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

Series Series::operator*(const Series& o) const {
  if (lambda_dim != o.lambda_dim) throw std::invalid_argument("series dimension mismatch");
  Series r(lambda_dim, std::min(tmax, o.tmax));
  r.wt = wt ? wt : o.wt;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) r.add_term(ma * mb, ca * cb);
  return r;
}

Series Series::operator*(const GaussianRational& c) const {
  Series r = *this;
  if (c.is_zero()) {
    r.terms.clear();
    return r;
  }
  for (auto& [m, v] : r.terms) v *= c;
  return r;
}

Series Series::zero_exponent_part() const {
  Series r(lambda_dim, tmax);
  r.wt = wt;
  for (const auto& [m, c] : terms)
    if (m.lam_zero()) r.terms.emplace(m, c);
  return r;
}

Series Series::t_slice(int k) const {
  Series r(lambda_dim, tmax);
  for (const auto& [m, c] : terms)
    if (m.t == k) {
      Monomial m0 = m;
      m0.t = 0;
      r.terms.emplace(m0, c);
    }
  return r;
}

int Series::min_t_order() const {
  int k = tmax + 1;
  for (const auto& [m, c] : terms) k = std::min(k, m.t);
  return k;
}

std::string Series::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    std::string cs = c.str();
    bool wrap = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
    if (!s.empty()) s += " + ";
    if (m.is_constant()) {
      s += wrap ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      s += m.str();
    } else if (c == GaussianRational(-1)) {
      s += "-" + m.str();
    } else {
      s += (wrap ? "(" + cs + ")" : cs) + "*" + m.str();
    }
  }
  return s;
}

namespace {

// Number of iterations needed so that powers of r exceed every truncation
// bound.  r must sit strictly inside the positivity cone.
int iteration_bound(const Series& r) {
  if (r.is_zero()) return 0;
  if (r.wt) {
    Rational delta;
    bool first = true;
    for (const auto& [m, c] : r.terms) {
      Rational w = r.wt->weight(m);
      if (first || w < delta) delta = w, first = false;
    }
    if (delta <= 0) throw std::domain_error("series has a term of nonpositive weight");
    Rational q = r.wt->cap / delta;
    Integer fl = q.get_num() / q.get_den();
    return static_cast<int>(fl.get_si()) + 1;
  }
  int d = r.min_t_order();
  if (d <= 0) throw std::domain_error("series has a term of nonpositive t-order");
  return r.tmax / d + 1;
}

}  // namespace

Series series_log(const Series& s) {
  if (!s.constant_term().is_one()) throw std::domain_error("log requires constant term 1");
  Series r = s - Series::constant(s.lambda_dim, 1, s.tmax);
  r.wt = s.wt;
  int n = iteration_bound(r);
  Series acc(s.lambda_dim, s.tmax);
  acc.wt = s.wt;
  Series p = r;
  for (int j = 1; j <= n; ++j) {
    GaussianRational f = GaussianRational(Rational(1, j));
    if (j % 2 == 0) f = -f;
    acc += p * f;
    if (j < n) p = p * r;
  }
  return acc;
}

Series series_exp(const Series& s) {
  if (!s.constant_term().is_zero()) throw std::domain_error("exp requires constant term 0");
  int n = iteration_bound(s);
  Series acc = Series::constant(s.lambda_dim, 1, s.tmax);
  acc.wt = s.wt;
  Series p = Series::constant(s.lambda_dim, 1, s.tmax);
  p.wt = s.wt;
  Rational fact(1);
  for (int j = 1; j <= n; ++j) {
    p = p * s;
    fact *= j;
    acc += p * GaussianRational(1 / fact);
  }
  return acc;
}

Series series_inverse(const Series& s) {
  GaussianRational c = s.constant_term();
  if (c.is_zero()) throw std::domain_error("inverse requires nonzero constant term");
  Series r = s * (GaussianRational(1) / c) - Series::constant(s.lambda_dim, 1, s.tmax);
  r.wt = s.wt;
  int n = iteration_bound(r);
  Series acc = Series::constant(s.lambda_dim, 1, s.tmax);
  acc.wt = s.wt;
  Series p = Series::constant(s.lambda_dim, 1, s.tmax);
  p.wt = s.wt;
  for (int j = 1; j <= n; ++j) {
    p = p * r;
    acc += (j % 2 == 1) ? -p : p;
  }
  return acc * (GaussianRational(1) / c);
}

Series series_pow(const Series& s, int n) {
  if (n < 0) return series_pow(series_inverse(s), -n);
  Series acc = Series::constant(s.lambda_dim, 1, s.tmax);
  acc.wt = s.wt;
  for (int j = 0; j < n; ++j) acc = acc * s;
  return acc;
}

// ---------------------------------------------------------------------------
// Strict positivity certificates via Fourier-Motzkin elimination.

std::optional<std::vector<Rational>> solve_positive_weights(
    const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return std::vector<Rational>{};
  size_t nv = rows[0].size();
  // Constraints: coeffs . w >= rhs.
  struct Con {
    std::vector<Rational> c;
    Rational rhs;
  };
  std::vector<Con> cons;
  for (const auto& r : rows) cons.push_back({r, Rational(1)});

  // Eliminate variables from the back, keeping each level for back
  // substitution.
  std::vector<std::vector<Con>> levels(nv);
  for (size_t v = nv; v-- > 0;) {
    std::vector<Con> lower, upper, rest;
    for (auto& con : cons) {
      if (con.c[v] > 0)
        lower.push_back(con);  // w_v >= (rhs - other)/c
      else if (con.c[v] < 0)
        upper.push_back(con);
      else
        rest.push_back(con);
    }
    levels[v] = cons;
    cons = std::move(rest);
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // Combine lo and up to cancel variable v.
        Con nc;
        nc.c.assign(nv, Rational(0));
        Rational a = lo.c[v], b = -up.c[v];
        for (size_t j = 0; j < nv; ++j) nc.c[j] = b * lo.c[j] + a * up.c[j];
        nc.rhs = b * lo.rhs + a * up.rhs;
        bool all_zero = true;
        for (size_t j = 0; j < v; ++j)
          if (nc.c[j] != 0) all_zero = false;
        if (all_zero) {
          if (nc.rhs > 0) return std::nullopt;
        } else {
          cons.push_back(std::move(nc));
        }
      }
  }
  for (const auto& con : cons)
    if (con.rhs > 0) return std::nullopt;

  // Back substitute, picking a point in each interval.
  std::vector<Rational> w(nv, Rational(0));
  for (size_t v = 0; v < nv; ++v) {
    bool has_lo = false, has_up = false;
    Rational lo, up;
    for (const auto& con : levels[v]) {
      if (con.c[v] == 0) continue;
      Rational bound = con.rhs;
      for (size_t j = 0; j < nv; ++j)
        if (j != v) bound -= con.c[j] * w[j];
      bound /= con.c[v];
      if (con.c[v] > 0) {
        if (!has_lo || bound > lo) lo = bound, has_lo = true;
      } else {
        if (!has_up || bound < up) up = bound, has_up = true;
      }
    }
    if (has_lo && has_up)
      w[v] = (lo + up) / 2;
    else if (has_lo)
      w[v] = lo;
    else if (has_up)
      w[v] = up;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Unit extraction and binomial factorization.

namespace {

struct VarIndex {
  int lam_dim;
  bool uses_t = false;
  std::vector<std::string> params;

  explicit VarIndex(const Series& s) : lam_dim(s.lambda_dim) {
    for (const auto& [m, c] : s.terms) {
      if (m.t != 0) uses_t = true;
      for (const auto& [k, e] : m.par)
        if (std::find(params.begin(), params.end(), k) == params.end()) params.push_back(k);
    }
    std::sort(params.begin(), params.end());
  }
  size_t size() const { return lam_dim + (uses_t ? 1 : 0) + params.size(); }
  std::vector<Rational> exponents(const Monomial& m) const {
    std::vector<Rational> v(size(), Rational(0));
    for (int j = 0; j < lam_dim; ++j) v[j] = m.lam[j];
    size_t o = lam_dim;
    if (uses_t) v[o++] = m.t;
    for (size_t p = 0; p < params.size(); ++p) {
      auto it = m.par.find(params[p]);
      if (it != m.par.end()) v[o + p] = it->second;
    }
    return v;
  }
};

int small_degree(const Monomial& m) {
  int d = std::abs(m.t);
  for (const auto& [k, e] : m.par) d += std::abs(e);
  return d;
}

}  // namespace

UnitSplit split_unit(const Series& s, int k) {
  if (s.is_zero()) throw std::domain_error("cannot split a unit off the zero series");
  VarIndex vi(s);
  std::vector<Monomial> candidates;
  for (const auto& [m, c] : s.terms)
    if (m.lam_zero()) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
    int da = small_degree(a), db = small_degree(b);
    return da != db ? da < db : a < b;
  });
  for (const auto& u : candidates) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& [m, c] : s.terms) {
      if (m == u) continue;
      rows.push_back(vi.exponents(m * u.inverse()));
    }
    auto w = rows.empty() ? std::optional(std::vector<Rational>(vi.size(), Rational(1)))
                          : solve_positive_weights(rows);
    if (!w) continue;
    if (w->size() < vi.size()) w->resize(vi.size(), Rational(0));
    Weighting wt;
    wt.lam.assign(w->begin(), w->begin() + vi.lam_dim);
    size_t o = vi.lam_dim;
    wt.t = vi.uses_t ? (*w)[o++] : Rational(1);
    Rational maxw(1);
    if (vi.uses_t && wt.t > maxw) maxw = wt.t;
    for (size_t p = 0; p < vi.params.size(); ++p) {
      wt.par[vi.params[p]] = (*w)[o + p];
      if ((*w)[o + p] > maxw) maxw = (*w)[o + p];
    }
    wt.cap = maxw * k;

    UnitSplit out;
    out.coeff = s.coeff(u);
    out.unit = u;
    out.wt = wt;
    Series rest(s.lambda_dim, s.tmax);
    rest.wt = wt;
    GaussianRational inv_c = GaussianRational(1) / out.coeff;
    Monomial inv_u = u.inverse();
    for (const auto& [m, c] : s.terms) rest.add_term(m * inv_u, c * inv_c);
    out.rest = std::move(rest);
    return out;
  }
  throw std::domain_error("series admits no unit monomial with positive complement");
}

BinomialFactorization factorize_binomials(const Series& s, int k) {
  UnitSplit us = split_unit(s, k);
  BinomialFactorization out;
  out.coeff = us.coeff;
  out.unit = us.unit;
  Series rest = us.rest;
  Series one = Series::constant(s.lambda_dim, 1, s.tmax);
  one.wt = us.wt;
  for (int guard = 0; guard < 10000; ++guard) {
    Series r = rest - one;
    r.wt = us.wt;
    if (r.is_zero()) {
      out.exact = true;
      out.remainder = r;
      return out;
    }
    // Peel the minimal-weight term.
    auto best = r.terms.begin();
    Rational bw = us.wt.weight(best->first);
    for (auto it = std::next(r.terms.begin()); it != r.terms.end(); ++it) {
      Rational w = us.wt.weight(it->first);
      if (w < bw) bw = w, best = it;
    }
    Series f = one;
    f.add_term(best->first, best->second);
    out.factors.push_back(f);
    rest = rest * series_inverse(f);
  }
  out.remainder = rest - one;
  out.exact = false;
  return out;
}

// ---------------------------------------------------------------------------
// Expression parsing.

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars, int t_max)
      : text_(text), vars_(vars), tmax_(t_max) {}

  Series parse() {
    Series s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return s;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  int tmax_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Series expr() {
    Series s = (peek() == '-') ? (eat('-'), -term()) : term();
    for (;;) {
      if (eat('+'))
        s += term();
      else if (eat('-'))
        s -= term();
      else
        return s;
    }
  }

  Series term() {
    Series s = factor();
    for (;;) {
      if (eat('*')) {
        s = s * factor();
      } else if (eat('/')) {
        Series d = factor();
        if (d.terms.size() != 1) fail("division only by monomials");
        const auto& [m, c] = *d.terms.begin();
        Series inv = Series::monomial(d.lambda_dim, m.inverse(), GaussianRational(1) / c, tmax_);
        s = s * inv;
      } else {
        return s;
      }
    }
  }

  Series factor() {
    Series b = base();
    if (eat('^')) {
      bool neg = eat('-');
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected integer exponent");
      int e = std::stoi(text_.substr(start, pos_ - start));
      if (neg) e = -e;
      if (b.terms.size() == 1) {
        const auto& [m, c] = *b.terms.begin();
        GaussianRational cp(1);
        GaussianRational cc = c;
        int ae = e < 0 ? -e : e;
        for (int j = 0; j < ae; ++j) cp *= cc;
        if (e < 0) cp = GaussianRational(1) / cp;
        return Series::monomial(b.lambda_dim, m.pow(e), cp, tmax_);
      }
      return series_pow(b, e);
    }
    return b;
  }

  Series base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Series s = expr();
      if (!eat(')')) fail("expected ')'");
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      Rational r = rational_from_string(text_.substr(start, pos_ - start));
      return Series::constant(static_cast<int>(vars_.size()), GaussianRational(r), tmax_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      int lam_dim = static_cast<int>(vars_.size());
      Monomial m;
      m.lam.assign(lam_dim, 0);
      if (name == "i") return Series::constant(lam_dim, GaussianRational(Rational(0), Rational(1)), tmax_);
      if (name == "t") {
        m.t = 1;
        return Series::monomial(lam_dim, m, 1, tmax_);
      }
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end()) {
        m.lam[it - vars_.begin()] = 1;
        return Series::monomial(lam_dim, m, 1, tmax_);
      }
      m.par[name] = 1;
      return Series::monomial(lam_dim, m, 1, tmax_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Series parse_series(const std::string& text, const std::vector<std::string>& vars, int t_max) {
  return Parser(text, vars, t_max).parse();
}

Series normalize_slab(const Series& f, int k) {
  if (!f.constant_term().is_one())
    throw std::domain_error("slab function must have constant term 1");
  Series g(f.lambda_dim, f.tmax);
  // Each round cancels the lowest-weight surviving zero-exponent terms of the
  // log, so the residual weight strictly increases and the loop terminates
  // within the cap.
  for (int iter = 0; iter < 16 * (k + 1); ++iter) {
    UnitSplit us = split_unit(f + g, k);
    Series bad = series_log(us.rest).zero_exponent_part();
    if (bad.is_zero()) return g;
    for (auto& [m, c] : bad.terms) g.add_term(m, -c);
  }
  throw std::domain_error("normalization did not close within the weight cap");
}

std::complex<double> eval_series(const Series& s, const std::vector<std::complex<double>>& z,
                                 const std::map<std::string, double>& params, double t) {
  auto ipow = [](std::complex<double> b, int e) {
    std::complex<double> r = 1.0;
    int ae = e < 0 ? -e : e;
    for (int j = 0; j < ae; ++j) r *= b;
    return e < 0 ? 1.0 / r : r;
  };
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : s.terms) {
    std::complex<double> v(to_double(c.re), to_double(c.im));
    for (size_t j = 0; j < m.lam.size(); ++j) v *= ipow(z[j], m.lam[j]);
    if (m.t != 0) v *= ipow(t, m.t);
    for (const auto& [k, e] : m.par) {
      auto it = params.find(k);
      if (it == params.end()) throw std::invalid_argument("missing value for parameter " + k);
      v *= ipow(it->second, e);
    }
    acc += v;
  }
  return acc;
}

}  // namespace tropper
