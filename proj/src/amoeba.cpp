#include "tropper/amoeba.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tropper {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NumTerm {
  std::vector<int> e;
  std::complex<double> c;
};

std::vector<NumTerm> specialize(const Series& f, const std::map<std::string, double>& params,
                                double t) {
  std::vector<NumTerm> out;
  for (const auto& [m, c] : f.terms) {
    std::complex<double> v(to_double(c.re), to_double(c.im));
    if (m.t != 0) {
      if (t == 0.0) {
        if (m.t > 0) continue;
        throw std::domain_error("negative t-power at t = 0");
      }
      v *= std::pow(t, m.t);
    }
    for (const auto& [k, e] : m.par) {
      auto it = params.find(k);
      if (it == params.end()) throw std::invalid_argument("missing value for parameter " + k);
      v *= std::pow(it->second, e);
    }
    if (v == std::complex<double>(0.0, 0.0)) continue;
    bool merged = false;
    for (auto& nt : out)
      if (nt.e == m.lam) {
        nt.c += v;
        merged = true;
        break;
      }
    if (!merged) out.push_back({m.lam, v});
  }
  return out;
}

std::complex<double> eval_terms(const std::vector<NumTerm>& terms,
                                const std::vector<std::complex<double>>& z) {
  std::complex<double> acc = 0.0;
  for (const auto& t : terms) {
    std::complex<double> v = t.c;
    for (size_t j = 0; j < z.size(); ++j) {
      int e = t.e[j];
      std::complex<double> p = 1.0;
      for (int q = 0; q < std::abs(e); ++q) p *= z[j];
      v *= (e < 0) ? 1.0 / p : p;
    }
    acc += v;
  }
  return acc;
}

// Dominant-term shortcut: if one term exceeds the sum of the others on the
// torus, its exponent is the winding vector.
std::optional<std::vector<long>> lopsided(const std::vector<NumTerm>& terms,
                                          const std::vector<double>& x) {
  std::vector<double> mag(terms.size());
  double total = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    double lg = std::log(std::abs(terms[i].c));
    for (size_t j = 0; j < x.size(); ++j) lg += terms[i].e[j] * x[j];
    mag[i] = std::exp(lg);
    total += mag[i];
  }
  for (size_t i = 0; i < terms.size(); ++i)
    if (mag[i] > total - mag[i]) {
      std::vector<long> m(terms[i].e.begin(), terms[i].e.end());
      return m;
    }
  return std::nullopt;
}

// Winding number of one coordinate circle with the others frozen.
double circle_winding(const std::vector<NumTerm>& terms, const std::vector<double>& x, int coord,
                      const std::vector<double>& base_angles, int n) {
  std::vector<std::complex<double>> z(x.size());
  for (size_t j = 0; j < x.size(); ++j)
    z[j] = std::exp(x[j]) *
           std::complex<double>(std::cos(base_angles[j]), std::sin(base_angles[j]));
  double prev = 0.0, total = 0.0;
  bool first = true;
  for (int k = 0; k <= n; ++k) {
    double th = kTwoPi * k / n;
    z[coord] = std::exp(x[coord]) * std::complex<double>(std::cos(th), std::sin(th));
    std::complex<double> v = eval_terms(terms, z);
    if (std::abs(v) < 1e-14) throw std::domain_error("on amoeba: |f| vanishes on the torus");
    double ph = std::arg(v);
    if (!first) {
      double d = ph - prev;
      while (d > std::numbers::pi) d -= kTwoPi;
      while (d < -std::numbers::pi) d += kTwoPi;
      total += d;
    }
    prev = ph;
    first = false;
  }
  return total / kTwoPi;
}

std::vector<long> roots_order_1d(const std::vector<NumTerm>& terms, double x) {
  int lo = terms[0].e[0], hi = terms[0].e[0];
  for (const auto& t : terms) {
    lo = std::min(lo, t.e[0]);
    hi = std::max(hi, t.e[0]);
  }
  int deg = hi - lo;
  if (deg == 0) return {static_cast<long>(lo)};
  Eigen::VectorXcd coef = Eigen::VectorXcd::Zero(deg + 1);
  for (const auto& t : terms) coef[t.e[0] - lo] = t.c;
  // Companion matrix of the monic polynomial.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coef[i] / coef[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  double radius = std::exp(x);
  long count = 0;
  for (int i = 0; i < deg; ++i) {
    double r = std::abs(es.eigenvalues()[i]);
    if (std::abs(r - radius) < 1e-9 * std::max(1.0, radius))
      throw std::domain_error("on amoeba: root modulus equals the torus radius");
    if (r < radius) ++count;
  }
  return {static_cast<long>(lo) + count};
}

}  // namespace

double min_modulus_on_torus(const Series& f, const std::vector<double>& x,
                            const std::map<std::string, double>& params, double t, int n_samples) {
  auto terms = specialize(f, params, t);
  size_t dim = x.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::complex<double>> z(dim);
  std::vector<int> idx(dim, 0);
  for (;;) {
    for (size_t j = 0; j < dim; ++j) {
      double th = kTwoPi * idx[j] / n_samples;
      z[j] = std::exp(x[j]) * std::complex<double>(std::cos(th), std::sin(th));
    }
    best = std::min(best, std::abs(eval_terms(terms, z)));
    size_t j = 0;
    for (; j < dim; ++j) {
      if (++idx[j] < n_samples) break;
      idx[j] = 0;
    }
    if (j == dim) break;
  }
  return best;
}

std::vector<long> winding_order(const Series& f, const std::vector<double>& x,
                                const std::map<std::string, double>& params, double t,
                                int n_samples) {
  auto terms = specialize(f, params, t);
  if (terms.empty()) throw std::domain_error("zero polynomial");
  size_t dim = x.size();
  if (dim < 1 || dim > 2) throw std::invalid_argument("winding supported in dimensions 1 and 2");
  std::vector<long> m(dim);
  const std::vector<double> bases = {0.0, 1.9337, 3.5117, 5.0713};
  for (size_t coord = 0; coord < dim; ++coord) {
    double value = 0.0;
    bool have = false;
    for (double b : bases) {
      std::vector<double> base_angles(dim, b);
      double w = circle_winding(terms, x, static_cast<int>(coord), base_angles, n_samples);
      if (std::abs(w - std::round(w)) > 0.1)
        throw std::domain_error("inconclusive winding, refine sampling");
      if (have && std::llround(w) != std::llround(value))
        throw std::domain_error("winding depends on the base angle: on or near the amoeba");
      value = w;
      have = true;
      if (dim == 1) break;
    }
    m[coord] = std::llround(value);
  }
  return m;
}

ComplementOrder complement_order(const Series& f, const std::vector<double>& x,
                                 const std::map<std::string, double>& params, double t) {
  auto terms = specialize(f, params, t);
  if (terms.empty()) throw std::domain_error("zero polynomial");
  size_t dim = x.size();
  if (dim < 1 || dim > 2)
    throw std::invalid_argument("complement orders supported in dimensions 1 and 2 only");
  if (auto m = lopsided(terms, x)) return {*m, 0.0};
  if (dim == 1) return {roots_order_1d(terms, x[0]), 0.0};
  // Dimension 2: winding quadrature, with the residual of the worst circle.
  ComplementOrder out;
  out.m.assign(2, 0);
  const std::vector<double> bases = {0.0, 1.9337, 3.5117, 5.0713};
  for (int coord = 0; coord < 2; ++coord) {
    double worst = 0.0;
    long val = 0;
    bool have = false;
    for (double b : bases) {
      std::vector<double> base_angles(2, b);
      double w = circle_winding(terms, x, coord, base_angles, 512);
      worst = std::max(worst, std::abs(w - std::round(w)));
      if (std::abs(w - std::round(w)) > 0.1)
        throw std::domain_error("inconclusive winding, refine sampling");
      if (have && std::llround(w) != val)
        throw std::domain_error("winding depends on the base angle: on or near the amoeba");
      val = std::llround(w);
      have = true;
    }
    out.m[coord] = val;
    out.residual = std::max(out.residual, worst);
  }
  return out;
}

namespace {

std::complex<double> ronkin_once_1d(const std::vector<NumTerm>& terms, long m, double x, int n) {
  double re = 0.0, im = 0.0, prev = 0.0;
  bool first = true;
  for (int k = 0; k < n; ++k) {
    double th = kTwoPi * k / n;
    std::vector<std::complex<double>> z = {
        std::exp(x) * std::complex<double>(std::cos(th), std::sin(th))};
    std::complex<double> g =
        eval_terms(terms, z) * std::exp(std::complex<double>(-m * x, -m * th));
    if (std::abs(g) < 1e-14) throw std::domain_error("on amoeba: |f| vanishes on the torus");
    double ph = std::arg(g);
    if (!first) {
      double d = ph - prev;
      while (d > std::numbers::pi) d -= kTwoPi;
      while (d < -std::numbers::pi) d += kTwoPi;
      ph = prev + d;
    }
    re += std::log(std::abs(g));
    im += ph;
    prev = ph;
    first = false;
  }
  return {re / n, im / n};
}

std::complex<double> ronkin_once_2d(const std::vector<NumTerm>& terms, const std::vector<long>& m,
                                    const std::vector<double>& x, int n) {
  // Unwrap the phase along the first row, then down each column.
  std::vector<double> row_phase(n), re_sum(1, 0.0);
  double re = 0.0, im = 0.0;
  std::vector<double> prev_col(n, 0.0);
  for (int k1 = 0; k1 < n; ++k1) {
    double th1 = kTwoPi * k1 / n;
    for (int k2 = 0; k2 < n; ++k2) {
      double th2 = kTwoPi * k2 / n;
      std::vector<std::complex<double>> z = {
          std::exp(x[0]) * std::complex<double>(std::cos(th1), std::sin(th1)),
          std::exp(x[1]) * std::complex<double>(std::cos(th2), std::sin(th2))};
      std::complex<double> g = eval_terms(terms, z) *
                               std::exp(std::complex<double>(-m[0] * x[0] - m[1] * x[1],
                                                             -m[0] * th1 - m[1] * th2));
      if (std::abs(g) < 1e-14) throw std::domain_error("on amoeba: |f| vanishes on the torus");
      double ph = std::arg(g);
      double ref = (k1 == 0) ? (k2 == 0 ? ph : row_phase[k2 - 1]) : prev_col[k2];
      double d = ph - ref;
      while (d > std::numbers::pi) d -= kTwoPi;
      while (d < -std::numbers::pi) d += kTwoPi;
      ph = ref + d;
      if (k1 == 0) row_phase[k2] = ph;
      prev_col[k2] = ph;
      re += std::log(std::abs(g));
      im += ph;
    }
  }
  double n2 = static_cast<double>(n) * n;
  return {re / n2, im / n2};
}

}  // namespace

std::complex<double> ronkin_numeric(const Series& f, const std::vector<long>& m,
                                    const std::vector<double>& x,
                                    const std::map<std::string, double>& params, double t,
                                    double tol) {
  auto terms = specialize(f, params, t);
  if (terms.empty()) throw std::domain_error("zero polynomial");
  size_t dim = x.size();
  if (dim < 1 || dim > 2) throw std::invalid_argument("ronkin supported in dimensions 1 and 2");
  int n = 256;
  int n_max = (dim == 1) ? 4096 : 2048;
  std::complex<double> prev;
  bool have = false;
  while (n <= n_max) {
    std::complex<double> cur = (dim == 1) ? ronkin_once_1d(terms, m[0], x[0], n)
                                          : ronkin_once_2d(terms, m, x, n);
    if (have && std::abs(cur - prev) < tol) return cur;
    prev = cur;
    have = true;
    n *= 2;
  }
  throw std::domain_error("quadrature did not converge; point may be near the amoeba");
}

AmoebaRaster amoeba_raster(const Series& f, const std::map<std::string, double>& params, double t,
                           const std::vector<double>& bbox, int resolution) {
  auto terms = specialize(f, params, t);
  AmoebaRaster r;
  if (terms.empty()) return r;
  size_t dim = terms[0].e.size();
  if (dim != 2 && dim != 1) throw std::invalid_argument("raster supported in dimensions 1 and 2");
  double x0 = bbox.size() > 0 ? bbox[0] : -3, x1 = bbox.size() > 1 ? bbox[1] : 3;
  double y0 = bbox.size() > 2 ? bbox[2] : -3, y1 = bbox.size() > 3 ? bbox[3] : 3;
  r.nx = resolution;
  r.ny = dim == 2 ? resolution : 1;
  r.threshold = 0.05;
  for (int i = 0; i < r.nx; ++i)
    r.xs.push_back(r.nx == 1 ? x0 : x0 + (x1 - x0) * i / (r.nx - 1));
  for (int j = 0; j < r.ny; ++j)
    r.ys.push_back(r.ny == 1 ? 0.0 : y0 + (y1 - y0) * j / (r.ny - 1));
  const int torus_n = 24;
  for (int j = 0; j < r.ny; ++j)
    for (int i = 0; i < r.nx; ++i) {
      std::vector<double> x = {r.xs[i]};
      if (dim == 2) x.push_back(r.ys[j]);
      // Scale by the total term magnitude so the threshold is relative.
      double total = 0.0;
      for (const auto& tm : terms) {
        double lg = std::log(std::abs(tm.c));
        for (size_t q = 0; q < dim; ++q) lg += tm.e[q] * x[q];
        total += std::exp(lg);
      }
      double best = std::numeric_limits<double>::infinity();
      std::vector<std::complex<double>> z(dim);
      for (int a = 0; a < torus_n; ++a) {
        double tha = kTwoPi * a / torus_n;
        z[0] = std::exp(x[0]) * std::complex<double>(std::cos(tha), std::sin(tha));
        if (dim == 1) {
          best = std::min(best, std::abs(eval_terms(terms, z)));
          continue;
        }
        for (int b = 0; b < torus_n; ++b) {
          double thb = kTwoPi * b / torus_n;
          z[1] = std::exp(x[1]) * std::complex<double>(std::cos(thb), std::sin(thb));
          best = std::min(best, std::abs(eval_terms(terms, z)));
        }
      }
      r.value.push_back(best / total);
    }
  return r;
}

std::string raster_svg(const AmoebaRaster& r) {
  std::ostringstream out;
  const int cell = 6;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.nx * cell << "\" height=\""
      << std::max(r.ny, 1) * cell << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int j = 0; j < r.ny; ++j)
    for (int i = 0; i < r.nx; ++i)
      if (r.value[static_cast<size_t>(j) * r.nx + i] < r.threshold)
        out << "<rect x=\"" << i * cell << "\" y=\"" << (r.ny - 1 - j) * cell << "\" width=\""
            << cell << "\" height=\"" << cell << "\" fill=\"red\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string raster_csv(const AmoebaRaster& r) {
  std::ostringstream out;
  out << "x,y,min_modulus\n";
  for (int j = 0; j < r.ny; ++j)
    for (int i = 0; i < r.nx; ++i)
      out << r.xs[i] << "," << r.ys[j] << "," << r.value[static_cast<size_t>(j) * r.nx + i]
          << "\n";
  return out.str();
}

}  // namespace tropper
