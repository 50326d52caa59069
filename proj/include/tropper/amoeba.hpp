// Numerics on the torus over a point of the Log base: complement orders by
// root counting and winding quadrature, the complex Ronkin value, and simple
// amoeba rasters.
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "tropper/series.hpp"

namespace tropper {

struct ComplementOrder {
  std::vector<long> m;
  double residual = 0.0;
};

// Winding vector of f on the torus Log^-1(x).  Dimension 1 uses exact root
// counting (argument principle); dimension 2 uses phase-unwrapped winding
// quadrature with a lopsided shortcut.  Throws if the torus meets the zero
// set or the quadrature stays inconclusive.
ComplementOrder complement_order(const Series& f, const std::vector<double>& x,
                                 const std::map<std::string, double>& params, double t = 0.0);

// Winding numbers by quadrature alone (used as an independent cross-check of
// the root-counting path in dimension 1).
std::vector<long> winding_order(const Series& f, const std::vector<double>& x,
                                const std::map<std::string, double>& params, double t = 0.0,
                                int n_samples = 512);

// (2 pi i)^{-dim} integral of log(z^{-m} f) over the torus, by trapezoidal
// quadrature with a continuous log branch; doubles the sample count until two
// estimates agree to `tol`.
std::complex<double> ronkin_numeric(const Series& f, const std::vector<long>& m,
                                    const std::vector<double>& x,
                                    const std::map<std::string, double>& params, double t = 0.0,
                                    double tol = 1e-9);

double min_modulus_on_torus(const Series& f, const std::vector<double>& x,
                            const std::map<std::string, double>& params, double t = 0.0,
                            int n_samples = 64);

struct AmoebaRaster {
  int nx = 0, ny = 0;
  std::vector<double> xs, ys;
  std::vector<double> value;  // min |f| on the sampled torus, row major
  double threshold = 0.0;
};

AmoebaRaster amoeba_raster(const Series& f, const std::map<std::string, double>& params, double t,
                           const std::vector<double>& bbox, int resolution);
std::string raster_svg(const AmoebaRaster& r);
std::string raster_csv(const AmoebaRaster& r);

}  // namespace tropper
