// The three pairings of a tropical 1-cycle and their assembly into the
// exponentiated period, plus monodromy and Picard sublattices.
#pragma once

#include <string>
#include <vector>

#include "tropper/cycle.hpp"
#include "tropper/multval.hpp"
#include "tropper/series.hpp"

namespace tropper {

// Ronkin pairing in exponentiated form: exp(R) = coeff * unit * exp(tail).
// Formal logs of unit constants stay symbolic, never evaluated.
struct RonkinValue {
  GaussianRational coeff = 1;
  Monomial unit;  // no lattice exponents; t and parameter powers only
  Series tail;    // lambda_dim 0, zero constant term

  bool is_trivial() const { return coeff.is_one() && unit.is_constant() && tail.is_zero(); }
  RonkinValue pow(long e) const;
  RonkinValue operator*(const RonkinValue& o) const;
  std::string str() const;            // additive form, e.g. "log(a) + 2*s"
  std::string exponentiated() const;  // "a" or "s*exp(...)"
};

struct VertexContribution {
  CrossingEvent event;
  long t_term = 0;  // <d_check, xi> * kappa
  MultValue gluing_ratio;
  RonkinValue ronkin;  // weighted by <d_check, xi>
};

struct PeriodExpression {
  MultValue gluing;
  long t_exponent = 0;
  RonkinValue ronkin;
  std::vector<VertexContribution> report;
};

// zero-exponent part of log(z^{-m} f_b), with the unit kept as a formal
// factor; exact through order k in each deformation variable.
RonkinValue ronkin_series(const Slab& slab, const std::vector<long>& m, int k);

long pair_c1(const Scene& s, const Cycle& c);
MultValue pair_gluing(const Scene& s, const Cycle& c);
RonkinValue ronkin_pairing(const Scene& s, const Cycle& c, int k);

// The Picard-Lefschetz t-coefficient; by definition the same sum as pair_c1.
long monodromy(const Scene& s, const Cycle& c);

PeriodExpression period(const Scene& s, const Cycle& c, int k);

// Sublattice of Z^N on which the c1 pairing vanishes and the gluing pairing
// is the identity, given those pairings on N generators.
struct PicardLattice {
  IntMat basis;  // columns are lattice vectors
  int rank = 0;
};
PicardLattice picard_sublattice(const std::vector<long>& c1, const std::vector<MultValue>& glue);

std::string series_to_json(const Series& s);
std::string period_to_json(const PeriodExpression& p);

}  // namespace tropper
