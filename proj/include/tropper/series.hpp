// Truncated multivariate Laurent series with exact coefficients.
//
// A term is a monomial in three groups of variables: integer lattice
// directions (indexed, possibly negative exponents), named scalar parameters,
// and the formal deformation parameter t.  Truncation is by t-order and,
// when a weighting is attached, by total weight.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropper/rational.hpp"

namespace tropper {

struct Monomial {
  std::vector<int> lam;           // lattice exponents, size = lambda_dim
  int t = 0;                      // exponent of t
  std::map<std::string, int> par; // parameter exponents, nonzero entries only

  bool is_constant() const { return t == 0 && par.empty() && lam_zero(); }
  bool lam_zero() const {
    for (int e : lam)
      if (e != 0) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int n) const;
  auto operator<=>(const Monomial&) const = default;
  std::string str() const;  // "1" for the empty monomial
};

// Positive weights certifying that the non-unit part of a series sits in the
// interior of a half space; used to grade fixed-point iterations and to
// truncate consistently.
struct Weighting {
  std::vector<Rational> lam;
  Rational t{1};
  std::map<std::string, Rational> par;  // parameters absent here weigh 0
  Rational cap{0};                      // terms of weight > cap are dropped

  Rational weight(const Monomial& m) const;
};

class Series {
 public:
  int lambda_dim = 0;
  int tmax = 64;  // truncation order in t
  std::optional<Weighting> wt;
  std::map<Monomial, GaussianRational> terms;

  Series() = default;
  explicit Series(int lam_dim, int t_max = 64) : lambda_dim(lam_dim), tmax(t_max) {}
  static Series constant(int lam_dim, GaussianRational c, int t_max = 64);
  static Series monomial(int lam_dim, const Monomial& m, GaussianRational c = 1, int t_max = 64);

  bool is_zero() const { return terms.empty(); }
  GaussianRational coeff(const Monomial& m) const;
  GaussianRational constant_term() const;
  void add_term(const Monomial& m, const GaussianRational& c);  // respects truncation

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const GaussianRational& c) const;
  bool operator==(const Series& o) const {
    return lambda_dim == o.lambda_dim && terms == o.terms;
  }

  // Keep terms with all lattice exponents zero.
  Series zero_exponent_part() const;
  // Keep terms with a given t-exponent, as a series without t.
  Series t_slice(int k) const;
  int min_t_order() const;  // tmax + 1 if zero

  std::string str() const;
};

// log of a series with constant term 1 whose remaining terms have positive
// t-order or positive weight under s.wt.
Series series_log(const Series& s);
// exp of a series with zero constant term, same positivity requirement.
Series series_exp(const Series& s);
// Inverse of a series with nonzero constant term.
Series series_inverse(const Series& s);
Series series_pow(const Series& s, int n);

// Exact feasibility for strict positivity: find w with rows[i] . w >= 1 for
// all i, by Fourier-Motzkin elimination.  Empty optional if infeasible.
std::optional<std::vector<Rational>> solve_positive_weights(
    const std::vector<std::vector<Rational>>& rows);

// Split s = c * unit * (1 + r) where unit is a monomial without lattice
// variables and r has strictly positive weight under the returned weighting.
// The weighting cap is set to k times the largest parameter/t weight, so the
// weight-zero data of anything derived from (1 + r) is exact through order k
// in each deformation variable.  Throws if no admissible unit exists.
struct UnitSplit {
  GaussianRational coeff;
  Monomial unit;
  Series rest;  // constant term 1, weighting attached
  Weighting wt;
};
UnitSplit split_unit(const Series& s, int k);

// Greedy factorization into binomials 1 + c * z^m * t^l * (params), peeling
// terms in increasing weight order.  Returns the factors (each a binomial
// series) and the remainder r with s = c * unit * prod(factors) * (1 + r),
// where r is zero up to the weight cap when the factorization closes.
struct BinomialFactorization {
  GaussianRational coeff;
  Monomial unit;
  std::vector<Series> factors;
  Series remainder;
  bool exact = false;  // remainder identically zero within the cap
};
BinomialFactorization factorize_binomials(const Series& s, int k);

// The unique correction g without lattice variables such that log(f + g) has
// no terms of lattice exponent zero, through the weight cap at order k.
// Requires constant term 1; g then starts in strictly positive weight.
Series normalize_slab(const Series& f, int k);

// Parse an expression over lattice variables `vars` (exponents via ^, may be
// negative), parameters (any other identifier), the reserved names t and i,
// and rational or decimal literals.  Operators: + - * / ^ and parentheses;
// division only by constants and monomials.
Series parse_series(const std::string& text, const std::vector<std::string>& vars,
                    int t_max = 64);

// Numeric evaluation at lattice variables z, parameter values, and t.
std::complex<double> eval_series(const Series& s, const std::vector<std::complex<double>>& z,
                                 const std::map<std::string, double>& params, double t);

}  // namespace tropper
