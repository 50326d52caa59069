// Exact coefficient arithmetic: rationals and Gaussian rationals on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropper {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
  // Accepts "p", "p/q" and plain decimal notation like "0.25".
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  Rational num;
  if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  Rational den(1);
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational r = num / den;
  r.canonicalize();
  return r;
}

// Element of Q(i).  Ring operations are exact; division requires a nonzero
// divisor.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string i_part = (im == 1) ? "i" : (im == -1 ? "-i" : im.get_str() + "*i");
    if (re == 0) return i_part;
    if (im > 0) return re.get_str() + "+" + (im == 1 ? "i" : im.get_str() + "*i");
    return re.get_str() + "-" + (im == -1 ? "i" : Rational(-im).get_str() + "*i");
  }
};

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace tropper
