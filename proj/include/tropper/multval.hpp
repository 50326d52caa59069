// Values in a multiplicative abelian group: a root of unity times a monomial
// in declared free generators.  The root of unity is stored as its angle, a
// rational number modulo 1.
#pragma once

#include <map>
#include <string>

#include "tropper/rational.hpp"

namespace tropper {

struct MultValue {
  Rational angle;                     // in [0,1), exp(2*pi*i*angle)
  std::map<std::string, long> exps;   // free generator -> exponent, nonzero only

  MultValue() : angle(0) {}

  static MultValue root_of_unity(Rational a) {
    MultValue v;
    v.angle = normalize_angle(std::move(a));
    return v;
  }
  static MultValue generator(const std::string& name, long e = 1) {
    MultValue v;
    if (e != 0) v.exps[name] = e;
    return v;
  }

  static Rational normalize_angle(Rational a) {
    Integer num = a.get_num(), den = a.get_den();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational r = a - Rational(q);
    r.canonicalize();
    return r;
  }

  bool is_identity() const { return angle == 0 && exps.empty(); }
  bool is_finite_order() const { return exps.empty(); }

  MultValue operator*(const MultValue& o) const {
    MultValue r;
    r.angle = normalize_angle(angle + o.angle);
    r.exps = exps;
    for (const auto& [k, e] : o.exps) {
      long v = (r.exps.count(k) ? r.exps[k] : 0) + e;
      if (v == 0)
        r.exps.erase(k);
      else
        r.exps[k] = v;
    }
    return r;
  }
  MultValue pow(long n) const {
    MultValue r;
    r.angle = normalize_angle(angle * n);
    if (n != 0)
      for (const auto& [k, e] : exps) r.exps[k] = e * n;
    return r;
  }
  MultValue inverse() const { return pow(-1); }
  bool operator==(const MultValue& o) const { return angle == o.angle && exps == o.exps; }
  bool operator!=(const MultValue& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    if (angle != 0) s = "e(" + angle.get_str() + ")";
    for (const auto& [k, e] : exps) {
      if (!s.empty()) s += "*";
      s += k;
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
  }
};

}  // namespace tropper
