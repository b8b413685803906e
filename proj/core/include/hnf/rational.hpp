#pragma once

#include <gmpxx.h>

#include <string>

namespace hnf {

/// Exact rational; GMP keeps every value canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Element of Q(i). Only used as scratch arithmetic when vector fields are
/// expanded into complex polynomial form.
struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator*(const Rational& s, const GaussRational& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  GaussRational conj() const { return {re, -im}; }
};

}  // namespace hnf
