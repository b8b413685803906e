#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hnf/engine.hpp"
#include "hnf/errors.hpp"
#include "hnf/lie.hpp"

namespace hnf::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational() {
    int num = uniform(-6, 6);
    if (num == 0) num = 1;
    return make_rational(num, uniform(1, 4));
  }

  MuExponent mu(std::size_t m, int total) {
    MuExponent e(m);
    for (int i = 0; i < total; ++i) e[static_cast<std::size_t>(uniform(0, static_cast<int>(m) - 1))] += 1;
    return e;
  }

  ParamVectorField field(std::size_t m, int grade, const Grading& g, int D, double density = 0.5) {
    ParamVectorField v(m, g, D);
    for (const auto& t : state_basis_of_grade(m, grade, g))
      if (chance(density)) v.add(t, rational());
    return v;
  }

  TimeSeries time(std::size_t m, int grade, const Grading& g, int D, double density = 0.5) {
    TimeSeries T(m, g, D);
    for (const auto& t : time_basis_of_grade(m, grade, g))
      if (chance(density)) T.add(t, rational());
    return T;
  }

  ParamSeries param(std::size_t m, int grade, const Grading& g, int D, double density = 0.5) {
    ParamSeries P(m, g, D);
    for (const auto& t : param_basis_of_grade(m, grade, g))
      if (chance(density)) P.add(t.component, t.mu, rational());
    return P;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline ParamVectorField rotation(std::size_t m, const Grading& g, int D) {
  ParamVectorField v(m, g, D);
  v.add(Y(1, 0, MuExponent(m)), 1);
  return v;
}

/// Random field with linear part Y10, parametric dimension n0 and (when
/// m >= n0) a generic mu-linear amplitude block. Candidates are drawn until
/// the engine's own detection agrees; the draw itself knows nothing about
/// normal forms beyond where the leading amplitude term sits.
inline ParamVectorField generic_input(Gen& gen, int n0, std::size_t m, int D, double density = 0.3) {
  const Grading g{2 * n0 + 1};
  for (int attempt = 0; attempt < 200; ++attempt) {
    ParamVectorField v = rotation(m, g, D);
    const MuExponent zero(m);
    for (int n = 1; n <= D; ++n)
      for (const auto& t : state_basis_of_grade(m, n, g)) {
        if (t.mu.is_zero() && n0 > 1 && n < 2 * n0) continue;
        if (gen.chance(density)) v.add(t, gen.rational());
      }
    v.set(X(n0 + 1, n0, zero), gen.rational());
    for (int i = 0; i < n0; ++i)
      for (std::size_t l = 0; l < m; ++l) v.set(X(i + 1, i, MuExponent::unit(m, l)), gen.rational());
    try {
      if (detect_parametric_dimension(v, D) != n0) continue;
      NormalizationConfig cfg;
      if (m > 0 && !genericity(level_one(v, cfg).normal_form).generic) continue;
      return v;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InternalError, "could not draw a generic input");
}

inline std::set<BasisTerm> support(const ParamVectorField& v) {
  std::set<BasisTerm> s;
  for (const auto& [t, c] : v.terms()) s.insert(t);
  return s;
}

}  // namespace hnf::testing
