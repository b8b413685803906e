#pragma once

#include <map>
#include <vector>

#include "hnf/indices.hpp"
#include "hnf/rational.hpp"
#include "hnf/series.hpp"

namespace hnf {

/// Monomial z^z w^w mu^n of the complexified phase space.
struct Monomial {
  int z = 0;
  int w = 0;
  MuExponent mu;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Two-component polynomial vector field (zdot, wdot) over Q(i).
struct PolyVectorField2C {
  std::map<Monomial, GaussRational> comp[2];

  void add(int component, const Monomial& mono, const GaussRational& c);
  bool is_zero() const { return comp[0].empty() && comp[1].empty(); }
  friend bool operator==(const PolyVectorField2C& a, const PolyVectorField2C& b) {
    return a.comp[0] == b.comp[0] && a.comp[1] == b.comp[1];
  }
};

/// X_{jk} -> (z^j w^k, w^j z^k);  Y_{jk} -> (i z^j w^k, -i w^j z^k).
PolyVectorField2C expand_basis(const BasisTerm& t);
PolyVectorField2C expand(const ParamVectorField& v);

/// Inverse of expand on the X/Y span. Throws NotInSpan otherwise.
ParamVectorField project_to_basis(const PolyVectorField2C& p, std::size_t m, const Grading& g, int degree);

/// [u, v] = (Dv) u - (Du) v, truncated at grade D.
ParamVectorField lie_bracket(const ParamVectorField& u, const ParamVectorField& v, int D);
/// Same bracket on already expanded operands; lets callers reuse an expansion.
ParamVectorField lie_bracket_expanded(const PolyVectorField2C& u, const PolyVectorField2C& v, std::size_t m,
                                      const Grading& g, int D);

/// Z_i mu^{n1} . X_{jk} mu^{n2} = X_{(i+j)(i+k)} mu^{n1+n2} (same for Y).
BasisTerm time_action(const TimeTerm& T, const BasisTerm& t);
/// Module action of a whole time series, truncated at D.
ParamVectorField time_multiply(const TimeSeries& T, const ParamVectorField& v, int D);

/// order-th formal Frechet derivative of v in mu along (yP, ..., yP).
ParamVectorField frechet_derivative(const ParamVectorField& v, const ParamSeries& yP, int order, int D);

/// Near-identity generator triple (Y^P, Y^T, Y^S).
struct GeneratorTriple {
  ParamSeries yP;
  TimeSeries yT;
  ParamVectorField yS;

  bool is_zero() const { return yP.is_zero() && yT.is_zero() && yS.is_zero(); }
};

GeneratorTriple zero_generator(std::size_t m, const Grading& g, int degree);

/// exp(ad_{yS}) v.
ParamVectorField apply_state(const ParamVectorField& v, const ParamVectorField& yS, int D);
/// v + yT v.
ParamVectorField apply_time(const ParamVectorField& v, const TimeSeries& yT, int D);
/// v(mu + yP(mu)), i.e. the full Taylor sum of Frechet derivatives.
ParamVectorField apply_reparam(const ParamVectorField& v, const ParamSeries& yP, int D);
/// Composite used everywhere: state map first, then time, then parameters.
ParamVectorField apply_triple(const ParamVectorField& v, const GeneratorTriple& Y, int D);

/// Invertible linear reparametrization mu = L nu, L square of size m.
using RationalMatrix = std::vector<std::vector<Rational>>;
ParamVectorField apply_linear_reparam(const ParamVectorField& v, const RationalMatrix& L);

/// d(Y) = D_mu(v) Y^P + Y^T v + ad_{Y^S} v.
ParamVectorField differential(const ParamVectorField& v, const GeneratorTriple& Y, int D);

}  // namespace hnf
