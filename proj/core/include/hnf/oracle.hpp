#pragma once

#include <map>
#include <vector>

#include "hnf/engine.hpp"

namespace hnf {

// Slow reference implementations. They work on the real components
// (xdot, ydot) of a field and never call into the Lie-algebra code.

/// [u, v] = (Dv) u - (Du) v computed by differentiating real polynomials.
ParamVectorField oracle_bracket(const ParamVectorField& u, const ParamVectorField& v, int D);

/// Replays a log by direct substitution: exp of the bracket series for the
/// state part, multiplication by (x^2 + y^2)^i for time, mu -> mu + yP(mu).
ParamVectorField oracle_replay(const ParamVectorField& v0, const TransformLog& log, int D);

/// Both replays of r.log from r.input reproduce r.normal_form.
bool replay_matches(const NormalFormResult& r);

struct DenseSolution {
  std::map<BasisTerm, Rational> generator;
  ParamVectorField residual;
};

/// Solves  v_grade = sum g_t [t, v]_grade + residual  with the residual
/// supported on the greedy complement of the images (slice in formal
/// order) by Gauss-Jordan elimination, free generator coefficients zero.
DenseSolution dense_solve_grade(const ParamVectorField& v, int grade, const std::vector<BasisTerm>& removable);

}  // namespace hnf
