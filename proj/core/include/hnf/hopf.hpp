#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hnf/indices.hpp"
#include "hnf/rational.hpp"
#include "hnf/series.hpp"

namespace hnf {

/// x^a y^b mu^n.
struct RealMonomial {
  int x = 0;
  int y = 0;
  MuExponent mu;
  friend auto operator<=>(const RealMonomial&, const RealMonomial&) = default;
  friend bool operator==(const RealMonomial&, const RealMonomial&) = default;
};

using RealPoly = std::map<RealMonomial, Rational>;

/// xdot = rhs_x, ydot = rhs_y with a rotation (y, -x) at the origin.
struct PlanarSystem {
  std::size_t m = 0;
  std::vector<std::string> param_names;
  RealPoly rhs_x;
  RealPoly rhs_y;

  /// Highest total degree in x, y and the parameters.
  int degree() const;
  friend bool operator==(const PlanarSystem&, const PlanarSystem&) = default;
};

/// Throws ParseError (SyntaxError, UndeclaredParameter, InvalidTerm,
/// LinearPartError) with 1-based line and column.
PlanarSystem parse_system(const std::string& text);

std::string render_poly(const RealPoly& p, const std::vector<std::string>& names);
std::string render_system(const PlanarSystem& s);

/// Complex coordinate z = y + i x; the result is labelled with grading g and
/// truncation degree max(degree, highest grade present).
ParamVectorField realify(const PlanarSystem& s, const Grading& g, int degree = 0);

/// Back to (xdot, ydot); inverse of realify.
PlanarSystem to_real(const ParamVectorField& v, const std::vector<std::string>& names);

std::vector<std::string> default_param_names(std::size_t m);

/// rho' = sum amplitude[(p, n)] rho^p mu^n, theta' = sum phase[(p, n)] rho^p mu^n.
struct PolarForm {
  std::map<std::pair<int, MuExponent>, Rational> amplitude;
  std::map<std::pair<int, MuExponent>, Rational> phase;
};

/// Throws NonResonantTerm outside the resonant families.
PolarForm to_polar(const ParamVectorField& v);

/// "rho' = rho*(...)" and "theta' = ..." lines.
std::string render_amplitude(const PolarForm& p, const std::vector<std::string>& names);
std::string render_phase(const PolarForm& p, const std::vector<std::string>& names);

}  // namespace hnf
