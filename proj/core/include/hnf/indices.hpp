#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hnf {

/// Exponent vector n = (n_1..n_m) of a parameter monomial mu^n.
class MuExponent {
 public:
  MuExponent() = default;
  explicit MuExponent(std::size_t m) : n_(m, 0) {}
  explicit MuExponent(std::vector<int> n);

  static MuExponent unit(std::size_t m, std::size_t index);

  std::size_t size() const { return n_.size(); }
  int operator[](std::size_t i) const { return n_[i]; }
  int& operator[](std::size_t i) { return n_[i]; }
  const std::vector<int>& exponents() const { return n_; }

  /// |n| = sum of exponents.
  int total() const;
  bool is_zero() const { return total() == 0; }

  friend MuExponent operator+(const MuExponent& a, const MuExponent& b);
  friend auto operator<=>(const MuExponent&, const MuExponent&) = default;
  friend bool operator==(const MuExponent&, const MuExponent&) = default;

  /// "mu1^2*mu2", or "" for the zero exponent.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<int> n_;
};

enum class Kind : std::uint8_t { X, Y };

/// X_{jk} mu^n or Y_{jk} mu^n.
struct BasisTerm {
  Kind kind = Kind::X;
  int j = 0;
  int k = 0;
  MuExponent mu;

  friend auto operator<=>(const BasisTerm&, const BasisTerm&) = default;
  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;

  std::string str(const std::vector<std::string>& names = {}) const;
};

BasisTerm X(int j, int k, MuExponent mu);
BasisTerm Y(int j, int k, MuExponent mu);

/// Z_i mu^n, Z_i = (z zbar)^i, an element of the time ring basis.
struct TimeTerm {
  int i = 0;
  MuExponent mu;

  friend auto operator<=>(const TimeTerm&, const TimeTerm&) = default;
  friend bool operator==(const TimeTerm&, const TimeTerm&) = default;

  std::string str(const std::vector<std::string>& names = {}) const;
};

/// Gradings on the state space, the time ring and the parameter space, all
/// sharing the parameter weight alpha.
struct Grading {
  int alpha = 1;

  int state(const BasisTerm& t) const { return t.j + t.k - 1 + alpha * t.mu.total(); }
  int time(const TimeTerm& t) const { return 2 * t.i + alpha * t.mu.total(); }
  int time(int i, const MuExponent& mu) const { return 2 * i + alpha * mu.total(); }
  int param(const MuExponent& mu) const { return alpha * mu.total() - alpha; }
};

int grade_state(const BasisTerm& t, const Grading& g);
int grade_time(int i, const MuExponent& mu, const Grading& g);

/// Formal basis order: lower grade first; at equal grade Y before X; then
/// smaller |n|; then mu exponents with mu_1 dominating (mu1 before mu2);
/// then smaller k.
std::weak_ordering term_compare(const BasisTerm& a, const BasisTerm& b, const Grading& g);

/// Order on the time basis: lower grade first, parameter-free first, then
/// smaller i, then mu as above.
std::weak_ordering time_compare(const TimeTerm& a, const TimeTerm& b, const Grading& g);

/// Order on parameter monomials inside one grade: mu_1 dominating.
std::weak_ordering mu_compare(const MuExponent& a, const MuExponent& b);

/// All exponent vectors of length m with |n| == total, in mu_compare order.
std::vector<MuExponent> exponents_of_total(std::size_t m, int total);

/// Basis terms of one grade, in formal basis order.
std::vector<BasisTerm> state_basis_of_grade(std::size_t m, int grade, const Grading& g);

/// Time basis elements of one grade (excluding the unit Z_0 mu^0).
std::vector<TimeTerm> time_basis_of_grade(std::size_t m, int grade, const Grading& g);

/// Parameter-space basis e_l mu^n of one grade.
struct ParamTerm {
  std::size_t component = 0;
  MuExponent mu;
  friend auto operator<=>(const ParamTerm&, const ParamTerm&) = default;
  friend bool operator==(const ParamTerm&, const ParamTerm&) = default;
};
std::vector<ParamTerm> param_basis_of_grade(std::size_t m, int grade, const Grading& g);

/// True for X_{(k+1)k} mu^n and Y_{(k+1)k} mu^n, the kernel of ad_{Y_10}.
inline bool is_resonant(const BasisTerm& t) { return t.j == t.k + 1; }

}  // namespace hnf
