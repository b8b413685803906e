#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnf/indices.hpp"
#include "hnf/rational.hpp"

namespace hnf {

/// Polynomial in the parameters, coefficient table mu^n -> q.
using MuPoly = std::map<MuExponent, Rational>;

void add_to(MuPoly& p, const MuExponent& e, const Rational& c);
/// Product with every monomial of |n| > max_total dropped.
MuPoly multiply(const MuPoly& a, const MuPoly& b, int max_total);

/// Truncated combination of X_{jk} mu^n / Y_{jk} mu^n. Terms above the
/// truncation degree are silently dropped, zero coefficients never stored.
class ParamVectorField {
 public:
  using Table = std::map<BasisTerm, Rational>;

  ParamVectorField() = default;
  ParamVectorField(std::size_t m, Grading g, int degree) : m_(m), grading_(g), degree_(degree) {}

  std::size_t params() const { return m_; }
  const Grading& grading() const { return grading_; }
  int degree() const { return degree_; }
  const Table& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisTerm& t, const Rational& c);
  void set(const BasisTerm& t, const Rational& c);
  Rational coeff(const BasisTerm& t) const;

  /// Homogeneous component of grade n.
  ParamVectorField grade_part(int n) const;
  /// Terms of grade in [lo, hi].
  ParamVectorField grade_range(int lo, int hi) const;
  std::optional<int> min_grade() const;
  std::optional<int> max_grade() const;

  /// Same field with a different truncation label; lowering drops terms.
  ParamVectorField with_degree(int degree) const;

  /// Terms in formal basis order.
  std::vector<std::pair<BasisTerm, Rational>> ordered() const;

  ParamVectorField& operator+=(const ParamVectorField& o);
  ParamVectorField& operator-=(const ParamVectorField& o);
  ParamVectorField& operator*=(const Rational& s);
  friend ParamVectorField operator+(ParamVectorField a, const ParamVectorField& b) { return a += b; }
  friend ParamVectorField operator-(ParamVectorField a, const ParamVectorField& b) { return a -= b; }
  friend ParamVectorField operator*(const Rational& s, ParamVectorField a) { return a *= s; }
  friend bool operator==(const ParamVectorField& a, const ParamVectorField& b) { return a.terms_ == b.terms_; }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t m_ = 0;
  Grading grading_{};
  int degree_ = 0;
  Table terms_;
};

/// Drops every term of grade > D.
ParamVectorField truncate(const ParamVectorField& v, int D);

/// Element of the time ring without its constant term: sum T_{i,n} Z_i mu^n.
class TimeSeries {
 public:
  using Table = std::map<TimeTerm, Rational>;

  TimeSeries() = default;
  TimeSeries(std::size_t m, Grading g, int degree) : m_(m), grading_(g), degree_(degree) {}

  std::size_t params() const { return m_; }
  const Grading& grading() const { return grading_; }
  int degree() const { return degree_; }
  const Table& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TimeTerm& t, const Rational& c);
  Rational coeff(const TimeTerm& t) const;
  std::optional<int> min_grade() const;
  std::vector<std::pair<TimeTerm, Rational>> ordered() const;

  friend bool operator==(const TimeSeries& a, const TimeSeries& b) { return a.terms_ == b.terms_; }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t m_ = 0;
  Grading grading_{};
  int degree_ = 0;
  Table terms_;
};

/// Near-identity parameter generator: component l holds Y^P_l(mu).
class ParamSeries {
 public:
  ParamSeries() = default;
  ParamSeries(std::size_t m, Grading g, int degree) : grading_(g), degree_(degree), components_(m) {}

  std::size_t params() const { return components_.size(); }
  const Grading& grading() const { return grading_; }
  int degree() const { return degree_; }
  const std::vector<MuPoly>& components() const { return components_; }
  const MuPoly& component(std::size_t l) const { return components_.at(l); }
  bool is_zero() const;

  void add(std::size_t l, const MuExponent& e, const Rational& c);
  std::optional<int> min_grade() const;

  friend bool operator==(const ParamSeries& a, const ParamSeries& b) { return a.components_ == b.components_; }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  Grading grading_{};
  int degree_ = 0;
  std::vector<MuPoly> components_;
};

}  // namespace hnf
