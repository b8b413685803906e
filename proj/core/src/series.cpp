#include "hnf/series.hpp"

#include <algorithm>
#include <sstream>

namespace hnf {

void add_to(MuPoly& p, const MuExponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

MuPoly multiply(const MuPoly& a, const MuPoly& b, int max_total) {
  MuPoly out;
  for (const auto& [ea, ca] : a) {
    const int ta = ea.total();
    if (ta > max_total) continue;
    for (const auto& [eb, cb] : b) {
      if (ta + eb.total() > max_total) continue;
      add_to(out, ea + eb, ca * cb);
    }
  }
  return out;
}

namespace {

template <class Map, class Key>
void accumulate(Map& table, const Key& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = table.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) table.erase(it);
  }
}

std::string coeff_prefix(const Rational& c, bool first) {
  std::ostringstream os;
  if (sgn(c) < 0)
    os << (first ? "-" : " - ");
  else if (!first)
    os << " + ";
  Rational a = abs(c);
  if (a != 1) os << a.get_str() << '*';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

void ParamVectorField::add(const BasisTerm& t, const Rational& c) {
  if (grading_.state(t) > degree_) return;
  accumulate(terms_, t, c);
}

void ParamVectorField::set(const BasisTerm& t, const Rational& c) {
  terms_.erase(t);
  add(t, c);
}

Rational ParamVectorField::coeff(const BasisTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamVectorField ParamVectorField::grade_part(int n) const { return grade_range(n, n); }

ParamVectorField ParamVectorField::grade_range(int lo, int hi) const {
  ParamVectorField out(m_, grading_, degree_);
  for (const auto& [t, c] : terms_) {
    const int g = grading_.state(t);
    if (g >= lo && g <= hi) out.terms_.emplace(t, c);
  }
  return out;
}

std::optional<int> ParamVectorField::min_grade() const {
  std::optional<int> best;
  for (const auto& [t, c] : terms_) {
    const int g = grading_.state(t);
    if (!best || g < *best) best = g;
  }
  return best;
}

std::optional<int> ParamVectorField::max_grade() const {
  std::optional<int> best;
  for (const auto& [t, c] : terms_) {
    const int g = grading_.state(t);
    if (!best || g > *best) best = g;
  }
  return best;
}

ParamVectorField ParamVectorField::with_degree(int degree) const {
  ParamVectorField out(m_, grading_, degree);
  for (const auto& [t, c] : terms_) out.add(t, c);
  return out;
}

std::vector<std::pair<BasisTerm, Rational>> ParamVectorField::ordered() const {
  std::vector<std::pair<BasisTerm, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return term_compare(a.first, b.first, grading_) < 0; });
  return out;
}

ParamVectorField& ParamVectorField::operator+=(const ParamVectorField& o) {
  degree_ = std::min(degree_, o.degree_);
  if (m_ == 0 && terms_.empty()) m_ = o.m_;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (grading_.state(it->first) > degree_)
      it = terms_.erase(it);
    else
      ++it;
  }
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

ParamVectorField& ParamVectorField::operator-=(const ParamVectorField& o) {
  ParamVectorField neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

ParamVectorField& ParamVectorField::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

std::string ParamVectorField::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : ordered()) {
    out += coeff_prefix(c, first) + t.str(names);
    first = false;
  }
  return out;
}

ParamVectorField truncate(const ParamVectorField& v, int D) { return v.with_degree(std::min(D, v.degree())); }

// ---------------------------------------------------------------------------

void TimeSeries::add(const TimeTerm& t, const Rational& c) {
  if (grading_.time(t) > degree_) return;
  accumulate(terms_, t, c);
}

Rational TimeSeries::coeff(const TimeTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> TimeSeries::min_grade() const {
  std::optional<int> best;
  for (const auto& [t, c] : terms_) {
    const int g = grading_.time(t);
    if (!best || g < *best) best = g;
  }
  return best;
}

std::vector<std::pair<TimeTerm, Rational>> TimeSeries::ordered() const {
  std::vector<std::pair<TimeTerm, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return time_compare(a.first, b.first, grading_) < 0; });
  return out;
}

std::string TimeSeries::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : ordered()) {
    out += coeff_prefix(c, first) + t.str(names);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

bool ParamSeries::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const MuPoly& p) { return p.empty(); });
}

void ParamSeries::add(std::size_t l, const MuExponent& e, const Rational& c) {
  if (grading_.param(e) > degree_) return;
  add_to(components_.at(l), e, c);
}

std::optional<int> ParamSeries::min_grade() const {
  std::optional<int> best;
  for (const auto& comp : components_) {
    for (const auto& [e, c] : comp) {
      const int g = grading_.param(e);
      if (!best || g < *best) best = g;
    }
  }
  return best;
}

std::string ParamSeries::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t l = 0; l < components_.size(); ++l) {
    if (l) os << ", ";
    if (components_[l].empty()) {
      os << '0';
      continue;
    }
    std::vector<std::pair<MuExponent, Rational>> terms(components_[l].begin(), components_[l].end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
      return mu_compare(a.first, b.first) < 0;
    });
    bool first = true;
    for (const auto& [e, c] : terms) {
      os << coeff_prefix(c, first) << e.str(names);
      first = false;
    }
  }
  os << ')';
  return os.str();
}

}  // namespace hnf
