#include "hnf/indices.hpp"

#include <numeric>
#include <sstream>

namespace hnf {

MuExponent::MuExponent(std::vector<int> n) : n_(std::move(n)) {}

MuExponent MuExponent::unit(std::size_t m, std::size_t index) {
  MuExponent e(m);
  e.n_.at(index) = 1;
  return e;
}

int MuExponent::total() const { return std::accumulate(n_.begin(), n_.end(), 0); }

MuExponent operator+(const MuExponent& a, const MuExponent& b) {
  MuExponent r(a);
  for (std::size_t i = 0; i < r.n_.size(); ++i) r.n_[i] += b.n_.at(i);
  return r;
}

std::string MuExponent::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (n_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    if (i < names.size())
      os << names[i];
    else
      os << "mu" << (i + 1);
    if (n_[i] > 1) os << '^' << n_[i];
  }
  return os.str();
}

BasisTerm X(int j, int k, MuExponent mu) { return {Kind::X, j, k, std::move(mu)}; }
BasisTerm Y(int j, int k, MuExponent mu) { return {Kind::Y, j, k, std::move(mu)}; }

std::string BasisTerm::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << (kind == Kind::X ? 'X' : 'Y') << '_' << j << k;
  if (!mu.is_zero()) os << '*' << mu.str(names);
  return os.str();
}

std::string TimeTerm::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "Z_" << i;
  if (!mu.is_zero()) os << '*' << mu.str(names);
  return os.str();
}

int grade_state(const BasisTerm& t, const Grading& g) { return g.state(t); }
int grade_time(int i, const MuExponent& mu, const Grading& g) { return g.time(i, mu); }

std::weak_ordering mu_compare(const MuExponent& a, const MuExponent& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::weak_ordering term_compare(const BasisTerm& a, const BasisTerm& b, const Grading& g) {
  if (auto c = g.state(a) <=> g.state(b); c != 0) return c;
  if (a.kind != b.kind) return a.kind == Kind::Y ? std::weak_ordering::less : std::weak_ordering::greater;
  if (auto c = a.mu.total() <=> b.mu.total(); c != 0) return c;
  if (auto c = mu_compare(a.mu, b.mu); c != 0) return c;
  if (auto c = a.k <=> b.k; c != 0) return c;
  return a.j <=> b.j;
}

std::weak_ordering time_compare(const TimeTerm& a, const TimeTerm& b, const Grading& g) {
  if (auto c = g.time(a) <=> g.time(b); c != 0) return c;
  if (auto c = a.mu.total() <=> b.mu.total(); c != 0) return c;
  if (auto c = a.i <=> b.i; c != 0) return c;
  return mu_compare(a.mu, b.mu);
}

namespace {

void enumerate(std::size_t m, int remaining, std::size_t pos, std::vector<int>& cur, std::vector<MuExponent>& out) {
  if (pos + 1 == m) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    enumerate(m, remaining - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MuExponent> exponents_of_total(std::size_t m, int total) {
  std::vector<MuExponent> out;
  if (total < 0) return out;
  if (m == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(m, 0);
  enumerate(m, total, 0, cur, out);
  return out;
}

std::vector<BasisTerm> state_basis_of_grade(std::size_t m, int grade, const Grading& g) {
  std::vector<BasisTerm> out;
  for (Kind kind : {Kind::Y, Kind::X}) {
    for (int r = 0; g.alpha * r <= grade + 1; ++r) {
      const int deg = grade + 1 - g.alpha * r;  // j + k
      if (deg < 1) continue;
      for (const auto& mu : exponents_of_total(m, r)) {
        for (int k = 0; k <= deg; ++k) out.push_back({kind, deg - k, k, mu});
      }
      if (m == 0) break;
    }
  }
  return out;
}

std::vector<TimeTerm> time_basis_of_grade(std::size_t m, int grade, const Grading& g) {
  std::vector<TimeTerm> out;
  if (grade < 1) return out;
  for (int r = 0; g.alpha * r <= grade; ++r) {
    const int rest = grade - g.alpha * r;
    if (rest % 2 != 0) {
      if (m == 0) break;
      continue;
    }
    for (const auto& mu : exponents_of_total(m, r)) out.push_back({rest / 2, mu});
    if (m == 0) break;
  }
  return out;
}

std::vector<ParamTerm> param_basis_of_grade(std::size_t m, int grade, const Grading& g) {
  std::vector<ParamTerm> out;
  if (m == 0 || grade < 1 || (grade + g.alpha) % g.alpha != 0) return out;
  const int total = (grade + g.alpha) / g.alpha;
  for (const auto& mu : exponents_of_total(m, total)) {
    for (std::size_t l = 0; l < m; ++l) out.push_back({l, mu});
  }
  return out;
}

}  // namespace hnf
