#include "hnf/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hnf/errors.hpp"

namespace hnf {

int PlanarSystem::degree() const {
  int d = 0;
  for (const RealPoly* p : {&rhs_x, &rhs_y})
    for (const auto& [mono, c] : *p) d = std::max(d, mono.x + mono.y + mono.mu.total());
  return d;
}

std::vector<std::string> default_param_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("mu" + std::to_string(i + 1));
  return names;
}

// ---------------------------------------------------------------- parsing

namespace {

void accumulate(RealPoly& p, const RealMonomial& mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

class LineParser {
 public:
  LineParser(const std::string& line, int line_no, const std::vector<std::string>& names)
      : s_(line), line_(line_no), names_(names) {}

  RealPoly expression(std::size_t start) {
    pos_ = start;
    RealPoly out;
    skip();
    bool first = true;
    while (true) {
      skip();
      Rational sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail(ErrorCode::SyntaxError, "expected '+' or '-'");
      }
      if (at_end()) fail(ErrorCode::SyntaxError, "expected a term");
      const std::size_t term_start = pos_;
      auto [mono, coeff] = term();
      if (mono.x + mono.y == 0)
        fail_at(ErrorCode::InvalidTerm, term_start, "every term needs a factor x or y");
      accumulate(out, mono, sign * coeff);
      first = false;
      skip();
      if (at_end()) break;
    }
    return out;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { fail_at(code, pos_, msg); }
  [[noreturn]] void fail_at(ErrorCode code, std::size_t pos, const std::string& msg) const {
    throw ParseError(code, line_, static_cast<int>(pos) + 1, msg);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected a number");
    return s_.substr(start, pos_ - start);
  }

  std::pair<RealMonomial, Rational> term() {
    RealMonomial mono{0, 0, MuExponent(names_.size())};
    Rational coeff(1);
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational q(integer());
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          const std::size_t den_pos = pos_;
          Rational den(integer());
          if (sgn(den) == 0) fail_at(ErrorCode::SyntaxError, den_pos, "zero denominator");
          q /= den;
        }
        coeff *= q;
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string id = s_.substr(start, pos_ - start);
        skip();
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          power = std::stoi(integer());
        }
        if (id == "x") {
          mono.x += power;
        } else if (id == "y") {
          mono.y += power;
        } else {
          auto it = std::find(names_.begin(), names_.end(), id);
          if (it == names_.end()) fail_at(ErrorCode::UndeclaredParameter, start, "undeclared parameter '" + id + "'");
          mono.mu[static_cast<std::size_t>(it - names_.begin())] += power;
        }
      } else {
        fail(ErrorCode::SyntaxError, at_end() ? "unexpected end of line" : std::string("unexpected '") + peek() + "'");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {mono, coeff};
  }

  const std::string& s_;
  int line_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

bool starts_with_word(const std::string& s, std::size_t pos, const std::string& word) {
  if (s.compare(pos, word.size(), word) != 0) return false;
  const std::size_t end = pos + word.size();
  return end >= s.size() || !(std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_');
}

std::size_t skip_space(const std::string& s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

bool valid_identifier(const std::string& id) {
  if (id.empty() || !(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_')) return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

PlanarSystem parse_system(const std::string& text) {
  PlanarSystem sys;
  bool have_params = false;
  int line_x = 0, line_y = 0;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = skip_space(line, 0);
    if (pos == line.size()) continue;
    LineParser lp(line, line_no, sys.param_names);
    if (starts_with_word(line, pos, "params")) {
      if (have_params) lp.fail_at(ErrorCode::SyntaxError, pos, "parameters declared twice");
      if (line_x || line_y) lp.fail_at(ErrorCode::SyntaxError, pos, "parameters must be declared before equations");
      pos = skip_space(line, pos + 6);
      if (pos >= line.size() || line[pos] != '=') lp.fail_at(ErrorCode::SyntaxError, pos, "expected '='");
      std::istringstream names(line.substr(pos + 1));
      std::string id;
      std::size_t cursor = pos + 1;
      while (names >> id) {
        cursor = line.find(id, cursor);
        if (!valid_identifier(id)) lp.fail_at(ErrorCode::SyntaxError, cursor, "bad parameter name '" + id + "'");
        if (id == "x" || id == "y" || id == "params" || id == "equation")
          lp.fail_at(ErrorCode::SyntaxError, cursor, "reserved name '" + id + "'");
        if (std::find(sys.param_names.begin(), sys.param_names.end(), id) != sys.param_names.end())
          lp.fail_at(ErrorCode::SyntaxError, cursor, "duplicate parameter '" + id + "'");
        sys.param_names.push_back(id);
        cursor += id.size();
      }
      sys.m = sys.param_names.size();
      have_params = true;
      continue;
    }
    if (!starts_with_word(line, pos, "equation"))
      lp.fail_at(ErrorCode::SyntaxError, pos, "expected 'params' or 'equation'");
    pos = skip_space(line, pos + 8);
    const char var = pos < line.size() ? line[pos] : '\0';
    if ((var != 'x' && var != 'y') || !starts_with_word(line, pos, std::string(1, var)))
      lp.fail_at(ErrorCode::SyntaxError, pos, "expected 'x' or 'y'");
    int& seen = var == 'x' ? line_x : line_y;
    if (seen) lp.fail_at(ErrorCode::SyntaxError, pos, std::string("second equation for ") + var);
    seen = line_no;
    pos = skip_space(line, pos + 1);
    if (pos >= line.size() || line[pos] != '=') lp.fail_at(ErrorCode::SyntaxError, pos, "expected '='");
    (var == 'x' ? sys.rhs_x : sys.rhs_y) = lp.expression(pos + 1);
  }
  if (!line_x || !line_y)
    throw ParseError(ErrorCode::SyntaxError, line_no + 1, 1, std::string("missing equation for ") + (line_x ? "y" : "x"));

  const MuExponent zero(sys.m);
  auto linear = [&](const RealPoly& p, int a, int b) {
    auto it = p.find(RealMonomial{a, b, zero});
    return it == p.end() ? Rational(0) : it->second;
  };
  if (linear(sys.rhs_x, 1, 0) != 0 || linear(sys.rhs_x, 0, 1) != 1)
    throw ParseError(ErrorCode::LinearPartError, line_x, 1, "linear part of xdot at mu = 0 must be y");
  if (linear(sys.rhs_y, 1, 0) != -1 || linear(sys.rhs_y, 0, 1) != 0)
    throw ParseError(ErrorCode::LinearPartError, line_y, 1, "linear part of ydot at mu = 0 must be -x");
  return sys;
}

std::string render_poly(const RealPoly& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  // Ascending total degree, then x-power descending, then parameters.
  std::vector<std::pair<RealMonomial, Rational>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.x + a.first.y + a.first.mu.total();
    const int db = b.first.x + b.first.y + b.first.mu.total();
    if (da != db) return da < db;
    if (a.first.mu.total() != b.first.mu.total()) return a.first.mu.total() < b.first.mu.total();
    if (a.first.x != b.first.x) return a.first.x > b.first.x;
    return mu_compare(a.first.mu, b.first.mu) < 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms) {
    if (sgn(c) < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    first = false;
    const Rational a = abs(c);
    std::vector<std::string> factors;
    if (mono.x) factors.push_back(mono.x > 1 ? "x^" + std::to_string(mono.x) : "x");
    if (mono.y) factors.push_back(mono.y > 1 ? "y^" + std::to_string(mono.y) : "y");
    if (!mono.mu.is_zero()) factors.push_back(mono.mu.str(names));
    if (a != 1 || factors.empty()) factors.insert(factors.begin(), a.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::string render_system(const PlanarSystem& s) {
  std::ostringstream os;
  if (s.m > 0) {
    os << "params =";
    for (const auto& n : s.param_names) os << ' ' << n;
    os << '\n';
  }
  os << "equation x = " << render_poly(s.rhs_x, s.param_names) << '\n';
  os << "equation y = " << render_poly(s.rhs_y, s.param_names) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- realification

namespace {

// Polynomials in two complex-coordinate variables (u, v) plus parameters,
// with Gaussian rational coefficients.
struct CMono {
  int u = 0;
  int v = 0;
  MuExponent mu;
  friend auto operator<=>(const CMono&, const CMono&) = default;
  friend bool operator==(const CMono&, const CMono&) = default;
};
using CPoly = std::map<CMono, GaussRational>;

void cadd(CPoly& p, const CMono& m, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) cadd(out, {ma.u + mb.u, ma.v + mb.v, ma.mu + mb.mu}, ca * cb);
  return out;
}

CPoly cpow(const CPoly& base, int e, std::size_t m, std::map<int, CPoly>& cache) {
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  CPoly r = e == 0 ? CPoly{{CMono{0, 0, MuExponent(m)}, GaussRational{1, 0}}} : cmul(cpow(base, e - 1, m, cache), base);
  cache.emplace(e, r);
  return r;
}

// Substitutes x = X(u,v), y = Y(u,v) into a real polynomial.
CPoly substitute(const RealPoly& p, const CPoly& xs, const CPoly& ys, std::size_t m, const GaussRational& scale) {
  std::map<int, CPoly> xcache, ycache;
  CPoly out;
  for (const auto& [mono, c] : p) {
    const CPoly prod = cmul(cpow(xs, mono.x, m, xcache), cpow(ys, mono.y, m, ycache));
    for (const auto& [cm, cc] : prod) cadd(out, {cm.u, cm.v, cm.mu + mono.mu}, c * (scale * cc));
  }
  return out;
}

}  // namespace

ParamVectorField realify(const PlanarSystem& s, const Grading& g, int degree) {
  const std::size_t m = s.m;
  const MuExponent zero(m);
  // z = y + i x, w = y - i x:  x = (z - w) / (2i) = -i (z - w) / 2,  y = (z + w) / 2.
  const CPoly xs{{CMono{1, 0, zero}, {0, Rational(-1, 2)}}, {CMono{0, 1, zero}, {0, Rational(1, 2)}}};
  const CPoly ys{{CMono{1, 0, zero}, {Rational(1, 2), 0}}, {CMono{0, 1, zero}, {Rational(1, 2), 0}}};
  // zdot = ydot + i xdot.
  CPoly zdot = substitute(s.rhs_y, xs, ys, m, {1, 0});
  for (const auto& [cm, cc] : substitute(s.rhs_x, xs, ys, m, {0, 1})) cadd(zdot, cm, cc);
  int top = degree;
  for (const auto& [cm, cc] : zdot) top = std::max(top, cm.u + cm.v - 1 + g.alpha * cm.mu.total());
  ParamVectorField v(m, g, top);
  for (const auto& [cm, cc] : zdot) {
    v.add(X(cm.u, cm.v, cm.mu), cc.re);
    v.add(Y(cm.u, cm.v, cm.mu), cc.im);
  }
  return v;
}

PlanarSystem to_real(const ParamVectorField& v, const std::vector<std::string>& names) {
  const std::size_t m = v.params();
  const MuExponent zero(m);
  PlanarSystem s;
  s.m = m;
  s.param_names = names.size() == m ? names : default_param_names(m);
  // z = y + i x, w = y - i x; xdot = Im zdot, ydot = Re zdot.
  const CPoly zs{{CMono{0, 1, zero}, {1, 0}}, {CMono{1, 0, zero}, {0, 1}}};
  const CPoly ws{{CMono{0, 1, zero}, {1, 0}}, {CMono{1, 0, zero}, {0, -1}}};
  std::map<int, CPoly> zc, wc;
  CPoly zdot;
  for (const auto& [t, c] : v.terms()) {
    const GaussRational coeff = t.kind == Kind::X ? GaussRational{c, 0} : GaussRational{0, c};
    const CPoly prod = cmul(cpow(zs, t.j, m, zc), cpow(ws, t.k, m, wc));
    for (const auto& [cm, cc] : prod) cadd(zdot, {cm.u, cm.v, cm.mu + t.mu}, coeff * cc);
  }
  for (const auto& [cm, cc] : zdot) {
    const RealMonomial mono{cm.u, cm.v, cm.mu};
    accumulate(s.rhs_x, mono, cc.im);
    accumulate(s.rhs_y, mono, cc.re);
  }
  return s;
}

// ---------------------------------------------------------------- polar form

PolarForm to_polar(const ParamVectorField& v) {
  PolarForm p;
  auto add = [](auto& table, int power, const MuExponent& mu, const Rational& c) {
    auto [it, inserted] = table.try_emplace({power, mu}, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) table.erase(it);
    }
  };
  for (const auto& [t, c] : v.terms()) {
    if (!is_resonant(t)) throw Error(ErrorCode::NonResonantTerm, "term " + t.str() + " has no polar counterpart");
    if (t.kind == Kind::X)
      add(p.amplitude, 2 * t.k + 1, t.mu, c);
    else
      add(p.phase, 2 * t.k, t.mu, c);
  }
  return p;
}

namespace {

std::string monomial_text(int rho_power, const MuExponent& mu, const std::vector<std::string>& names) {
  std::vector<std::string> f;
  if (rho_power == 1) f.push_back("rho");
  if (rho_power > 1) f.push_back("rho^" + std::to_string(rho_power));
  if (!mu.is_zero()) f.push_back(mu.str(names));
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "*" : "") + f[i];
  return s;
}

std::string sum_text(const std::vector<std::tuple<int, MuExponent, Rational>>& terms,
                     const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [power, mu, c] : terms) {
    if (sgn(c) < 0)
      s += first ? "-" : " - ";
    else if (!first)
      s += " + ";
    first = false;
    const std::string mono = monomial_text(power, mu, names);
    const Rational a = abs(c);
    if (mono.empty())
      s += a.get_str();
    else
      s += (a != 1 ? a.get_str() + "*" : "") + mono;
  }
  return s;
}

std::vector<std::tuple<int, MuExponent, Rational>> sorted(const std::map<std::pair<int, MuExponent>, Rational>& t,
                                                          int shift) {
  std::vector<std::tuple<int, MuExponent, Rational>> out;
  for (const auto& [key, c] : t) out.emplace_back(key.first - shift, key.second, c);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a).total() != std::get<1>(b).total()) return std::get<1>(a).total() < std::get<1>(b).total();
    return mu_compare(std::get<1>(a), std::get<1>(b)) < 0;
  });
  return out;
}

}  // namespace

std::string render_amplitude(const PolarForm& p, const std::vector<std::string>& names) {
  if (p.amplitude.empty()) return "rho' = 0";
  return "rho' = rho*(" + sum_text(sorted(p.amplitude, 1), names) + ")";
}

std::string render_phase(const PolarForm& p, const std::vector<std::string>& names) {
  return "theta' = " + sum_text(sorted(p.phase, 0), names);
}

}  // namespace hnf
