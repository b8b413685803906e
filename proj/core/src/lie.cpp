#include "hnf/lie.hpp"

#include "hnf/errors.hpp"

namespace hnf {

void PolyVectorField2C::add(int component, const Monomial& mono, const GaussRational& c) {
  if (c.is_zero()) return;
  auto& table = comp[component];
  auto [it, inserted] = table.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) table.erase(it);
  }
}

PolyVectorField2C expand_basis(const BasisTerm& t) {
  PolyVectorField2C p;
  const Monomial first{t.j, t.k, t.mu};
  const Monomial second{t.k, t.j, t.mu};
  if (t.kind == Kind::X) {
    p.add(0, first, {1, 0});
    p.add(1, second, {1, 0});
  } else {
    p.add(0, first, {0, 1});
    p.add(1, second, {0, -1});
  }
  return p;
}

PolyVectorField2C expand(const ParamVectorField& v) {
  PolyVectorField2C p;
  for (const auto& [t, c] : v.terms()) {
    const PolyVectorField2C e = expand_basis(t);
    for (int comp = 0; comp < 2; ++comp)
      for (const auto& [mono, g] : e.comp[comp]) p.add(comp, mono, c * g);
  }
  return p;
}

ParamVectorField project_to_basis(const PolyVectorField2C& p, std::size_t m, const Grading& g, int degree) {
  ParamVectorField out(m, g, degree);
  for (const auto& [mono, c] : p.comp[0]) {
    if (mono.z + mono.w < 1) throw Error(ErrorCode::NotInSpan, "constant monomial in vector field");
    if (sgn(c.re) != 0) out.add(X(mono.z, mono.w, mono.mu), c.re);
    if (sgn(c.im) != 0) out.add(Y(mono.z, mono.w, mono.mu), c.im);
  }
  // The second component is forced by the first; anything else is outside the span.
  std::size_t matched = 0;
  for (const auto& [mono, c] : p.comp[1]) {
    auto it = p.comp[0].find(Monomial{mono.w, mono.z, mono.mu});
    if (it == p.comp[0].end() || !(it->second.conj() == c))
      throw Error(ErrorCode::NotInSpan, "second component is not the conjugate mirror of the first");
    ++matched;
  }
  if (matched != p.comp[0].size())
    throw Error(ErrorCode::NotInSpan, "second component is missing terms of the first");
  return out;
}

namespace {

int mono_grade(const Monomial& mono, const Grading& g) { return mono.z + mono.w - 1 + g.alpha * mono.mu.total(); }

// out += sign * (Dv) u, restricted to grade <= D.
void add_directional(PolyVectorField2C& out, const PolyVectorField2C& u, const PolyVectorField2C& v, const Rational& sign,
                     const Grading& g, int D) {
  for (int var = 0; var < 2; ++var) {
    for (const auto& [mu_mono, gu] : u.comp[var]) {
      for (int c = 0; c < 2; ++c) {
        for (const auto& [mv, gv] : v.comp[c]) {
          const int e = var == 0 ? mv.z : mv.w;
          if (e == 0) continue;
          Monomial r{mv.z + mu_mono.z, mv.w + mu_mono.w, mv.mu + mu_mono.mu};
          if (var == 0)
            r.z -= 1;
          else
            r.w -= 1;
          if (mono_grade(r, g) > D) continue;
          out.add(c, r, (sign * e) * (gv * gu));
        }
      }
    }
  }
}

}  // namespace

ParamVectorField lie_bracket(const ParamVectorField& u, const ParamVectorField& v, int D) {
  const Grading& g = u.is_zero() ? v.grading() : u.grading();
  const std::size_t m = u.is_zero() ? v.params() : u.params();
  const int degree = std::min({D, u.degree(), v.degree()});
  if (u.is_zero() || v.is_zero()) return ParamVectorField(m, g, degree);
  return lie_bracket_expanded(expand(u), expand(v), m, g, degree);
}

ParamVectorField lie_bracket_expanded(const PolyVectorField2C& u, const PolyVectorField2C& v, std::size_t m,
                                      const Grading& g, int D) {
  PolyVectorField2C acc;
  add_directional(acc, u, v, Rational(1), g, D);
  add_directional(acc, v, u, Rational(-1), g, D);
  return project_to_basis(acc, m, g, D);
}

BasisTerm time_action(const TimeTerm& T, const BasisTerm& t) {
  return {t.kind, t.j + T.i, t.k + T.i, T.mu + t.mu};
}

ParamVectorField time_multiply(const TimeSeries& T, const ParamVectorField& v, int D) {
  ParamVectorField out(v.params(), v.grading(), std::min(D, v.degree()));
  for (const auto& [tt, tc] : T.terms()) {
    for (const auto& [t, c] : v.terms()) out.add(time_action(tt, t), tc * c);
  }
  return out;
}

namespace {

// Polynomial in an auxiliary variable s with MuPoly coefficients, s-degree <= max_order.
using SPoly = std::vector<MuPoly>;

SPoly spoly_mul(const SPoly& a, const SPoly& b, int max_order, int max_total) {
  SPoly out(std::min<std::size_t>(a.size() + b.size() - 1, max_order + 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      MuPoly prod = multiply(a[i], b[j], max_total);
      for (const auto& [e, c] : prod) add_to(out[i + j], e, c);
    }
  return out;
}

// mu^n evaluated at mu + s*h, as a polynomial in s.
SPoly substitute_monomial(const MuExponent& n, const ParamSeries& h, int max_order, int max_total) {
  const std::size_t m = n.size();
  SPoly result{MuPoly{{MuExponent(m), Rational(1)}}};
  for (std::size_t l = 0; l < m; ++l) {
    if (n[l] == 0) continue;
    SPoly factor(2);
    add_to(factor[0], MuExponent::unit(m, l), Rational(1));
    factor[1] = h.component(l);
    if (max_order == 0) factor.resize(1);
    for (int p = 0; p < n[l]; ++p) result = spoly_mul(result, factor, max_order, max_total);
  }
  return result;
}

int max_mu_total(const BasisTerm& t, const Grading& g, int D) {
  const int room = D - (t.j + t.k - 1);
  return room < 0 ? -1 : room / g.alpha;
}

// Sum over s-orders selected by `weight` (weight(k) == 0 skips order k).
template <class Weight>
ParamVectorField substitute(const ParamVectorField& v, const ParamSeries& h, int max_order, int D, Weight weight) {
  ParamVectorField out(v.params(), v.grading(), std::min(D, v.degree()));
  const Grading& g = v.grading();
  std::map<std::pair<MuExponent, int>, SPoly> cache;
  for (const auto& [t, c] : v.terms()) {
    const int max_total = max_mu_total(t, g, out.degree());
    if (max_total < 0) continue;
    auto key = std::make_pair(t.mu, max_total);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, substitute_monomial(t.mu, h, max_order, max_total)).first;
    const SPoly& sp = it->second;
    for (std::size_t k = 0; k < sp.size(); ++k) {
      const Rational w = weight(static_cast<int>(k));
      if (sgn(w) == 0) continue;
      for (const auto& [e, pc] : sp[k]) out.add({t.kind, t.j, t.k, e}, w * c * pc);
    }
  }
  return out;
}

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

ParamVectorField frechet_derivative(const ParamVectorField& v, const ParamSeries& yP, int order, int D) {
  const Rational kf = factorial(order);
  return substitute(v, yP, order, D, [&](int k) { return k == order ? kf : Rational(0); });
}

GeneratorTriple zero_generator(std::size_t m, const Grading& g, int degree) {
  return {ParamSeries(m, g, degree), TimeSeries(m, g, degree), ParamVectorField(m, g, degree)};
}

ParamVectorField apply_state(const ParamVectorField& v, const ParamVectorField& yS, int D) {
  ParamVectorField result = truncate(v, D);
  if (yS.is_zero()) return result;
  if (auto lo = yS.min_grade(); !lo || *lo < 1)
    throw Error(ErrorCode::InternalError, "state generator must have grade >= 1");
  ParamVectorField term = result;
  for (int k = 1;; ++k) {
    term = lie_bracket(yS, term, D);
    if (term.is_zero()) break;
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

ParamVectorField apply_time(const ParamVectorField& v, const TimeSeries& yT, int D) {
  ParamVectorField result = truncate(v, D);
  if (yT.is_zero()) return result;
  result += time_multiply(yT, v, D);
  return result;
}

ParamVectorField apply_reparam(const ParamVectorField& v, const ParamSeries& yP, int D) {
  if (yP.is_zero()) return truncate(v, D);
  int max_order = 0;
  for (const auto& [t, c] : v.terms()) max_order = std::max(max_order, t.mu.total());
  return substitute(v, yP, max_order, D, [](int) { return Rational(1); });
}

ParamVectorField apply_triple(const ParamVectorField& v, const GeneratorTriple& Y, int D) {
  ParamVectorField w = apply_state(v, Y.yS, D);
  w = apply_time(w, Y.yT, D);
  return apply_reparam(w, Y.yP, D);
}

ParamVectorField apply_linear_reparam(const ParamVectorField& v, const RationalMatrix& L) {
  const std::size_t m = v.params();
  if (L.size() != m) throw Error(ErrorCode::DimensionMismatch, "linear reparametrization has wrong size");
  std::vector<MuPoly> images(m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t c = 0; c < m; ++c) add_to(images[l], MuExponent::unit(m, c), L[l][c]);
  ParamVectorField out(m, v.grading(), v.degree());
  std::map<MuExponent, MuPoly> cache;
  for (const auto& [t, c] : v.terms()) {
    auto it = cache.find(t.mu);
    if (it == cache.end()) {
      MuPoly p{{MuExponent(m), Rational(1)}};
      const int total = t.mu.total();
      for (std::size_t l = 0; l < m; ++l)
        for (int r = 0; r < t.mu[l]; ++r) p = multiply(p, images[l], total);
      it = cache.emplace(t.mu, std::move(p)).first;
    }
    for (const auto& [e, pc] : it->second) out.add({t.kind, t.j, t.k, e}, c * pc);
  }
  return out;
}

ParamVectorField differential(const ParamVectorField& v, const GeneratorTriple& Y, int D) {
  ParamVectorField out(v.params(), v.grading(), std::min(D, v.degree()));
  if (!Y.yP.is_zero()) out += frechet_derivative(v, Y.yP, 1, D);
  if (!Y.yT.is_zero()) out += time_multiply(Y.yT, v, D);
  if (!Y.yS.is_zero()) out += lie_bracket(Y.yS, v, D);
  return out;
}

}  // namespace hnf
