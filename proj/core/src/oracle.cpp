#include "hnf/oracle.hpp"

#include "hnf/errors.hpp"

namespace hnf {

namespace {

struct RMono {
  int a = 0;  // power of x
  int b = 0;  // power of y
  MuExponent mu;
  friend auto operator<=>(const RMono&, const RMono&) = default;
  friend bool operator==(const RMono&, const RMono&) = default;
};
using RPoly = std::map<RMono, Rational>;

struct RealField {
  std::size_t m = 0;
  Grading g;
  int D = 0;
  RPoly fx, fy;
};

int field_grade(const RMono& t, const Grading& g) { return t.a + t.b - 1 + g.alpha * t.mu.total(); }

void put(RPoly& p, const RMono& t, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = p[t];
  slot += c;
  if (sgn(slot) == 0) p.erase(t);
}

void put_truncated(RPoly& p, const RMono& t, const Rational& c, const RealField& f) {
  if (field_grade(t, f.g) <= f.D) put(p, t, c);
}

Rational binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// i^e as a Gaussian unit.
GaussRational ipow(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

RealField to_real_field(const ParamVectorField& v, int D) {
  RealField f{v.params(), v.grading(), D, {}, {}};
  for (const auto& [t, c] : v.terms()) {
    // z^j w^k with z = y + i x, w = y - i x.
    for (int p = 0; p <= t.j; ++p)
      for (int q = 0; q <= t.k; ++q) {
        GaussRational u = (binom(t.j, p) * binom(t.k, q) * Rational(q % 2 ? -1 : 1)) * ipow(p + q);
        if (t.kind == Kind::Y) u = GaussRational{0, 1} * u;
        const RMono mono{p + q, t.j + t.k - p - q, t.mu};
        // zdot = ydot + i xdot
        put_truncated(f.fy, mono, c * u.re, f);
        put_truncated(f.fx, mono, c * u.im, f);
      }
  }
  return f;
}

ParamVectorField from_real_field(const RealField& f) {
  std::map<BasisTerm, GaussRational> acc;
  auto feed = [&](const RPoly& p, const GaussRational& unit) {
    for (const auto& [t, c] : p) {
      // x = (z - w)/(2i), y = (z + w)/2.
      Rational scale(1);
      for (int e = 0; e < t.a + t.b; ++e) scale /= 2;
      const GaussRational lead = (c * scale) * (unit * ipow(-t.a));
      for (int p1 = 0; p1 <= t.a; ++p1)
        for (int q = 0; q <= t.b; ++q) {
          const int j = t.a + t.b - p1 - q, k = p1 + q;
          const Rational w = binom(t.a, p1) * binom(t.b, q) * Rational(p1 % 2 ? -1 : 1);
          GaussRational& slot = acc[X(j, k, t.mu)];
          slot += w * lead;
        }
    }
  };
  feed(f.fy, {1, 0});
  feed(f.fx, {0, 1});
  ParamVectorField out(f.m, f.g, f.D);
  for (const auto& [t, c] : acc) {
    out.add(t, c.re);
    out.add(Y(t.j, t.k, t.mu), c.im);
  }
  return out;
}

RPoly derivative(const RPoly& p, bool in_x) {
  RPoly out;
  for (const auto& [t, c] : p) {
    const int e = in_x ? t.a : t.b;
    if (e == 0) continue;
    RMono d = t;
    (in_x ? d.a : d.b) -= 1;
    put(out, d, c * e);
  }
  return out;
}

// Product of a polynomial (a derivative, so one degree short of a field
// component) with a field component; truncation by the grade of the result.
void add_product(RPoly& out, const RPoly& p, const RPoly& q, const Rational& sign, const RealField& f) {
  for (const auto& [s, c] : p)
    for (const auto& [t, d] : q) put_truncated(out, {s.a + t.a, s.b + t.b, s.mu + t.mu}, sign * c * d, f);
}

RealField bracket(const RealField& u, const RealField& v) {
  RealField out{u.m, u.g, u.D, {}, {}};
  const RPoly* uc[2] = {&u.fx, &u.fy};
  const RPoly* vc[2] = {&v.fx, &v.fy};
  RPoly* oc[2] = {&out.fx, &out.fy};
  for (int i = 0; i < 2; ++i) {
    // (Dv u)_i - (Du v)_i
    add_product(*oc[i], derivative(*vc[i], true), u.fx, 1, out);
    add_product(*oc[i], derivative(*vc[i], false), u.fy, 1, out);
    add_product(*oc[i], derivative(*uc[i], true), v.fx, -1, out);
    add_product(*oc[i], derivative(*uc[i], false), v.fy, -1, out);
  }
  return out;
}

bool is_zero(const RealField& f) { return f.fx.empty() && f.fy.empty(); }

void accumulate(RealField& into, const RealField& f, const Rational& s) {
  for (const auto& [t, c] : f.fx) put(into.fx, t, s * c);
  for (const auto& [t, c] : f.fy) put(into.fy, t, s * c);
}

RealField state_map(const RealField& v, const RealField& y) {
  RealField result = v;
  if (is_zero(y)) return result;
  RealField term = v;
  for (int k = 1;; ++k) {
    RealField next{term.m, term.g, term.D, {}, {}};
    accumulate(next, bracket(y, term), Rational(1, k));
    term = std::move(next);
    if (is_zero(term)) break;
    accumulate(result, term, 1);
  }
  return result;
}

RPoly mul(const RPoly& p, const RPoly& q) {
  RPoly out;
  for (const auto& [s, c] : p)
    for (const auto& [t, d] : q) put(out, {s.a + t.a, s.b + t.b, s.mu + t.mu}, c * d);
  return out;
}

RealField time_map(const RealField& v, const TimeSeries& T) {
  RealField result = v;
  const MuExponent zero(v.m);
  const RPoly r2{{RMono{2, 0, zero}, Rational(1)}, {RMono{0, 2, zero}, Rational(1)}};
  for (const auto& [z, c] : T.terms()) {
    RPoly factor{{RMono{0, 0, z.mu}, c}};
    for (int e = 0; e < z.i; ++e) factor = mul(factor, r2);
    for (const auto& [t, d] : mul(factor, v.fx)) put_truncated(result.fx, t, d, v);
    for (const auto& [t, d] : mul(factor, v.fy)) put_truncated(result.fy, t, d, v);
  }
  return result;
}

using MuMap = std::map<MuExponent, Rational>;

MuMap mu_mul(const MuMap& p, const MuMap& q, int max_total) {
  MuMap out;
  for (const auto& [s, c] : p)
    for (const auto& [t, d] : q) {
      const MuExponent e = s + t;
      if (e.total() > max_total) continue;
      Rational& slot = out[e];
      slot += c * d;
      if (sgn(slot) == 0) out.erase(e);
    }
  return out;
}

// mu_l -> images[l](mu) in every coefficient.
RealField substitute_mu(const RealField& v, const std::vector<MuMap>& images) {
  RealField out{v.m, v.g, v.D, {}, {}};
  for (auto [src, dst] : {std::pair{&v.fx, &out.fx}, std::pair{&v.fy, &out.fy}})
    for (const auto& [t, c] : *src) {
      // largest |n| that keeps the x,y part within the degree
      const int room = v.g.alpha > 0 ? (v.D - t.a - t.b + 1) / v.g.alpha : 0;
      MuMap p{{MuExponent(v.m), Rational(1)}};
      for (std::size_t l = 0; l < v.m; ++l)
        for (int e = 0; e < t.mu[l]; ++e) p = mu_mul(p, images[l], room);
      for (const auto& [mu, d] : p) put_truncated(*dst, {t.a, t.b, mu}, c * d, v);
    }
  return out;
}

RealField reparam_map(const RealField& v, const ParamSeries& P) {
  if (P.is_zero()) return v;
  std::vector<MuMap> images(v.m);
  for (std::size_t l = 0; l < v.m; ++l) {
    images[l] = P.component(l);
    Rational& slot = images[l][MuExponent::unit(v.m, l)];
    slot += 1;
    if (sgn(slot) == 0) images[l].erase(MuExponent::unit(v.m, l));
  }
  return substitute_mu(v, images);
}

RealField linear_map(const RealField& v, const RationalMatrix& L) {
  std::vector<MuMap> images(v.m);
  for (std::size_t l = 0; l < v.m; ++l)
    for (std::size_t c = 0; c < v.m; ++c)
      if (sgn(L[l][c]) != 0) images[l][MuExponent::unit(v.m, c)] = L[l][c];
  return substitute_mu(v, images);
}

}  // namespace

ParamVectorField oracle_bracket(const ParamVectorField& u, const ParamVectorField& v, int D) {
  return from_real_field(bracket(to_real_field(u, D), to_real_field(v, D)));
}

ParamVectorField oracle_replay(const ParamVectorField& v0, const TransformLog& log, int D) {
  RealField f = to_real_field(v0, D);
  if (!log.linear_reparam.empty()) {
    if (log.linear_reparam.size() != f.m) throw Error(ErrorCode::DimensionMismatch, "reparametrization size");
    f = linear_map(f, log.linear_reparam);
  }
  for (const auto& e : log.entries) {
    f = state_map(f, to_real_field(e.generator.yS, D));
    f = time_map(f, e.generator.yT);
    f = reparam_map(f, e.generator.yP);
  }
  return from_real_field(f);
}

DenseSolution dense_solve_grade(const ParamVectorField& v, int grade, const std::vector<BasisTerm>& removable) {
  const Grading& g = v.grading();
  const std::size_t m = v.params();
  const int D = std::max(v.degree(), grade);
  const std::vector<BasisTerm> slice = state_basis_of_grade(m, grade, g);
  std::map<BasisTerm, std::size_t> row_of;
  for (std::size_t i = 0; i < slice.size(); ++i) row_of.emplace(slice[i], i);

  const RealField vf = to_real_field(v, D);
  const std::size_t rows = slice.size(), gens = removable.size();
  // Columns: generator images, then unit vectors of the slice, then the target.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(gens + rows + 1));
  for (std::size_t c = 0; c < gens; ++c) {
    ParamVectorField t(m, g, D);
    t.add(removable[c], 1);
    const ParamVectorField image = from_real_field(bracket(to_real_field(t, D), vf));
    for (const auto& [term, coeff] : image.terms())
      if (g.state(term) == grade) a[row_of.at(term)][c] = coeff;
  }
  for (std::size_t r = 0; r < rows; ++r) a[r][gens + r] = 1;
  for (const auto& [term, coeff] : v.terms())
    if (g.state(term) == grade) a[row_of.at(term)][gens + rows] = coeff;

  // Reduced row echelon form; pivots in column order decide which unit
  // vectors form the complement.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < gens + rows && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }

  DenseSolution out{{}, ParamVectorField(m, g, D)};
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    const std::size_t c = pivot_col[i];
    const Rational& x = a[i][gens + rows];
    if (sgn(x) == 0) continue;
    if (c < gens)
      out.generator[removable[c]] = x;
    else
      out.residual.add(slice[c - gens], x);
  }
  return out;
}

bool replay_matches(const NormalFormResult& r) {
  const int D = r.config.degree;
  return oracle_replay(r.input, r.log, D) == r.normal_form && replay_log(r.input, r.log, D) == r.normal_form;
}

}  // namespace hnf
