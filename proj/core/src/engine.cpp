#include "hnf/engine.hpp"

#include <algorithm>

#include "hnf/errors.hpp"

namespace hnf {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::StateOnly: return "state";
    case Mode::StatePlusParam: return "state+param";
    case Mode::StatePlusTime: return "state+time";
    case Mode::Full: return "full";
  }
  return "?";
}

const char* style_name(Style style) { return style == Style::Spectral ? "spectral" : "distorted"; }

// ---------------------------------------------------------------- spaces

DegenerateSpaces DegenerateSpaces::hopf(int n0, std::size_t m, const Grading& g, int degree) {
  DegenerateSpaces d;
  const MuExponent zero(m);
  d.spans[0].push_back(Y(1, 0, zero));
  d.spans[2 * n0].push_back(X(n0 + 1, n0, zero));
  d.spans[2 * n0].push_back(Y(n0 + 1, n0, zero));
  for (int r = 1; m > 0 && 2 * n0 + g.alpha * r <= degree; ++r)
    for (const auto& mu : exponents_of_total(m, r)) d.spans[2 * n0 + g.alpha * r].push_back(Y(n0 + 1, n0, mu));
  for (int i = 1; i <= n0; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const BasisTerm t = X(i, i - 1, MuExponent::unit(m, k));
      d.spans[g.state(t)].push_back(t);
      d.pinned.insert(t);
    }
  for (int r = 0; 2 * n0 + g.alpha * r <= degree; ++r) {
    for (const auto& mu : exponents_of_total(m, r)) d.reserved[2 * n0 + g.alpha * r].push_back({n0, mu});
    if (m == 0) break;
  }
  d.release_level = 2 * n0;
  return d;
}

bool DegenerateSpaces::allows(const BasisTerm& t, const Grading& g) const {
  if (pinned.count(t)) return false;
  auto it = spans.find(g.state(t));
  return it != spans.end() && std::find(it->second.begin(), it->second.end(), t) != it->second.end();
}

bool DegenerateSpaces::is_reserved(const TimeTerm& t, const Grading& g) const {
  auto it = reserved.find(g.time(t));
  return it != reserved.end() && std::find(it->second.begin(), it->second.end(), t) != it->second.end();
}

void DegenerateSpaces::check_module_condition(const Grading& g, int degree) const {
  for (const auto& [n, terms] : reserved)
    for (const auto& z : terms)
      for (int r = 0; r < release_level; ++r)
        for (const auto& [k, span] : spans) {
          if (k >= r) break;
          for (const auto& t : span) {
            const BasisTerm image = time_action(z, t);
            if (g.state(image) > degree) continue;
            auto it = spans.find(n + k);
            if (it == spans.end() || std::find(it->second.begin(), it->second.end(), image) == it->second.end())
              throw Error(ErrorCode::InternalError, "reserved time term " + z.str() + " moves " + t.str() +
                                                        " outside the degenerate spaces");
          }
        }
}

int LevelReport::collapse_level() const {
  int collapse = 0;
  for (const auto& [n, row] : dims) {
    for (int r = static_cast<int>(row.size()) - 1; r > 0; --r)
      if (row[r] != row[r - 1]) {
        collapse = std::max(collapse, r);
        break;
      }
  }
  return collapse;
}

// ---------------------------------------------------------------- complements

ComplementSplit::ComplementSplit(const std::vector<ParamVectorField>& W, const std::vector<BasisTerm>& basis)
    : basis_(basis) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  auto to_sparse = [&](const ParamVectorField& w) {
    SparseVector s;
    for (const auto& [t, c] : w.terms()) {
      auto it = index_.find(t);
      if (it == index_.end()) throw Error(ErrorCode::InvalidConfig, "term " + t.str() + " outside the slice basis");
      s.emplace(it->second, c);
    }
    return s;
  };
  for (std::size_t i = 0; i < W.size(); ++i) span_.insert(to_sparse(W[i]), i);
  w_count_ = W.size();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (span_.insert(SparseVector{{i, Rational(1)}}, w_count_ + i)) complement_.push_back(basis_[i]);
}

ParamVectorField ComplementSplit::project(const ParamVectorField& x) const {
  SparseVector s;
  for (const auto& [t, c] : x.terms()) {
    auto it = index_.find(t);
    if (it == index_.end()) throw Error(ErrorCode::InvalidConfig, "term " + t.str() + " outside the slice basis");
    s.emplace(it->second, c);
  }
  const auto red = span_.reduce(s);
  ParamVectorField out(x.params(), x.grading(), x.degree());
  // x = (W part) + (complement part); the complement part is read off the unit ids.
  out += x;
  for (const auto& [id, c] : red.combo)
    if (id >= w_count_) out.add(basis_[id - w_count_], -c);
  return out;
}

// ---------------------------------------------------------------- sweep

namespace {

enum class Block { State, Time, Param };

struct Generator {
  Block block = Block::State;
  int grade = 0;
  int delta = 0;
  BasisTerm s;
  TimeTerm t;
  ParamTerm p;
};

struct SweepSpec {
  bool state = true;
  bool time = true;
  bool param = true;
  int max_level = 0;
  int page_level = 0;
  const DegenerateSpaces* degenerate = nullptr;
};

struct SweepOutput {
  ParamVectorField v;
  std::vector<TransformEntry> entries;
  LevelReport pages;
  std::map<int, std::vector<BasisTerm>> complements;
};

GeneratorTriple build_triple(const std::vector<Generator>& gens, const SparseVector& combo, std::size_t m,
                             const Grading& g, int degree) {
  GeneratorTriple Y = zero_generator(m, g, degree);
  for (const auto& [i, c] : combo) {
    const Generator& gen = gens[i];
    switch (gen.block) {
      case Block::State: Y.yS.add(gen.s, c); break;
      case Block::Time: Y.yT.add(gen.t, c); break;
      case Block::Param: Y.yP.add(gen.p.component, gen.p.mu, c); break;
    }
  }
  return Y;
}

class Sweep {
 public:
  Sweep(const SweepSpec& spec, std::size_t m, const Grading& g, int degree)
      : spec_(spec), m_(m), g_(g), degree_(degree) {}

  SweepOutput run(ParamVectorField v) {
    SweepOutput out;
    out.pages.max_level = spec_.page_level;
    for (int n = 1; n <= degree_; ++n) step(v, n, out);
    out.v = std::move(v);
    return out;
  }

 private:
  struct Kernel {
    SparseVector combo;  // over generator indices
    SparseVector image;  // over slice indices
    int delta = 0;
  };

  struct GradeData {
    std::vector<Generator> gens;
    std::vector<Kernel> kernel;
    std::vector<BasisTerm> slice;
    std::vector<int> dims;
    std::vector<BasisTerm> complement;
    LinearSpan solver;
  };

  std::vector<Generator> generators(int n) const {
    std::vector<Generator> gens;
    const int lowest = std::max(1, n - spec_.page_level);
    for (int p = n; p >= lowest; --p) {
      const int delta = n - p;
      if (spec_.state)
        for (const auto& t : state_basis_of_grade(m_, p, g_)) gens.push_back({Block::State, p, delta, t, {}, {}});
      if (spec_.time)
        for (const auto& t : time_basis_of_grade(m_, p, g_)) {
          if (spec_.degenerate && delta < spec_.degenerate->release_level && spec_.degenerate->is_reserved(t, g_))
            continue;
          gens.push_back({Block::Time, p, delta, {}, t, {}});
        }
      if (spec_.param && delta >= g_.alpha)
        for (const auto& t : param_basis_of_grade(m_, p, g_)) gens.push_back({Block::Param, p, delta, {}, {}, t});
    }
    return gens;
  }

  ParamVectorField effect(const Generator& gen, const ParamVectorField& v, int n,
                          std::map<int, PolyVectorField2C>& expansions) const {
    switch (gen.block) {
      case Block::State: {
        const int room = n - gen.grade;
        auto it = expansions.find(room);
        if (it == expansions.end()) it = expansions.emplace(room, expand(truncate(v, room))).first;
        return lie_bracket_expanded(expand_basis(gen.s), it->second, m_, g_, n);
      }
      case Block::Time: {
        TimeSeries T(m_, g_, degree_);
        T.add(gen.t, Rational(1));
        return time_multiply(T, v.grade_range(0, n - gen.grade), n);
      }
      case Block::Param: {
        ParamSeries P(m_, g_, degree_);
        P.add(gen.p.component, gen.p.mu, Rational(1));
        return frechet_derivative(v.grade_range(0, n - gen.grade), P, 1, n);
      }
    }
    return {};
  }

  GradeData analyse(const ParamVectorField& v, int n) const {
    GradeData data;
    data.slice = state_basis_of_grade(m_, n, g_);
    std::map<BasisTerm, std::size_t> slice_index;
    for (std::size_t i = 0; i < data.slice.size(); ++i) slice_index.emplace(data.slice[i], i);

    std::map<BasisTerm, std::size_t> rows;
    std::map<int, PolyVectorField2C> expansions;
    LinearSpan constraints;
    std::vector<SparseVector> images;
    for (const Generator& gen : generators(n)) {
      const ParamVectorField e = effect(gen, v, n, expansions);
      if (e.is_zero()) continue;
      SparseVector constraint, image;
      for (const auto& [t, c] : e.terms()) {
        const int grade = g_.state(t);
        if (grade == n) {
          image.emplace(slice_index.at(t), c);
        } else if (!(spec_.degenerate && spec_.degenerate->allows(t, g_))) {
          auto [it, fresh] = rows.try_emplace(t, rows.size());
          (void)fresh;
          constraint.emplace(it->second, c);
        }
      }
      const std::size_t id = data.gens.size();
      data.gens.push_back(gen);
      images.push_back(image);
      const auto red = constraints.reduce(constraint);
      if (!red.residual.empty()) {
        constraints.insert(constraint, id);
        continue;
      }
      Kernel k{{{id, Rational(1)}}, image, gen.delta};
      for (const auto& [j, c] : red.combo) {
        axpy(k.combo, -c, SparseVector{{j, Rational(1)}});
        axpy(k.image, -c, images[j]);
      }
      data.kernel.push_back(std::move(k));
    }

    // Kernel elements come out sorted by level, so ranks per level are prefix ranks.
    LinearSpan pages;
    std::size_t next = 0;
    for (int r = 0; r <= spec_.page_level; ++r) {
      while (next < data.kernel.size() && data.kernel[next].delta <= r) {
        pages.insert(data.kernel[next].image, next);
        ++next;
      }
      data.dims.push_back(static_cast<int>(data.slice.size() - pages.rank()));
    }

    const std::size_t unit_base = data.kernel.size();
    for (std::size_t i = 0; i < data.kernel.size(); ++i)
      if (data.kernel[i].delta <= spec_.max_level) data.solver.insert(data.kernel[i].image, i);
    for (std::size_t i = 0; i < data.slice.size(); ++i)
      if (data.solver.insert(SparseVector{{i, Rational(1)}}, unit_base + i)) data.complement.push_back(data.slice[i]);
    return data;
  }

  void step(ParamVectorField& v, int n, SweepOutput& out) {
    constexpr int kMaxPasses = 4;
    std::optional<GradeData> data;
    ParamVectorField below;
    for (int pass = 0;; ++pass) {
      if (!data || !(v.grade_range(0, n - 1) == below)) {
        data = analyse(v, n);
        below = v.grade_range(0, n - 1);
        if (pass == 0) {
          out.pages.dims[n] = data->dims;
          out.complements[n] = data->complement;
        }
      }
      SparseVector target;
      std::map<BasisTerm, std::size_t> slice_index;
      for (std::size_t i = 0; i < data->slice.size(); ++i) slice_index.emplace(data->slice[i], i);
      const ParamVectorField current = v.grade_part(n);
      for (const auto& [t, c] : current.terms()) target.emplace(slice_index.at(t), c);
      const auto red = data->solver.reduce(target);

      SparseVector combo;
      int level = 0;
      const std::size_t unit_base = data->kernel.size();
      for (const auto& [id, c] : red.combo) {
        if (id >= unit_base) continue;
        axpy(combo, -c, data->kernel[id].combo);
        level = std::max(level, data->kernel[id].delta);
      }
      if (combo.empty()) return;
      if (pass == kMaxPasses)
        throw Error(ErrorCode::InternalError, "grade " + std::to_string(n) + " did not settle");

      GeneratorTriple Y = build_triple(data->gens, combo, m_, g_, degree_);
      ParamVectorField next = apply_triple(v, Y, degree_);
      check_stage(v, next, n);
      out.entries.push_back({level, n, std::move(Y)});
      v = std::move(next);
    }
  }

  void check_stage(const ParamVectorField& before, const ParamVectorField& after, int n) const {
    const ParamVectorField diff = after.grade_range(0, n - 1) - before.grade_range(0, n - 1);
    for (const auto& [t, c] : diff.terms()) {
      if (spec_.degenerate && spec_.degenerate->allows(t, g_)) continue;
      throw Error(ErrorCode::InternalError,
                  "solving grade " + std::to_string(n) + " disturbed lower term " + t.str());
    }
  }

  SweepSpec spec_;
  std::size_t m_;
  Grading g_;
  int degree_;
};

SweepSpec spec_for(Mode mode) {
  SweepSpec s;
  s.time = mode == Mode::StatePlusTime || mode == Mode::Full;
  s.param = mode == Mode::StatePlusParam || mode == Mode::Full;
  return s;
}

bool has_param(Mode mode) { return mode == Mode::StatePlusParam || mode == Mode::Full; }

void check_linear_part(const ParamVectorField& v) {
  const ParamVectorField lin = v.grade_part(0);
  ParamVectorField expected(v.params(), v.grading(), v.degree());
  expected.add(Y(1, 0, MuExponent(v.params())), Rational(1));
  if (!(lin == expected)) throw Error(ErrorCode::BadLinearPart, "linear part at mu = 0 must be Y_10, found " + lin.str());
}

ParamVectorField mu_free_part(const ParamVectorField& v) {
  ParamVectorField out(v.params(), v.grading(), v.degree());
  for (const auto& [t, c] : v.terms())
    if (t.mu.is_zero()) out.add(t, c);
  return out;
}

RationalMatrix amplitude_block(const ParamVectorField& v, int n0) {
  const std::size_t m = v.params();
  RationalMatrix a(n0, std::vector<Rational>(m));
  for (int k = 0; k < n0; ++k)
    for (std::size_t l = 0; l < m; ++l) a[k][l] = v.coeff(X(k + 1, k, MuExponent::unit(m, l)));
  return a;
}

RationalMatrix permutation_block(const std::vector<int>& sigma, std::size_t m) {
  RationalMatrix p(sigma.size(), std::vector<Rational>(m));
  for (std::size_t k = 0; k < sigma.size(); ++k) p[k][sigma[k] - 1] = 1;
  return p;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// X with A X = B for square invertible A.
RationalMatrix solve(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::InternalError, "singular amplitude block");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (auto& x : b[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t l = 0; l < n; ++l) a[r][l] -= f * a[c][l];
      for (std::size_t l = 0; l < b[r].size(); ++l) b[r][l] -= f * b[c][l];
    }
  }
  return b;
}

int max_input_grade(const ParamVectorField& v, const Grading& g) {
  int top = 0;
  for (const auto& [t, c] : v.terms()) top = std::max(top, g.state(t));
  return top;
}

}  // namespace

// ---------------------------------------------------------------- entry points

ParamVectorField regrade(const ParamVectorField& v, const Grading& g, int degree) {
  ParamVectorField out(v.params(), g, degree);
  for (const auto& [t, c] : v.terms()) {
    if (g.state(t) > degree)
      throw Error(ErrorCode::InvalidTerm, "term " + t.str() + " has grade " + std::to_string(g.state(t)) +
                                              " above the truncation degree " + std::to_string(degree));
    out.add(t, c);
  }
  return out;
}

int detect_parametric_dimension(const ParamVectorField& v, int degree) {
  check_linear_part(v);
  const ParamVectorField free = mu_free_part(v);
  const Grading g{1};
  if (degree <= 0) degree = max_input_grade(free, g);
  ParamVectorField w = regrade(free.grade_range(0, degree), g, degree);
  SweepSpec spec = spec_for(Mode::Full);
  Sweep sweep(spec, v.params(), g, degree);
  const ParamVectorField v1 = sweep.run(std::move(w)).v;
  for (int i = 1; 2 * i <= degree; ++i)
    if (sgn(v1.coeff(X(i + 1, i, MuExponent(v.params())))) != 0) return i;
  throw Error(ErrorCode::NoParametricDimension,
              "no resonant amplitude term at mu = 0 up to degree " + std::to_string(degree));
}

GenericityReport genericity(const ParamVectorField& v1) {
  GenericityReport rep;
  rep.m = v1.params();
  const MuExponent zero(rep.m);
  for (int i = 1; 2 * i <= v1.degree(); ++i)
    if (sgn(v1.coeff(X(i + 1, i, zero))) != 0) {
      rep.n0 = i;
      break;
    }
  if (rep.n0 == 0)
    throw Error(ErrorCode::NoParametricDimension,
                "no resonant amplitude term at mu = 0 up to degree " + std::to_string(v1.degree()));
  const int n0 = rep.n0;
  const std::size_t m = rep.m;
  rep.a1.assign(n0, std::vector<Rational>(m));
  for (int k = 0; k < n0; ++k)
    for (std::size_t l = 0; l < m; ++l) rep.a1[k][l] = v1.coeff(X(k + 1, k, MuExponent::unit(m, l)));

  // Row elimination in row order; each row pivots on its smallest free column.
  std::vector<std::vector<Rational>> work = rep.a1;
  std::vector<int> pivot_col(n0, -1);
  std::vector<bool> used(m, false);
  for (int k = 0; k < n0; ++k) {
    for (int prev = 0; prev < k; ++prev) {
      if (pivot_col[prev] < 0) continue;
      const Rational f = work[k][pivot_col[prev]] / work[prev][pivot_col[prev]];
      if (sgn(f) == 0) continue;
      for (std::size_t l = 0; l < m; ++l) work[k][l] -= f * work[prev][l];
    }
    for (std::size_t l = 0; l < m; ++l)
      if (!used[l] && sgn(work[k][l]) != 0) {
        pivot_col[k] = static_cast<int>(l);
        used[l] = true;
        ++rep.rank;
        break;
      }
  }
  rep.generic = rep.rank == n0;
  if (!rep.generic || m != static_cast<std::size_t>(n0)) return rep;

  for (int k = 0; k < n0; ++k) rep.sigma.push_back(pivot_col[k] + 1);
  rep.linear_reparam = solve(rep.a1, permutation_block(rep.sigma, m));
  return rep;
}

NormalFormResult normalize(const ParamVectorField& v, const NormalizationConfig& cfg) {
  check_linear_part(v);
  const std::size_t m = v.params();
  NormalFormResult res;
  res.config = cfg;
  res.n0 = detect_parametric_dimension(v, cfg.degree);
  const int n0 = res.n0;
  const Grading g{cfg.alpha.value_or(2 * n0 + 1)};
  if (g.alpha < 1) throw Error(ErrorCode::InvalidConfig, "alpha must be positive");
  int degree = cfg.degree;
  if (degree <= 0) degree = std::max(4 * n0 + 2 * g.alpha, max_input_grade(v, g));
  res.config.alpha = g.alpha;
  res.config.degree = degree;
  res.config.max_level = cfg.max_level.value_or(std::max(2 * n0 + 1, 4 * n0 - 1));
  if (*res.config.max_level < 0) throw Error(ErrorCode::InvalidConfig, "max level must be non-negative");

  ParamVectorField w = regrade(v, g, degree);
  res.input = w;

  if (m > 0) {
    Sweep first(spec_for(Mode::Full), m, g, degree);
    const ParamVectorField v1 = first.run(w).v;
    res.genericity = genericity(v1);
  }

  const bool distorted = cfg.style == Style::Distorted;
  if (distorted && m > 0 && cfg.mode == Mode::Full) {
    if (m != static_cast<std::size_t>(n0))
      throw Error(ErrorCode::DimensionMismatch, "distorted style needs exactly N0 = " + std::to_string(n0) +
                                                    " parameters, got " + std::to_string(m));
    if (!res.genericity->generic) throw NotGenericError(res.genericity->rank, n0);
  }
  if (distorted && !(cfg.mode == Mode::Full || cfg.mode == Mode::StatePlusTime))
    throw Error(ErrorCode::InvalidConfig, "distorted style needs time rescaling (modes state+time or full)");

  SweepSpec spec = spec_for(cfg.mode);
  spec.max_level = *res.config.max_level;
  spec.page_level = spec.max_level + 1;
  DegenerateSpaces spaces;
  if (distorted) {
    spaces = DegenerateSpaces::hopf(n0, m, g, degree);
    spaces.check_module_condition(g, degree);
    spec.degenerate = &spaces;
  }
  Sweep sweep(spec, m, g, degree);

  const bool pin = res.genericity && res.genericity->generic && !res.genericity->linear_reparam.empty() &&
                   has_param(cfg.mode);
  RationalMatrix L;
  if (pin) {
    L = res.genericity->linear_reparam;
    res.log.sigma = res.genericity->sigma;
  }
  // Higher levels still move the mu-linear amplitude block, so the linear
  // reparametrization is corrected until the block is the permutation form.
  constexpr int kMaxCorrections = 4;
  for (int attempt = 0;; ++attempt) {
    SweepOutput out = sweep.run(pin ? apply_linear_reparam(w, L) : w);
    if (pin && attempt < kMaxCorrections) {
      const RationalMatrix block = amplitude_block(out.v, n0);
      const RationalMatrix target = permutation_block(res.log.sigma, m);
      if (block != target) {
        L = multiply(L, solve(block, target));
        continue;
      }
    }
    res.log.linear_reparam = L;
    res.normal_form = std::move(out.v);
    res.log.entries = std::move(out.entries);
    res.pages = std::move(out.pages);
    res.complements = std::move(out.complements);
    break;
  }
  return res;
}

NormalFormResult level_one(const ParamVectorField& v, const NormalizationConfig& cfg) {
  NormalizationConfig c = cfg;
  c.style = Style::Spectral;
  c.max_level = 0;
  check_linear_part(v);
  // No parametric dimension is needed for the first level.
  const Grading g{cfg.alpha.value_or(v.grading().alpha)};
  const int degree = cfg.degree > 0 ? cfg.degree : v.degree();
  NormalFormResult res;
  c.alpha = g.alpha;
  c.degree = degree;
  res.config = c;
  res.input = regrade(v, g, degree);
  SweepSpec spec = spec_for(cfg.mode);
  spec.max_level = 0;
  spec.page_level = 0;
  Sweep sweep(spec, v.params(), g, degree);
  SweepOutput out = sweep.run(res.input);
  res.normal_form = std::move(out.v);
  res.log.entries = std::move(out.entries);
  res.pages = std::move(out.pages);
  res.complements = std::move(out.complements);
  return res;
}

NormalFormResult hypernormalize(const ParamVectorField& v, const NormalizationConfig& cfg) {
  NormalizationConfig c = cfg;
  c.style = Style::Spectral;
  return normalize(v, c);
}

NormalFormResult distorted_normalize(const ParamVectorField& v, const NormalizationConfig& cfg) {
  NormalizationConfig c = cfg;
  c.style = Style::Distorted;
  c.mode = Mode::Full;
  return normalize(v, c);
}

NormalFormResult nonparametric_normalize(const ParamVectorField& v, const NormalizationConfig& cfg) {
  if (v.params() != 0) throw Error(ErrorCode::DimensionMismatch, "expected a parameter-free system");
  NormalFormResult res = normalize(v, cfg);
  bool resonant = false;
  for (const auto& [t, c] : res.normal_form.terms())
    if (t.kind == Kind::X && is_resonant(t)) resonant = true;
  if (!resonant) throw Error(ErrorCode::DegenerateInput, "no nonzero resonant amplitude term within the degree");
  return res;
}

ModeSuite mode_suite(const ParamVectorField& v, int degree) {
  if (v.params() == 0) throw Error(ErrorCode::DimensionMismatch, "parametric modes need at least one parameter");
  NormalizationConfig c;
  c.degree = degree;
  ModeSuite s;
  c.mode = Mode::StateOnly;
  c.style = Style::Spectral;
  s.state_only = normalize(v, c);
  c.mode = Mode::StatePlusParam;
  s.state_param = normalize(v, c);
  c.mode = Mode::StatePlusTime;
  c.style = Style::Distorted;
  s.state_time = normalize(v, c);
  c.mode = Mode::Full;
  s.full = normalize(v, c);
  return s;
}

ParamVectorField replay_log(const ParamVectorField& v0, const TransformLog& log, int degree) {
  ParamVectorField v = truncate(v0, degree);
  if (!log.linear_reparam.empty()) v = apply_linear_reparam(v, log.linear_reparam);
  for (const auto& e : log.entries) v = apply_triple(v, e.generator, degree);
  return v;
}

}  // namespace hnf
