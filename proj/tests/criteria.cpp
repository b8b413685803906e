#include "criteria.hpp"

#include <chrono>
#include <sstream>

#include "families.hpp"
#include "hnf/hopf.hpp"
#include "hnf/oracle.hpp"
#include "hnf/report.hpp"
#include "json.hpp"
#include "support.hpp"

namespace hnf::testing {

namespace {

// Runs from criteria 5..10, replayed by criterion 11.
std::vector<NormalFormResult>& recorded() {
  static std::vector<NormalFormResult> runs;
  return runs;
}

NormalFormResult record(NormalFormResult r) {
  recorded().push_back(r);
  return r;
}

std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

ParamVectorField unit_field(std::size_t m, const Grading& g, int D, const BasisTerm& t, const Rational& c = 1) {
  ParamVectorField v(m, g, D);
  v.add(t, c);
  return v;
}

// ---------------------------------------------------------------- 1

CriterionResult frechet_identity() {
  const Grading g{1};
  const int D = 12;
  MuExponent m1sq(std::vector<int>{2, 0}), m2sq(std::vector<int>{0, 2}), m12(std::vector<int>{1, 1});
  ParamVectorField v(2, g, D);
  v.add(X(1, 0, m1sq), 1);
  v.add(X(1, 0, m2sq), 1);
  ParamSeries yP(2, g, D);
  yP.add(0, m2sq, 1);
  yP.add(1, m12, -1);
  const ParamVectorField first = frechet_derivative(v, yP, 1, D);
  const ParamVectorField second = frechet_derivative(v, yP, 2, D);
  ParamVectorField expected(2, g, D);
  expected.add(X(1, 0, MuExponent(std::vector<int>{2, 2})), 2);
  expected.add(X(1, 0, MuExponent(std::vector<int>{0, 4})), 2);
  return {first.is_zero() && second == expected, "order 1: " + first.str() + "; order 2: " + second.str()};
}

// ---------------------------------------------------------------- 2

CriterionResult complement_example() {
  const Grading g{1};
  const BasisTerm e1 = X(2, 0, MuExponent(0)), e2 = X(1, 1, MuExponent(0));
  ParamVectorField w(0, g, 4);
  w.add(e1, 1);
  w.add(e2, 1);
  const ComplementSplit split({w}, {e1, e2});
  ParamVectorField x(0, g, 4);
  x.add(e1, 1);
  x.add(e2, 2);
  ParamVectorField expected(0, g, 4);
  expected.add(e1, 2);
  expected.add(e2, 2);
  const bool ok = split.complement() == std::vector<BasisTerm>{e1} && split.project(x) == expected;
  return {ok, "complement size " + std::to_string(split.complement().size()) + ", projection " + split.project(x).str()};
}

// ---------------------------------------------------------------- 3

CriterionResult module_axioms() {
  Gen gen(3);
  int cases = 0, failures = 0;
  for (; cases < 600; ++cases) {
    const std::size_t m = static_cast<std::size_t>(gen.uniform(0, 2));
    const Grading g{gen.uniform(1, 3)};
    const int D = 10;
    const int p = gen.uniform(0, 5), q = gen.uniform(0, 5);
    const ParamVectorField u = gen.field(m, p, g, D), v = gen.field(m, q, g, D);
    // grading additivity of the bracket
    const ParamVectorField b = lie_bracket(u, v, D);
    for (const auto& [t, c] : b.terms())
      if (g.state(t) != p + q) ++failures;
    // time ring: grading, associativity and distributivity of the action
    const auto t1 = time_basis_of_grade(m, gen.uniform(1, 4), g);
    const auto t2 = time_basis_of_grade(m, gen.uniform(1, 4), g);
    if (!t1.empty() && !t2.empty()) {
      const TimeTerm a = t1[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(t1.size()) - 1))];
      const TimeTerm c = t2[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(t2.size()) - 1))];
      TimeSeries A(m, g, D), C(m, g, D), AC(m, g, D), sum(m, g, D);
      A.add(a, 1);
      C.add(c, 1);
      AC.add({a.i + c.i, a.mu + c.mu}, 1);
      sum.add(a, 1);
      sum.add(c, 1);
      if (time_multiply(A, time_multiply(C, v, D), D) != time_multiply(AC, v, D)) ++failures;
      if (time_multiply(sum, v, D) != time_multiply(A, v, D) + time_multiply(C, v, D)) ++failures;
      for (const auto& [t, coeff] : v.terms()) {
        const BasisTerm image = time_action(a, t);
        if (g.state(image) != g.time(a) + g.state(t)) ++failures;
      }
    }
    // parameter grading: D_mu(v) yP has grade grade(v) + grade(yP)
    if (m > 0) {
      const int r = g.alpha * gen.uniform(1, 3) - g.alpha;
      const ParamSeries P = gen.param(m, r, g, D);
      const ParamVectorField d = frechet_derivative(v, P, 1, D);
      for (const auto& [t, c] : d.terms())
        if (g.state(t) != q + r) ++failures;
    }
  }
  return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

// ---------------------------------------------------------------- 4

CriterionResult bracket_oracle() {
  Gen gen(4);
  const int D = 16;
  int pairs = 0, mismatches = 0;
  for (; pairs < 500; ++pairs) {
    const std::size_t m = static_cast<std::size_t>(gen.uniform(0, 2));
    const Grading g{gen.uniform(1, 3)};
    const ParamVectorField u = gen.field(m, gen.uniform(0, 8), g, D, 0.4);
    const ParamVectorField v = gen.field(m, gen.uniform(0, 8), g, D, 0.4);
    if (lie_bracket(u, v, D) != oracle_bracket(u, v, D)) ++mismatches;
  }
  int triples = 0, law_failures = 0;
  for (; triples < 200; ++triples) {
    const std::size_t m = static_cast<std::size_t>(gen.uniform(0, 2));
    const Grading g{gen.uniform(1, 3)};
    const ParamVectorField a = gen.field(m, gen.uniform(0, 3), g, D, 0.4);
    const ParamVectorField b = gen.field(m, gen.uniform(0, 3), g, D, 0.4);
    const ParamVectorField c = gen.field(m, gen.uniform(0, 3), g, D, 0.4);
    if (!(lie_bracket(a, b, D) + lie_bracket(b, a, D)).is_zero()) ++law_failures;
    const ParamVectorField jacobi = lie_bracket(a, lie_bracket(b, c, D), D) + lie_bracket(b, lie_bracket(c, a, D), D) +
                                    lie_bracket(c, lie_bracket(a, b, D), D);
    if (!jacobi.is_zero()) ++law_failures;
  }
  return {mismatches == 0 && law_failures == 0,
          std::to_string(pairs) + " pairs (" + std::to_string(mismatches) + " mismatches), " + std::to_string(triples) +
              " triples (" + std::to_string(law_failures) + " law failures)"};
}

// ---------------------------------------------------------------- 5

CriterionResult level_one_shape() {
  Gen gen(5);
  int runs = 0, bad = 0;
  for (; runs < 20; ++runs) {
    const std::size_t m = runs % 2 ? 2 : 1;
    const ParamVectorField v = generic_input(gen, 1, m, 10, 0.25);
    NormalizationConfig cfg;
    const NormalFormResult r = record(level_one(v, cfg));
    if (!within(r.normal_form, level_one_family())) ++bad;
  }
  return {bad == 0, std::to_string(runs) + " inputs, " + std::to_string(bad) + " outside the resonant amplitude family"};
}

// ---------------------------------------------------------------- 6 and 7

struct ShapeInput {
  int n0;
  ParamVectorField v;
};

std::vector<ShapeInput> shape_inputs() {
  static std::vector<ShapeInput> inputs = [] {
    Gen gen(6);
    std::vector<ShapeInput> out;
    for (int i = 0; i < 3; ++i) out.push_back({1, generic_input(gen, 1, 1, 10, 0.3)});
    for (int i = 0; i < 2; ++i) out.push_back({2, generic_input(gen, 2, 2, 18, 0.15)});
    return out;
  }();
  return inputs;
}

bool low_block_is_unit(const ParamVectorField& nf, int n0, const std::vector<int>& sigma) {
  for (int i = 0; i < n0; ++i) {
    MuExponent mu(nf.params());
    mu[static_cast<std::size_t>(sigma.at(i) - 1)] = 1;
    if (nf.coeff(X(i + 1, i, mu)) != 1) return false;
  }
  return sgn(nf.coeff(X(n0 + 1, n0, MuExponent(nf.params())))) != 0;
}

// rho' = rho*(A rho^{2N0} + sum rho^{2i-2} mu_sigma), theta' = 1 + rho^{2N0} * (...)
bool polar_stab_shape(const ParamVectorField& nf, int n0) {
  const PolarForm p = to_polar(nf);
  for (const auto& [key, c] : p.amplitude)
    if (!(key.first == 2 * n0 + 1 && key.second.is_zero()) && !(key.second.total() == 1 && key.first <= 2 * n0 - 1))
      return false;
  for (const auto& [key, c] : p.phase)
    if (!(key.first == 0 && key.second.is_zero() && c == 1) && key.first != 2 * n0) return false;
  return true;
}

CriterionResult stab_shape() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& in : shape_inputs()) {
    NormalizationConfig cfg;
    cfg.style = Style::Distorted;
    const NormalFormResult r = record(normalize(in.v, cfg));
    const auto& sigma = r.genericity->sigma;
    const bool shape = within(r.normal_form, stab_family(in.n0, sigma)) && low_block_is_unit(r.normal_form, in.n0, sigma) &&
                       polar_stab_shape(r.normal_form, in.n0);
    ok = ok && shape;
    detail << "N0=" << in.n0 << " sigma=" << show(sigma) << (shape ? " ok; " : " WRONG: " + r.normal_form.str() + "; ");
  }
  return {ok, detail.str()};
}

CriterionResult spectral_shape() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& in : shape_inputs()) {
    NormalizationConfig cfg;
    cfg.style = Style::Spectral;
    const NormalFormResult r = record(normalize(in.v, cfg));
    const auto& sigma = r.genericity->sigma;
    const bool shape =
        within(r.normal_form, spectral_family(in.n0, sigma)) && low_block_is_unit(r.normal_form, in.n0, sigma);
    ok = ok && shape;
    detail << "N0=" << in.n0 << " sigma=" << show(sigma) << (shape ? " ok; " : " WRONG: " + r.normal_form.str() + "; ");
  }
  return {ok, detail.str()};
}

// ---------------------------------------------------------------- 8

CriterionResult mode_matrix() {
  Gen gen(8);
  const int D = 10;
  const ParamVectorField v = generic_input(gen, 1, 1, D, 0.3);
  const ModeSuite s = mode_suite(v, D);
  for (const auto* r : {&s.state_only, &s.state_param, &s.state_time, &s.full}) record(*r);
  const auto& sigma = s.full.genericity->sigma;
  const Grading g = s.full.normal_form.grading();
  const Family families[4] = {state_only_family(1), state_param_family(1, sigma), state_time_family(1),
                              stab_family(1, sigma)};
  const NormalFormResult* runs[4] = {&s.state_only, &s.state_param, &s.state_time, &s.full};
  std::ostringstream detail;
  bool ok = true;
  int previous = -1;
  for (int i = 0; i < 4; ++i) {
    const bool inside = within(runs[i]->normal_form, families[i]);
    const int size = family_size(families[i], 1, g, D);
    const bool shrinks = previous < 0 || size < previous;
    ok = ok && inside && shrinks;
    detail << mode_name(runs[i]->config.mode) << ": " << (inside ? "inside" : "OUTSIDE") << " family of " << size
           << (i < 3 ? ", " : "");
    previous = size;
  }
  return {ok, detail.str()};
}

// ---------------------------------------------------------------- 9

CriterionResult nonparametric() {
  Gen gen(9);
  std::ostringstream detail;
  bool ok = true;
  for (int n0 : {1, 2}) {
    const ParamVectorField v = generic_input(gen, n0, 0, 4 * n0 + 2, 0.3);
    const MuExponent z(0);
    NormalizationConfig cfg;
    cfg.mode = Mode::StateOnly;
    const NormalFormResult state = record(nonparametric_normalize(v, cfg));
    cfg.mode = Mode::StatePlusTime;
    const NormalFormResult orbital = record(nonparametric_normalize(v, cfg));
    cfg.style = Style::Distorted;
    const NormalFormResult alternate = record(nonparametric_normalize(v, cfg));

    const PolarForm ps = to_polar(state.normal_form), po = to_polar(orbital.normal_form),
                    pa = to_polar(alternate.normal_form);
    auto amplitude_powers = [](const PolarForm& p) {
      std::vector<int> out;
      for (const auto& [key, c] : p.amplitude) out.push_back(key.first);
      return out;
    };
    const std::vector<int> two{2 * n0 + 1, 4 * n0 + 1}, one{2 * n0 + 1};
    bool phase_ok = true;
    for (const auto& [key, c] : ps.phase) phase_ok = phase_ok && key.first <= 2 * n0;
    const bool s_ok = amplitude_powers(ps) == two && phase_ok;
    const bool o_ok = amplitude_powers(po) == two && po.phase.size() == 1 && po.phase.begin()->first.first == 0;
    bool a_ok = amplitude_powers(pa) == one;
    for (const auto& [key, c] : pa.phase) a_ok = a_ok && (key.first == 0 || key.first == 2 * n0);
    ok = ok && s_ok && o_ok && a_ok;
    detail << "N0=" << n0 << " state " << show(amplitude_powers(ps)) << (s_ok ? "" : " WRONG") << ", orbital "
           << show(amplitude_powers(po)) << (o_ok ? "" : " WRONG") << ", alternate " << show(amplitude_powers(pa))
           << (a_ok ? "" : " WRONG") << "; ";
  }
  return {ok, detail.str()};
}

// ---------------------------------------------------------------- 10

CriterionResult collapse() {
  Gen gen(10);
  std::ostringstream detail;
  bool ok = true;
  for (int n0 : {1, 2}) {
    const ParamVectorField v = generic_input(gen, n0, static_cast<std::size_t>(n0), 4 * n0 + 2 * (2 * n0 + 1), 0.15);
    NormalizationConfig cfg;
    const NormalFormResult r = record(normalize(v, cfg));
    const int level = r.pages.collapse_level();
    // the last column is one level past the last one used
    bool confirmed = true;
    for (const auto& [n, row] : r.pages.dims) confirmed = confirmed && row.size() >= 2 && row.back() == row[row.size() - 2];
    const bool good = level == 2 * n0 + 1 && confirmed;
    ok = ok && good;
    detail << "N0=" << n0 << " collapse at " << level << " (expected " << 2 * n0 + 1 << ")"
           << (confirmed ? "" : ", extra sweep changed") << "; ";
  }
  return {ok, detail.str()};
}

// ---------------------------------------------------------------- 11

CriterionResult back_substitution() {
  int runs = 0, bad = 0;
  for (const auto& r : recorded()) {
    ++runs;
    if (oracle_replay(r.input, r.log, r.config.degree) != r.normal_form) ++bad;
  }
  return {runs > 0 && bad == 0, std::to_string(runs) + " runs replayed, " + std::to_string(bad) + " mismatches"};
}

// ---------------------------------------------------------------- 12

CriterionResult determinism() {
  const std::string text =
      "params = a\n"
      "equation x = y + a*x + 2*x^2 + a*y^2 + x^2*y - 3/2*x*y^2\n"
      "equation y = -x + a*y + x*y - x^3 + y^3\n";
  std::string previous[2];
  bool ok = true;
  for (int round = 0; round < 3; ++round) {
    const PlanarSystem s = parse_system(text);
    NormalizationConfig cfg;
    cfg.style = Style::Distorted;
    const NormalFormResult r = normalize(realify(s, Grading{1}), cfg);
    for (int f = 0; f < 2; ++f) {
      const std::string out =
          render_report(r, {f ? Format::Json : Format::Text, true, s.param_names});
      if (round > 0 && out != previous[f]) ok = false;
      previous[f] = out;
    }
  }
  const auto doc = nlohmann::json::parse(previous[1]);
  ok = ok && doc.at("format_version") == 1 && nlohmann::json::parse(doc.dump()) == doc;
  return {ok, "3 rounds, text " + std::to_string(previous[0].size()) + " bytes, json " +
                  std::to_string(previous[1].size()) + " bytes"};
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  auto timed = [](std::function<CriterionResult()> f) {
    return [f] {
      const auto t0 = std::chrono::steady_clock::now();
      CriterionResult r;
      try {
        r = f();
      } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return r;
    };
  };
  return {
      {1, "Frechet derivative identity", 1, timed(frechet_identity)},
      {2, "complement split example", 1, timed(complement_example)},
      {3, "module action and grading", 10, timed(module_axioms)},
      {4, "bracket against oracle", 30, timed(bracket_oracle)},
      {5, "level-one shape", 60, timed(level_one_shape)},
      {6, "distorted normal form shape", 120, timed(stab_shape)},
      {7, "spectral normal form shape", 120, timed(spectral_shape)},
      {8, "mode matrix", 120, timed(mode_matrix)},
      {9, "parameter-free normal forms", 60, timed(nonparametric)},
      {10, "collapse level", 120, timed(collapse)},
      {11, "replay of every run", 300, timed(back_substitution)},
      {12, "deterministic reports", 10, timed(determinism)},
  };
}

}  // namespace hnf::testing
