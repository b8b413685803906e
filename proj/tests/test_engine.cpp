#include "doctest.h"
#include "families.hpp"
#include "hnf/errors.hpp"
#include "hnf/hopf.hpp"
#include "hnf/oracle.hpp"
#include "support.hpp"

using namespace hnf;
using namespace hnf::testing;

namespace {

ParamVectorField from_text(const char* text) { return realify(parse_system(text), Grading{1}); }

const char* kHopf1 =
    "params = a\n"
    "equation x = y + a*x + 2*x^2 + a*y^2 + x^2*y - 3/2*x*y^2\n"
    "equation y = -x + a*y + x*y - x^3 + y^3\n";

// the cubic amplitude vanishes at mu = 0; a multiplies rho^3 and b rho
const char* kSwapped =
    "params = a b\n"
    "equation x = y + b*x + a*x^3 + x^5 + x*y^4\n"
    "equation y = -x + b*y + a*x^2*y + y^5\n";

void check_replay(const NormalFormResult& r) {
  CHECK(replay_log(r.input, r.log, r.config.degree) == r.normal_form);
  CHECK(oracle_replay(r.input, r.log, r.config.degree) == r.normal_form);
}

}  // namespace

TEST_CASE("parametric dimension of a cubic Hopf system is 1") {
  CHECK(detect_parametric_dimension(from_text(kHopf1)) == 1);
}

TEST_CASE("parametric dimension 2 when the cubic coefficient vanishes") {
  CHECK(detect_parametric_dimension(from_text(kSwapped)) == 2);
}

TEST_CASE("no resonant amplitude term gives NoParametricDimension") {
  const auto v = from_text("params = a\nequation x = y + a*x\nequation y = -x\n");
  CHECK_THROWS_WITH_AS(detect_parametric_dimension(v), doctest::Contains("NoParametricDimension"), Error);
}

TEST_CASE("a linear part other than Y10 is rejected") {
  ParamVectorField v(0, Grading{1}, 3);
  v.add(Y(1, 0, MuExponent(0)), 2);
  v.add(X(2, 1, MuExponent(0)), 1);
  CHECK_THROWS_AS(normalize(v, {}), Error);
}

TEST_CASE("genericity of the level-one amplitude matrix") {
  const auto v = from_text(kHopf1);
  NormalizationConfig cfg;
  cfg.alpha = 3;
  const auto rep = genericity(level_one(regrade(v, Grading{3}, 10), cfg).normal_form);
  CHECK(rep.n0 == 1);
  CHECK(rep.generic);
  CHECK(rep.rank == 1);
  CHECK(rep.sigma == std::vector<int>{1});
  REQUIRE(rep.a1.size() == 1);
  CHECK(rep.a1[0][0] == 1);
}

TEST_CASE("sigma follows where the parameters enter") {
  const auto r = normalize(from_text(kSwapped), {Mode::Full, Style::Distorted, {}, 0, {}});
  REQUIRE(r.genericity);
  CHECK(r.genericity->sigma == std::vector<int>{2, 1});
  const MuExponent a = MuExponent::unit(2, 0), b = MuExponent::unit(2, 1);
  CHECK(r.normal_form.coeff(X(1, 0, b)) == 1);
  CHECK(r.normal_form.coeff(X(2, 1, a)) == 1);
  CHECK(within(r.normal_form, stab_family(2, {2, 1})));
  check_replay(r);
}

TEST_CASE("non-generic input: distorted full mode refuses, spectral state mode runs") {
  const auto v = from_text("params = a\nequation x = y + a*y^2 + x^3\nequation y = -x + x^2*y\n");
  NormalizationConfig cfg;
  cfg.style = Style::Distorted;
  CHECK_THROWS_AS(normalize(v, cfg), NotGenericError);
  cfg.style = Style::Spectral;
  cfg.mode = Mode::StateOnly;
  const auto r = normalize(v, cfg);
  REQUIRE(r.genericity);
  CHECK_FALSE(r.genericity->generic);
  check_replay(r);
}

TEST_CASE("distorted full mode needs m == N0") {
  Gen gen(31);
  const auto v = generic_input(gen, 1, 2, 10, 0.2);
  NormalizationConfig cfg;
  cfg.style = Style::Distorted;
  CHECK_THROWS_WITH_AS(normalize(v, cfg), doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("distorted style without time rescaling is an invalid configuration") {
  NormalizationConfig cfg;
  cfg.style = Style::Distorted;
  cfg.mode = Mode::StateOnly;
  CHECK_THROWS_WITH_AS(normalize(from_text(kHopf1), cfg), doctest::Contains("InvalidConfig"), Error);
}

TEST_CASE("hopf1 distorted normal form, exact coefficients") {
  NormalizationConfig cfg;
  cfg.style = Style::Distorted;
  const auto r = normalize(from_text(kHopf1), cfg);
  const MuExponent z(1), a = MuExponent::unit(1, 0);
  CHECK(r.config.alpha == 3);
  CHECK(r.config.degree == 10);
  CHECK(r.normal_form.coeff(Y(1, 0, z)) == 1);
  CHECK(r.normal_form.coeff(X(1, 0, a)) == 1);
  // first Lyapunov coefficient (f_xxx + f_xyy + g_xxy + g_yyy)/16; the quadratic
  // correction vanishes for this input
  CHECK(r.normal_form.coeff(X(2, 1, z)) == make_rational(3, 16));
  CHECK(within(r.normal_form, stab_family(1, {1})));
  CHECK(r.pages.collapse_level() == 3);
  check_replay(r);
}

TEST_CASE("a system without quadratic terms has the textbook first Lyapunov coefficient") {
  // x' = y + a x + x^3, y' = -x + a y + y^3:  (f_xxx + g_yyy)/16 = (6 + 6)/16 = 3/4
  const auto r = normalize(from_text("params = a\nequation x = y + a*x + x^3\nequation y = -x + a*y + y^3\n"), {});
  CHECK(r.normal_form.coeff(X(2, 1, MuExponent(1))) == make_rational(3, 4));
  check_replay(r);
}

TEST_CASE("pages start from the level-one dimensions and never grow") {
  Gen gen(32);
  for (int trial = 0; trial < 4; ++trial) {
    const auto v = generic_input(gen, 1, 1, 10, 0.3);
    const auto r = normalize(v, {});
    for (const auto& [n, row] : r.pages.dims)
      for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] <= row[i - 1]);
    CHECK(r.pages.max_level == 4);
  }
}

TEST_CASE("level one leaves Y10 plus resonant amplitude terms") {
  Gen gen(33);
  for (int trial = 0; trial < 6; ++trial) {
    const auto v = generic_input(gen, 1, 1 + trial % 2, 9, 0.3);
    const auto r = level_one(v, {});
    CHECK(within(r.normal_form, level_one_family()));
    check_replay(r);
  }
}

TEST_CASE("the four modes stay inside their families") {
  Gen gen(34);
  const auto v = generic_input(gen, 1, 1, 10, 0.3);
  const auto s = mode_suite(v, 10);
  const auto& sigma = s.full.genericity->sigma;
  CHECK(within(s.state_only.normal_form, state_only_family(1)));
  CHECK(within(s.state_param.normal_form, state_param_family(1, sigma)));
  CHECK(within(s.state_time.normal_form, state_time_family(1)));
  CHECK(within(s.full.normal_form, stab_family(1, sigma)));
  for (const auto* r : {&s.state_only, &s.state_param, &s.state_time, &s.full}) check_replay(*r);
}

TEST_CASE("mode suite needs parameters") {
  Gen gen(35);
  const auto v = generic_input(gen, 1, 0, 8, 0.3);
  CHECK_THROWS_AS(mode_suite(v, 8), Error);
}

TEST_CASE("parameter-free normal forms for N0 = 1, 2") {
  Gen gen(36);
  for (int n0 : {1, 2}) {
    auto v = generic_input(gen, n0, 0, 4 * n0 + 2, 0.3);
    const MuExponent z(0);
    // first-level coefficient of this term is data dependent, may be zero
    v.add(X(2 * n0 + 1, 2 * n0, z), 1);
    NormalizationConfig cfg;
    cfg.mode = Mode::StateOnly;
    const auto r = nonparametric_normalize(v, cfg);
    CHECK(sgn(r.normal_form.coeff(X(n0 + 1, n0, z))) != 0);
    CHECK(sgn(r.normal_form.coeff(X(2 * n0 + 1, 2 * n0, z))) != 0);
    check_replay(r);
  }
}

TEST_CASE("nonparametric_normalize refuses parameters") {
  CHECK_THROWS_AS(nonparametric_normalize(from_text(kHopf1), {}), Error);
}

TEST_CASE("explicit degree below an input term is refused, not truncated") {
  NormalizationConfig cfg;
  cfg.degree = 3;
  CHECK_THROWS_WITH_AS(normalize(from_text(kHopf1), cfg), doctest::Contains("InvalidTerm"), Error);
}

TEST_CASE("degenerate spaces satisfy the module condition") {
  for (int n0 : {1, 2}) {
    const Grading g{2 * n0 + 1};
    const int D = 4 * n0 + 2 * g.alpha;
    const auto spaces = DegenerateSpaces::hopf(n0, static_cast<std::size_t>(n0), g, D);
    CHECK_NOTHROW(spaces.check_module_condition(g, D));
    CHECK(spaces.release_level == 2 * n0);
  }
}

TEST_CASE("replay of an empty log is the identity") {
  Gen gen(37);
  const auto v = generic_input(gen, 1, 1, 8, 0.4);
  CHECK(replay_log(v, {}, 8) == v);
  CHECK(oracle_replay(v, {}, 8) == v);
}

TEST_CASE("property: logged generators never touch grades below their own") {
  Gen gen(38);
  const auto v = generic_input(gen, 1, 1, 10, 0.3);
  const auto r = normalize(v, {});
  for (std::size_t k = 0; k < r.log.entries.size(); ++k) {
    TransformLog prefix = r.log;
    prefix.entries.resize(k);
    const auto before = replay_log(r.input, prefix, r.config.degree);
    prefix.entries.push_back(r.log.entries[k]);
    const auto after = replay_log(r.input, prefix, r.config.degree);
    const int grade = r.log.entries[k].grade;
    CHECK(before.grade_range(0, grade - 1) == after.grade_range(0, grade - 1));
  }
}
