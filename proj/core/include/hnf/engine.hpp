#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hnf/indices.hpp"
#include "hnf/lie.hpp"
#include "hnf/linear_span.hpp"
#include "hnf/series.hpp"

namespace hnf {

enum class Mode { StateOnly, StatePlusParam, StatePlusTime, Full };
enum class Style { Spectral, Distorted };

const char* mode_name(Mode mode);    // "state", "state+param", "state+time", "full"
const char* style_name(Style style); // "spectral", "distorted"

struct NormalizationConfig {
  Mode mode = Mode::Full;
  Style style = Style::Spectral;
  std::optional<int> alpha;      // empty: 2*N0+1
  int degree = 0;                // 0: chosen from N0, alpha and the input
  std::optional<int> max_level;  // empty: max(2*N0+1, 4*N0-1)
};

struct GenericityReport {
  int n0 = 0;
  std::size_t m = 0;
  std::vector<std::vector<Rational>> a1;  // N0 x m
  int rank = 0;
  bool generic = false;
  std::vector<int> sigma;        // 1-based, only when generic and m == N0
  RationalMatrix linear_reparam; // mu = L nu, same condition as sigma
};

/// Spaces a distorted sweep may disturb at lower grades, and time generators
/// held back until a given level.
struct DegenerateSpaces {
  std::map<int, std::vector<BasisTerm>> spans;
  std::set<BasisTerm> pinned;  // members of spans that must still stay fixed
  std::map<int, std::vector<TimeTerm>> reserved;
  int release_level = 0;

  static DegenerateSpaces hopf(int n0, std::size_t m, const Grading& g, int degree);

  bool allows(const BasisTerm& t, const Grading& g) const;
  bool is_reserved(const TimeTerm& t, const Grading& g) const;
  /// Throws InternalError when a reserved generator can leave the spans.
  void check_module_condition(const Grading& g, int degree) const;
};

struct TransformEntry {
  int level = 0;
  int grade = 0;
  GeneratorTriple generator;
};

struct TransformLog {
  RationalMatrix linear_reparam;  // empty means identity
  std::vector<int> sigma;
  std::vector<TransformEntry> entries;
};

/// dims[n][r]: dimension of the normal form slice at grade n when
/// generators of level <= r are available.
struct LevelReport {
  int max_level = 0;
  std::map<int, std::vector<int>> dims;

  /// Least r after which no grade changes any more.
  int collapse_level() const;
};

struct NormalFormResult {
  NormalizationConfig config;  // alpha, degree and max_level resolved
  int n0 = 0;
  std::optional<GenericityReport> genericity;
  ParamVectorField input;
  ParamVectorField normal_form;
  TransformLog log;
  LevelReport pages;
  std::map<int, std::vector<BasisTerm>> complements;
};

/// Greedy complement of span(W) in the slice spanned by `basis`, in basis
/// order, with the projection onto span(W) along the complement.
class ComplementSplit {
 public:
  ComplementSplit(const std::vector<ParamVectorField>& W, const std::vector<BasisTerm>& basis);

  const std::vector<BasisTerm>& complement() const { return complement_; }
  ParamVectorField project(const ParamVectorField& x) const;

 private:
  std::vector<BasisTerm> basis_;
  std::map<BasisTerm, std::size_t> index_;
  std::vector<BasisTerm> complement_;
  LinearSpan span_;
  std::size_t w_count_ = 0;  // ids below this belong to W
};

/// Re-labels v with another parameter weight and truncation degree. Throws
/// InvalidTerm if a term would exceed the degree.
ParamVectorField regrade(const ParamVectorField& v, const Grading& g, int degree);

/// Least N0 with a nonzero X_{(N0+1)N0} at mu = 0 after first-level
/// reduction, searched up to `degree` (0: the highest parameter-free grade
/// of v). Throws NoParametricDimension.
int detect_parametric_dimension(const ParamVectorField& v, int degree = 0);

GenericityReport genericity(const ParamVectorField& v1);

NormalFormResult level_one(const ParamVectorField& v, const NormalizationConfig& cfg);
NormalFormResult hypernormalize(const ParamVectorField& v, const NormalizationConfig& cfg);
NormalFormResult distorted_normalize(const ParamVectorField& v, const NormalizationConfig& cfg);
NormalFormResult nonparametric_normalize(const ParamVectorField& v, const NormalizationConfig& cfg);
/// Any mode and style.
NormalFormResult normalize(const ParamVectorField& v, const NormalizationConfig& cfg);

struct ModeSuite {
  NormalFormResult state_only;
  NormalFormResult state_param;
  NormalFormResult state_time;
  NormalFormResult full;
};
ModeSuite mode_suite(const ParamVectorField& v, int degree);

/// Applies the linear reparametrization and then every entry in order.
ParamVectorField replay_log(const ParamVectorField& v0, const TransformLog& log, int degree);

}  // namespace hnf
