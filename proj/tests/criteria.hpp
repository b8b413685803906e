#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hnf::testing {

struct CriterionResult {
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<CriterionResult()> run;
};

/// Criteria 1..12 in order. Criterion 11 replays every run recorded by 5..10,
/// so the list is meant to be run front to back.
std::vector<Criterion> acceptance_criteria();

}  // namespace hnf::testing
