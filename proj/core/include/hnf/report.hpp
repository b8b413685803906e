#pragma once

#include <string>
#include <vector>

#include "hnf/engine.hpp"

namespace hnf {

enum class Format { Text, Json };

struct ReportOptions {
  Format format = Format::Text;
  bool show_transforms = false;
  std::vector<std::string> param_names;  // empty: mu1, mu2, ...
};

/// Normal form, polar form, genericity, pages and a transform summary.
std::string render_report(const NormalFormResult& r, const ReportOptions& opt);

/// Output of the check command: N0 and the genericity data, if any.
std::string render_check(int n0, std::size_t m, const std::optional<GenericityReport>& gen, const ReportOptions& opt);

/// Grade x level dimension table with the collapse level.
std::string render_pages(const NormalFormResult& r, const ReportOptions& opt);

}  // namespace hnf
