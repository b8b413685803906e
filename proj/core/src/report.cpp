#include "hnf/report.hpp"

#include <iomanip>
#include <sstream>

#include "hnf/errors.hpp"
#include "hnf/hopf.hpp"
#include "json.hpp"

namespace hnf {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> names_for(const ReportOptions& opt, std::size_t m) {
  return opt.param_names.size() == m ? opt.param_names : default_param_names(m);
}

ordered_json mu_json(const MuExponent& mu) { return mu.exponents(); }

ordered_json field_json(const ParamVectorField& v) {
  ordered_json out = ordered_json::array();
  for (const auto& [t, c] : v.ordered())
    out.push_back({{"kind", t.kind == Kind::X ? "X" : "Y"}, {"j", t.j}, {"k", t.k}, {"mu", mu_json(t.mu)}, {"coeff", c.get_str()}});
  return out;
}

ordered_json matrix_json(const RationalMatrix& a) {
  ordered_json out = ordered_json::array();
  for (const auto& row : a) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    out.push_back(r);
  }
  return out;
}

std::optional<PolarForm> try_polar(const ParamVectorField& v) {
  try {
    return to_polar(v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonResonantTerm) throw;
    return std::nullopt;
  }
}

ordered_json polar_json(const ParamVectorField& v, const std::vector<std::string>& names) {
  const auto p = try_polar(v);
  if (!p) return nullptr;
  auto table = [](const std::map<std::pair<int, MuExponent>, Rational>& t) {
    ordered_json out = ordered_json::array();
    for (const auto& [key, c] : t) out.push_back({{"rho", key.first}, {"mu", mu_json(key.second)}, {"coeff", c.get_str()}});
    return out;
  };
  return {{"amplitude", table(p->amplitude)},
          {"phase", table(p->phase)},
          {"text", {render_amplitude(*p, names), render_phase(*p, names)}}};
}

ordered_json genericity_json(const GenericityReport& g) {
  ordered_json a1 = ordered_json::array();
  for (const auto& row : g.a1) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(c.get_str());
    a1.push_back(r);
  }
  return {{"n0", g.n0}, {"m", g.m}, {"rank", g.rank}, {"generic", g.generic}, {"a1", a1},
          {"sigma", g.sigma}, {"linear_reparam", matrix_json(g.linear_reparam)}};
}

ordered_json pages_json(const LevelReport& pages) {
  ordered_json dims = ordered_json::array();
  for (const auto& [n, row] : pages.dims) dims.push_back({{"grade", n}, {"dims", row}});
  return {{"max_level", pages.max_level}, {"collapse_level", pages.collapse_level()}, {"dims", dims}};
}

ordered_json transforms_json(const TransformLog& log, bool details) {
  ordered_json out = {{"count", log.entries.size()},
                      {"linear_reparam", matrix_json(log.linear_reparam)},
                      {"sigma", log.sigma}};
  if (!details) return out;
  ordered_json entries = ordered_json::array();
  for (const auto& e : log.entries) {
    ordered_json time = ordered_json::array();
    for (const auto& [t, c] : e.generator.yT.ordered())
      time.push_back({{"i", t.i}, {"mu", mu_json(t.mu)}, {"coeff", c.get_str()}});
    ordered_json param = ordered_json::array();
    for (std::size_t l = 0; l < e.generator.yP.params(); ++l)
      for (const auto& [mu, c] : e.generator.yP.component(l))
        param.push_back({{"component", l + 1}, {"mu", mu_json(mu)}, {"coeff", c.get_str()}});
    entries.push_back({{"level", e.level}, {"grade", e.grade}, {"state", field_json(e.generator.yS)},
                       {"time", time}, {"param", param}});
  }
  out["entries"] = entries;
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void pages_text(std::ostream& os, const LevelReport& pages) {
  os << "pages (levels 0.." << pages.max_level << ", collapse at level " << pages.collapse_level() << "):\n";
  os << "  grade |";
  for (int r = 0; r <= pages.max_level; ++r) os << std::setw(4) << r;
  os << '\n';
  for (const auto& [n, row] : pages.dims) {
    os << "  " << std::setw(5) << n << " |";
    for (int d : row) os << std::setw(4) << d;
    os << '\n';
  }
}

void genericity_text(std::ostream& os, const GenericityReport& g, const std::vector<std::string>& names) {
  os << "generic: " << (g.generic ? "true" : "false") << ", N0: " << g.n0 << ", rank: " << g.rank << '\n';
  os << "A1:\n";
  for (const auto& row : g.a1) {
    os << " ";
    for (const auto& c : row) os << ' ' << c.get_str();
    os << '\n';
  }
  if (!g.sigma.empty()) os << "sigma: " << join(g.sigma, " ") << '\n';
  if (!g.linear_reparam.empty()) {
    os << "reparametrization:\n";
    for (std::size_t i = 0; i < g.linear_reparam.size(); ++i) {
      std::ostringstream line;
      bool first = true;
      for (std::size_t l = 0; l < g.linear_reparam[i].size(); ++l) {
        const Rational& c = g.linear_reparam[i][l];
        if (sgn(c) == 0) continue;
        line << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (abs(c) != 1) line << Rational(abs(c)).get_str() << '*';
        line << "nu" << l + 1;
        first = false;
      }
      os << "  " << names[i] << " = " << (first ? "0" : line.str()) << '\n';
    }
  }
}

}  // namespace

std::string render_report(const NormalFormResult& r, const ReportOptions& opt) {
  const std::size_t m = r.normal_form.params();
  const auto names = names_for(opt, m);
  if (opt.format == Format::Json) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["parametric_dimension"] = r.n0;
    doc["generic"] = r.genericity ? ordered_json(r.genericity->generic) : ordered_json(nullptr);
    doc["sigma"] = r.genericity ? ordered_json(r.genericity->sigma) : ordered_json::array();
    doc["alpha"] = r.normal_form.grading().alpha;
    doc["degree"] = r.config.degree;
    doc["mode"] = mode_name(r.config.mode);
    doc["style"] = style_name(r.config.style);
    doc["params"] = names;
    doc["normal_form"] = field_json(r.normal_form);
    doc["polar"] = polar_json(r.normal_form, names);
    doc["genericity"] = r.genericity ? genericity_json(*r.genericity) : ordered_json(nullptr);
    doc["pages"] = pages_json(r.pages);
    doc["transforms"] = transforms_json(r.log, opt.show_transforms);
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "mode: " << mode_name(r.config.mode) << "\nstyle: " << style_name(r.config.style)
     << "\nalpha: " << r.normal_form.grading().alpha << "\ndegree: " << r.config.degree << "\nN0: " << r.n0 << '\n';
  if (r.genericity) genericity_text(os, *r.genericity, names);
  os << "normal form:\n  " << r.normal_form.str(names) << '\n';
  const PlanarSystem real = to_real(r.normal_form, names);
  os << "real form:\n  x' = " << render_poly(real.rhs_x, names) << "\n  y' = " << render_poly(real.rhs_y, names) << '\n';
  if (const auto p = try_polar(r.normal_form))
    os << "polar form:\n  " << render_amplitude(*p, names) << "\n  " << render_phase(*p, names) << '\n';
  pages_text(os, r.pages);
  os << "transforms: " << r.log.entries.size() << '\n';
  if (opt.show_transforms) {
    for (const auto& e : r.log.entries) {
      os << "  level " << e.level << ", grade " << e.grade << ":\n";
      if (!e.generator.yS.is_zero()) os << "    state: " << e.generator.yS.str(names) << '\n';
      if (!e.generator.yT.is_zero()) os << "    time: " << e.generator.yT.str(names) << '\n';
      if (!e.generator.yP.is_zero()) os << "    param: " << e.generator.yP.str(names) << '\n';
    }
  }
  return os.str();
}

std::string render_check(int n0, std::size_t m, const std::optional<GenericityReport>& gen, const ReportOptions& opt) {
  const auto names = names_for(opt, m);
  if (opt.format == Format::Json) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["parametric_dimension"] = n0;
    doc["m"] = m;
    doc["genericity"] = gen ? genericity_json(*gen) : ordered_json(nullptr);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (!gen) {
    os << "N0 detected: " << n0 << ", m=0: parametric checks skipped\n";
    return os.str();
  }
  genericity_text(os, *gen, names);
  return os.str();
}

std::string render_pages(const NormalFormResult& r, const ReportOptions& opt) {
  if (opt.format == Format::Json) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["parametric_dimension"] = r.n0;
    doc["mode"] = mode_name(r.config.mode);
    doc["style"] = style_name(r.config.style);
    doc["pages"] = pages_json(r.pages);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "N0: " << r.n0 << ", mode: " << mode_name(r.config.mode) << ", style: " << style_name(r.config.style) << '\n';
  pages_text(os, r.pages);
  return os.str();
}

}  // namespace hnf
