#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hnf/engine.hpp"
#include "hnf/errors.hpp"
#include "hnf/hopf.hpp"
#include "hnf/oracle.hpp"
#include "hnf/report.hpp"

namespace {

enum Exit { Ok = 0, InputError = 2, Precondition = 3, Mismatch = 4, Internal = 1 };

struct Options {
  std::string file;
  int degree = 0;
  std::string mode = "full";
  std::string style = "distorted";
  std::string alpha = "auto";
  std::string format = "text";
  bool show_transforms = false;
  bool verify = false;
};

int exit_for(hnf::ErrorCode code) {
  using hnf::ErrorCode;
  switch (code) {
    case ErrorCode::NotGeneric:
    case ErrorCode::NoParametricDimension:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DegenerateInput:
      return Precondition;
    case ErrorCode::InternalError:
    case ErrorCode::NotInSpan:
    case ErrorCode::NonResonantTerm:
      return Internal;
    default:
      return InputError;
  }
}

hnf::PlanarSystem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return hnf::parse_system(ss.str());
}

hnf::NormalizationConfig config_of(const Options& o) {
  hnf::NormalizationConfig cfg;
  cfg.degree = o.degree;
  if (o.mode == "state") cfg.mode = hnf::Mode::StateOnly;
  else if (o.mode == "state+param") cfg.mode = hnf::Mode::StatePlusParam;
  else if (o.mode == "state+time") cfg.mode = hnf::Mode::StatePlusTime;
  else cfg.mode = hnf::Mode::Full;
  cfg.style = o.style == "spectral" ? hnf::Style::Spectral : hnf::Style::Distorted;
  if (o.alpha != "auto") cfg.alpha = std::stoi(o.alpha);
  return cfg;
}

hnf::ReportOptions report_of(const Options& o, const hnf::PlanarSystem& s) {
  return {o.format == "json" ? hnf::Format::Json : hnf::Format::Text, o.show_transforms, s.param_names};
}

hnf::NormalFormResult run(const Options& o, const hnf::PlanarSystem& s) {
  return hnf::normalize(hnf::realify(s, hnf::Grading{1}), config_of(o));
}

int cmd_normalize(const Options& o) {
  const auto s = load(o.file);
  const auto r = run(o, s);
  if (o.verify && !hnf::replay_matches(r)) {
    std::cerr << "verification failed: replaying the transform log does not reproduce the normal form\n";
    return Mismatch;
  }
  std::cout << hnf::render_report(r, report_of(o, s));
  return Ok;
}

int cmd_check(const Options& o) {
  const auto s = load(o.file);
  const int n0 = hnf::detect_parametric_dimension(hnf::realify(s, hnf::Grading{1}), o.degree);
  std::optional<hnf::GenericityReport> gen;
  if (s.m > 0) {
    const hnf::Grading g{2 * n0 + 1};
    hnf::ParamVectorField v = hnf::realify(s, g);
    hnf::NormalizationConfig cfg;
    cfg.degree = std::max(4 * n0 + 2 * g.alpha, v.degree());
    v = hnf::regrade(v, g, cfg.degree);
    gen = hnf::genericity(hnf::level_one(v, cfg).normal_form);
  }
  std::cout << hnf::render_check(n0, s.m, gen, report_of(o, s));
  return Ok;
}

int cmd_pages(const Options& o) {
  const auto s = load(o.file);
  std::cout << hnf::render_pages(run(o, s), report_of(o, s));
  return Ok;
}

int cmd_verify(const Options& o) {
  const auto s = load(o.file);
  const auto r = run(o, s);
  if (!hnf::replay_matches(r)) {
    std::cout << "mismatch: replay of " << r.log.entries.size() << " transforms differs from the normal form\n";
    return Mismatch;
  }
  std::cout << "ok: " << r.log.entries.size() << " transforms replay exactly to degree " << r.config.degree << '\n';
  return Ok;
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--degree", o.degree, "truncation degree (default from N0 and alpha)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--mode", o.mode, "state, state+param, state+time or full")
      ->check(CLI::IsMember({"state", "state+param", "state+time", "full"}));
  cmd->add_option("--style", o.style, "spectral or distorted")->check(CLI::IsMember({"spectral", "distorted"}));
  cmd->add_option("--alpha", o.alpha, "parameter weight, auto or a positive integer")
      ->check([](const std::string& s) -> std::string {
        if (s == "auto") return {};
        try {
          std::size_t used = 0;
          if (std::stoi(s, &used) > 0 && used == s.size()) return {};
        } catch (const std::exception&) {
        }
        return "expected auto or a positive integer";
      });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unique parametric normal forms of planar Hopf singularities"};
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "compute the normal form");
  normalize->add_option("file", o.file, "input system")->required();
  add_engine_flags(normalize, o);
  normalize->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  normalize->add_flag("--show-transforms", o.show_transforms, "list every generator");
  normalize->add_flag("--verify", o.verify, "replay the transforms and fail on mismatch");

  auto* check = app.add_subcommand("check", "parametric dimension and genericity");
  check->add_option("file", o.file, "input system")->required();
  check->add_option("--degree", o.degree, "search degree for N0")->check(CLI::NonNegativeNumber);
  check->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* pages = app.add_subcommand("pages", "normal form dimensions per grade and level");
  pages->add_option("file", o.file, "input system")->required();
  add_engine_flags(pages, o);
  pages->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "replay the transform log with the reference implementation");
  verify->add_option("file", o.file, "input system")->required();
  add_engine_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }

  try {
    if (*normalize) return cmd_normalize(o);
    if (*check) return cmd_check(o);
    if (*pages) return cmd_pages(o);
    return cmd_verify(o);
  } catch (const hnf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return InputError;
  }
}
