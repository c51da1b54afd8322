#include <iostream>
#include <regex>
#include <thread>

#include "CLI11.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/report.hpp"
#include "syzkit/suite.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

const std::map<std::string, syz::ReportFormat> kFormats{{"text", syz::ReportFormat::text},
                                                        {"structured", syz::ReportFormat::structured}};

syz::ProblemSpec load(const std::string& path, int steps) {
  syz::ProblemSpec spec = syz::load_problem(path);
  if (steps > 0) spec.steps = steps;
  return spec;
}

bool any_failed(const std::vector<syz::CheckOutcome>& outcomes) {
  return std::any_of(outcomes.begin(), outcomes.end(),
                     [](const syz::CheckOutcome& o) { return o.status == syz::CheckStatus::fail; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygy invariants over graded quotient rings"};
  app.require_subcommand(1);

  std::string file;
  int steps = 0;
  syz::ReportFormat format = syz::ReportFormat::text;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--steps", steps, "Resolution length")->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "text or structured")->transform(CLI::CheckedTransformer(kFormats));
  };

  auto* resolve_cmd = app.add_subcommand("resolve", "Minimal free resolution of the module in a problem file");
  resolve_cmd->add_option("file", file, "Problem file")->required();
  add_common(resolve_cmd);

  bool with_checks = false;
  auto* inv_cmd = app.add_subcommand("invariants", "Per-syzygy invariants of the module in a problem file");
  inv_cmd->add_option("file", file, "Problem file")->required();
  inv_cmd->add_flag("--checks", with_checks, "Also run every property check");
  add_common(inv_cmd);

  std::string suite;
  bool rational = false;
  auto* check_cmd = app.add_subcommand("check", "Run the curated example suite");
  check_cmd->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember({"paper"}));
  check_cmd->add_flag("--rational", rational, "Work over the rationals instead of F_32003");
  add_common(check_cmd);

  syz::FuzzConfig fuzz_config;
  std::string vars = "2..3";
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random monomial rings and artinian modules against every property");
  fuzz_cmd->add_option("--seed", fuzz_config.seed, "Seed")->required();
  fuzz_cmd->add_option("--cases", fuzz_config.cases, "Number of cases")->required();
  fuzz_cmd->add_option("--vars", vars, "Variable range A..B within 2..4");
  fuzz_cmd->add_option("--maxdeg", fuzz_config.max_degree, "Maximum generator degree")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--jobs", fuzz_config.jobs, "Worker threads");
  add_common(fuzz_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (resolve_cmd->parsed()) {
      syz::ProblemSpec spec = load(file, steps);
      std::cout << syz::emit_report(syz::resolve(spec.module, spec.steps), format);
      return kPass;
    }
    if (inv_cmd->parsed()) {
      syz::ProblemSpec spec = load(file, steps);
      if (!with_checks) {
        std::cout << syz::emit_report(syz::invariant_report(spec), format);
        return kPass;
      }
      syz::Analysis a = syz::analyze(spec);
      auto outcomes = syz::run_property_checks(a);
      std::cout << syz::emit_report(a.report, format) << syz::emit_report(outcomes, format);
      return any_failed(outcomes) ? kFail : kPass;
    }
    if (check_cmd->parsed()) {
      syz::SuiteOptions options;
      if (steps > 0) options.steps = steps;
      options.rational = rational;
      auto outcomes = syz::run_paper_suite(options);
      std::cout << syz::emit_report(outcomes, format);
      return any_failed(outcomes) ? kFail : kPass;
    }
    std::smatch m;
    if (!std::regex_match(vars, m, std::regex(R"((\d+)\.\.(\d+))"))) {
      std::cerr << "--vars expects A..B\n";
      return kUsage;
    }
    fuzz_config.min_vars = std::stoi(m[1]);
    fuzz_config.max_vars = std::stoi(m[2]);
    fuzz_config.steps = steps;
    if (fuzz_config.jobs == 0) fuzz_config.jobs = std::max(1u, std::thread::hardware_concurrency());
    try {
      syz::validate(fuzz_config);
    } catch (const std::invalid_argument& e) {
      std::cerr << "invalid fuzz configuration: " << e.what() << "\n";
      return kUsage;
    }
    syz::FuzzReport report = syz::fuzz(fuzz_config);
    std::cout << syz::emit_report(report, format);
    return report.violations.empty() ? kPass : kFail;
  } catch (const syz::ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const syz::NotHomogeneous& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const syz::UnitIdeal& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
