#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mixlab/error.hpp"
#include "mixlab/lab.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdictFail = 2;

mixlab::Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) mixlab::raise(mixlab::ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return mixlab::Json::parse(buf.str());
  } catch (const mixlab::Json::parse_error& e) {
    mixlab::raise(mixlab::ErrorKind::Schema, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixlab: exact experiments on multiple mixing and largeness of return-time sets"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t budget = 0;
  auto* run = app.add_subcommand("run", "Run a scenario from a JSON config");
  run->add_option("config", config_path, "Config file {\"scenario\":..., \"params\":{...}}")->required();
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--budget", budget, "Node budget for homogeneous-set search");

  std::string report_path;
  std::uint64_t verify_budget = 0;
  auto* verify = app.add_subcommand("verify", "Re-check certificates and re-run a saved report");
  verify->add_option("report", report_path, "Report JSON produced by `run`")->required();
  verify->add_option("--budget", verify_budget, "Node budget for the re-run");

  auto* list = app.add_subcommand("list-scenarios", "List scenario ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& s : mixlab::lab::scenarios()) std::cout << s.id << "\t" << s.summary << "\n";
      return kExitPass;
    }
    if (*run) {
      auto cfg = mixlab::lab::parse_config(read_json(config_path));
      if (budget > 0) cfg.budget = budget;
      const auto rep = mixlab::lab::run_experiment(cfg);
      const auto fmt = mixlab::lab::parse_format(format);
      if (out_path.empty()) {
        std::cout << mixlab::lab::export_report(rep, fmt);
      } else {
        mixlab::lab::write_report(rep, fmt, out_path);
      }
      std::cerr << rep.scenario << ": " << (rep.verdict.pass ? "PASS" : "FAIL") << ": "
                << rep.verdict.line << "\n";
      return rep.verdict.pass ? kExitPass : kExitVerdictFail;
    }
    if (*verify) {
      const auto rep = mixlab::lab::report_from_json(read_json(report_path));
      std::optional<std::uint64_t> b;
      if (verify_budget > 0) b = verify_budget;
      const auto outcome = mixlab::lab::verify_report(rep, b);
      for (const auto& p : outcome.problems) std::cerr << "problem: " << p << "\n";
      std::cout << rep.scenario << ": " << (outcome.ok ? "verified" : "NOT verified") << "\n";
      return outcome.ok ? kExitPass : kExitVerdictFail;
    }
  } catch (const mixlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
