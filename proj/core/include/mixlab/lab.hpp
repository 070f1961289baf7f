#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixlab/json_io.hpp"

namespace mixlab::lab {

struct ExperimentConfig {
  std::string scenario;
  Json params = Json::object();
  std::optional<std::uint64_t> budget;  // overrides the Ramsey search budget
};

/// Parses {"scenario": ..., "params": {...}}; unknown keys are schema errors.
ExperimentConfig parse_config(const Json& j);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Verdict {
  bool pass = false;
  std::string line;
};

struct Report {
  std::string scenario;
  Json inputs = Json::object();  // fully resolved parameters
  std::vector<Table> tables;
  Json certificates = Json::array();
  Verdict verdict;
  double wall_time_ms = 0.0;

  const Table& table(const std::string& name) const;
};

struct ScenarioInfo {
  std::string id;
  std::string summary;
};

const std::vector<ScenarioInfo>& scenarios();

/// Validates the parameters against the scenario schema and runs it.
Report run_experiment(const ExperimentConfig& cfg);

Json report_to_json(const Report& rep);
Report report_from_json(const Json& j);

enum class Format { Json, Csv };

Format parse_format(const std::string& name);

/// JSON: the full report, two-space indent, trailing newline.
/// CSV: the first table only, header always present, LF line endings.
std::string export_report(const Report& rep, Format format);

/// Writes export_report bytes to path; Io error names the path.
void write_report(const Report& rep, Format format, const std::filesystem::path& path);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks every embedded certificate against its own re-verification data,
/// then re-runs the scenario from the recorded inputs and compares tables,
/// certificates and verdict.
VerifyOutcome verify_report(const Report& rep, std::optional<std::uint64_t> budget = std::nullopt);

// ---------------------------------------------------------------------------
// Scenario plumbing shared by lab.cpp and scenarios.cpp.

/// Resolves params against defaults: every key of `given` must exist in
/// `defaults`; missing keys take the default value.
Json resolve_params(const std::string& scenario, const Json& defaults, const Json& given);

struct ScenarioContext {
  Json params;  // resolved
  std::uint64_t budget = 1'000'000;
};

using ScenarioFn = std::function<Report(const ScenarioContext&)>;

struct ScenarioEntry {
  ScenarioInfo info;
  Json defaults;
  ScenarioFn run;
};

const std::vector<ScenarioEntry>& scenario_registry();

/// Structural checks for one certificate entry of a report.
std::vector<std::string> check_certificate(const Json& cert);

}  // namespace mixlab::lab
