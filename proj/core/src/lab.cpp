#include "mixlab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "mixlab/error.hpp"

namespace mixlab::lab {

namespace {

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      raise(ErrorKind::Schema, "unknown key \"" + key + "\" in " + where);
    }
  }
}

const ScenarioEntry& find_scenario(const std::string& id) {
  for (const auto& entry : scenario_registry()) {
    if (entry.info.id == id) return entry;
  }
  raise(ErrorKind::Schema, "unknown scenario \"" + id + "\"");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json table_json(const Table& t) {
  Json j;
  j["name"] = t.name;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) raise(ErrorKind::Schema, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) raise(ErrorKind::Schema, std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) raise(ErrorKind::Schema, "config must be a JSON object");
  reject_unknown_keys(j, {"scenario", "params"}, "config");
  const Json& id = require(j, "scenario");
  if (!id.is_string()) raise(ErrorKind::Schema, "\"scenario\" must be a string");
  ExperimentConfig cfg;
  cfg.scenario = id.get<std::string>();
  find_scenario(cfg.scenario);
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) raise(ErrorKind::Schema, "\"params\" must be an object");
    cfg.params = *it;
  }
  return cfg;
}

Json resolve_params(const std::string& scenario, const Json& defaults, const Json& given) {
  Json out = defaults;
  for (const auto& [key, value] : given.items()) {
    if (!defaults.contains(key)) {
      raise(ErrorKind::Schema, "unknown parameter \"" + key + "\" for scenario " + scenario);
    }
    out[key] = value;
  }
  return out;
}

const Table& Report::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  raise(ErrorKind::OutOfRange, "report has no table \"" + name + "\"");
}

const std::vector<ScenarioInfo>& scenarios() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& e : scenario_registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report run_experiment(const ExperimentConfig& cfg) {
  const ScenarioEntry& entry = find_scenario(cfg.scenario);
  ScenarioContext ctx;
  ctx.params = resolve_params(cfg.scenario, entry.defaults, cfg.params);
  if (cfg.budget) ctx.budget = *cfg.budget;
  const auto start = std::chrono::steady_clock::now();
  Report rep = entry.run(ctx);
  const auto stop = std::chrono::steady_clock::now();
  rep.scenario = cfg.scenario;
  rep.inputs = ctx.params;
  rep.wall_time_ms =
      std::chrono::round<std::chrono::microseconds>(stop - start).count() / 1000.0;
  return rep;
}

Json report_to_json(const Report& rep) {
  Json j;
  j["scenario"] = rep.scenario;
  j["inputs"] = rep.inputs;
  Json tables = Json::array();
  for (const auto& t : rep.tables) tables.push_back(table_json(t));
  j["tables"] = std::move(tables);
  j["certificates"] = rep.certificates;
  j["verdict"] = {{"pass", rep.verdict.pass}, {"line", rep.verdict.line}};
  j["wall_time_ms"] = rep.wall_time_ms;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object()) raise(ErrorKind::Schema, "report must be a JSON object");
  reject_unknown_keys(j, {"scenario", "inputs", "tables", "certificates", "verdict", "wall_time_ms"},
                      "report");
  Report rep;
  const Json& id = require(j, "scenario");
  if (!id.is_string()) raise(ErrorKind::Schema, "\"scenario\" must be a string");
  rep.scenario = id.get<std::string>();
  rep.inputs = require(j, "inputs");
  for (const auto& t : require(j, "tables")) {
    Table table;
    const Json& name = require(t, "name");
    if (!name.is_string()) raise(ErrorKind::Schema, "table name must be a string");
    table.name = name.get<std::string>();
    table.columns = string_list(require(t, "columns"), "table columns");
    for (const auto& row : require(t, "rows")) {
      table.rows.push_back(string_list(row, "table row"));
      if (table.rows.back().size() != table.columns.size()) {
        raise(ErrorKind::Schema, "row width differs from header in table " + table.name);
      }
    }
    rep.tables.push_back(std::move(table));
  }
  rep.certificates = require(j, "certificates");
  if (!rep.certificates.is_array()) raise(ErrorKind::Schema, "\"certificates\" must be an array");
  const Json& verdict = require(j, "verdict");
  const Json& pass = require(verdict, "pass");
  const Json& line = require(verdict, "line");
  if (!pass.is_boolean() || !line.is_string()) raise(ErrorKind::Schema, "malformed verdict");
  rep.verdict = {pass.get<bool>(), line.get<std::string>()};
  const Json& wall = require(j, "wall_time_ms");
  if (!wall.is_number()) raise(ErrorKind::Schema, "\"wall_time_ms\" must be a number");
  rep.wall_time_ms = wall.get<double>();
  return rep;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  raise(ErrorKind::Schema, "unknown format \"" + name + "\" (json or csv)");
}

std::string export_report(const Report& rep, Format format) {
  if (format == Format::Json) return report_to_json(rep).dump(2) + "\n";
  std::string out;
  if (rep.tables.empty()) return out;
  const Table& t = rep.tables.front();
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out;
}

void write_report(const Report& rep, Format format, const std::filesystem::path& path) {
  const std::string bytes = export_report(rep, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(ErrorKind::Io, "write failed for " + path.string());
}

VerifyOutcome verify_report(const Report& rep, std::optional<std::uint64_t> budget) {
  VerifyOutcome outcome;
  auto fail = [&](std::string msg) {
    outcome.ok = false;
    outcome.problems.push_back(std::move(msg));
  };
  for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
    try {
      for (auto& p : check_certificate(rep.certificates[i])) {
        fail("certificate " + std::to_string(i) + ": " + p);
      }
    } catch (const std::exception& e) {
      fail("certificate " + std::to_string(i) + ": " + e.what());
    }
  }

  ExperimentConfig cfg;
  cfg.scenario = rep.scenario;
  cfg.params = rep.inputs;
  cfg.budget = budget;
  const Report again = run_experiment(cfg);
  if (again.tables.size() != rep.tables.size()) fail("table count differs on re-run");
  for (std::size_t i = 0; i < std::min(again.tables.size(), rep.tables.size()); ++i) {
    const Table& a = rep.tables[i];
    const Table& b = again.tables[i];
    if (a.name != b.name || a.columns != b.columns || a.rows != b.rows) {
      fail("table \"" + a.name + "\" differs on re-run");
    }
  }
  if (again.certificates != rep.certificates) fail("certificates differ on re-run");
  if (again.verdict.pass != rep.verdict.pass || again.verdict.line != rep.verdict.line) {
    fail("verdict differs on re-run");
  }
  return outcome;
}

}  // namespace mixlab::lab
