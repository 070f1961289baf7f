#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mixlab/error.hpp"
#include "mixlab/json_io.hpp"
#include "mixlab/lab.hpp"

using namespace mixlab;
using namespace mixlab::lab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a mixlab::Error";
  return ErrorKind::Io;
}

Report run(const std::string& id, Json params = Json::object()) {
  return run_experiment(parse_config({{"scenario", id}, {"params", std::move(params)}}));
}

// Small parameters so the whole registry runs quickly.
Json quick_params(const std::string& id) {
  if (id == "ledrappier_sigma2_evidence") return {{"K", 5}};
  if (id == "bernoulli_rlimit") return {{"N", 8}};
  if (id == "density_one" || id == "cesaro_weakmixing") return {{"k_max", 20}};
  if (id == "polynomial_paths") return {{"window", 10000}};
  if (id == "ramsey_selftest") return {{"N", 5}};
  return Json::object();
}

}  // namespace

TEST(JsonIo, ScalarsAndGroups) {
  EXPECT_EQ(to_json(BigInt(7)), Json(7));
  const BigInt huge = pow(BigInt(10), 30);
  EXPECT_EQ(to_json(huge), Json(huge.get_str()));
  EXPECT_EQ(bigint_from_json(to_json(huge)), huge);
  EXPECT_EQ(to_json(make_rational(4, 4)), Json("1/1"));
  EXPECT_EQ(rational_from_json(Json("-3/9")), make_rational(-1, 3));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));

  for (const auto& ctx : {GroupCtx::integers(), GroupCtx::lattice(3), GroupCtx::finite_support()}) {
    EXPECT_EQ(group_from_json(to_json(ctx)), ctx);
  }
  const auto z2 = GroupCtx::lattice(2);
  EXPECT_EQ(element_from_json(z2, to_json(GroupElement{-4, 9})), GroupElement({-4, 9}));
  EXPECT_EQ(kind_of([&] { element_from_json(z2, Json::array({1})); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { rational_from_json(Json(true)); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { require(Json::object(), "missing"); }), ErrorKind::Schema);
}

TEST(JsonIo, StructuresRoundTrip) {
  const auto ctx = GroupCtx::lattice(2);
  const auto seed = SeedMatrix::generate(ctx, 2, 2, 4, [](std::size_t j, std::size_t t, std::size_t k) {
    return GroupElement{long(j + 1) * long(k), long(t) * long(k)};
  });
  const auto back = seed_from_json(to_json(seed));
  EXPECT_EQ(to_json(back), to_json(seed));
  EXPECT_EQ(back.at(1, 1, 3), GroupElement({6, 3}));

  const auto p = CylinderPattern::from_constraints(ctx, {{{0, 0}, 1}, {{2, -1}, 0}});
  EXPECT_EQ(pattern_from_json(ctx, to_json(p)), p);

  const auto arr = SimplexArray::generate(2, 5, [](const IndexSet& a) { return make_rational(1, long(a[1])); });
  EXPECT_EQ(simplex_from_json(to_json(arr)).values(), arr.values());

  const RLimitEstimate est{{3, 4, 5}, make_rational(1, 4), make_rational(1, 8), make_rational(1, 40), true};
  EXPECT_EQ(to_json(rlimit_from_json(to_json(est))), to_json(est));

  const HomogeneousCert hc{{1, 4}, 1};
  EXPECT_EQ(to_json(homogeneous_from_json(to_json(hc))), to_json(hc));
}

TEST(Config, SchemaErrors) {
  EXPECT_EQ(kind_of([] { parse_config(Json::array()); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse_config({{"scenario", "nope"}}); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse_config({{"scenario", "ramsey_selftest"}, {"extra", 1}}); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { run("ramsey_selftest", {{"M", 6}}); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { run("ramsey_selftest", {{"N", "six"}}); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { run("ledrappier_counterexample", {{"n_max", 0}}); }), ErrorKind::Schema);
  EXPECT_EQ(kind_of([] { parse_format("xml"); }), ErrorKind::Schema);
}

TEST(Scenarios, RegistryListsEveryScenario) {
  std::vector<std::string> ids;
  for (const auto& s : scenarios()) ids.push_back(s.id);
  EXPECT_EQ(ids, (std::vector<std::string>{
                     "ledrappier_counterexample", "ledrappier_sigma2_evidence", "bernoulli_rlimit",
                     "diagonal_Z", "pullback_nonmixing", "prime_select_nonsigma", "density_one",
                     "cesaro_weakmixing", "ip_truncated", "polynomial_paths", "ramsey_selftest",
                     "sumfree_selftest"}));
}

TEST(Scenarios, LedrappierTableAndCsv) {
  const auto rep = run("ledrappier_counterexample");
  EXPECT_TRUE(rep.verdict.pass);
  EXPECT_NE(rep.verdict.line.find("2-mixing pair gaps all 0; triple gap persistent"), std::string::npos);
  const auto& t = rep.tables.front();
  ASSERT_EQ(t.rows.size(), 10u);
  for (const auto& row : t.rows) {
    EXPECT_EQ(row.at(1), "1/4");
    EXPECT_EQ(row.at(2), "1/8");
  }
  const auto csv = export_report(rep, Format::Csv);
  EXPECT_EQ(csv.rfind("n,correlation,gap\n1,1/4,1/8\n", 0), 0u);
}

TEST(Scenarios, BernoulliRLimitValue) {
  const auto rep = run("bernoulli_rlimit");
  EXPECT_TRUE(rep.verdict.pass);
  const auto& cert = rep.certificates.at(0);
  std::string text = cert.dump();
  EXPECT_NE(text.find("\"value\":\"1/8\""), std::string::npos);
}

TEST(Export, CsvQuotingAndEmptyTable) {
  Report rep;
  rep.scenario = "x";
  rep.tables.push_back({"t", {"a", "b,c"}, {}});
  EXPECT_EQ(export_report(rep, Format::Csv), "a,\"b,c\"\n");
  rep.tables.front().rows.push_back({"say \"hi\"", "1/2"});
  EXPECT_EQ(export_report(rep, Format::Csv), "a,\"b,c\"\n\"say \"\"hi\"\"\",1/2\n");
  rep.tables.clear();
  EXPECT_EQ(export_report(rep, Format::Csv), "");
}

TEST(Export, WriteReportToDisk) {
  const auto rep = run("sumfree_selftest");
  const auto path = std::filesystem::temp_directory_path() / "mixlab_test_report.json";
  write_report(rep, Format::Json, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), export_report(rep, Format::Json));
  std::filesystem::remove(path);
  EXPECT_EQ(kind_of([&] { write_report(rep, Format::Json, "/nonexistent-dir/x.json"); }), ErrorKind::Io);
}

TEST(ScenariosProperty, JsonRoundTripIsByteIdentical) {
  for (const auto& s : scenarios()) {
    const auto rep = run(s.id, quick_params(s.id));
    const auto bytes = export_report(rep, Format::Json);
    const auto back = report_from_json(Json::parse(bytes));
    EXPECT_EQ(export_report(back, Format::Json), bytes) << s.id;
  }
}

TEST(ScenariosProperty, DeterministicAndVerifiable) {
  for (const auto& s : scenarios()) {
    const auto a = run(s.id, quick_params(s.id));
    const auto b = run(s.id, quick_params(s.id));
    auto strip = [](Json j) {
      j.erase("wall_time_ms");
      return j;
    };
    EXPECT_EQ(strip(report_to_json(a)), strip(report_to_json(b))) << s.id;
    const auto outcome = verify_report(a);
    EXPECT_TRUE(outcome.ok) << s.id << ": " << (outcome.problems.empty() ? "" : outcome.problems.front());
  }
}

TEST(Verify, DetectsTampering) {
  auto rep = run("ledrappier_counterexample");
  rep.tables.front().rows.front().at(1) = "1/8";
  auto out = verify_report(rep);
  EXPECT_FALSE(out.ok);

  auto ram = run("ramsey_selftest", {{"N", 5}});
  ASSERT_FALSE(ram.certificates.empty());
  // claim a homogeneous set that is not monochromatic
  auto& cert = ram.certificates.front();
  if (cert.contains("certificate")) {
    cert["certificate"]["S"] = Json::array({1, 2, 3, 4, 5});
    cert["certificate"]["size"] = 5;
  }
  out = verify_report(ram);
  EXPECT_FALSE(out.ok);

  auto sf = run("sumfree_selftest");
  sf.verdict.line = "edited";
  EXPECT_FALSE(verify_report(sf).ok);
}

TEST(Scenarios, BudgetOverrideKeepsResultsMonotone) {
  ExperimentConfig cfg = parse_config({{"scenario", "ramsey_selftest"}, {"params", {{"N", 5}}}});
  cfg.budget = 1;
  const auto low = run_experiment(cfg);
  cfg.budget = 1'000'000;
  const auto high = run_experiment(cfg);
  EXPECT_TRUE(high.verdict.pass);
  EXPECT_EQ(low.tables.size(), high.tables.size());
}

TEST(Scenarios, DiagonalSingleCoefficientReducesToPairMixing) {
  const auto rep = run("diagonal_Z", {{"a", {1}}});
  EXPECT_TRUE(rep.verdict.pass);
  const auto& t = rep.table("reduction");
  ASSERT_EQ(t.rows.size(), 101u);
  for (const auto& row : t.rows) {
    EXPECT_EQ(row.at(1), row.at(2)) << "n=" << row.at(0);
    EXPECT_EQ(row.at(3), "true");
  }
}
