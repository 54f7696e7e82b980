#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "coherent/version.hpp"
#include "verify.hpp"

using namespace coherent;
using namespace coherent::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "coherent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json strip_timestamp(Json doc) {
  doc["metadata"].erase("timestamp");
  return doc;
}

}  // namespace

TEST(ParseArgs, FlagsAndDefaults) {
  const char* argv[] = {"coherent", "scan", "--space", "disc", "--beta", "2.5", "--p", "2.5,3,4",
                        "--restarts", "4", "--seed", "9", "--format", "csv", "--degree", "5"};
  std::ostringstream out;
  const auto c = parse_args(16, argv, out);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->command, Command::Scan);
  EXPECT_EQ(c->kind, Kind::Disc);
  EXPECT_EQ(c->beta, 2.5);
  EXPECT_EQ(c->p_values, (std::vector<double>{2.5, 3.0, 4.0}));
  EXPECT_EQ(c->restarts, 4);
  EXPECT_EQ(c->seed, 9u);
  EXPECT_EQ(c->format, Format::Csv);
  EXPECT_EQ(c->degree, 5);

  const char* bare[] = {"coherent", "verify"};
  const auto d = parse_args(2, bare, out);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, (RunConfig{}));
}

TEST(ParseArgs, OptionsBeforeSubcommand) {
  const char* argv[] = {"coherent", "--space", "sphere", "--beta", "1.5", "tables"};
  std::ostringstream out;
  const auto c = parse_args(6, argv, out);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->command, Command::Tables);
  EXPECT_EQ(c->kind, Kind::Sphere);
}

TEST(ParseArgs, HelpReturnsNothing) {
  const char* argv[] = {"coherent", "--help"};
  std::ostringstream out;
  EXPECT_FALSE(parse_args(2, argv, out));
  EXPECT_NE(out.str().find("--space"), std::string::npos);
}

TEST(RunConfig, JsonRoundTrip) {
  RunConfig c;
  c.command = Command::Maximize;
  c.kind = Kind::Sphere;
  c.beta = 2.0;
  c.p_values = {4.0, 6.0};
  c.degree = 3;
  c.seed = 123456789012345ULL;
  c.out = "x.json";
  c.format = Format::Pretty;
  EXPECT_EQ(run_config_from_json(Json::parse(to_json(c).dump())), c);
  EXPECT_EQ(run_config_from_json(to_json(RunConfig{})), RunConfig{});
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--space", "torus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--restarts", "0"}).code, kExitUsage);
  const auto bad_beta = invoke({"verify", "--space", "disc", "--beta", "0.5"});
  EXPECT_EQ(bad_beta.code, kExitUsage);
  EXPECT_NE(bad_beta.err.find("beta"), std::string::npos);
}

TEST(ExitCodes, NumericDomainErrorNamesParameter) {
  const auto r = invoke({"maximize", "--p", "1.5", "--restarts", "2"});
  EXPECT_EQ(r.code, kExitNumeric);
  EXPECT_NE(r.err.find("'p'"), std::string::npos);
  const auto d = invoke({"maximize", "--space", "sphere", "--beta", "1", "--degree", "5", "--restarts", "2"});
  EXPECT_EQ(d.code, kExitNumeric);
  EXPECT_NE(d.err.find("'degree'"), std::string::npos);
}

TEST(Commands, TablesSphereHalf) {
  const auto r = invoke({"tables", "--space", "sphere", "--beta", "0.5", "--p", "2,4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  const Json& rows = doc.at("results").at("coherent");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("p"), 2.0);
  EXPECT_NEAR(rows[0].at("coherent_value").get<double>(), 1.0, 1e-15);
  EXPECT_EQ(rows[1].at("p"), 4.0);
  EXPECT_NEAR(rows[1].at("coherent_value").get<double>(), 2.0 / 3.0, 1e-15);
}

TEST(Commands, MaximizePlaneExample) {
  const auto r = invoke({"maximize", "--space", "plane", "--beta", "1", "--p", "4", "--restarts", "20", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_NEAR(doc.at("results")[0].at("best_value").get<double>(), 0.5, 1e-6);
  EXPECT_EQ(doc.at("metadata").at("seed"), 7u);
  EXPECT_EQ(doc.at("metadata").at("version"), std::string(kVersion));
  EXPECT_TRUE(doc.at("metadata").contains("tolerances"));
  EXPECT_EQ(doc.at("config").at("command"), "maximize");
}

TEST(Commands, VerifyPlanePasses) {
  const auto r = invoke({"verify", "--space", "plane", "--beta", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_TRUE(doc.at("results").at("all_passed").get<bool>());
  bool saw_heisenberg = false, saw_burbea = false, saw_power = false;
  for (const auto& e : doc.at("results").at("checks")) {
    const std::string label = e.at("report").at("label");
    saw_heisenberg |= label.find("Heisenberg") != std::string::npos;
    saw_burbea |= label.find("Burbea") != std::string::npos;
    saw_power |= label.find("power bound") != std::string::npos;
    EXPECT_TRUE(e.at("passed").get<bool>()) << label;
  }
  EXPECT_TRUE(saw_heisenberg && saw_burbea && saw_power);
}

TEST(Commands, VerifyOtherGeometriesPass) {
  for (auto [kind, beta] : {std::pair{Kind::Disc, 1.5}, {Kind::Disc, 4.0}, {Kind::Sphere, 0.5}, {Kind::Sphere, 3.0}}) {
    for (const auto& e : run_verification({kind, beta}, std::nullopt, 1)) {
      EXPECT_TRUE(e.passed) << e.report.label << " lhs=" << e.report.lhs << " rhs=" << e.report.rhs;
    }
  }
}

TEST(Commands, CsvAndPrettyFormats) {
  const auto csv = invoke({"scan", "--space", "sphere", "--beta", "1", "--p", "2,4", "--restarts", "2", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out.rfind("# coherent ", 0), 0u);
  EXPECT_NE(csv.out.find(std::string(kScanCsvHeader) + "\n"), std::string::npos);
  const auto pretty = invoke({"tables", "--format", "pretty"});
  ASSERT_EQ(pretty.code, kExitOk);
  EXPECT_NE(pretty.out.find("dim(beta)"), std::string::npos);
}

TEST(Determinism, IdenticalModuloTimestamp) {
  RunConfig c;
  c.command = Command::Maximize;
  c.kind = Kind::Disc;
  c.beta = 2.0;
  c.restarts = 3;
  c.seed = 5;
  const Json a = run_json(c, "t1");
  const Json b = run_json(c, "t2");
  EXPECT_NE(a, b);
  EXPECT_EQ(strip_timestamp(a).dump(), strip_timestamp(b).dump());
}
