#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "coherent/error.hpp"
#include "coherent/serialize.hpp"

using namespace coherent;

TEST(Json, ComplexAndSpaceRoundTrip) {
  const Complex z(0.1, -1.0 / 3.0);
  EXPECT_EQ(complex_from_json(Json::parse(to_json(z).dump())), z);
  EXPECT_THROW(complex_from_json(Json::array({1.0})), DomainError);
  for (const auto& s : {PhaseSpace::plane(0.3), PhaseSpace::disc(2.5), PhaseSpace::sphere(1.5)}) {
    EXPECT_EQ(phase_space_from_json(Json::parse(to_json(s).dump())), s);
  }
}

TEST(Json, StateSchema) {
  const auto f = random_state(PhaseSpace::disc(2.0), 4, 3);
  const Json j = to_json(f);
  EXPECT_EQ(j.at("kind"), "disc");
  EXPECT_EQ(j.at("beta"), 2.0);
  ASSERT_EQ(j.at("coeffs").size(), 5u);
  EXPECT_EQ(j.at("coeffs")[0].size(), 2u);
  EXPECT_EQ(analytic_state_from_json(Json::parse(j.dump())), f);
}

TEST(Json, FockVectorRoundTrip) {
  const auto v = random_fock(2.0, 5, 1);
  const Json j = to_json(v);
  EXPECT_EQ(j.at("k"), 2.0);
  EXPECT_EQ(fock_vector_from_json(Json::parse(j.dump())), v);
}

TEST(Json, GridDump) {
  const auto g = build_grid(PhaseSpace::plane(1.0), 2.0, 3, 4);
  const Json j = to_json(g);
  EXPECT_EQ(j.at("q"), 2.0);
  EXPECT_EQ(j.at("nodes").size(), 12u);
  EXPECT_EQ(j.at("weights").size(), 12u);
}

TEST(Json, CheckReportNanIsNull) {
  CheckReport r = make_report("x", std::numeric_limits<double>::quiet_NaN(), 1.0, 1e-10);
  r.cross_check = 0.25;
  const Json j = to_json(r);
  EXPECT_TRUE(j.at("lhs").is_null());
  const auto back = check_report_from_json(Json::parse(j.dump()));
  EXPECT_TRUE(std::isnan(back.lhs));
  EXPECT_EQ(back.rhs, 1.0);
  EXPECT_EQ(back.cross_check, 0.25);
}

TEST(Json, OptimizationResultRoundTrip) {
  const auto r = maximize_lp(PhaseSpace::sphere(1.5), 4.0, 3, 3, 9);
  const auto back = optimization_result_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.best_value, r.best_value);
  EXPECT_EQ(back.best_state, r.best_state);
  EXPECT_EQ(back.nearest_w, r.nearest_w);
  EXPECT_EQ(back.iterations, r.iterations);
  ASSERT_EQ(back.runs.size(), r.runs.size());
  EXPECT_EQ(back.runs[2].gradient_norm, r.runs[2].gradient_norm);
  EXPECT_EQ(to_json(back), to_json(r));
}

TEST(Csv, FieldQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) EXPECT_EQ(std::stod(format_double(x)), x);
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(Csv, CheckRow) {
  const auto r = make_report("Burbea, kernel pair", 1.0, 1.0, 1e-10);
  EXPECT_EQ(csv_row(r), "\"Burbea, kernel pair\",1,1,0,true");
}

TEST(Csv, OptimizationRowsEndWithSummary) {
  const auto r = maximize_lp(PhaseSpace::sphere(1.0), 4.0, 2, 3, 4);
  const std::string rows = csv_rows(r);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 4);
  EXPECT_NE(rows.find(",summary,"), std::string::npos);
}

TEST(Csv, ScanRowWithError) {
  ScanRow row;
  row.p = 1.0;
  row.coherent_value = std::numeric_limits<double>::quiet_NaN();
  row.coherent_c = std::numeric_limits<double>::quiet_NaN();
  row.error = "p must be >= 2, got 1";
  EXPECT_EQ(csv_row(row), "1,nan,nan,nan,false,false,\"p must be >= 2, got 1\"");
}
