#include "coherent/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "coherent/error.hpp"

namespace coherent {
namespace {

Json number_or_null(double x) { return std::isnan(x) ? Json(nullptr) : Json(x); }

double number_from(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

Json coefficient_array(std::span<const Complex> coeffs) {
  Json arr = Json::array();
  for (const Complex& c : coeffs) arr.push_back(to_json(c));
  return arr;
}

std::vector<Complex> coefficients_from(const Json& arr) {
  std::vector<Complex> c;
  for (const Json& x : arr) c.push_back(complex_from_json(x));
  return c;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("coeffs", "complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const PhaseSpace& space) {
  return Json{{"kind", std::string(to_string(space.kind()))}, {"beta", space.beta()}};
}

PhaseSpace phase_space_from_json(const Json& j) {
  return {kind_from_string(j.at("kind").get<std::string>()), j.at("beta").get<double>()};
}

Json to_json(const AnalyticState& f) {
  Json j = to_json(f.space());
  j["coeffs"] = coefficient_array(f.coeffs());
  return j;
}

AnalyticState analytic_state_from_json(const Json& j) {
  return {phase_space_from_json(j), coefficients_from(j.at("coeffs"))};
}

Json to_json(const FockVector& v) {
  return Json{{"k", v.k()}, {"coeffs", coefficient_array(v.coeffs())}};
}

FockVector fock_vector_from_json(const Json& j) {
  return {j.at("k").get<double>(), coefficients_from(j.at("coeffs"))};
}

Json to_json(const QuadratureGrid& grid) {
  Json j = to_json(grid.space());
  j["q"] = grid.kernel_power();
  j["radial_order"] = grid.radial_order();
  j["angular_order"] = grid.angular_order();
  j["exact_degree"] = grid.exact_degree();
  j["nodes"] = coefficient_array(grid.nodes());
  j["weights"] = Json(std::vector<double>(grid.weights().begin(), grid.weights().end()));
  return j;
}

Json to_json(const CheckReport& r) {
  Json j{{"label", r.label},
         {"lhs", number_or_null(r.lhs)},
         {"rhs", number_or_null(r.rhs)},
         {"gap", number_or_null(r.gap)},
         {"equality_attained", r.equality_attained},
         {"tolerance", r.tolerance}};
  if (r.cross_check) j["cross_check"] = *r.cross_check;
  return j;
}

CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.label = j.at("label").get<std::string>();
  r.lhs = number_from(j.at("lhs"));
  r.rhs = number_from(j.at("rhs"));
  r.gap = number_from(j.at("gap"));
  r.equality_attained = j.at("equality_attained").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  if (j.contains("cross_check")) r.cross_check = j.at("cross_check").get<double>();
  return r;
}

Json to_json(const RestartRecord& r) {
  return Json{{"restart", r.restart},
              {"value", r.value},
              {"iterations", r.iterations},
              {"gradient_norm", r.gradient_norm},
              {"converged", r.converged}};
}

RestartRecord restart_record_from_json(const Json& j) {
  RestartRecord r;
  r.restart = j.at("restart").get<int>();
  r.value = j.at("value").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.gradient_norm = j.at("gradient_norm").get<double>();
  r.converged = j.at("converged").get<bool>();
  return r;
}

Json to_json(const OptimizationResult& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) runs.push_back(to_json(run));
  return Json{{"space", to_json(r.space)},
              {"p", r.p},
              {"best_value", r.best_value},
              {"c_estimate", r.c_estimate},
              {"best_state", to_json(r.best_state)},
              {"coherent_overlap", r.coherent_overlap},
              {"nearest_w", to_json(r.nearest_w)},
              {"overlap_clamped", r.overlap_clamped},
              {"restarts", r.restarts},
              {"best_restart", r.best_restart},
              {"iterations", r.iterations},
              {"runs", runs},
              {"converged", r.converged}};
}

OptimizationResult optimization_result_from_json(const Json& j) {
  OptimizationResult r{.space = phase_space_from_json(j.at("space")),
                       .p = j.at("p").get<double>(),
                       .best_value = j.at("best_value").get<double>(),
                       .c_estimate = j.at("c_estimate").get<double>(),
                       .best_state = analytic_state_from_json(j.at("best_state")),
                       .coherent_overlap = j.at("coherent_overlap").get<double>(),
                       .nearest_w = complex_from_json(j.at("nearest_w")),
                       .overlap_clamped = j.at("overlap_clamped").get<bool>(),
                       .restarts = j.at("restarts").get<int>(),
                       .best_restart = j.at("best_restart").get<int>(),
                       .iterations = j.at("iterations").get<std::vector<int>>(),
                       .runs = {},
                       .converged = j.at("converged").get<bool>()};
  for (const Json& run : j.at("runs")) r.runs.push_back(restart_record_from_json(run));
  return r;
}

Json to_json(const ScanRow& row) {
  Json j{{"p", row.p},
         {"coherent_value", number_or_null(row.coherent_value)},
         {"coherent_c", number_or_null(row.coherent_c)},
         {"conjectural", row.conjectural}};
  if (row.result) {
    j["c_estimate"] = row.result->c_estimate;
    j["coherent_overlap"] = row.result->coherent_overlap;
    j["converged"] = row.result->converged;
    j["result"] = to_json(*row.result);
  } else {
    j["c_estimate"] = nullptr;
    j["coherent_overlap"] = nullptr;
    j["converged"] = false;
  }
  j["error"] = row.error;
  return j;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const CheckReport& r) {
  return csv_field(r.label) + "," + format_double(r.lhs) + "," + format_double(r.rhs) + "," +
         format_double(r.gap) + "," + flag(r.equality_attained);
}

std::string csv_rows(const OptimizationResult& r) {
  std::string out;
  for (const auto& run : r.runs) {
    out += format_double(r.p) + "," + std::to_string(run.restart) + "," + format_double(run.value) +
           "," + format_double(std::pow(run.value, 1.0 / r.p)) + "," +
           std::to_string(run.iterations) + "," + format_double(run.gradient_norm) + "," +
           flag(run.converged) + ",\n";
  }
  const auto& best = r.runs.at(r.best_restart);
  out += format_double(r.p) + ",summary," + format_double(r.best_value) + "," +
         format_double(r.c_estimate) + "," + std::to_string(best.iterations) + "," +
         format_double(best.gradient_norm) + "," + flag(r.converged) + "," +
         format_double(r.coherent_overlap) + "\n";
  return out;
}

std::string csv_row(const ScanRow& row) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return format_double(row.p) + "," + format_double(row.result ? row.result->c_estimate : nan) +
         "," + format_double(row.coherent_c) + "," +
         format_double(row.result ? row.result->coherent_overlap : nan) + "," +
         flag(row.result && row.result->converged) + "," + flag(row.conjectural) + "," +
         csv_field(row.error);
}

}  // namespace coherent
