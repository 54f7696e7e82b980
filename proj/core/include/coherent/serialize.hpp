#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>

#include "coherent/analytic_state.hpp"
#include "coherent/explorer.hpp"
#include "coherent/functionals.hpp"
#include "coherent/quadrature.hpp"
#include "coherent/weyl.hpp"

// JSON encodings used by the command-line tool. Complex numbers are [re, im]
// pairs; doubles are written with round-trip precision, so decode(encode(x))
// reproduces every value bit for bit.
namespace coherent {

using Json = nlohmann::json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const PhaseSpace& space);
PhaseSpace phase_space_from_json(const Json& j);

/// {kind, beta, coeffs: [[re, im], ...]}
Json to_json(const AnalyticState& f);
AnalyticState analytic_state_from_json(const Json& j);

/// {k, coeffs: [[re, im], ...]}
Json to_json(const FockVector& v);
FockVector fock_vector_from_json(const Json& j);

/// Debug dump: {kind, beta, q, radial_order, angular_order, exact_degree,
/// nodes: [[re, im], ...], weights: [...]}
Json to_json(const QuadratureGrid& grid);

Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

Json to_json(const RestartRecord& r);
RestartRecord restart_record_from_json(const Json& j);

Json to_json(const OptimizationResult& r);
OptimizationResult optimization_result_from_json(const Json& j);

Json to_json(const ScanRow& row);

/// Round-trip formatting of one double ("nan" for NaN).
std::string format_double(double x);
/// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

/// label,lhs,rhs,gap,equality_attained
inline constexpr std::string_view kCheckCsvHeader = "label,lhs,rhs,gap,equality_attained";
std::string csv_row(const CheckReport& r);

/// p,restart,value,c_estimate,iterations,gradient_norm,converged,coherent_overlap
/// Restart rows first, then a row with restart = "summary" for the winner.
inline constexpr std::string_view kOptimizationCsvHeader =
    "p,restart,value,c_estimate,iterations,gradient_norm,converged,coherent_overlap";
std::string csv_rows(const OptimizationResult& r);

/// p,c_estimate,coherent_c,coherent_overlap,converged,conjectural,error
inline constexpr std::string_view kScanCsvHeader =
    "p,c_estimate,coherent_c,coherent_overlap,converged,conjectural,error";
std::string csv_row(const ScanRow& row);

}  // namespace coherent
