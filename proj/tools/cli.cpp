#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <utility>

#include "coherent/coherent.hpp"
#include "verify.hpp"

namespace coherent::cli {
namespace {

Command command_from_string(const std::string& s) {
  if (s == "verify") return Command::Verify;
  if (s == "scan") return Command::Scan;
  if (s == "maximize") return Command::Maximize;
  if (s == "tables") return Command::Tables;
  throw UsageError("unknown command '" + s + "'");
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw UsageError("unknown format '" + s + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

PhaseSpace space_of(const RunConfig& c) { return {c.kind, c.beta}; }

GridOptions grid_of(const RunConfig& c) { return {c.radial_order, c.angular_order}; }

int optimizer_degree(const RunConfig& c, const PhaseSpace& space) {
  if (c.degree) return *c.degree;
  return space.kind() == Kind::Sphere ? space.sphere_degree() : 10;
}

Json tolerances_json() {
  return Json{{"equality_relative", kEqualityTolerance},
              {"normalization", kNormalizationTolerance},
              {"coherent_tail", kCoherentTailTolerance},
              {"gradient", OptimizerOptions{}.gradient_tolerance},
              {"max_iterations", OptimizerOptions{}.max_iterations}};
}

Json tables_json(const RunConfig& c) {
  const PhaseSpace space = space_of(c);
  Json coherent = Json::array();
  for (double p : c.p_values) {
    const double value = coherent_value(space, p);
    coherent.push_back({{"p", p}, {"coherent_value", value}, {"c", std::pow(value, 1.0 / p)}});
  }
  Json dims = Json::array();
  for (int n = 1; n <= 5; ++n) {
    const PhaseSpace scaled = space.with_beta(n * space.beta());
    dims.push_back({{"n", n},
                    {"beta", scaled.beta()},
                    {"dimension", dimension(scaled)},
                    {"power_bound", dimension(space) / dimension(scaled)}});
  }
  return Json{{"space", to_json(space)}, {"dimension", dimension(space)},
              {"coherent", coherent}, {"dimensions", dims}};
}

OptimizerOptions optimizer_options(const RunConfig& c) {
  OptimizerOptions o;
  o.grid = grid_of(c);
  return o;
}

// ---- text renderers --------------------------------------------------------

void write_metadata_comment(std::ostream& os, const Json& doc) {
  const Json& m = doc.at("metadata");
  os << "# coherent " << m.at("version").get<std::string>()
     << " command=" << m.at("command").get<std::string>() << " seed=" << m.at("seed").get<std::uint64_t>()
     << " timestamp=" << m.at("timestamp").get<std::string>() << "\n";
  os << "# config " << doc.at("config").dump() << "\n";
  os << "# tolerances " << m.at("tolerances").dump() << "\n";
}

std::string render_csv(const RunConfig& c, const Json& doc) {
  std::ostringstream os;
  write_metadata_comment(os, doc);
  const Json& results = doc.at("results");
  switch (c.command) {
    case Command::Verify:
      os << kCheckCsvHeader << ",expectation,passed\n";
      for (const Json& e : results.at("checks")) {
        os << csv_row(check_report_from_json(e.at("report"))) << ","
           << e.at("expectation").get<std::string>() << "," << (e.at("passed").get<bool>() ? "true" : "false")
           << "\n";
      }
      break;
    case Command::Maximize:
      os << kOptimizationCsvHeader << "\n";
      for (const Json& r : results) os << csv_rows(optimization_result_from_json(r));
      break;
    case Command::Scan:
      os << kScanCsvHeader << "\n";
      for (const Json& r : results) {
        ScanRow row;
        row.p = r.at("p").get<double>();
        row.coherent_value = r.at("coherent_value").is_null() ? NAN : r.at("coherent_value").get<double>();
        row.coherent_c = r.at("coherent_c").is_null() ? NAN : r.at("coherent_c").get<double>();
        row.conjectural = r.at("conjectural").get<bool>();
        row.error = r.at("error").get<std::string>();
        if (r.contains("result")) row.result = optimization_result_from_json(r.at("result"));
        os << csv_row(row) << "\n";
      }
      break;
    case Command::Tables:
      os << "p,coherent_value,c\n";
      for (const Json& r : results.at("coherent")) {
        os << format_double(r.at("p").get<double>()) << ","
           << format_double(r.at("coherent_value").get<double>()) << ","
           << format_double(r.at("c").get<double>()) << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_pretty(const RunConfig& c, const Json& doc) {
  std::ostringstream os;
  const Json& m = doc.at("metadata");
  os << "coherent " << m.at("version").get<std::string>() << "  " << m.at("command").get<std::string>()
     << "  " << to_string(c.kind) << " beta=" << c.beta << "  seed=" << c.seed << "\n\n";
  const Json& results = doc.at("results");
  os << std::setprecision(12);
  switch (c.command) {
    case Command::Verify:
      for (const Json& e : results.at("checks")) {
        const Json& r = e.at("report");
        os << (e.at("passed").get<bool>() ? "PASS " : "FAIL ") << std::left << std::setw(52)
           << r.at("label").get<std::string>() << " lhs=" << r.at("lhs") << " rhs=" << r.at("rhs")
           << " gap=" << r.at("gap") << "\n";
      }
      os << "\n" << (results.at("all_passed").get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
      break;
    case Command::Maximize:
      for (const Json& r : results) {
        os << "p=" << r.at("p") << "  best_value=" << r.at("best_value") << "  C(p)~" << r.at("c_estimate")
           << "  overlap=" << r.at("coherent_overlap") << "  converged=" << r.at("converged") << "\n";
      }
      break;
    case Command::Scan:
      os << std::setw(8) << "p" << std::setw(20) << "c_estimate" << std::setw(20) << "coherent_c"
         << std::setw(20) << "overlap" << "  converged\n";
      for (const Json& r : results) {
        os << std::setw(8) << r.at("p") << std::setw(20) << r.at("c_estimate").dump() << std::setw(20)
           << r.at("coherent_c").dump() << std::setw(20) << r.at("coherent_overlap").dump() << "  "
           << r.at("converged") << (r.at("conjectural").get<bool>() ? "  (conjectural)" : "") << "\n";
      }
      break;
    case Command::Tables:
      os << "dim(beta) = " << results.at("dimension") << "\n\n";
      os << std::setw(8) << "p" << std::setw(24) << "coherent_value" << std::setw(24) << "c" << "\n";
      for (const Json& r : results.at("coherent")) {
        os << std::setw(8) << r.at("p") << std::setw(24) << r.at("coherent_value").get<double>()
           << std::setw(24) << r.at("c").get<double>() << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Scan: return "scan";
    case Command::Maximize: return "maximize";
    case Command::Tables: return "tables";
  }
  return "unknown";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Pretty: return "pretty";
  }
  return "unknown";
}

Json to_json(const RunConfig& c) {
  return Json{{"command", to_string(c.command)},
              {"space", std::string(coherent::to_string(c.kind))},
              {"beta", c.beta},
              {"p", c.p_values},
              {"degree", c.degree ? Json(*c.degree) : Json(nullptr)},
              {"restarts", c.restarts},
              {"seed", c.seed},
              {"radial_order", c.radial_order},
              {"angular_order", c.angular_order},
              {"out", c.out},
              {"format", to_string(c.format)}};
}

RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.command = command_from_string(j.at("command").get<std::string>());
  c.kind = kind_from_string(j.at("space").get<std::string>());
  c.beta = j.at("beta").get<double>();
  c.p_values = j.at("p").get<std::vector<double>>();
  if (!j.at("degree").is_null()) c.degree = j.at("degree").get<int>();
  c.restarts = j.at("restarts").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.radial_order = j.at("radial_order").get<int>();
  c.angular_order = j.at("angular_order").get<int>();
  c.out = j.at("out").get<std::string>();
  c.format = format_from_string(j.at("format").get<std::string>());
  return c;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Coherent-state L^p concentration toolkit", "coherent"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig c;
  std::string space = "plane";
  std::string format = "json";
  int degree = -1;

  app.add_option("--space", space, "Phase space: plane | disc | sphere")
      ->check(CLI::IsMember({"plane", "disc", "sphere"}));
  app.add_option("--beta", c.beta, "Representation parameter beta");
  app.add_option("--p", c.p_values, "Comma-separated exponents p")->delimiter(',');
  app.add_option("--degree", degree, "Polynomial degree of states")->check(CLI::NonNegativeNumber);
  app.add_option("--restarts", c.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--radial-order", c.radial_order, "Radial quadrature order (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--angular-order", c.angular_order, "Angular quadrature order (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", c.out, "Output file (default: stdout)");
  app.add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

  const std::pair<const char*, const char*> subcommands[] = {
      {"verify", "Check the inequalities and their equality cases numerically"},
      {"scan", "Estimate the best L^p constant for each p"},
      {"maximize", "Maximize the L^p functional over states of bounded degree"},
      {"tables", "Print coherent-state values and dimension constants"},
  };
  for (const auto& [name, help] : subcommands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  c.command = command_from_string(app.get_subcommands().front()->get_name());
  c.kind = kind_from_string(space);
  c.format = format_from_string(format);
  if (degree >= 0) c.degree = degree;
  if (c.p_values.empty()) throw UsageError("--p needs at least one value");
  // An impossible geometry is a config error; later domain failures exit 3.
  (void)PhaseSpace(c.kind, c.beta);
  return c;
}

Json run_json(const RunConfig& c, const std::string& timestamp, bool* all_passed) {
  const PhaseSpace space = space_of(c);
  Json results;
  bool passed = true;
  switch (c.command) {
    case Command::Verify: {
      const auto checks = run_verification(space, c.degree, c.seed, grid_of(c));
      Json arr = Json::array();
      for (const auto& e : checks) {
        arr.push_back({{"report", to_json(e.report)}, {"expectation", e.expectation}, {"passed", e.passed}});
        passed = passed && e.passed;
      }
      results = Json{{"checks", arr}, {"all_passed", passed}};
      break;
    }
    case Command::Maximize: {
      results = Json::array();
      for (double p : c.p_values) {
        const auto r =
            maximize_lp(space, p, optimizer_degree(c, space), c.restarts, c.seed, optimizer_options(c));
        Json j = coherent::to_json(r);
        j["coherent_value"] = coherent_value(space, p);
        results.push_back(j);
      }
      break;
    }
    case Command::Scan: {
      results = Json::array();
      for (const auto& row : scan_p(space, c.p_values, optimizer_degree(c, space), c.restarts, c.seed,
                                    optimizer_options(c))) {
        results.push_back(coherent::to_json(row));
      }
      break;
    }
    case Command::Tables:
      results = tables_json(c);
      break;
  }
  if (all_passed) *all_passed = passed;
  return Json{{"metadata",
               {{"tool", "coherent"},
                {"version", kVersion},
                {"command", to_string(c.command)},
                {"seed", c.seed},
                {"tolerances", tolerances_json()},
                {"timestamp", timestamp}}},
              {"config", to_json(c)},
              {"results", results}};
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  bool passed = true;
  Json doc;
  try {
    doc = run_json(c, utc_timestamp(), &passed);
  } catch (const Error& e) {
    err << "error: parameter '" << e.parameter() << "': " << e.what() << "\n";
    return kExitNumeric;
  }

  std::string text;
  switch (c.format) {
    case Format::Json: text = doc.dump(2) + "\n"; break;
    case Format::Csv: text = render_csv(c, doc); break;
    case Format::Pretty: text = render_pretty(c, doc); break;
  }
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file '" << c.out << "'\n";
      return kExitUsage;
    }
    file << text;
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: parameter '" << e.parameter() << "': " << e.what() << "\n";
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace coherent::cli
