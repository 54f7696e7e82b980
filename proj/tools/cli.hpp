#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coherent/serialize.hpp"

namespace coherent::cli {

enum class Command { Verify, Scan, Maximize, Tables };
enum class Format { Json, Csv, Pretty };

struct RunConfig {
  Command command = Command::Verify;
  Kind kind = Kind::Plane;
  double beta = 1.0;
  std::vector<double> p_values = {4.0};
  std::optional<int> degree;  // per-command default when unset
  int restarts = 20;
  std::uint64_t seed = 1;
  int radial_order = 0;   // 0 = library default
  int angular_order = 0;  // 0 = library default
  std::string out;        // empty = stdout
  Format format = Format::Json;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Bad command line. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

std::string to_string(Command c);
std::string to_string(Format f);

Json to_json(const RunConfig& config);
RunConfig run_config_from_json(const Json& j);

/// Parses argv (argv[0] is the program name). Throws UsageError; returns
/// nullopt when help was requested and printed to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs one command and writes its artifact to config.out (or `out` when
/// empty). Returns the process exit status; numeric-domain failures are
/// reported on `err` with the offending parameter named.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Builds the full JSON document for a command without writing it.
/// `timestamp` lands in metadata.timestamp and nowhere else.
Json run_json(const RunConfig& config, const std::string& timestamp, bool* all_passed = nullptr);

/// Parses, runs, and maps every failure to its exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coherent::cli
