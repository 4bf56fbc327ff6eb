#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropmoment/selftest.hpp"

namespace tropmoment::cli {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string subcommand;
  std::string lattice_path;
  std::string input_path;
  int terms = 64;
  std::optional<int> grid_n;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = kDefaultSeed;

  // theta
  std::string point;
  std::optional<std::string> kappa;
  bool normalized = false;
  bool subtract_origin = false;

  // ffheight
  int g = 1;
  std::string hnt = "0";
  std::string moments;

  // neron
  std::optional<std::string> ell;
  std::optional<std::string> nu;
  std::optional<double> q_re, q_im, z_re, z_im;
};

// Exit codes: 0 success, 1 selftest failure, 2 validation or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;

// Executes one subcommand, writing the report to `out` and warnings to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (honouring TROPMOMENT_TERMS when --terms is absent) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Flattens a report: scalar fields become "key,value" rows; arrays of objects
// become a header row followed by one row per element.
std::string to_csv(const nlohmann::json& report);

}  // namespace tropmoment::cli
