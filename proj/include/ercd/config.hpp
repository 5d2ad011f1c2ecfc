#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ercd {

// Configuration or I/O problems; the CLI maps these to exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat run configuration. A config file is a flat JSON object with exactly
// these field names; command-line flags override file values.
struct RunConfig {
  int grid_count = 9;    // nodes per axis, odd
  double grid_dk = 0.5;  // node spacing
  double mass = 1.0;

  double tol_alg = 1e-12;   // operator-identity checks
  double tol_link = 1e-11;  // spectral-link and duality checks
  double tol_cons = 1e-10;  // conservation drift / multiplication-only checks
  double tol_spec = 1e-6;   // derivative-bearing checks

  std::uint64_t seed = 1;
  std::string out;    // report file path; empty = stdout only
  std::string suite;  // run a single named suite; empty = all

  std::vector<double> times = {0.0, 0.5, 1.0, 2.5, 10.0};
  int refine = 2;                    // grid-refinement factor for convergence studies
  std::string ordering = "both";     // boost ordering study: left | right | both
  std::string modes = "grid";        // grid | single:k=0
  std::string scheme = "spectral";   // k-derivative realization: spectral | stencil4
};

// Overwrites fields of `cfg` present in the JSON file at `path`.
// Unknown keys or malformed values raise ConfigError.
void merge_config_file(RunConfig& cfg, const std::string& path);

// Same merge from an in-memory JSON object text.
void merge_config_text(RunConfig& cfg, const std::string& text);

// Range/consistency validation; raises ConfigError.
void validate_config(const RunConfig& cfg);

// Parses "0,0.5,1" style time lists; raises ConfigError.
std::vector<double> parse_times(const std::string& csv);

}  // namespace ercd
