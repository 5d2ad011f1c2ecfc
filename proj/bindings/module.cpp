// Python surface of the library: the algebra constructors, the amplitude
// maps, the dispersion relation, and a one-call driver that runs any CLI
// command in-process and returns its JSON report.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ercd/bosonic.hpp"
#include "ercd/report.hpp"
#include "ercd/solutions.hpp"
#include "ercd/version.hpp"

namespace py = pybind11;
using namespace ercd;

namespace {

// (linear, antilinear) matrix pair of a real-linear operator.
std::pair<CMat4, CMat4> op_pair(const RLinOp& op) { return {op.linear, op.antilinear}; }

std::vector<std::pair<CMat4, CMat4>> gamma_pairs() {
  const GammaBasis g = build_gammas();
  std::vector<std::pair<CMat4, CMat4>> out;
  out.reserve(8);
  for (int i = 0; i < 8; ++i) out.push_back(op_pair(g.gamma[i]));
  return out;
}

std::vector<std::pair<CMat4, CMat4>> breve_spin_pairs() {
  const BreveSpin s = build_breve_spin();
  return {op_pair(s.s[0]), op_pair(s.s[1]), op_pair(s.s[2])};
}

std::pair<std::string, bool> run_report(const std::string& command,
                                        const std::string& config_json) {
  RunConfig cfg;
  if (command == "poincare") cfg.grid_count = 43;
  if (!config_json.empty()) merge_config_text(cfg, config_json);
  validate_config(cfg);
  CommandResult result;
  if (command == "verify-algebra")
    result = cmd_verify_algebra(cfg);
  else if (command == "verify-duality")
    result = cmd_verify_duality(cfg);
  else if (command == "charges")
    result = cmd_charges(cfg);
  else if (command == "poincare")
    result = cmd_poincare(cfg);
  else
    throw std::invalid_argument("unknown command: " + command);
  return {report_to_string(result.report), result.pass};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real Clifford-Dirac algebra verification core";
  m.attr("__version__") = kVersion;

  m.def(
      "omega",
      [](double kx, double ky, double kz, double mass) {
        return omega(MomentumSample(Eigen::Vector3d(kx, ky, kz), mass));
      },
      py::arg("kx"), py::arg("ky"), py::arg("kz"), py::arg("mass") = 1.0,
      "Relativistic dispersion sqrt(m^2 + |k|^2).");

  m.def("xi_from_b_matrix", &xi_from_b_matrix,
        "Unitary map from b-amplitudes to xi-amplitudes.");
  m.def("b_from_xi_matrix", &b_from_xi_matrix,
        "Inverse of xi_from_b_matrix.");
  m.def("a_from_b_matrix", &a_from_b_matrix,
        "Unitary map from bosonic b-amplitudes to fermionic amplitudes.");
  m.def("b_from_a_matrix", &b_from_a_matrix,
        "Inverse of a_from_b_matrix.");

  m.def("gamma_matrices", &gamma_pairs,
        "The eight anticommuting orts as (linear, antilinear) matrix pairs; "
        "an operator acts as linear*z + antilinear*conj(z).");
  m.def("breve_spin_matrices", &breve_spin_pairs,
        "The spin-(1,0) su(2) triple as (linear, antilinear) matrix pairs.");

  m.def("run_report", &run_report, py::arg("command"), py::arg("config_json") = "",
        "Runs one verification command ('verify-algebra', 'verify-duality', "
        "'charges', 'poincare') with an optional flat JSON config override; "
        "returns (report_json_text, passed).");

  py::register_exception<ConfigError>(m, "ConfigError");
}
