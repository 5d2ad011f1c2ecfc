#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ercd/config.hpp"
#include "ercd/report.hpp"
#include "ercd/version.hpp"

namespace {

using ercd::CommandResult;
using ercd::RunConfig;

// One subcommand's flag set. Option pointers let file values be overridden
// only by flags the user actually passed (precedence: defaults < config
// file < command line).
struct CmdFlags {
  RunConfig flags;
  std::string config_path;
  std::string times_csv;

  CLI::Option* o_config = nullptr;
  CLI::Option* o_grid_count = nullptr;
  CLI::Option* o_grid_dk = nullptr;
  CLI::Option* o_mass = nullptr;
  CLI::Option* o_tol_alg = nullptr;
  CLI::Option* o_tol_link = nullptr;
  CLI::Option* o_tol_cons = nullptr;
  CLI::Option* o_tol_spec = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_suite = nullptr;
  CLI::Option* o_times = nullptr;
  CLI::Option* o_refine = nullptr;
  CLI::Option* o_ordering = nullptr;
  CLI::Option* o_modes = nullptr;
  CLI::Option* o_scheme = nullptr;
};

void add_flags(CLI::App* cmd, CmdFlags& f) {
  f.o_config = cmd->add_option("--config", f.config_path, "JSON config file");
  f.o_grid_count = cmd->add_option("--grid-count", f.flags.grid_count,
                                   "nodes per axis (odd)");
  f.o_grid_dk = cmd->add_option("--grid-dk", f.flags.grid_dk, "node spacing");
  f.o_mass = cmd->add_option("--mass", f.flags.mass, "mass parameter");
  f.o_tol_alg = cmd->add_option("--tol-alg", f.flags.tol_alg, "operator-identity tolerance");
  f.o_tol_link = cmd->add_option("--tol-link", f.flags.tol_link, "link/duality tolerance");
  f.o_tol_cons = cmd->add_option("--tol-cons", f.flags.tol_cons, "conservation tolerance");
  f.o_tol_spec = cmd->add_option("--tol-spec", f.flags.tol_spec,
                                 "derivative-check tolerance");
  f.o_seed = cmd->add_option("--seed", f.flags.seed, "random-amplitude seed");
  f.o_out = cmd->add_option("--out", f.flags.out, "report output path");
  f.o_suite = cmd->add_option("--suite", f.flags.suite, "run a single suite");
  f.o_times = cmd->add_option("--times", f.times_csv, "comma-separated time list");
  f.o_refine = cmd->add_option("--refine", f.flags.refine, "grid-refinement factor");
  f.o_ordering = cmd->add_option("--ordering", f.flags.ordering,
                                 "boost factor grouping: left|right|both");
  f.o_modes = cmd->add_option("--modes", f.flags.modes, "grid | single:k=0");
  f.o_scheme = cmd->add_option("--scheme", f.flags.scheme,
                               "k-derivative realization: spectral|stencil4");
}

RunConfig resolve(const CmdFlags& f, const RunConfig& defaults) {
  RunConfig cfg = defaults;
  if (f.o_config->count()) ercd::merge_config_file(cfg, f.config_path);
  if (f.o_grid_count->count()) cfg.grid_count = f.flags.grid_count;
  if (f.o_grid_dk->count()) cfg.grid_dk = f.flags.grid_dk;
  if (f.o_mass->count()) cfg.mass = f.flags.mass;
  if (f.o_tol_alg->count()) cfg.tol_alg = f.flags.tol_alg;
  if (f.o_tol_link->count()) cfg.tol_link = f.flags.tol_link;
  if (f.o_tol_cons->count()) cfg.tol_cons = f.flags.tol_cons;
  if (f.o_tol_spec->count()) cfg.tol_spec = f.flags.tol_spec;
  if (f.o_seed->count()) cfg.seed = f.flags.seed;
  if (f.o_out->count()) cfg.out = f.flags.out;
  if (f.o_suite->count()) cfg.suite = f.flags.suite;
  if (f.o_times->count()) cfg.times = ercd::parse_times(f.times_csv);
  if (f.o_refine->count()) cfg.refine = f.flags.refine;
  if (f.o_ordering->count()) cfg.ordering = f.flags.ordering;
  if (f.o_modes->count()) cfg.modes = f.flags.modes;
  if (f.o_scheme->count()) cfg.scheme = f.flags.scheme;
  return cfg;
}

int run(const CmdFlags& f, const RunConfig& defaults,
        const std::function<CommandResult(const RunConfig&)>& body) {
  try {
    const RunConfig cfg = resolve(f, defaults);
    ercd::validate_config(cfg);
    const CommandResult result = body(cfg);
    ercd::emit_report(result.report, cfg.out);
    return result.pass ? 0 : 1;
  } catch (const ercd::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verifier for the extended Clifford algebra, its "
               "bosonic representation and the shared solution families"};
  app.set_version_flag("--version", std::string(ercd::kVersion));
  app.require_subcommand(1);

  CmdFlags fa, fd, fc, fp;
  CLI::App* algebra = app.add_subcommand(
      "verify-algebra", "operator-algebra identities and the bosonic representation");
  add_flags(algebra, fa);
  CLI::App* duality = app.add_subcommand(
      "verify-duality", "spectral link, solution families and amplitude duality");
  add_flags(duality, fd);
  CLI::App* charges = app.add_subcommand(
      "charges", "charge conservation sweep and conserved-quantity tally");
  add_flags(charges, fc);
  CLI::App* poincare = app.add_subcommand(
      "poincare", "spacetime-symmetry generators, algebra closure and Casimirs");
  add_flags(poincare, fp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (algebra->parsed()) return run(fa, RunConfig{}, ercd::cmd_verify_algebra);
  if (duality->parsed()) return run(fd, RunConfig{}, ercd::cmd_verify_duality);
  if (charges->parsed()) return run(fc, RunConfig{}, ercd::cmd_charges);
  if (poincare->parsed()) {
    RunConfig defaults;
    defaults.grid_count = 43;  // derivative checks need interior resolution
    return run(fp, defaults, ercd::cmd_poincare);
  }
  return 2;
}
