#include "ercd/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ercd/algebra.hpp"
#include "ercd/bosonic.hpp"
#include "ercd/charges.hpp"
#include "ercd/poincare.hpp"
#include "ercd/solutions.hpp"
#include "ercd/spectral.hpp"
#include "ercd/version.hpp"

namespace ercd {

namespace {

using nlohmann::json;

json config_echo(const RunConfig& cfg) {
  json j;
  j["grid_count"] = cfg.grid_count;
  j["grid_dk"] = cfg.grid_dk;
  j["mass"] = cfg.mass;
  j["tol_alg"] = cfg.tol_alg;
  j["tol_link"] = cfg.tol_link;
  j["tol_cons"] = cfg.tol_cons;
  j["tol_spec"] = cfg.tol_spec;
  j["seed"] = cfg.seed;
  j["out"] = cfg.out;
  j["suite"] = cfg.suite;
  j["times"] = cfg.times;
  j["refine"] = cfg.refine;
  j["ordering"] = cfg.ordering;
  j["modes"] = cfg.modes;
  j["scheme"] = cfg.scheme;
  return j;
}

json rows_json(const std::vector<RelationReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["id"] = r.id;
    row["residual"] = r.residual;
    row["tolerance"] = r.tolerance;
    row["pass"] = r.pass;
    arr.push_back(row);
  }
  return arr;
}

// Builds the per-command report: runs only the requested suites, aggregates
// pass flags, stamps the envelope.
class ReportBuilder {
 public:
  ReportBuilder(const char* command, const RunConfig& cfg,
                std::vector<std::string> known_suites)
      : cfg_(cfg), known_(std::move(known_suites)), start_(clock::now()) {
    if (!cfg.suite.empty() &&
        std::find(known_.begin(), known_.end(), cfg.suite) == known_.end()) {
      std::string names;
      for (const auto& n : known_) names += (names.empty() ? "" : ", ") + n;
      throw ConfigError("unknown suite '" + cfg.suite + "' (available: " + names + ")");
    }
    report_["command"] = command;
    report_["version"] = kVersion;
    report_["seed"] = cfg.seed;
    report_["config"] = config_echo(cfg);
    report_["notes"] = json::array(
        {"Continuum delta-normalized modes are represented as unit-weight grid modes; "
         "the continuum normalization prefactor is absorbed into the quadrature weight "
         "dk^3 used by every charge and norm sum."});
    report_["suites"] = json::object();
  }

  bool wants(const std::string& name) const {
    return cfg_.suite.empty() || cfg_.suite == name;
  }

  void add_suite(const std::string& name, const std::vector<RelationReport>& rows,
                 json data = json::object()) {
    json s;
    s["relations"] = rows_json(rows);
    s["pass"] = all_pass(rows);
    s["max_residual"] = max_residual(rows);
    if (!data.empty()) s["data"] = std::move(data);
    report_["suites"][name] = std::move(s);
    pass_ = pass_ && all_pass(rows);
  }

  CommandResult finish() {
    report_["pass"] = pass_;
    const auto dt = std::chrono::duration<double>(clock::now() - start_).count();
    report_["wall_time_s"] = dt;
    return CommandResult{std::move(report_), pass_};
  }

 private:
  using clock = std::chrono::steady_clock;
  const RunConfig& cfg_;
  std::vector<std::string> known_;
  clock::time_point start_;
  json report_;
  bool pass_ = true;
};

RelationReport bound_below(const std::string& id, double value, double floor) {
  // Negative-control rows: pass when the value is at least `floor`.
  RelationReport r = make_relation(id, value, floor);
  r.pass = value >= floor;
  return r;
}

MomentumGrid grid_from_config(const RunConfig& cfg) {
  if (cfg.modes == "single:k=0") return MomentumGrid(1, cfg.grid_dk, cfg.mass);
  return MomentumGrid(cfg.grid_count, cfg.grid_dk, cfg.mass);
}

double amp_max_diff(const AmplitudeSet& a, const AmplitudeSet& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i)
    m = std::max(m, (a.amp[i] - b.amp[i]).cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

CommandResult cmd_verify_algebra(const RunConfig& cfg) {
  ReportBuilder rb("verify-algebra", cfg,
                   {"anticommutation", "so8", "ort-rank", "so6", "w-identities",
                    "conjugation", "breve-spin"});
  const GammaBasis g = build_gammas();
  const SpinTensor tensor = build_spin_tensor(g);

  if (rb.wants("anticommutation"))
    rb.add_suite("anticommutation", check_anticommutation(g, cfg.tol_alg));

  if (rb.wants("so8")) rb.add_suite("so8", check_so8(tensor, cfg.tol_alg));

  if (rb.wants("ort-rank")) {
    const int rank = ort_rank(tensor, 1e-8);
    std::vector<RelationReport> rows{
        make_relation("ort-rank-29", std::abs(rank - 29), 0.0)};
    rb.add_suite("ort-rank", rows, json{{"rank", rank}, {"svd_cutoff", 1e-8}});
  }

  if (rb.wants("so6")) {
    std::vector<RLinOp> ops = so6_generators(tensor);
    std::vector<std::string> names;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b)
        names.push_back("s" + std::to_string(a) + std::to_string(b));
    names.push_back("unit");
    std::vector<MomentumSample> samples{
        MomentumSample(Eigen::Vector3d(0, 0, 0), cfg.mass),
        MomentumSample(Eigen::Vector3d(0.5, 0, 0), cfg.mass),
        MomentumSample(Eigen::Vector3d(1.0, -0.5, 2.0), cfg.mass)};
    rb.add_suite("so6", check_fw_invariance(ops, names, samples, {0.0, 0.7, 2.5},
                                            cfg.tol_alg));
  }

  const WPair wp = build_w();
  const BreveBasis breve = build_breve_basis();

  if (rb.wants("w-identities"))
    rb.add_suite("w-identities", check_w_identities(wp, cfg.tol_alg));

  if (rb.wants("conjugation"))
    rb.add_suite("conjugation", check_conjugation(wp, g, breve, cfg.tol_alg));

  if (rb.wants("breve-spin")) {
    std::vector<RelationReport> rows;
    const BreveSpin explicit_spin = build_breve_spin();
    const BreveSpin composed = build_breve_spin_composed(breve);
    for (int c = 0; c < 3; ++c)
      rows.push_back(make_relation("spin-composed-vs-explicit(s" + std::to_string(c + 1) + ")",
                                   op_norm_diff(explicit_spin.s[c], composed.s[c]),
                                   cfg.tol_alg));
    for (const auto& r : check_su2_closure(explicit_spin, cfg.tol_alg)) rows.push_back(r);

    // Spin-projection labels: i*s3 acts diagonally with labels (+1,-1,0,0).
    const RLinOp is3 = scale(Complex(0.0, 1.0), explicit_spin.s[2]);
    const double labels[4] = {1.0, -1.0, 0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
      CVec4 d = CVec4::Zero();
      d(j) = 1.0;
      rows.push_back(make_relation("spin3-label(d" + std::to_string(j + 1) + ")",
                                   (ercd::apply(is3, d) - labels[j] * d).norm(), cfg.tol_alg));
    }
    // The fourth column is annihilated by all three components.
    double annih = 0.0;
    for (int c = 0; c < 3; ++c) {
      CVec4 d4 = CVec4::Zero();
      d4(3) = 1.0;
      annih = std::max(annih, ercd::apply(explicit_spin.s[c], d4).norm());
    }
    rows.push_back(make_relation("spin-annihilates-d4", annih, cfg.tol_alg));
    rb.add_suite("breve-spin", rows);
  }

  return rb.finish();
}

CommandResult cmd_verify_duality(const RunConfig& cfg) {
  ReportBuilder rb("verify-duality", cfg,
                   {"fw-link", "solutions", "duality", "serialization"});
  const MomentumGrid grid = grid_from_config(cfg);

  if (rb.wants("fw-link")) {
    double r_inv = 0.0, r_diag = 0.0, r_spinor = 0.0, r_adj = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const MomentumSample s = grid.sample(i);
      const CMat4 vp = v_plus(s), vm = v_minus(s);
      const double w = omega(s);
      CMat4 g0w = CMat4::Zero();
      g0w.diagonal() << w, w, -w, -w;
      r_inv = std::max(r_inv, (vp * vm - CMat4::Identity()).cwiseAbs().maxCoeff());
      r_diag = std::max(
          r_diag, (vp * g0w * vm - dirac_hamiltonian(s)).cwiseAbs().maxCoeff());
      r_adj = std::max(r_adj, (vm - vp.adjoint().eval()).cwiseAbs().maxCoeff());
      const auto spinors = dirac_spinors(s);
      for (int r = 0; r < 2; ++r) {
        CVec4 d = CVec4::Zero();
        d(r) = 1.0;
        r_spinor = std::max(r_spinor, (vp * d - spinors[r]).cwiseAbs().maxCoeff());
      }
    }
    std::vector<RelationReport> rows{
        make_relation("vplus-vminus-identity", r_inv, cfg.tol_link),
        make_relation("vplus-diagonalizes-h", r_diag, cfg.tol_link),
        make_relation("vminus-is-adjoint", r_adj, cfg.tol_link),
        make_relation("vplus-columns-are-spinors", r_spinor, cfg.tol_link)};
    rb.add_suite("fw-link", rows, json{{"nodes", grid.size()}});
  }

  if (rb.wants("solutions")) {
    std::vector<RelationReport> rows;
    const double t_check = 1.3;
    const struct {
      AmpKind kind;
      EqKind picture;
      const char* label;
    } cases[] = {{AmpKind::fermionic, EqKind::fw, "fermionic-fw"},
                 {AmpKind::fermionic, EqKind::dirac, "fermionic-dirac"},
                 {AmpKind::bosonic_b, EqKind::fw, "bosonic-fw"},
                 {AmpKind::bosonic_b, EqKind::dirac, "bosonic-dirac"}};
    for (const auto& c : cases) {
      const AmplitudeSet a = random_amplitudes(grid, c.kind, cfg.seed);
      SpinorFieldK f;
      if (c.kind == AmpKind::fermionic)
        f = c.picture == EqKind::fw ? synth_fw_fermionic(a) : synth_dirac_fermionic(a);
      else
        f = c.picture == EqKind::fw ? synth_fw_bosonic(a) : synth_dirac_bosonic(a);
      rows.push_back(make_relation(std::string("equation-residual(") + c.label + ")",
                                   equation_residual(f, c.picture, t_check),
                                   cfg.tol_link));
      // Sanity control: polluting the decaying branch with raised-branch
      // content must produce an O(1) residual.
      SpinorFieldK bad = f;
      for (std::size_t i = 0; i < bad.pos.size(); ++i) bad.pos[i] += 0.3 * f.neg[i];
      rows.push_back(bound_below(std::string("negative-control(") + c.label + ")",
                                 equation_residual(bad, c.picture, t_check), 1e-2));
    }
    rb.add_suite("solutions", rows, json{{"time", t_check}});
  }

  if (rb.wants("duality")) {
    std::vector<RelationReport> rows;
    const int n_sets = 50;
    double worst = 0.0;
    for (int i = 0; i < n_sets; ++i) {
      const AmplitudeSet b =
          random_amplitudes(grid, AmpKind::bosonic_b, cfg.seed + static_cast<std::uint64_t>(i));
      worst = std::max(worst, field_max_diff(synth_dirac_bosonic(b),
                                             synth_dirac_fermionic(a_from_b(b))));
    }
    rows.push_back(make_relation("commuting-square", worst, cfg.tol_link));

    const CMat4 m_ab = a_from_b_matrix(), m_ba = b_from_a_matrix();
    const CMat4 m_xb = xi_from_b_matrix(), m_bx = b_from_xi_matrix();
    const double tol_unitary = 1e-14;
    rows.push_back(make_relation(
        "amp-map-mutual-inverse",
        std::max((m_ab * m_ba - CMat4::Identity()).cwiseAbs().maxCoeff(),
                 (m_ba * m_ab - CMat4::Identity()).cwiseAbs().maxCoeff()),
        tol_unitary));
    rows.push_back(make_relation(
        "amp-map-unitary",
        (m_ab.adjoint() * m_ab - CMat4::Identity()).cwiseAbs().maxCoeff(), tol_unitary));
    rows.push_back(make_relation(
        "xi-map-mutual-inverse",
        std::max((m_xb * m_bx - CMat4::Identity()).cwiseAbs().maxCoeff(),
                 (m_bx * m_xb - CMat4::Identity()).cwiseAbs().maxCoeff()),
        tol_unitary));

    // Analysis inverts synthesis in both pictures and all amplitude kinds.
    for (AmpKind kind : {AmpKind::fermionic, AmpKind::bosonic_b, AmpKind::bosonic_xi}) {
      const AmplitudeSet a = random_amplitudes(grid, kind, cfg.seed + 9001);
      SpinorFieldK f_fw, f_dirac;
      if (kind == AmpKind::fermionic) {
        f_fw = synth_fw_fermionic(a);
        f_dirac = synth_dirac_fermionic(a);
      } else {
        f_fw = synth_fw_bosonic(a);
        f_dirac = synth_dirac_bosonic(a);
      }
      rows.push_back(make_relation(
          std::string("analyze-roundtrip-fw(") + amp_kind_name(kind) + ")",
          amp_max_diff(analyze(f_fw, kind, EqKind::fw), a), 1e-12));
      rows.push_back(make_relation(
          std::string("analyze-roundtrip-dirac(") + amp_kind_name(kind) + ")",
          amp_max_diff(analyze(f_dirac, kind, EqKind::dirac), a), 1e-12));
    }

    // The spectral transform links the two synthesized pictures nodewise.
    const AmplitudeSet a = random_amplitudes(grid, AmpKind::fermionic, cfg.seed + 7);
    rows.push_back(make_relation(
        "transform-links-pictures",
        field_max_diff(to_dirac(synth_fw_fermionic(a)), synth_dirac_fermionic(a)),
        cfg.tol_link));
    rb.add_suite("duality", rows, json{{"sets", n_sets}});
  }

  if (rb.wants("serialization")) {
    std::vector<RelationReport> rows;
    const AmplitudeSet a = random_amplitudes(grid, AmpKind::bosonic_b, cfg.seed + 3);
    const std::string text = amplitudes_to_json(a);
    const AmplitudeSet back = amplitudes_from_json(text);
    const bool amp_ok = back.kind == a.kind && back.grid == a.grid &&
                        amp_max_diff(back, a) == 0.0 && amplitudes_to_json(back) == text;
    rows.push_back(make_relation("amplitude-roundtrip-bit-exact", amp_ok ? 0.0 : 1.0, 0.0));

    const SpinorFieldK f = fw_propagate(synth_fw_bosonic(a), 0.7);
    const std::string ftext = field_to_json(f);
    const SpinorFieldK fback = field_from_json(ftext);
    const bool field_ok = field_max_diff(fback, f) == 0.0 && fback.time == f.time &&
                          field_to_json(fback) == ftext;
    rows.push_back(make_relation("field-roundtrip-bit-exact", field_ok ? 0.0 : 1.0, 0.0));
    rb.add_suite("serialization", rows);
  }

  return rb.finish();
}

CommandResult cmd_charges(const RunConfig& cfg) {
  ReportBuilder rb("charges", cfg, {"conservation", "bookkeeping"});
  const MomentumGrid grid = grid_from_config(cfg);

  if (rb.wants("conservation")) {
    std::vector<RelationReport> rows;
    const int n_sets = 20;
    for (SpinChoice choice :
         {SpinChoice::fermi_field, SpinChoice::fermi_qm, SpinChoice::bose}) {
      const AmpKind kind =
          choice == SpinChoice::bose ? AmpKind::bosonic_b : AmpKind::fermionic;
      double worst[3] = {0.0, 0.0, 0.0};
      for (int set = 0; set < n_sets; ++set) {
        const AmplitudeSet amps =
            random_amplitudes(grid, kind, cfg.seed + static_cast<std::uint64_t>(set));
        const auto reports = conservation_sweep(amps, choice, cfg.times);
        for (int c = 0; c < 3; ++c)
          worst[c] = std::max(worst[c], reports[c].max_drift);
      }
      for (int c = 0; c < 3; ++c)
        rows.push_back(make_relation(std::string("drift(") + spin_choice_name(choice) +
                                         ",s" + std::to_string(c + 1) + ")",
                                     worst[c], cfg.tol_cons));
    }
    // All charges of the zero amplitude set vanish identically.
    double zero_mag = 0.0;
    for (SpinChoice choice :
         {SpinChoice::fermi_field, SpinChoice::fermi_qm, SpinChoice::bose}) {
      const AmpKind kind =
          choice == SpinChoice::bose ? AmpKind::bosonic_b : AmpKind::fermionic;
      const AmplitudeSet zero = AmplitudeSet::zero(grid, kind);
      for (int c = 1; c <= 3; ++c) zero_mag = std::max(zero_mag, std::abs(charge(zero, choice, c)));
    }
    rows.push_back(make_relation("zero-amplitudes-zero-charge", zero_mag, 0.0));
    rb.add_suite("conservation", rows, json{{"sets", n_sets}, {"times", cfg.times}});
  }

  if (rb.wants("bookkeeping")) {
    const auto table = charge_total_count_report();
    json data = json::object();
    json arr = json::array();
    for (const auto& row : table) {
      json r;
      r["family"] = row.family;
      r["name"] = row.name;
      r["status"] = row.status;
      r["note"] = row.note;
      arr.push_back(r);
    }
    data["table"] = std::move(arr);
    std::vector<RelationReport> rows{make_relation(
        "bookkeeping-rows-44", std::abs(static_cast<double>(table.size()) - 44.0), 0.0)};
    rb.add_suite("bookkeeping", rows, std::move(data));
  }

  return rb.finish();
}

namespace {

DerivScheme scheme_from_config(const RunConfig& cfg) {
  return cfg.scheme == "stencil4" ? DerivScheme::stencil4 : DerivScheme::spectral;
}

// Worst FW-commutation residual over the six derivative-bearing generators.
double j_commutation_metric(const SpinorFieldK& f, const GenOptions& opt, double t) {
  double worst = 0.0;
  for (GeneratorId g : {GeneratorId::j23, GeneratorId::j31, GeneratorId::j12,
                        GeneratorId::j01, GeneratorId::j02, GeneratorId::j03})
    worst = std::max(worst, check_fw_commutation(g, f, t, opt));
  return worst;
}

}  // namespace

CommandResult cmd_poincare(const RunConfig& cfg) {
  ReportBuilder rb("poincare", cfg,
                   {"structure-table", "algebra", "fw-commutation", "casimir",
                    "ordering", "jacobi", "refinement"});
  const MomentumGrid grid(cfg.grid_count, cfg.grid_dk, cfg.mass);
  GenOptions opt;
  opt.scheme = scheme_from_config(cfg);
  opt.ordering = cfg.ordering == "left"    ? BoostOrdering::left
                 : cfg.ordering == "right" ? BoostOrdering::right
                                           : BoostOrdering::sym;
  const SpinorFieldK f = make_test_field(grid, cfg.seed, 0.7);

  if (rb.wants("structure-table")) {
    const auto gens = all_generators();
    json table = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        table.push_back(bracket_description(gens[i], gens[j]));
    // The table itself must satisfy the Jacobi identity exactly.
    const auto jac = check_table_jacobi();
    std::vector<RelationReport> rows{make_relation(
        "table-jacobi-exact", max_residual(jac), 0.0)};
    rb.add_suite("structure-table", rows, json{{"brackets", std::move(table)}});
  }

  if (rb.wants("algebra"))
    rb.add_suite("algebra", check_poincare_algebra(f, cfg.tol_cons, cfg.tol_spec, opt),
                 json{{"field_time", f.time}, {"scheme", cfg.scheme}});

  if (rb.wants("fw-commutation")) {
    std::vector<RelationReport> rows;
    for (double t : {0.0, 0.5, 1.0})
      for (GeneratorId g : all_generators()) {
        const double tol = generator_needs_derivative(g) ? cfg.tol_spec : cfg.tol_cons;
        char id[64];
        std::snprintf(id, sizeof id, "fw-commute(%s,t=%g)", generator_name(g), t);
        rows.push_back(make_relation(id, check_fw_commutation(g, f, t, opt), tol));
      }
    rb.add_suite("fw-commutation", rows);
  }

  if (rb.wants("casimir")) {
    const CasimirResult c = casimir_check(f, opt);
    std::vector<RelationReport> rows{
        make_relation("casimir-mass-shell", c.c1_residual, cfg.tol_cons),
        make_relation("casimir-spin-matrix", c.c2_residual, cfg.tol_alg)};
    rb.add_suite("casimir", rows);
  }

  if (rb.wants("ordering")) {
    std::vector<RelationReport> rows;
    rows.push_back(make_relation("boost-ordering-discrepancy",
                                 ordering_discrepancy(f, opt.scheme), cfg.tol_alg));
    json data = json::object();
    if (cfg.ordering == "both") {
      // Maximum boost-involving algebra residual under each grouping.
      double worst_lr[2] = {0.0, 0.0};
      const BoostOrdering ords[2] = {BoostOrdering::left, BoostOrdering::right};
      const char* names[2] = {"left", "right"};
      for (int v = 0; v < 2; ++v) {
        GenOptions o{opt.scheme, ords[v]};
        for (const auto& row : check_poincare_algebra(f, cfg.tol_cons, cfg.tol_spec, o))
          if (row.id.find("j0") != std::string::npos)
            worst_lr[v] = std::max(worst_lr[v], row.residual);
        rows.push_back(make_relation(std::string("algebra-boost-max(") + names[v] + ")",
                                     worst_lr[v], cfg.tol_spec));
      }
      data["better_ordering"] = worst_lr[0] < worst_lr[1]   ? "left"
                                : worst_lr[1] < worst_lr[0] ? "right"
                                                            : "tie";
    }
    rb.add_suite("ordering", rows, std::move(data));
  }

  if (rb.wants("jacobi"))
    rb.add_suite("jacobi", check_field_jacobi(f, cfg.tol_spec, 3, cfg.seed + 77, opt));

  if (rb.wants("refinement") && cfg.refine > 1) {
    const int fine_count = cfg.refine * (cfg.grid_count - 1) + 1;
    const MomentumGrid fine_grid(fine_count, cfg.grid_dk / cfg.refine, cfg.mass);
    const SpinorFieldK f_fine = make_test_field(fine_grid, cfg.seed, 0.7);
    const double t_metric = 1.0;
    std::vector<RelationReport> rows;
    json data = json::object();

    // Default-scheme study: the commutation residual must drop at least 8x.
    {
      const double base = j_commutation_metric(f, opt, t_metric);
      GenOptions fine_opt = opt;
      const double fine = j_commutation_metric(f_fine, fine_opt, t_metric);
      data["base_residual"] = base;
      data["fine_residual"] = fine;
      data["improvement"] = fine > 0.0 ? base / fine : 0.0;
      rows.push_back(make_relation("refinement-improvement", fine / base, 1.0 / 8.0));
      rows.push_back(make_relation("refinement-base-within-tol", base, cfg.tol_spec));
    }
    // Fixed-order stencil study: h^4 convergence, ratio >= 8 per halving.
    {
      GenOptions sopt{DerivScheme::stencil4, opt.ordering};
      const double base = j_commutation_metric(f, sopt, t_metric);
      const double fine = j_commutation_metric(f_fine, sopt, t_metric);
      data["stencil4_base_residual"] = base;
      data["stencil4_fine_residual"] = fine;
      data["stencil4_improvement"] = fine > 0.0 ? base / fine : 0.0;
      rows.push_back(make_relation("stencil4-refinement-improvement", fine / base, 1.0 / 8.0));
    }
    data["fine_count"] = fine_count;
    rb.add_suite("refinement", rows, std::move(data));
  }

  return rb.finish();
}

std::string report_to_string(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

void emit_report(const nlohmann::json& report, const std::string& out_path) {
  const std::string text = report_to_string(report);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << text;
    if (!out) throw ConfigError("failed writing output file: " + out_path);
  }
}

}  // namespace ercd
