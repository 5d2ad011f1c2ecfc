#include "ercd/solutions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace ercd {

namespace {

const Complex kI(0.0, 1.0);
const double kRt2 = std::sqrt(2.0);

void require_kind(const AmplitudeSet& a, AmpKind want, const char* op) {
  if (a.kind != want)
    throw std::invalid_argument(std::string(op) + ": expected " + amp_kind_name(want) +
                                " amplitudes, got " + amp_kind_name(a.kind));
}

AmplitudeSet mapped(const AmplitudeSet& in, const CMat4& m, AmpKind out_kind) {
  AmplitudeSet out = in;
  out.kind = out_kind;
  for (auto& v : out.amp) v = m * v;
  return out;
}

}  // namespace

const char* amp_kind_name(AmpKind k) {
  switch (k) {
    case AmpKind::fermionic:
      return "fermionic";
    case AmpKind::bosonic_b:
      return "bosonic-b";
    case AmpKind::bosonic_xi:
      return "bosonic-xi";
  }
  return "?";
}

AmpKind amp_kind_from_name(const std::string& name) {
  if (name == "fermionic") return AmpKind::fermionic;
  if (name == "bosonic-b") return AmpKind::bosonic_b;
  if (name == "bosonic-xi") return AmpKind::bosonic_xi;
  throw std::invalid_argument("unknown amplitude kind: " + name);
}

AmplitudeSet AmplitudeSet::zero(const MomentumGrid& g, AmpKind kind) {
  AmplitudeSet a;
  a.grid = g;
  a.kind = kind;
  a.amp.assign(g.size(), CVec4::Zero());
  return a;
}

double amp_norm2(const AmplitudeSet& a) {
  double s = 0.0;
  for (const auto& v : a.amp) s += v.squaredNorm();
  return a.grid.weight() * s;
}

CMat4 xi_from_b_matrix() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = -1.0 / kRt2;
  m(1, 3) = -1.0 / kRt2;
  m(2, 1) = -kI;
  m(3, 2) = 1.0 / kRt2;
  m(3, 3) = -1.0 / kRt2;
  return m;
}

CMat4 b_from_xi_matrix() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = kI;
  m(2, 1) = -1.0 / kRt2;
  m(2, 3) = 1.0 / kRt2;
  m(3, 1) = -1.0 / kRt2;
  m(3, 3) = -1.0 / kRt2;
  return m;
}

CMat4 a_from_b_matrix() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = -1.0 / kRt2;
  m(1, 3) = -1.0 / kRt2;
  m(2, 1) = -kI;
  m(3, 2) = 1.0 / kRt2;
  m(3, 3) = -1.0 / kRt2;
  return m;
}

CMat4 b_from_a_matrix() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = kI;
  m(2, 1) = -1.0 / kRt2;
  m(2, 3) = 1.0 / kRt2;
  m(3, 1) = -1.0 / kRt2;
  m(3, 3) = -1.0 / kRt2;
  return m;
}

AmplitudeSet xi_from_b(const AmplitudeSet& b) {
  require_kind(b, AmpKind::bosonic_b, "xi_from_b");
  return mapped(b, xi_from_b_matrix(), AmpKind::bosonic_xi);
}

AmplitudeSet b_from_xi(const AmplitudeSet& xi) {
  require_kind(xi, AmpKind::bosonic_xi, "b_from_xi");
  return mapped(xi, b_from_xi_matrix(), AmpKind::bosonic_b);
}

AmplitudeSet a_from_b(const AmplitudeSet& b) {
  require_kind(b, AmpKind::bosonic_b, "a_from_b");
  return mapped(b, a_from_b_matrix(), AmpKind::fermionic);
}

AmplitudeSet b_from_a(const AmplitudeSet& a) {
  require_kind(a, AmpKind::fermionic, "b_from_a");
  return mapped(a, b_from_a_matrix(), AmpKind::bosonic_b);
}

namespace {

// Shared synthesis core: decaying branch c1*e1 + c2*e2, raised branch
// conj(c3)*e3 + conj(c4)*e4, with {e} either the Cartesian orts or the unit
// spinor quadruple at the node momentum.
SpinorFieldK synth(const AmplitudeSet& a, bool spinor_basis) {
  SpinorFieldK f = SpinorFieldK::zero(a.grid);
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    const CVec4& c = a.amp[i];
    if (spinor_basis) {
      const auto v = dirac_spinors(a.grid.sample(i));
      f.pos[i] = c(0) * v[0] + c(1) * v[1];
      f.neg[i] = std::conj(c(2)) * v[2] + std::conj(c(3)) * v[3];
    } else {
      f.pos[i] = CVec4(c(0), c(1), 0.0, 0.0);
      f.neg[i] = CVec4(0.0, 0.0, std::conj(c(2)), std::conj(c(3)));
    }
  }
  return f;
}

AmplitudeSet to_fermionic_coords(const AmplitudeSet& b) {
  switch (b.kind) {
    case AmpKind::fermionic:
      return b;
    case AmpKind::bosonic_b:
      return a_from_b(b);
    case AmpKind::bosonic_xi:
      return a_from_b(b_from_xi(b));
  }
  throw std::invalid_argument("to_fermionic_coords: bad kind");
}

}  // namespace

SpinorFieldK synth_fw_fermionic(const AmplitudeSet& a) {
  require_kind(a, AmpKind::fermionic, "synth_fw_fermionic");
  return synth(a, false);
}

SpinorFieldK synth_dirac_fermionic(const AmplitudeSet& a) {
  require_kind(a, AmpKind::fermionic, "synth_dirac_fermionic");
  return synth(a, true);
}

SpinorFieldK synth_fw_bosonic(const AmplitudeSet& b) {
  if (b.kind == AmpKind::fermionic)
    throw std::invalid_argument("synth_fw_bosonic: expected a bosonic amplitude kind");
  const AmplitudeSet xi = b.kind == AmpKind::bosonic_xi ? b : xi_from_b(b);
  return synth(xi, false);
}

SpinorFieldK synth_dirac_bosonic(const AmplitudeSet& b) {
  if (b.kind == AmpKind::fermionic)
    throw std::invalid_argument("synth_dirac_bosonic: expected a bosonic amplitude kind");
  const AmplitudeSet bb = b.kind == AmpKind::bosonic_b ? b : b_from_xi(b);
  SpinorFieldK f = SpinorFieldK::zero(bb.grid);
  for (std::size_t i = 0; i < bb.amp.size(); ++i) {
    const CVec4& c = bb.amp[i];
    const auto v = dirac_spinors(bb.grid.sample(i));
    f.pos[i] = c(0) * v[0] - (c(2) + c(3)) / kRt2 * v[1];
    f.neg[i] = kI * std::conj(c(1)) * v[2] +
               (std::conj(c(2)) - std::conj(c(3))) / kRt2 * v[3];
  }
  return f;
}

AmplitudeSet analyze(const SpinorFieldK& field, AmpKind kind, EqKind picture) {
  AmplitudeSet a = AmplitudeSet::zero(field.grid, AmpKind::fermionic);
  for (std::size_t i = 0; i < field.pos.size(); ++i) {
    CVec4 c;
    if (picture == EqKind::fw) {
      c(0) = field.pos[i](0);
      c(1) = field.pos[i](1);
      c(2) = std::conj(field.neg[i](2));
      c(3) = std::conj(field.neg[i](3));
    } else {
      const auto v = dirac_spinors(field.grid.sample(i));
      c(0) = v[0].dot(field.pos[i]);
      c(1) = v[1].dot(field.pos[i]);
      c(2) = std::conj(v[2].dot(field.neg[i]));
      c(3) = std::conj(v[3].dot(field.neg[i]));
    }
    a.amp[i] = c;
  }
  switch (kind) {
    case AmpKind::fermionic:
      return a;
    case AmpKind::bosonic_b:
      return b_from_a(a);
    case AmpKind::bosonic_xi:
      return xi_from_b(b_from_a(a));
  }
  throw std::invalid_argument("analyze: bad kind");
}

double equation_residual(const SpinorFieldK& f, EqKind which, double t) {
  const SpinorFieldK prop =
      which == EqKind::fw ? fw_propagate(f, t) : dirac_propagate(f, t);
  SpinorFieldK analytic = f;
  analytic.time = f.time + t;
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    const double w = omega(f.grid.sample(i));
    analytic.pos[i] = std::exp(-kI * w * t) * f.pos[i];
    analytic.neg[i] = std::exp(kI * w * t) * f.neg[i];
  }
  return field_max_diff(prop, analytic);
}

AmplitudeSet random_amplitudes(const MomentumGrid& g, AmpKind kind, std::uint64_t seed) {
  AmplitudeSet a = AmplitudeSet::zero(g, kind);
  std::mt19937_64 eng(seed);
  // Fixed uniform mapping and Box-Muller transform; the engine's output
  // sequence is standardized, so the values are platform-independent.
  auto uniform = [&eng]() { return (eng() >> 11) * 0x1.0p-53; };
  auto normal_pair = [&](double& z0, double& z1) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double th = 2.0 * M_PI * u2;
    z0 = r * std::cos(th);
    z1 = r * std::sin(th);
  };
  for (auto& v : a.amp)
    for (int j = 0; j < 4; ++j) {
      double re, im;
      normal_pair(re, im);
      v(j) = Complex(re, im);
    }
  return a;
}

namespace {

using nlohmann::json;

json grid_to_json(const MomentumGrid& g) {
  return json{{"counts", {g.count, g.count, g.count}}, {"dk", g.dk}, {"mass", g.mass}};
}

MomentumGrid grid_from_json(const json& j) {
  const auto& counts = j.at("counts");
  if (!counts.is_array() || counts.size() != 3)
    throw std::runtime_error("grid.counts must be a 3-array");
  const int n0 = counts.at(0).get<int>();
  if (counts.at(1).get<int>() != n0 || counts.at(2).get<int>() != n0)
    throw std::runtime_error("grid.counts must be equal per axis");
  return MomentumGrid(n0, j.at("dk").get<double>(), j.at("mass").get<double>());
}

json cvec_to_json(const CVec4& v) {
  json arr = json::array();
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag()))
      throw std::invalid_argument("serialization requires finite values");
    arr.push_back({v(i).real(), v(i).imag()});
  }
  return arr;
}

CVec4 cvec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::runtime_error("expected a 4-array");
  CVec4 v;
  for (int i = 0; i < 4; ++i) {
    const auto& p = j.at(i);
    if (!p.is_array() || p.size() != 2)
      throw std::runtime_error("expected [re, im] pairs");
    v(i) = Complex(p.at(0).get<double>(), p.at(1).get<double>());
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag()))
      throw std::runtime_error("non-finite value in input");
  }
  return v;
}

json k_to_json(const Eigen::Vector3d& k) { return json{k.x(), k.y(), k.z()}; }

void check_node_k(const json& node, const MomentumGrid& g, std::size_t idx) {
  const auto& jk = node.at("k");
  if (!jk.is_array() || jk.size() != 3) throw std::runtime_error("node.k must be a 3-array");
  const Eigen::Vector3d want = g.node_k(idx);
  for (int c = 0; c < 3; ++c) {
    const double got = jk.at(c).get<double>();
    if (std::abs(got - want(c)) > 1e-12 * std::max(1.0, std::abs(want(c))))
      throw std::runtime_error("node.k does not match canonical grid order");
  }
}

}  // namespace

std::string amplitudes_to_json(const AmplitudeSet& a) {
  json j;
  j["grid"] = grid_to_json(a.grid);
  j["kind"] = amp_kind_name(a.kind);
  json nodes = json::array();
  for (std::size_t i = 0; i < a.amp.size(); ++i)
    nodes.push_back({{"k", k_to_json(a.grid.node_k(i))}, {"amp", cvec_to_json(a.amp[i])}});
  j["nodes"] = std::move(nodes);
  return j.dump(2) + "\n";
}

AmplitudeSet amplitudes_from_json(const std::string& text) {
  const json j = json::parse(text);
  AmplitudeSet a;
  a.grid = grid_from_json(j.at("grid"));
  a.kind = amp_kind_from_name(j.at("kind").get<std::string>());
  const auto& nodes = j.at("nodes");
  if (!nodes.is_array() || nodes.size() != a.grid.size())
    throw std::runtime_error("nodes array must cover the whole grid");
  a.amp.resize(a.grid.size());
  for (std::size_t i = 0; i < a.amp.size(); ++i) {
    check_node_k(nodes.at(i), a.grid, i);
    a.amp[i] = cvec_from_json(nodes.at(i).at("amp"));
  }
  return a;
}

std::string field_to_json(const SpinorFieldK& f) {
  json j;
  j["grid"] = grid_to_json(f.grid);
  j["time"] = f.time;
  json nodes = json::array();
  for (std::size_t i = 0; i < f.pos.size(); ++i)
    nodes.push_back({{"k", k_to_json(f.grid.node_k(i))},
                     {"pos", cvec_to_json(f.pos[i])},
                     {"neg", cvec_to_json(f.neg[i])}});
  j["nodes"] = std::move(nodes);
  return j.dump(2) + "\n";
}

SpinorFieldK field_from_json(const std::string& text) {
  const json j = json::parse(text);
  const MomentumGrid g = grid_from_json(j.at("grid"));
  SpinorFieldK f = SpinorFieldK::zero(g, j.at("time").get<double>());
  const auto& nodes = j.at("nodes");
  if (!nodes.is_array() || nodes.size() != g.size())
    throw std::runtime_error("nodes array must cover the whole grid");
  for (std::size_t i = 0; i < f.pos.size(); ++i) {
    check_node_k(nodes.at(i), g, i);
    f.pos[i] = cvec_from_json(nodes.at(i).at("pos"));
    f.neg[i] = cvec_from_json(nodes.at(i).at("neg"));
  }
  return f;
}

}  // namespace ercd
