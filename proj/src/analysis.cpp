// Copyright 2026 mcsynth contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcsynth/analysis.hpp"

#include <cmath>
#include <numbers>

#include "mcsynth/errors.hpp"
#include "mcsynth/lowering.hpp"

namespace mcsynth {

namespace {

// arg(det) of the base single-qubit gate, exact where the gate is exact.
Angle base_det_phase(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
      return Angle::pi();
    case GateKind::Phase:
      return g.angle;
    case GateKind::Unitary2:
      return Angle::real(std::arg(g.matrix.det()));
  }
  return Angle::zero();
}

// Contribution of one gate to the m-qubit determinant phase.
Angle gate_contribution(const Gate& g, std::size_t m) {
  const std::size_t e = m - g.num_controls() - 1;
  if (g.is_x_kind() || g.kind == GateKind::H) {
    // det = (-1)^(2^e): a transposition pair count of 2^e.
    return e == 0 ? Angle::pi() : Angle::zero();
  }
  if (g.kind == GateKind::Phase && g.angle.is_rational()) {
    // theta * 2^e mod 2*pi, via modular exponentiation so huge e stays cheap.
    const BigInt two_q = g.angle.den() * 2;
    const BigInt pow = boost::multiprecision::powm(BigInt(2), BigInt(e), two_q);
    return Angle::rational(g.angle.num() * pow, g.angle.den());
  }
  // Irrational phase: fold the doublings mod 2*pi in floating point.
  double phase = g.kind == GateKind::Phase ? g.angle.radians()
                                           : std::arg(g.base_matrix().det());
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < e; ++i) {
    phase = std::fmod(2.0 * phase, two_pi);
  }
  return Angle::real(phase);
}

}  // namespace

Angle det_phase(const Circuit& c) {
  const std::size_t m = c.num_qubits();
  Angle total = Angle::zero();
  for (const Gate& g : c.gates()) {
    total = total + gate_contribution(g, m);
  }
  return total;
}

std::string det_phase_string(const Circuit& c) {
  const Angle a = det_phase(c);
  if (!a.is_rational()) return "real";
  BigInt p = a.num();
  if (p < 0) p += 2 * a.den();
  return p.str() + "/" + a.den().str();
}

PrecisionAudit precision_audit(const Circuit& c) {
  PrecisionAudit audit;
  const std::size_t m = c.num_qubits();
  Angle total = Angle::zero();
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    const Angle base = base_det_phase(g);
    audit.per_gate.push_back({i, base});
    if (base.is_rational()) {
      if (base.den() > audit.max_denominator) {
        audit.max_denominator = base.den();
      }
    } else {
      audit.has_unbounded = true;
    }
    total = total + gate_contribution(g, m);
  }
  audit.total_phase = total;
  return audit;
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "mcx_clean") return Family::McxClean;
  if (name == "mcx_dirty") return Family::McxDirty;
  if (name == "incrementor" || name == "incr") return Family::Incrementor;
  if (name == "mcx_no_ancilla") return Family::McxNoAncilla;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::McxClean:
      return "mcx_clean";
    case Family::McxDirty:
      return "mcx_dirty";
    case Family::Incrementor:
      return "incrementor";
    case Family::McxNoAncilla:
      return "mcx_no_ancilla";
  }
  return "";
}

Circuit make_family(Family f, std::size_t n, const SplitPolicy& policy) {
  switch (f) {
    case Family::McxClean:
      return mcx_clean(n, policy.base_threshold);
    case Family::McxDirty:
      return mcx_dirty(n, policy.base_threshold);
    case Family::Incrementor:
      return incrementor(n, policy);
    case Family::McxNoAncilla:
      return mcx_no_ancilla(n, policy);
  }
  throw SynthesisError("unknown family");
}

std::vector<ScalingRow> scaling_report(Family f,
                                       const std::vector<std::size_t>& ns,
                                       const SplitPolicy& policy) {
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i - 1] > ns[i]) {
      throw SynthesisError("scaling sizes must be ascending");
    }
  }
  std::vector<ScalingRow> rows;
  for (std::size_t n : ns) {
    const Circuit c = make_family(f, n, policy);
    ScalingRow row;
    row.n = n;
    row.depth_mcx = c.depth();
    row.size = c.size();
    const LoweredMetrics lm = lowered_metrics(c);
    row.depth_basis = lm.depth;
    row.size_basis = lm.size;
    for (const auto& q : c.qubits()) {
      if (q.role == QubitRole::AncillaClean) ++row.ancilla_clean;
      if (q.role == QubitRole::AncillaDirty) ++row.ancilla_dirty;
    }
    if ((n & (n - 1)) == 0) {
      for (const ScalingRow& prev : rows) {
        if (prev.n * 2 == n) {
          row.depth_diff = static_cast<long long>(row.depth_mcx) -
                           static_cast<long long>(prev.depth_mcx);
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

QuadLogFit fit_quadratic_log(const std::vector<std::size_t>& ns,
                             const std::vector<std::size_t>& depths) {
  if (ns.size() != depths.size() || ns.size() < 2) {
    throw SynthesisError("fit needs at least two points");
  }
  // Normal equations for depth = a*L^2 + b with L = log2(n), weighted by
  // 1/depth^2 so the solution minimizes the relative residuals the bound is
  // stated in.
  double s_xx = 0, s_x = 0, s_xy = 0, s_y = 0, s_w = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double L = std::log2(static_cast<double>(ns[i]));
    const double x = L * L;
    const double y = static_cast<double>(depths[i]);
    const double w = y > 0 ? 1.0 / (y * y) : 1.0;
    s_xx += w * x * x;
    s_x += w * x;
    s_xy += w * x * y;
    s_y += w * y;
    s_w += w;
  }
  const double denom = s_w * s_xx - s_x * s_x;
  QuadLogFit fit;
  fit.a = (s_w * s_xy - s_x * s_y) / denom;
  fit.b = (s_y - fit.a * s_x) / s_w;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double L = std::log2(static_cast<double>(ns[i]));
    const double predicted = fit.a * L * L + fit.b;
    const double actual = static_cast<double>(depths[i]);
    if (actual > 0) {
      fit.max_rel_residual = std::max(
          fit.max_rel_residual, std::abs(actual - predicted) / actual);
    }
  }
  return fit;
}

}  // namespace mcsynth
