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

#include "mcsynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "mcsynth/errors.hpp"

namespace mcsynth {

Mat2 Mat2::h() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {s, s, s, -s};
}

Mat2 Mat2::phase(const Angle& a) {
  const double r = a.radians();
  return {1, 0, 0, Complex(std::cos(r), std::sin(r))};
}

Mat2 Mat2::dagger() const {
  return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
          m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Mat2 Mat2::sqrt() const {
  // Principal square root of a 2x2 unitary via its eigendecomposition.
  // For unitary input the eigenvectors are orthogonal, so U = V D V^dag.
  const Complex tr = m00 + m11;
  const Complex d = det();
  const Complex disc = std::sqrt(tr * tr - 4.0 * d);
  Complex l1 = (tr + disc) / 2.0;
  Complex l2 = (tr - disc) / 2.0;
  // Eigenvector for l1.
  Complex v1x, v1y;
  if (std::abs(m01) > 1e-14 || std::abs(l1 - m00) > 1e-14) {
    v1x = m01;
    v1y = l1 - m00;
  } else {
    v1x = l1 - m11;
    v1y = m10;
  }
  double n1 = std::hypot(std::abs(v1x), std::abs(v1y));
  if (n1 < 1e-14) {
    v1x = 1;
    v1y = 0;
    n1 = 1;
  }
  v1x /= n1;
  v1y /= n1;
  // Orthogonal complement (valid eigenvector for l2 of a normal matrix).
  const Complex v2x = -std::conj(v1y);
  const Complex v2y = std::conj(v1x);
  const Complex s1 = std::sqrt(l1);
  const Complex s2 = std::sqrt(l2);
  return {s1 * v1x * std::conj(v1x) + s2 * v2x * std::conj(v2x),
          s1 * v1x * std::conj(v1y) + s2 * v2x * std::conj(v2y),
          s1 * v1y * std::conj(v1x) + s2 * v2y * std::conj(v2x),
          s1 * v1y * std::conj(v1y) + s2 * v2y * std::conj(v2y)};
}

double Mat2::max_abs_diff(const Mat2& o) const {
  return std::max(std::max(std::abs(m00 - o.m00), std::abs(m01 - o.m01)),
                  std::max(std::abs(m10 - o.m10), std::abs(m11 - o.m11)));
}

bool Mat2::is_unitary(double tol) const {
  Mat2 p = *this * dagger();
  return p.max_abs_diff(identity()) <= tol;
}

bool Mat2::is_involution(double tol) const {
  Mat2 p = *this * *this;
  return p.max_abs_diff(identity()) <= tol;
}

Mat2 Gate::base_matrix() const {
  switch (kind) {
    case GateKind::X:
      return Mat2::x();
    case GateKind::H:
      return Mat2::h();
    case GateKind::Phase:
      return Mat2::phase(angle);
    case GateKind::Unitary2:
      return matrix;
  }
  return Mat2::identity();
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
      break;  // self-inverse
    case GateKind::Phase:
      g.angle = -angle;
      break;
    case GateKind::Unitary2:
      g.matrix = matrix.dagger();
      break;
  }
  return g;
}

Gate Gate::with_control(QubitRef c) const {
  Gate g = *this;
  g.controls.push_back(c);
  return g;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || target != other.target ||
      controls != other.controls) {
    return false;
  }
  if (kind == GateKind::Phase) return angle == other.angle;
  if (kind == GateKind::Unitary2) return matrix.max_abs_diff(other.matrix) == 0.0;
  return true;
}

std::string role_name(QubitRole role) {
  switch (role) {
    case QubitRole::Input:
      return "input";
    case QubitRole::Target:
      return "target";
    case QubitRole::AncillaClean:
      return "clean_ancilla";
    case QubitRole::AncillaDirty:
      return "dirty_ancilla";
  }
  return "input";
}

std::string count_bucket(const Gate& g) {
  const std::size_t k = g.num_controls();
  if (g.kind == GateKind::X) {
    if (k == 0) return "x";
    if (k == 1) return "cx";
    return "mcx";
  }
  if (k > 0) return "mcu";
  switch (g.kind) {
    case GateKind::H:
      return "h";
    case GateKind::Phase:
      return "p";
    default:
      return "u";
  }
}

Circuit::Circuit(std::vector<QubitSpec> qubits, Level level)
    : qubits_(std::move(qubits)), level_(level) {
  std::unordered_set<std::string> seen;
  for (const auto& q : qubits_) {
    if (!seen.insert(q.name).second) {
      throw CircuitError("duplicate qubit name: " + q.name);
    }
  }
}

void Circuit::validate_gate(const Gate& g) const {
  const std::size_t n = num_qubits();
  if (g.target >= n) {
    throw CircuitError("gate target out of range");
  }
  for (QubitRef c : g.controls) {
    if (c >= n) throw CircuitError("gate control out of range");
    if (c == g.target) throw CircuitError("control overlaps target");
  }
  std::unordered_set<QubitRef> seen(g.controls.begin(), g.controls.end());
  if (seen.size() != g.controls.size()) {
    throw CircuitError("duplicate control qubit");
  }
  if (level_ == Level::Basis) {
    if (g.num_controls() > 1) {
      throw CircuitError("basis-level circuits allow at most one control");
    }
    if (g.num_controls() == 1 && g.kind != GateKind::X) {
      throw CircuitError("basis-level controlled gates must be CNOT");
    }
  }
  if (g.kind == GateKind::Unitary2 && !g.matrix.is_unitary()) {
    throw CircuitError("gate matrix is not unitary");
  }
}

void Circuit::append(Gate g) {
  validate_gate(g);
  gates_.push_back(std::move(g));
}

void Circuit::append_all(const std::vector<Gate>& gs) {
  for (const Gate& g : gs) append(g);
}

Circuit Circuit::then(const Circuit& other) const {
  if (other.num_qubits() != num_qubits() || other.level_ != level_) {
    throw CircuitError("cannot concatenate circuits with different shapes");
  }
  Circuit out = *this;
  out.gates_.insert(out.gates_.end(), other.gates_.begin(),
                    other.gates_.end());
  return out;
}

Circuit Circuit::inverse() const {
  Circuit out(qubits_, level_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

std::size_t Circuit::depth() const {
  DepthTracker tracker(num_qubits());
  for (const Gate& g : gates_) tracker.add(g);
  return tracker.depth();
}

ResourceReport Circuit::report() const {
  ResourceReport r;
  r.depth = depth();
  r.size = gates_.size();
  for (const Gate& g : gates_) ++r.counts[count_bucket(g)];
  for (const auto& q : qubits_) {
    if (q.role == QubitRole::AncillaClean) ++r.ancilla_clean;
    if (q.role == QubitRole::AncillaDirty) ++r.ancilla_dirty;
  }
  return r;
}

bool Circuit::is_x_type() const {
  return std::all_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.is_x_kind(); });
}

bool Circuit::operator==(const Circuit& other) const {
  if (level_ != other.level_ || gates_.size() != other.gates_.size()) {
    return false;
  }
  if (qubits_.size() != other.qubits_.size()) return false;
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i].name != other.qubits_[i].name ||
        qubits_[i].role != other.qubits_[i].role) {
      return false;
    }
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (!(gates_[i] == other.gates_[i])) return false;
  }
  return true;
}

Circuit new_circuit(std::vector<QubitSpec> qubit_specs) {
  return Circuit(std::move(qubit_specs), Level::Mcx);
}

}  // namespace mcsynth
