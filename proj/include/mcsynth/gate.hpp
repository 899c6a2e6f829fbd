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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "mcsynth/angle.hpp"

namespace mcsynth {

/// Index of a qubit within a circuit's qubit list.
using QubitRef = std::uint32_t;

using Complex = std::complex<double>;

/// A 2x2 complex matrix, row major.
struct Mat2 {
  Complex m00, m01, m10, m11;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 x() { return {0, 1, 1, 0}; }
  static Mat2 h();
  static Mat2 phase(const Angle& a);

  Mat2 dagger() const;
  Mat2 operator*(const Mat2& o) const;
  Complex det() const { return m00 * m11 - m01 * m10; }
  /// Principal square root (eigendecomposition based).
  Mat2 sqrt() const;

  double max_abs_diff(const Mat2& o) const;
  bool is_unitary(double tol = 1e-12) const;
  bool is_involution(double tol = 1e-12) const;
};

/// Base gate applied to the target qubit. Any base may carry a list of
/// control qubits: X with one control is CNOT, X with k controls is the
/// k-controlled Toffoli, and a controlled Phase/H/Unitary2 is a k-controlled
/// U. Keeping the controls outside the kind makes adding a control a
/// structural operation that preserves exact angles.
enum class GateKind : std::uint8_t { X, H, Phase, Unitary2 };

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<QubitRef> controls;
  QubitRef target = 0;
  Angle angle;   // Phase only
  Mat2 matrix;   // Unitary2 only
  // Advisory: a wire known to be safe to borrow when this gate is lowered
  // through a dirty split. Synthesized circuits point at a wire local to
  // their own recursion node so lowering does not couple parallel branches.
  // Not part of the gate's semantics; never serialized.
  std::optional<QubitRef> borrow_hint;

  static Gate x(QubitRef t) { return Gate{GateKind::X, {}, t, {}, {}, {}}; }
  static Gate h(QubitRef t) { return Gate{GateKind::H, {}, t, {}, {}, {}}; }
  static Gate phase(const Angle& a, QubitRef t) {
    return Gate{GateKind::Phase, {}, t, a, {}, {}};
  }
  static Gate unitary(const Mat2& u, QubitRef t) {
    return Gate{GateKind::Unitary2, {}, t, {}, u, {}};
  }
  static Gate cx(QubitRef c, QubitRef t) {
    return Gate{GateKind::X, {c}, t, {}, {}, {}};
  }
  static Gate mcx(std::vector<QubitRef> cs, QubitRef t) {
    return Gate{GateKind::X, std::move(cs), t, {}, {}, {}};
  }
  static Gate mcphase(const Angle& a, std::vector<QubitRef> cs, QubitRef t) {
    return Gate{GateKind::Phase, std::move(cs), t, a, {}, {}};
  }
  static Gate mch(std::vector<QubitRef> cs, QubitRef t) {
    return Gate{GateKind::H, std::move(cs), t, {}, {}, {}};
  }
  static Gate mcu(const Mat2& u, std::vector<QubitRef> cs, QubitRef t) {
    return Gate{GateKind::Unitary2, std::move(cs), t, {}, u, {}};
  }

  std::size_t num_controls() const { return controls.size(); }
  bool is_x_kind() const { return kind == GateKind::X; }

  /// The 2x2 matrix of the base gate (no controls).
  Mat2 base_matrix() const;

  Gate inverse() const;
  Gate with_control(QubitRef c) const;

  bool operator==(const Gate& other) const;
};

}  // namespace mcsynth
