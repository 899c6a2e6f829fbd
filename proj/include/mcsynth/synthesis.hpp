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

#include <cstddef>
#include <span>
#include <vector>

#include "mcsynth/circuit.hpp"

namespace mcsynth {

/// The base applied by a multi-controlled gate family. Named kinds keep
/// their exact representation (X, H, rational phases); Unitary2 carries an
/// explicit matrix.
struct BaseGate {
  GateKind kind = GateKind::X;
  Angle angle;
  Mat2 matrix = Mat2::identity();

  static BaseGate x() { return {GateKind::X, {}, {}}; }
  static BaseGate h() { return {GateKind::H, {}, {}}; }
  static BaseGate phase(const Angle& a) { return {GateKind::Phase, a, {}}; }
  static BaseGate unitary(const Mat2& m) {
    return {GateKind::Unitary2, {}, m};
  }

  Mat2 to_matrix() const;
  bool is_involution(double tol = 1e-12) const;
  Gate make(std::vector<QubitRef> controls, QubitRef target) const;
};

struct SplitPolicy {
  // low_fraction = low_num / low_den, the share of wires handed to the low
  // part of the incrementor split.
  unsigned low_num = 9;
  unsigned low_den = 10;
  // Control count at or below which the AND recursion emits a direct MCX.
  std::size_t base_threshold = 5;

  void validate() const;
};

// ---- Control-factoring equivalences -------------------------------------

/// Clean-ancilla factoring: MCX(controls->anc); body with every gate
/// additionally controlled by anc; MCX(controls->anc). Requires anc to be a
/// clean ancilla wire disjoint from the body's support.
Circuit factor_control_clean(const Circuit& body,
                             const std::vector<QubitRef>& controls,
                             QubitRef anc);

/// Dirty-ancilla variant for involutive bodies: C-body(anc),
/// MCX(controls->anc), C-body(anc), MCX(controls->anc). Works for every
/// initial ancilla value.
Circuit double_apply_dirty(const Circuit& body,
                           const std::vector<QubitRef>& controls,
                           QubitRef anc);

// ---- AND recursion -------------------------------------------------------

/// Appends the compute half of the recursive AND construction: whenever anc
/// enters as |0>, target gets AND(controls) xored in; the circuit is unitary
/// so its inverse restores every side effect for any entry state.
void compute_half(Circuit& c, std::span<const QubitRef> controls,
                  QubitRef anc, QubitRef target,
                  std::size_t base_threshold = 5);

/// n-controlled X / U over n inputs, one ancilla and one target
/// (qubit layout: controls 0..n-1, ancilla n, target n+1).
Circuit mcx_clean(std::size_t n, std::size_t base_threshold = 5);
Circuit mcu_clean(std::size_t n, const BaseGate& u,
                  std::size_t base_threshold = 5);
Circuit mcx_dirty(std::size_t n, std::size_t base_threshold = 5);
/// Requires u to be an involution (u*u = I within 1e-12).
Circuit mcu_dirty(std::size_t n, const BaseGate& u,
                  std::size_t base_threshold = 5);

// ---- Fan-outs and phase fan-out ------------------------------------------

/// CX doubling tree onto clean targets: |a,0...0> -> |a,a,...,a>.
void fanout_clean(Circuit& c, QubitRef src,
                  std::span<const QubitRef> targets);

/// CNOT tree realizing d_i -> d_i ^ a on arbitrary targets, src preserved.
void fanout_dirty(Circuit& c, QubitRef src,
                  std::span<const QubitRef> targets);

/// Column of controlled phases sharing one control, in logarithmic depth
/// with no ancilla: half phases on the targets, a CX fan-out of the control,
/// negated half phases, the fan-out again, one compensating phase on the
/// control.
void rz_fanout(Circuit& c, std::span<const Angle> thetas, QubitRef control,
               std::span<const QubitRef> targets);

/// Canonical circuit for rz_fanout: targets 0..k-1, control k.
Circuit rz_fanout_circuit(const std::vector<Angle>& thetas);

// ---- Incrementor ----------------------------------------------------------

/// Exact scratch demand of cla_ctrl_increment for k high wires:
/// the dyadic AND-tree nodes, k-1 prefix wires, and k per-bit dirty wires.
std::size_t cla_scratch_demand(std::size_t k);

/// Controlled carry-lookahead +1 on `high` (bit 0 first). When control is
/// |1> and the scratch prefix is all |0>, high <- high + 1 mod 2^k with the
/// scratch restored; when control is |0> everything is restored no matter
/// what the scratch holds. X-type gates only, depth O(log k).
void cla_ctrl_increment(Circuit& c, std::span<const QubitRef> high,
                        QubitRef control, std::span<const QubitRef> scratch);

/// |x,0> -> |(x+1) mod 2^n, 0> over n data wires (qubit i is bit i) and one
/// clean ancilla at index n. X-type, depth O(log^2 n), size O(n).
Circuit incrementor(std::size_t n, const SplitPolicy& policy = {});

/// Appends an incrementor over the given wires using anc as clean ancilla.
void incrementor_on(Circuit& c, std::span<const QubitRef> wires, QubitRef anc,
                    const SplitPolicy& policy = {});

// ---- Zero-ancilla Toffoli --------------------------------------------------

/// n-controlled X on exactly n controls and one target (no ancilla wires),
/// depth O(log^2 n): a controlled H/T ladder around two inner (n-1)-control
/// MCX that borrow the last control as dirty ancilla, with +1/-1 blocks and
/// controlled phase-gradient columns supplying the phase correction.
Circuit mcx_no_ancilla(std::size_t n, const SplitPolicy& policy = {});

}  // namespace mcsynth
