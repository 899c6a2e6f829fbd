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

#include "mcsynth/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <unordered_set>

#include "mcsynth/errors.hpp"
#include "mcsynth/fanout.hpp"
#include "mcsynth/simulate.hpp"

namespace mcsynth {

Mat2 BaseGate::to_matrix() const {
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

bool BaseGate::is_involution(double tol) const {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
      return true;
    case GateKind::Phase:
      if (angle.is_rational()) {
        // P(a)^2 = I exactly iff a = 0 or pi.
        return angle.is_zero() || (angle.num() == 1 && angle.den() == 1);
      }
      return to_matrix().is_involution(tol);
    case GateKind::Unitary2:
      return matrix.is_involution(tol);
  }
  return false;
}

Gate BaseGate::make(std::vector<QubitRef> controls, QubitRef target) const {
  switch (kind) {
    case GateKind::X:
      return Gate::mcx(std::move(controls), target);
    case GateKind::H:
      return Gate::mch(std::move(controls), target);
    case GateKind::Phase:
      return Gate::mcphase(angle, std::move(controls), target);
    case GateKind::Unitary2:
      return Gate::mcu(matrix, std::move(controls), target);
  }
  return Gate::x(target);
}

void SplitPolicy::validate() const {
  if (low_num == 0 || low_num >= low_den) {
    throw SynthesisError("split fraction must lie strictly between 0 and 1");
  }
  if (base_threshold < 4 || base_threshold > 5) {
    throw SynthesisError("base threshold must be 4 or 5");
  }
}

// ---- fan-out gate emitters -------------------------------------------------

void emit_fanout_clean(std::vector<Gate>& gates, QubitRef src,
                       std::span<const QubitRef> targets) {
  std::vector<QubitRef> charged{src};
  std::size_t next = 0;
  while (next < targets.size()) {
    const std::size_t layer_sources = charged.size();
    for (std::size_t i = 0; i < layer_sources && next < targets.size(); ++i) {
      gates.push_back(Gate::cx(charged[i], targets[next]));
      charged.push_back(targets[next]);
      ++next;
    }
  }
}

void emit_fanout_dirty(std::vector<Gate>& gates, QubitRef src,
                       std::span<const QubitRef> targets) {
  if (targets.empty()) return;
  if (targets.size() == 1) {
    gates.push_back(Gate::cx(src, targets[0]));
    return;
  }
  // Compute-and-uncompute parity tree for src ^= xor(targets) ...
  std::vector<Gate> parity;
  std::vector<QubitRef> cur(targets.begin(), targets.end());
  while (cur.size() > 1) {
    const std::size_t keep = (cur.size() + 1) / 2;
    for (std::size_t i = 0; keep + i < cur.size(); ++i) {
      parity.push_back(Gate::cx(cur[keep + i], cur[i]));
    }
    cur.resize(keep);
  }
  const std::size_t fold_end = parity.size();
  parity.push_back(Gate::cx(cur[0], src));
  for (std::size_t i = fold_end; i-- > 0;) {
    parity.push_back(parity[i]);
  }
  // ... transposed: reversed order with control and target swapped, which
  // over GF(2) is exactly the map d_i -> d_i ^ a with a preserved.
  for (std::size_t i = parity.size(); i-- > 0;) {
    gates.push_back(Gate::cx(parity[i].target, parity[i].controls[0]));
  }
}

// ---- internal emitters -----------------------------------------------------

namespace {

void check_threshold(std::size_t base_threshold) {
  if (base_threshold < 4 || base_threshold > 5) {
    throw SynthesisError("base threshold must be 4 or 5");
  }
}

void emit_compute_half(std::vector<Gate>& gates,
                       std::span<const QubitRef> controls, QubitRef anc,
                       QubitRef target, std::size_t base_threshold) {
  const std::size_t m = controls.size();
  if (m <= base_threshold) {
    Gate base = Gate::mcx({controls.begin(), controls.end()}, target);
    base.borrow_hint = anc;  // idle here, and local to this node
    gates.push_back(std::move(base));
    return;
  }
  const std::vector<QubitRef> first4(controls.begin(), controls.begin() + 4);
  Gate write = Gate::mcx(first4, anc);
  write.borrow_hint = target;
  gates.push_back(std::move(write));
  for (QubitRef c : first4) gates.push_back(Gate::x(c));
  const auto rest = controls.subspan(4);
  const std::size_t left_count = (rest.size() + 1) / 2;
  // The flipped first four are conditionally clean: reuse them as the
  // ancillas and targets of the two parallel recursive halves.
  emit_compute_half(gates, rest.first(left_count), controls[1], controls[0],
                    base_threshold);
  emit_compute_half(gates, rest.subspan(left_count), controls[3], controls[2],
                    base_threshold);
  Gate final_write = Gate::mcx({controls[0], controls[2], anc}, target);
  final_write.borrow_hint = controls[1];
  gates.push_back(std::move(final_write));
}

// Full clean construction: compute half, then the mirror of everything
// before the final write, so inputs and ancilla are restored.
void emit_mcxlike_clean(std::vector<Gate>& gates,
                        std::span<const QubitRef> controls, QubitRef anc,
                        QubitRef target, const BaseGate& base,
                        std::size_t base_threshold) {
  const std::size_t m = controls.size();
  std::vector<Gate> half;
  emit_compute_half(half, controls, anc, target, base_threshold);
  if (half.size() == 1) {
    if (base.kind == GateKind::X) {
      gates.push_back(half[0]);
    } else if (m <= 3) {
      gates.push_back(base.make({controls.begin(), controls.end()}, target));
    } else {
      // Cut the arity with the clean ancilla: anc <- AND(front), apply the
      // base controlled on the last two inputs and anc, uncompute.
      const std::vector<QubitRef> front(controls.begin(), controls.end() - 2);
      const Gate write = Gate::mcx(front, anc);
      gates.push_back(write);
      gates.push_back(base.make({controls[m - 2], controls[m - 1], anc},
                                target));
      gates.push_back(write);
    }
    return;
  }
  std::vector<Gate> emitted = half;
  if (base.kind != GateKind::X) {
    emitted.back() = base.make(half.back().controls, half.back().target);
  }
  for (const Gate& g : emitted) gates.push_back(g);
  for (std::size_t i = half.size() - 1; i-- > 0;) {
    gates.push_back(half[i].inverse());
  }
}

// Dirty-ancilla construction: the body (everything strictly between the two
// ancilla writes of the clean construction) applied twice around ancilla
// flips, which fires the write exactly AND(first controls) times for any
// initial ancilla value.
void emit_mcxlike_dirty(std::vector<Gate>& gates,
                        std::span<const QubitRef> controls, QubitRef anc,
                        QubitRef target, const BaseGate& base,
                        std::size_t base_threshold) {
  const std::size_t m = controls.size();
  if (m <= 3) {
    gates.push_back(base.make({controls.begin(), controls.end()}, target));
    return;
  }
  if (m <= 5) {
    const std::vector<QubitRef> front(controls.begin(), controls.end() - 2);
    Gate flip = Gate::mcx(front, anc);
    flip.borrow_hint = target;
    Gate body = base.make({controls[m - 2], controls[m - 1], anc}, target);
    body.borrow_hint = controls[0];
    gates.push_back(body);
    gates.push_back(flip);
    gates.push_back(body);
    gates.push_back(flip);
    return;
  }
  std::vector<Gate> clean;
  emit_mcxlike_clean(clean, controls, anc, target, base, base_threshold);
  // clean = [write_anc, body..., write_anc]
  for (std::size_t i = 1; i + 1 < clean.size(); ++i) {
    gates.push_back(clean[i]);
  }
  gates.push_back(clean.front());
  for (std::size_t i = 1; i + 1 < clean.size(); ++i) {
    gates.push_back(clean[i]);
  }
  gates.push_back(clean.front());
}

void emit_cla_ctrl_increment(std::vector<Gate>& gates,
                             std::span<const QubitRef> high, QubitRef control,
                             std::span<const QubitRef> scratch);

void emit_incrementor(std::vector<Gate>& gates,
                      std::span<const QubitRef> wires, QubitRef anc,
                      const SplitPolicy& policy) {
  const std::size_t m = wires.size();
  if (m <= 4) {
    // Direct carry chain: bit i flips iff all lower bits are one; applying
    // top-down reads the original lower bits.
    for (std::size_t i = m; i-- > 1;) {
      Gate carry = Gate::mcx({wires.begin(), wires.begin() + i}, wires[i]);
      carry.borrow_hint = anc;
      gates.push_back(std::move(carry));
    }
    gates.push_back(Gate::x(wires[0]));
    return;
  }
  std::size_t m_low = (std::size_t(policy.low_num) * m + policy.low_den - 1) /
                      policy.low_den;
  m_low = std::min(m_low, m - 1);
  m_low = std::max<std::size_t>(m_low, 1);
  const std::size_t k_high = m - m_low;
  const std::size_t demand = cla_scratch_demand(k_high);
  if (demand > m_low) {
    throw SynthesisError(
        "split policy leaves insufficient scratch for the high-part "
        "increment: need " +
        std::to_string(demand) + ", low part has " + std::to_string(m_low));
  }
  const auto low = wires.first(m_low);
  const auto high = wires.subspan(m_low);
  // Carry detection: anc ^= AND(low), borrowing a high wire as dirty
  // ancilla. The X conjugation turns the all-ones low part into
  // conditionally clean zeros.
  emit_mcxlike_dirty(gates, low, high[0], anc, BaseGate::x(),
                     policy.base_threshold);
  for (QubitRef w : low) gates.push_back(Gate::x(w));
  emit_cla_ctrl_increment(gates, high, anc, low.first(demand));
  for (QubitRef w : low) gates.push_back(Gate::x(w));
  emit_mcxlike_dirty(gates, low, high[0], anc, BaseGate::x(),
                     policy.base_threshold);
  emit_incrementor(gates, low, anc, policy);
}

// Scratch layout for the controlled carry-lookahead stage.
struct ClaWires {
  // node_of[level][j] = scratch wire holding AND over [j*2^l, (j+1)*2^l)
  std::vector<std::vector<QubitRef>> node_of;
  std::vector<QubitRef> prefix;  // prefix[i] holds AND(high[0..i)), i >= 1
  std::vector<QubitRef> dirty;   // per-bit dirty companions

  QubitRef range_wire(std::span<const QubitRef> high, std::size_t start,
                      std::size_t len) const {
    if (len == 1) return high[start];
    std::size_t level = 0;
    while ((std::size_t(1) << level) < len) ++level;
    return node_of[level][start >> level];
  }
};

}  // namespace

std::size_t cla_scratch_demand(std::size_t k) {
  if (k == 0) return 0;
  std::size_t nodes = 0;
  for (std::size_t l = 1; (k >> l) > 0; ++l) nodes += k >> l;
  return nodes + (k - 1) + k;
}

namespace {

void emit_cla_ctrl_increment(std::vector<Gate>& gates,
                             std::span<const QubitRef> high, QubitRef control,
                             std::span<const QubitRef> scratch) {
  const std::size_t k = high.size();
  if (k == 0) return;
  const std::size_t demand = cla_scratch_demand(k);
  if (scratch.size() < demand) {
    throw SynthesisError("insufficient scratch: need " +
                         std::to_string(demand) + ", got " +
                         std::to_string(scratch.size()));
  }
  ClaWires w;
  std::size_t next = 0;
  w.node_of.emplace_back();  // level 0 = the high wires themselves
  for (std::size_t l = 1; (k >> l) > 0; ++l) {
    std::vector<QubitRef> level(k >> l);
    for (auto& q : level) q = scratch[next++];
    w.node_of.push_back(std::move(level));
  }
  w.prefix.resize(k);
  for (std::size_t i = 1; i < k; ++i) w.prefix[i] = scratch[next++];
  w.dirty.resize(k);
  for (std::size_t i = 0; i < k; ++i) w.dirty[i] = scratch[next++];

  // P stage: up-sweep AND tree, prefix layer, inverse up-sweep. Each prefix
  // is written by one gate from an earlier prefix and one tree node, which
  // is the shape that stays uncomputable after the controlled write below.
  std::vector<Gate> p_stage;
  std::vector<Gate> up;
  for (std::size_t l = 1; l < w.node_of.size(); ++l) {
    const std::size_t len = std::size_t(1) << l;
    for (std::size_t j = 0; j < w.node_of[l].size(); ++j) {
      const QubitRef left = w.range_wire(high, j * len, len / 2);
      const QubitRef right = w.range_wire(high, j * len + len / 2, len / 2);
      up.push_back(Gate::mcx({left, right}, w.node_of[l][j]));
    }
  }
  p_stage.insert(p_stage.end(), up.begin(), up.end());
  // Prefixes that share a source prefix wire serialize, so emit the ones
  // with the deeper downstream chains first: descending low bit keeps every
  // reuse chain at logarithmic depth and is already topologically ordered.
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < k; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
    const std::size_t la = a & (~a + 1);
    const std::size_t lb = b & (~b + 1);
    if (la != lb) return la > lb;
    return a < b;
  });
  for (const std::size_t i : order) {
    const std::size_t low_bit = i & (~i + 1);
    const std::size_t j = i - low_bit;
    const QubitRef src = w.range_wire(high, j, low_bit);
    if (j == 0) {
      p_stage.push_back(Gate::cx(src, w.prefix[i]));
    } else {
      p_stage.push_back(Gate::mcx({w.prefix[j], src}, w.prefix[i]));
    }
  }
  for (std::size_t i = up.size(); i-- > 0;) p_stage.push_back(up[i]);

  // W stage: high_i ^= control AND prefix_i through per-bit dirty wires, so
  // the only gates sharing the control are the two CX fan-outs.
  std::vector<Gate> w_stage;
  std::vector<Gate> write_layer;
  write_layer.push_back(Gate::cx(w.dirty[0], high[0]));
  for (std::size_t i = 1; i < k; ++i) {
    write_layer.push_back(Gate::mcx({w.dirty[i], w.prefix[i]}, high[i]));
  }
  std::vector<Gate> dirty_fan;
  emit_fanout_dirty(dirty_fan, control, w.dirty);
  w_stage.insert(w_stage.end(), write_layer.begin(), write_layer.end());
  w_stage.insert(w_stage.end(), dirty_fan.begin(), dirty_fan.end());
  w_stage.insert(w_stage.end(), write_layer.begin(), write_layer.end());
  w_stage.insert(w_stage.end(), dirty_fan.begin(), dirty_fan.end());

  // F stage: complement the high wires when the control is set; the prefix
  // ANDs of the complemented result equal the stored prefixes, which makes
  // the reversed P stage a valid uncompute on both branches.
  std::vector<Gate> f_stage;
  emit_fanout_dirty(f_stage, control,
                    std::vector<QubitRef>(high.begin(), high.end()));

  gates.insert(gates.end(), p_stage.begin(), p_stage.end());
  gates.insert(gates.end(), w_stage.begin(), w_stage.end());
  gates.insert(gates.end(), f_stage.begin(), f_stage.end());
  for (std::size_t i = p_stage.size(); i-- > 0;) gates.push_back(p_stage[i]);
  gates.insert(gates.end(), f_stage.begin(), f_stage.end());
}

Circuit mcxlike_family(std::size_t n, const BaseGate& base, bool dirty,
                       std::size_t base_threshold) {
  if (n < 1) throw SynthesisError("need at least one control");
  check_threshold(base_threshold);
  std::vector<QubitSpec> qubits;
  qubits.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    qubits.push_back({"x" + std::to_string(i + 1), QubitRole::Input});
  }
  qubits.push_back({"A", dirty ? QubitRole::AncillaDirty
                               : QubitRole::AncillaClean});
  qubits.push_back({"T", QubitRole::Target});
  Circuit c(std::move(qubits), Level::Mcx);
  std::vector<QubitRef> controls(n);
  for (std::size_t i = 0; i < n; ++i) controls[i] = QubitRef(i);
  const QubitRef anc = QubitRef(n);
  const QubitRef target = QubitRef(n + 1);
  std::vector<Gate> gates;
  if (dirty) {
    emit_mcxlike_dirty(gates, controls, anc, target, base, base_threshold);
  } else {
    emit_mcxlike_clean(gates, controls, anc, target, base, base_threshold);
  }
  c.append_all(gates);
  return c;
}

}  // namespace

// ---- public surface --------------------------------------------------------

Circuit factor_control_clean(const Circuit& body,
                             const std::vector<QubitRef>& controls,
                             QubitRef anc) {
  if (anc >= body.num_qubits()) throw SynthesisError("ancilla out of range");
  if (body.qubits()[anc].role != QubitRole::AncillaClean) {
    throw SynthesisError("factor_control_clean needs a clean ancilla wire");
  }
  std::unordered_set<QubitRef> forbidden(controls.begin(), controls.end());
  forbidden.insert(anc);
  for (const Gate& g : body.gates()) {
    if (forbidden.count(g.target)) {
      throw SynthesisError("body writes a control or ancilla wire");
    }
    for (QubitRef c : g.controls) {
      if (c == anc) throw SynthesisError("body reads the ancilla wire");
    }
  }
  Circuit out(body.qubits(), Level::Mcx);
  out.append(Gate::mcx(controls, anc));
  for (const Gate& g : body.gates()) out.append(g.with_control(anc));
  out.append(Gate::mcx(controls, anc));
  return out;
}

Circuit double_apply_dirty(const Circuit& body,
                           const std::vector<QubitRef>& controls,
                           QubitRef anc) {
  if (anc >= body.num_qubits()) throw SynthesisError("ancilla out of range");
  if (body.qubits()[anc].role != QubitRole::AncillaDirty) {
    throw SynthesisError("double_apply_dirty needs a dirty ancilla wire");
  }
  std::unordered_set<QubitRef> support;
  for (const Gate& g : body.gates()) {
    support.insert(g.target);
    support.insert(g.controls.begin(), g.controls.end());
  }
  if (support.count(anc)) {
    throw SynthesisError("body touches the ancilla wire");
  }
  for (QubitRef c : controls) {
    if (support.count(c)) {
      throw SynthesisError("body touches a control wire");
    }
  }
  // Involution check on the body's support, when small enough to simulate.
  if (!support.empty() && support.size() <= 10) {
    std::vector<QubitRef> sorted(support.begin(), support.end());
    std::sort(sorted.begin(), sorted.end());
    std::map<QubitRef, QubitRef> remap;
    std::vector<QubitSpec> sub_qubits;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      remap[sorted[i]] = QubitRef(i);
      sub_qubits.push_back(body.qubits()[sorted[i]]);
    }
    Circuit sub(std::move(sub_qubits), Level::Mcx);
    for (const Gate& g : body.gates()) {
      Gate r = g;
      r.target = remap[g.target];
      for (QubitRef& c : r.controls) c = remap[c];
      sub.append(std::move(r));
    }
    const DenseMatrix u = unitary_of(sub.then(sub));
    if (!equiv(u, DenseMatrix::identity(u.dim), EquivMode::Exact, 1e-10)) {
      throw SynthesisError("body is not an involution");
    }
  }
  Circuit out(body.qubits(), Level::Mcx);
  const Gate flip = Gate::mcx(controls, anc);
  for (int rep = 0; rep < 2; ++rep) {
    for (const Gate& g : body.gates()) out.append(g.with_control(anc));
    out.append(flip);
  }
  return out;
}

void compute_half(Circuit& c, std::span<const QubitRef> controls,
                  QubitRef anc, QubitRef target, std::size_t base_threshold) {
  if (controls.empty()) throw SynthesisError("need at least one control");
  check_threshold(base_threshold);
  std::vector<Gate> gates;
  emit_compute_half(gates, controls, anc, target, base_threshold);
  c.append_all(gates);
}

Circuit mcx_clean(std::size_t n, std::size_t base_threshold) {
  return mcxlike_family(n, BaseGate::x(), false, base_threshold);
}

Circuit mcu_clean(std::size_t n, const BaseGate& u,
                  std::size_t base_threshold) {
  if (!u.to_matrix().is_unitary()) {
    throw SynthesisError("base gate must be unitary");
  }
  return mcxlike_family(n, u, false, base_threshold);
}

Circuit mcx_dirty(std::size_t n, std::size_t base_threshold) {
  return mcxlike_family(n, BaseGate::x(), true, base_threshold);
}

Circuit mcu_dirty(std::size_t n, const BaseGate& u,
                  std::size_t base_threshold) {
  if (!u.to_matrix().is_unitary()) {
    throw SynthesisError("base gate must be unitary");
  }
  if (!u.is_involution()) {
    throw SynthesisError(
        "a dirty ancilla requires an involutive base (U*U = I)");
  }
  return mcxlike_family(n, u, true, base_threshold);
}

void fanout_clean(Circuit& c, QubitRef src,
                  std::span<const QubitRef> targets) {
  std::vector<Gate> gates;
  emit_fanout_clean(gates, src, targets);
  c.append_all(gates);
}

void fanout_dirty(Circuit& c, QubitRef src,
                  std::span<const QubitRef> targets) {
  std::vector<Gate> gates;
  emit_fanout_dirty(gates, src, targets);
  c.append_all(gates);
}

void rz_fanout(Circuit& c, std::span<const Angle> thetas, QubitRef control,
               std::span<const QubitRef> targets) {
  if (thetas.size() != targets.size() || targets.empty()) {
    throw SynthesisError("need one angle per target");
  }
  std::unordered_set<QubitRef> seen;
  for (QubitRef t : targets) {
    if (t == control || !seen.insert(t).second) {
      throw SynthesisError("targets must be distinct and exclude the control");
    }
  }
  std::vector<Gate> gates;
  Angle comp = Angle::zero();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Angle half = thetas[i].halve();
    comp = comp + half;
    gates.push_back(Gate::phase(half, targets[i]));
  }
  std::vector<Gate> fan;
  emit_fanout_dirty(fan, control, targets);
  gates.insert(gates.end(), fan.begin(), fan.end());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    gates.push_back(Gate::phase(-(thetas[i].halve()), targets[i]));
  }
  gates.insert(gates.end(), fan.begin(), fan.end());
  gates.push_back(Gate::phase(comp, control));
  c.append_all(gates);
}

Circuit rz_fanout_circuit(const std::vector<Angle>& thetas) {
  std::vector<QubitSpec> qubits;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    qubits.push_back({"x" + std::to_string(i + 1), QubitRole::Input});
  }
  qubits.push_back({"c", QubitRole::Input});
  Circuit c(std::move(qubits), Level::Mcx);
  std::vector<QubitRef> targets(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) targets[i] = QubitRef(i);
  rz_fanout(c, thetas, QubitRef(thetas.size()), targets);
  return c;
}

void cla_ctrl_increment(Circuit& c, std::span<const QubitRef> high,
                        QubitRef control, std::span<const QubitRef> scratch) {
  std::vector<Gate> gates;
  emit_cla_ctrl_increment(gates, high, control, scratch);
  c.append_all(gates);
}

Circuit incrementor(std::size_t n, const SplitPolicy& policy) {
  if (n < 1) throw SynthesisError("need at least one wire");
  policy.validate();
  std::vector<QubitSpec> qubits;
  for (std::size_t i = 0; i < n; ++i) {
    qubits.push_back({"x" + std::to_string(i), QubitRole::Input});
  }
  qubits.push_back({"A", QubitRole::AncillaClean});
  Circuit c(std::move(qubits), Level::Mcx);
  std::vector<QubitRef> wires(n);
  for (std::size_t i = 0; i < n; ++i) wires[i] = QubitRef(i);
  std::vector<Gate> gates;
  emit_incrementor(gates, wires, QubitRef(n), policy);
  c.append_all(gates);
  return c;
}

void incrementor_on(Circuit& c, std::span<const QubitRef> wires, QubitRef anc,
                    const SplitPolicy& policy) {
  if (wires.empty()) throw SynthesisError("need at least one wire");
  policy.validate();
  std::vector<Gate> gates;
  emit_incrementor(gates, wires, anc, policy);
  c.append_all(gates);
}

Circuit mcx_no_ancilla(std::size_t n, const SplitPolicy& policy) {
  if (n < 3) {
    throw SynthesisError("the zero-ancilla construction needs n >= 3");
  }
  policy.validate();
  std::vector<QubitSpec> qubits;
  for (std::size_t i = 0; i < n; ++i) {
    qubits.push_back({"x" + std::to_string(i + 1), QubitRole::Input});
  }
  qubits.push_back({"t", QubitRole::Target});
  Circuit c(std::move(qubits), Level::Mcx);
  const QubitRef t = QubitRef(n);
  const QubitRef xn = QubitRef(n - 1);
  const QubitRef borrow = QubitRef(n - 2);

  std::vector<QubitRef> inner_controls;
  for (std::size_t i = 0; i + 2 < n; ++i) inner_controls.push_back(QubitRef(i));
  inner_controls.push_back(xn);

  std::vector<Gate> gates;
  const Angle t_angle = Angle::rational(1, 4);
  gates.push_back(Gate::mch({xn}, t));
  for (int rep = 0; rep < 2; ++rep) {
    emit_mcxlike_dirty(gates, inner_controls, borrow, t, BaseGate::x(),
                       policy.base_threshold);
    gates.push_back(Gate::mcphase(-t_angle, {xn}, t));
    gates.push_back(Gate::mcx({borrow, xn}, t));
    gates.push_back(Gate::mcphase(t_angle, {xn}, t));
  }
  gates.push_back(Gate::mch({xn}, t));

  // +1 on x_1..x_{n-1} with x_n as X-conjugated conditionally clean ancilla.
  std::vector<QubitRef> reg(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) reg[i] = QubitRef(i);
  std::vector<Gate> plus_block;
  plus_block.push_back(Gate::x(xn));
  emit_incrementor(plus_block, reg, xn, policy);
  plus_block.push_back(Gate::x(xn));

  gates.insert(gates.end(), plus_block.begin(), plus_block.end());
  // Phase-gradient column between +1 and -1 (daggered, x_2..x_{n-1}).
  for (std::size_t j = 1; j + 1 < n; ++j) {
    gates.push_back(Gate::mcphase(
        Angle::rational(-1, BigInt(1) << (n - j)), {xn}, QubitRef(j)));
  }
  for (std::size_t i = plus_block.size(); i-- > 0;) {
    gates.push_back(plus_block[i].inverse());
  }
  // Undaggered column after -1 (x_1 carries the same weight as x_2).
  gates.push_back(Gate::mcphase(
      Angle::rational(1, BigInt(1) << (n - 1)), {xn}, QubitRef(0)));
  for (std::size_t j = 1; j + 1 < n; ++j) {
    gates.push_back(Gate::mcphase(
        Angle::rational(1, BigInt(1) << (n - j)), {xn}, QubitRef(j)));
  }
  c.append_all(gates);
  return c;
}

}  // namespace mcsynth
