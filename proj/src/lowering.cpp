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

#include "mcsynth/lowering.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_set>

#include "mcsynth/errors.hpp"
#include "mcsynth/fanout.hpp"

namespace mcsynth {

namespace {

constexpr std::size_t kMaxLowerControls = 5;

Mat2 rz(double theta) {
  const Complex e(std::cos(theta / 2), std::sin(theta / 2));
  return {std::conj(e), 0, 0, e};
}

Mat2 ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {c, -s, s, c};
}

struct Zyz {
  double alpha, beta, gamma, delta;
};

// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta)
Zyz zyz_decompose(const Mat2& u) {
  Zyz d{};
  d.alpha = std::arg(u.det()) / 2.0;
  const Complex ph(std::cos(-d.alpha), std::sin(-d.alpha));
  const Complex a00 = ph * u.m00;
  const Complex a10 = ph * u.m10;
  const Complex a11 = ph * u.m11;
  d.gamma = 2.0 * std::atan2(std::abs(a10), std::abs(a00));
  if (std::abs(a10) < 1e-14) {
    d.beta = d.delta = std::arg(a11);
  } else if (std::abs(a00) < 1e-14) {
    const double diff = 2.0 * std::arg(a10);
    d.beta = diff / 2.0;
    d.delta = -diff / 2.0;
  } else {
    const double sum = 2.0 * std::arg(a11);
    const double diff = 2.0 * std::arg(a10);
    d.beta = (sum + diff) / 2.0;
    d.delta = (sum - diff) / 2.0;
  }
  return d;
}

struct Lowerer {
  std::size_t num_qubits;
  const std::function<void(const Gate&)>& sink;

  void emit(Gate g) { sink(g); }

  // Free wire nearest the gate target, preferring the higher index on a
  // tie. The AND recursion leaves each node's idle ancilla right above the
  // node's target, so this keeps borrows inside their own subtree and
  // preserves the parallelism of the mcx-level schedule after lowering.
  std::optional<QubitRef> find_free_wire(const Gate& g) const {
    std::unordered_set<QubitRef> support(g.controls.begin(), g.controls.end());
    support.insert(g.target);
    if (g.borrow_hint && *g.borrow_hint < num_qubits &&
        !support.count(*g.borrow_hint)) {
      return *g.borrow_hint;
    }
    if (support.size() >= num_qubits) return std::nullopt;
    const std::size_t t = g.target;
    for (std::size_t d = 1; d < num_qubits; ++d) {
      if (t + d < num_qubits && !support.count(QubitRef(t + d))) {
        return QubitRef(t + d);
      }
      if (t >= d && !support.count(QubitRef(t - d))) {
        return QubitRef(t - d);
      }
    }
    return std::nullopt;
  }

  // [P(a/2) c; P(a/2) t; CX; P(-a/2) t; CX]
  void lower_cp(const Angle& a, QubitRef c, QubitRef t) {
    const Angle half = a.halve();
    emit(Gate::phase(half, c));
    emit(Gate::phase(half, t));
    emit(Gate::cx(c, t));
    emit(Gate::phase(-half, t));
    emit(Gate::cx(c, t));
  }

  // CH = Ry(-pi/4)_t ; CZ ; Ry(pi/4)_t, with CZ split as a controlled phase.
  void lower_ch(QubitRef c, QubitRef t) {
    emit(Gate::unitary(ry(-std::numbers::pi / 4), t));
    lower_cp(Angle::pi(), c, t);
    emit(Gate::unitary(ry(std::numbers::pi / 4), t));
  }

  // Generic controlled-U via the ZYZ split U = e^{ia} A X B X C, ABC = I.
  void lower_cu(const Mat2& u, QubitRef c, QubitRef t) {
    const Zyz d = zyz_decompose(u);
    const Mat2 a = rz(d.beta) * ry(d.gamma / 2);
    const Mat2 b = ry(-d.gamma / 2) * rz(-(d.delta + d.beta) / 2);
    const Mat2 cc = rz((d.delta - d.beta) / 2);
    emit(Gate::unitary(cc, t));
    emit(Gate::cx(c, t));
    emit(Gate::unitary(b, t));
    emit(Gate::cx(c, t));
    emit(Gate::unitary(a, t));
    if (std::abs(d.alpha) > 0.0) {
      emit(Gate::phase(Angle::real(d.alpha), c));
    }
  }

  // T-network Toffoli, phases at pi/4.
  void lower_toffoli(QubitRef a, QubitRef b, QubitRef t) {
    const Angle T = Angle::rational(1, 4);
    emit(Gate::h(t));
    emit(Gate::cx(b, t));
    emit(Gate::phase(-T, t));
    emit(Gate::cx(a, t));
    emit(Gate::phase(T, t));
    emit(Gate::cx(b, t));
    emit(Gate::phase(-T, t));
    emit(Gate::cx(a, t));
    emit(Gate::phase(T, b));
    emit(Gate::phase(T, t));
    emit(Gate::h(t));
    emit(Gate::cx(a, b));
    emit(Gate::phase(T, a));
    emit(Gate::phase(-T, b));
    emit(Gate::cx(a, b));
  }

  // X with 3..5 controls through a borrowed wire: the gate splits into two
  // smaller MCX applied twice, which is an identity for any borrow value.
  // Each half hands the other half's idle controls down as the borrows of
  // its own sub-splits, so the expansion never reaches outside the wires it
  // was given and parallel leaves stay parallel after lowering.
  void lower_mcx_borrow(const std::vector<QubitRef>& cs, QubitRef t,
                        QubitRef borrow) {
    const std::size_t h = (cs.size() + 1) / 2;
    const std::vector<QubitRef> front(cs.begin(), cs.begin() + h);
    std::vector<QubitRef> back(cs.begin() + h, cs.end());
    const QubitRef front_spare = front[0];
    const QubitRef back_spare = back[0];
    back.push_back(borrow);
    for (int rep = 0; rep < 2; ++rep) {
      lower_x_with_spare(front, borrow, back_spare);
      lower_x_with_spare(back, t, front_spare);
    }
  }

  void lower_x_with_spare(const std::vector<QubitRef>& cs, QubitRef t,
                          QubitRef spare) {
    if (cs.size() <= 1) {
      emit(Gate::mcx(cs, t));
      return;
    }
    if (cs.size() == 2) {
      lower_toffoli(cs[0], cs[1], t);
      return;
    }
    lower_mcx_borrow(cs, t, spare);
  }

  // Exact controlled-root ladder:
  // C^k P(a) = CP(a/2)(c_k,t) C^{k-1}X C P(-a/2)(c_k,t) C^{k-1}X C^{k-1}P(a/2)
  void lower_mcp(const Angle& a, const std::vector<QubitRef>& cs, QubitRef t) {
    if (cs.empty()) {
      emit(Gate::phase(a, t));
      return;
    }
    if (cs.size() == 1) {
      lower_cp(a, cs[0], t);
      return;
    }
    const Angle half = a.halve();
    std::vector<QubitRef> rest(cs.begin(), cs.end() - 1);
    const QubitRef last = cs.back();
    lower_cp(half, last, t);
    lower_x(Gate::mcx(rest, last));
    lower_cp(-half, last, t);
    lower_x(Gate::mcx(rest, last));
    lower_mcp(half, rest, t);
  }

  // Same ladder shape for a general base, with V = sqrt(U).
  void lower_mcu(const Mat2& u, const std::vector<QubitRef>& cs, QubitRef t) {
    if (cs.empty()) {
      emit(Gate::unitary(u, t));
      return;
    }
    if (cs.size() == 1) {
      lower_cu(u, cs[0], t);
      return;
    }
    const Mat2 v = u.sqrt();
    std::vector<QubitRef> rest(cs.begin(), cs.end() - 1);
    const QubitRef last = cs.back();
    lower_cu(v, last, t);
    lower_x(Gate::mcx(rest, last));
    lower_cu(v.dagger(), last, t);
    lower_x(Gate::mcx(rest, last));
    lower_mcu(v, rest, t);
  }

  void lower_x(const Gate& g) {
    const std::size_t k = g.num_controls();
    if (k == 0 || k == 1) {
      emit(g);
      return;
    }
    if (k == 2) {
      lower_toffoli(g.controls[0], g.controls[1], g.target);
      return;
    }
    const auto borrow = find_free_wire(g);
    if (borrow) {
      lower_mcx_borrow(g.controls, g.target, *borrow);
      return;
    }
    if (k == 5) {
      throw SynthesisError(
          "lowering a 5-controlled gate needs a spare qubit");
    }
    // Minimal wire count: exact phase ladder, X = H Z H.
    emit(Gate::h(g.target));
    lower_mcp(Angle::pi(), g.controls, g.target);
    emit(Gate::h(g.target));
  }

  void lower_gate(const Gate& g) {
    const std::size_t k = g.num_controls();
    if (k > kMaxLowerControls) {
      throw SynthesisError("cannot lower a gate with more than 5 controls");
    }
    if (k == 5 && !find_free_wire(g)) {
      throw SynthesisError(
          "lowering a 5-controlled gate needs a spare qubit");
    }
    switch (g.kind) {
      case GateKind::X:
        lower_x(g);
        return;
      case GateKind::Phase:
        if (k == 0) {
          emit(g);
        } else {
          lower_mcp(g.angle, g.controls, g.target);
        }
        return;
      case GateKind::H:
        if (k == 0) {
          emit(g);
        } else if (k == 1) {
          lower_ch(g.controls[0], g.target);
        } else {
          lower_mcu(Mat2::h(), g.controls, g.target);
        }
        return;
      case GateKind::Unitary2:
        if (k == 0) {
          emit(g);
        } else if (k == 1) {
          lower_cu(g.matrix, g.controls[0], g.target);
        } else {
          lower_mcu(g.matrix, g.controls, g.target);
        }
        return;
    }
  }

  // A run of controlled phases sharing one control lowers jointly:
  // half phases on the targets, a CX fan-out of the control, negated half
  // phases, the fan-out again, and one compensating phase on the control.
  void lower_cp_run(const std::vector<const Gate*>& run) {
    std::vector<QubitRef> targets;
    targets.reserve(run.size());
    for (const Gate* g : run) targets.push_back(g->target);
    const QubitRef c = run.front()->controls[0];
    Angle comp = Angle::zero();
    for (const Gate* g : run) {
      const Angle half = g->angle.halve();
      comp = comp + half;
      emit(Gate::phase(half, g->target));
    }
    std::vector<Gate> fan;
    emit_fanout_dirty(fan, c, targets);
    for (const Gate& g : fan) emit(g);
    for (const Gate* g : run) {
      emit(Gate::phase(-(g->angle.halve()), g->target));
    }
    for (const Gate& g : fan) emit(g);
    emit(Gate::phase(comp, c));
  }
};

bool is_cp(const Gate& g) {
  return g.kind == GateKind::Phase && g.num_controls() == 1;
}

}  // namespace

void lower_gates(const Circuit& c,
                 const std::function<void(const Gate&)>& sink) {
  Lowerer lw{c.num_qubits(), sink};
  const auto& gs = c.gates();
  std::size_t i = 0;
  while (i < gs.size()) {
    if (is_cp(gs[i])) {
      // Collect the maximal fusable run: same control, distinct targets.
      std::vector<const Gate*> run{&gs[i]};
      std::unordered_set<QubitRef> seen{gs[i].target};
      std::size_t j = i + 1;
      while (j < gs.size() && is_cp(gs[j]) &&
             gs[j].controls[0] == gs[i].controls[0] &&
             !seen.count(gs[j].target)) {
        run.push_back(&gs[j]);
        seen.insert(gs[j].target);
        ++j;
      }
      if (run.size() >= 2) {
        lw.lower_cp_run(run);
        i = j;
        continue;
      }
    }
    lw.lower_gate(gs[i]);
    ++i;
  }
}

Circuit lower_to_basis(const Circuit& c) {
  Circuit out(c.qubits(), Level::Basis);
  lower_gates(c, [&out](const Gate& g) { out.append(g); });
  return out;
}

LoweredMetrics lowered_metrics(const Circuit& c) {
  DepthTracker tracker(c.num_qubits());
  lower_gates(c, [&tracker](const Gate& g) { tracker.add(g); });
  return {tracker.depth(), tracker.count()};
}

}  // namespace mcsynth
