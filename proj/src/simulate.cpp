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

#include "mcsynth/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "mcsynth/errors.hpp"

namespace mcsynth {

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  StateVector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t(1) << num_qubits, Complex(0, 0));
  s.amps[index] = Complex(1, 0);
  return s;
}

double StateVector::norm() const {
  double n = 0;
  for (const Complex& a : amps) n += std::norm(a);
  return std::sqrt(n);
}

Bits Bits::from_string(const std::string& s) {
  Bits b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      b.set(i, true);
    } else if (s[i] != '0') {
      throw SimulationError("bitstring must contain only 0 and 1");
    }
  }
  return b;
}

Bits Bits::from_value(std::size_t n, std::uint64_t value) {
  Bits b(n);
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    b.set(i, (value >> i) & 1);
  }
  return b;
}

std::uint64_t Bits::value() const {
  if (n_ > 64) throw SimulationError("bitstring too wide for value()");
  return w_.empty() ? 0 : w_[0];
}

std::string Bits::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

namespace {

// Iterates the basis indices whose control bits are all one, calling fn with
// the index having target bit zero. Uses the subset-enumeration trick over
// the free (non-operand) bit positions.
template <typename Fn>
void for_each_control_subspace(std::size_t m, const Gate& g, Fn&& fn) {
  std::uint64_t cmask = 0;
  for (QubitRef c : g.controls) cmask |= std::uint64_t(1) << c;
  const std::uint64_t tmask = std::uint64_t(1) << g.target;
  const std::uint64_t all = (m == 64) ? ~std::uint64_t(0)
                                      : ((std::uint64_t(1) << m) - 1);
  const std::uint64_t free_mask = all & ~cmask & ~tmask;
  std::uint64_t s = 0;
  while (true) {
    fn(cmask | s, tmask);
    s = (s - free_mask) & free_mask;
    if (s == 0) break;
  }
}

}  // namespace

void apply_gate(const Gate& g, StateVector& sv) {
  const std::size_t m = sv.num_qubits;
  auto& amps = sv.amps;
  switch (g.kind) {
    case GateKind::X:
      for_each_control_subspace(m, g, [&](std::uint64_t i0, std::uint64_t t) {
        std::swap(amps[i0], amps[i0 | t]);
      });
      break;
    case GateKind::Phase: {
      const double r = g.angle.radians();
      const Complex ph(std::cos(r), std::sin(r));
      for_each_control_subspace(m, g, [&](std::uint64_t i0, std::uint64_t t) {
        amps[i0 | t] *= ph;
      });
      break;
    }
    default: {
      const Mat2 u = g.base_matrix();
      for_each_control_subspace(m, g, [&](std::uint64_t i0, std::uint64_t t) {
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i0 | t];
        amps[i0] = u.m00 * a0 + u.m01 * a1;
        amps[i0 | t] = u.m10 * a0 + u.m11 * a1;
      });
      break;
    }
  }
}

StateVector apply(const Circuit& c, StateVector s) {
  if (c.num_qubits() > kMaxDenseApplyQubits) {
    throw SimulationError("too many qubits for dense simulation");
  }
  if (s.num_qubits != c.num_qubits() ||
      s.amps.size() != (std::size_t(1) << c.num_qubits())) {
    throw SimulationError("state dimension does not match circuit");
  }
  for (const Gate& g : c.gates()) apply_gate(g, s);
  return s;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m;
  m.dim = dim;
  m.a.assign(dim * dim, Complex(0, 0));
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Complex(1, 0);
  return m;
}

Complex DenseMatrix::determinant() const {
  DenseMatrix lu = *this;
  Complex det(1, 0);
  for (std::size_t k = 0; k < dim; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu.at(k, k));
    for (std::size_t r = k + 1; r < dim; ++r) {
      const double v = std::abs(lu.at(r, k));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex(0, 0);
    if (pivot != k) {
      for (std::size_t cidx = 0; cidx < dim; ++cidx) {
        std::swap(lu.at(k, cidx), lu.at(pivot, cidx));
      }
      det = -det;
    }
    det *= lu.at(k, k);
    for (std::size_t r = k + 1; r < dim; ++r) {
      const Complex f = lu.at(r, k) / lu.at(k, k);
      for (std::size_t cidx = k; cidx < dim; ++cidx) {
        lu.at(r, cidx) -= f * lu.at(k, cidx);
      }
    }
  }
  return det;
}

DenseMatrix unitary_of(const Circuit& c) {
  const std::size_t m = c.num_qubits();
  if (m > kMaxDenseUnitaryQubits) {
    throw SimulationError("too many qubits for full unitary extraction");
  }
  const std::size_t dim = std::size_t(1) << m;
  DenseMatrix out;
  out.dim = dim;
  out.a.assign(dim * dim, Complex(0, 0));
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector sv = apply(c, StateVector::basis(m, col));
    for (std::size_t row = 0; row < dim; ++row) {
      out.at(row, col) = sv.amps[row];
    }
  }
  return out;
}

bool equiv(const DenseMatrix& u, const DenseMatrix& v, EquivMode mode,
           double tol) {
  if (u.dim != v.dim) throw SimulationError("matrix dimension mismatch");
  Complex lambda(1, 0);
  if (mode == EquivMode::GlobalPhase) {
    std::size_t best = 0;
    double best_mag = -1;
    for (std::size_t i = 0; i < v.a.size(); ++i) {
      const double mag = std::abs(v.a[i]);
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag <= tol) return false;
    lambda = u.a[best] / v.a[best];
    const double lm = std::abs(lambda);
    if (lm == 0.0) return false;
    lambda /= lm;
  }
  for (std::size_t i = 0; i < u.a.size(); ++i) {
    if (std::abs(u.a[i] - lambda * v.a[i]) > tol) return false;
  }
  return true;
}

Bits classical_run(const Circuit& c, const Bits& input) {
  if (input.size() != c.num_qubits()) {
    throw SimulationError("input width does not match circuit");
  }
  Bits state = input;
  for (const Gate& g : c.gates()) {
    if (!g.is_x_kind()) {
      throw SimulationError(
          "classical run requires an X-type circuit, found gate '" +
          count_bucket(g) + "' (dense simulation required)");
    }
    bool fire = true;
    for (QubitRef ctl : g.controls) {
      if (!state.get(ctl)) {
        fire = false;
        break;
      }
    }
    if (fire) state.flip(g.target);
  }
  return state;
}

Bits oracle_mcx(std::size_t n, Bits input) {
  if (input.size() != n + 1) {
    throw SimulationError("oracle_mcx expects n+1 bits");
  }
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!input.get(i)) {
      all = false;
      break;
    }
  }
  if (all) input.flip(n);
  return input;
}

Bits oracle_incr(std::size_t n, Bits x) {
  if (x.size() != n) throw SimulationError("oracle_incr expects n bits");
  for (std::size_t i = 0; i < n; ++i) {
    x.flip(i);
    if (x.get(i)) break;  // no carry out of this bit
  }
  return x;
}

DenseMatrix oracle_mcu(std::size_t n, const Mat2& u) {
  if (n + 1 > kMaxDenseUnitaryQubits) {
    throw SimulationError("too many qubits for dense oracle");
  }
  const std::size_t dim = std::size_t(1) << (n + 1);
  DenseMatrix m = DenseMatrix::identity(dim);
  const std::uint64_t cmask = (std::uint64_t(1) << n) - 1;
  const std::uint64_t tmask = std::uint64_t(1) << n;
  const std::uint64_t i0 = cmask;
  const std::uint64_t i1 = cmask | tmask;
  m.at(i0, i0) = u.m00;
  m.at(i0, i1) = u.m01;
  m.at(i1, i0) = u.m10;
  m.at(i1, i1) = u.m11;
  return m;
}

}  // namespace mcsynth
