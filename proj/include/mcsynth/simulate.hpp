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
#include <string>
#include <vector>

#include "mcsynth/circuit.hpp"

namespace mcsynth {

/// Dense amplitude vector over 2^m basis states. Qubit j corresponds to bit
/// j of the basis index (qubit 0 is the least significant bit).
struct StateVector {
  std::size_t num_qubits = 0;
  std::vector<Complex> amps;

  static StateVector basis(std::size_t num_qubits, std::uint64_t index);
  double norm() const;
};

/// Packed bitstring state for the classical (X-type) simulator. Bit j is
/// qubit j.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static Bits from_string(const std::string& s);  // s[i] is qubit i
  static Bits from_value(std::size_t n, std::uint64_t value);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  std::uint64_t value() const;  // requires n <= 64
  std::string str() const;      // character i is qubit i

  bool operator==(const Bits& other) const {
    return n_ == other.n_ && w_ == other.w_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

constexpr std::size_t kMaxDenseApplyQubits = 26;
constexpr std::size_t kMaxDenseUnitaryQubits = 12;

/// Applies a single gate in place.
void apply_gate(const Gate& g, StateVector& s);

/// Applies the whole circuit to a state. Throws on dimension mismatch or
/// more than kMaxDenseApplyQubits qubits.
StateVector apply(const Circuit& c, StateVector s);

struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> a;  // row major

  static DenseMatrix identity(std::size_t dim);
  Complex& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return a[r * dim + c];
  }
  Complex determinant() const;  // Gaussian elimination, O(dim^3)
};

/// Full 2^m x 2^m matrix of the circuit, built column by column.
DenseMatrix unitary_of(const Circuit& c);

enum class EquivMode { Exact, GlobalPhase };

/// Matrix equality, optionally up to a single global phase taken from the
/// largest-magnitude entry ratio.
bool equiv(const DenseMatrix& u, const DenseMatrix& v, EquivMode mode,
           double tol);

/// Runs an X-type circuit on a basis input. Throws SimulationError naming
/// the offending gate if the circuit contains a non-classical gate.
Bits classical_run(const Circuit& c, const Bits& input);

/// Direct gate semantics, no circuits: n controls plus one target qubit at
/// index n; flips the target iff all controls are one.
Bits oracle_mcx(std::size_t n, Bits input);

/// |x> -> |(x+1) mod 2^n> on exactly n bits.
Bits oracle_incr(std::size_t n, Bits x);

/// Dense (n+1)-qubit matrix of the n-controlled U with target at qubit n.
DenseMatrix oracle_mcu(std::size_t n, const Mat2& u);

}  // namespace mcsynth
