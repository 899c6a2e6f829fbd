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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mcsynth/errors.hpp"
#include "mcsynth/synthesis.hpp"

using namespace mcsynth;

namespace {

Circuit wires(std::size_t n, Level level = Level::Mcx) {
  std::vector<QubitSpec> specs;
  for (std::size_t i = 0; i < n; ++i) {
    specs.push_back({"q" + std::to_string(i), QubitRole::Input});
  }
  return Circuit(specs, level);
}

}  // namespace

TEST_CASE("X flips a basis state") {
  Circuit c = wires(1);
  c.append(Gate::x(0));
  const StateVector out = apply(c, StateVector::basis(1, 0));
  CHECK(std::abs(out.amps[1] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("H twice is the identity") {
  Circuit c = wires(1);
  c.append(Gate::h(0));
  c.append(Gate::h(0));
  const StateVector out = apply(c, StateVector::basis(1, 0));
  CHECK(std::abs(out.amps[0] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("controlled phase only fires on 11") {
  Circuit c = wires(2);
  c.append(Gate::mcphase(Angle::rational(1, 2), {0}, 1));
  for (std::uint64_t b = 0; b < 4; ++b) {
    const StateVector out = apply(c, StateVector::basis(2, b));
    const Complex want = b == 3 ? Complex(0, 1) : Complex(1, 0);
    CHECK(std::abs(out.amps[b] - want) < 1e-12);
  }
}

TEST_CASE("unitary_of on the empty circuit and CX") {
  CHECK(equiv(unitary_of(wires(2)), DenseMatrix::identity(4),
              EquivMode::Exact, 0.0));
  Circuit c = wires(2);
  c.append(Gate::cx(0, 1));
  const DenseMatrix u = unitary_of(c);
  // Control is qubit 0 (low bit): |01>_paper = index 1 maps to index 3.
  CHECK(std::abs(u.at(3, 1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(u.at(1, 3) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(u.at(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(u.at(2, 2) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("norm is preserved over random circuits") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int it = 0; it < 100; ++it) {
    Circuit c = wires(5);
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    for (int g = 0; g < 30; ++g) {
      const QubitRef t = QubitRef(pick(rng));
      QubitRef ctl = QubitRef(pick(rng));
      if (ctl == t) ctl = QubitRef((t + 1) % 5);
      switch (kind(rng)) {
        case 0:
          c.append(Gate::x(t));
          break;
        case 1:
          c.append(Gate::h(t));
          break;
        case 2:
          c.append(Gate::phase(Angle::real(angle(rng)), t));
          break;
        default:
          c.append(Gate::mcx({ctl}, t));
      }
    }
    StateVector s;
    s.num_qubits = 5;
    s.amps.assign(32, Complex(0, 0));
    std::normal_distribution<double> gauss;
    for (auto& a : s.amps) a = Complex(gauss(rng), gauss(rng));
    const double norm = s.norm();
    for (auto& a : s.amps) a /= norm;
    CHECK(std::abs(apply(c, s).norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("classical_run matches dense apply on basis states") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, 7);
  for (int it = 0; it < 25; ++it) {
    Circuit c = wires(8);
    for (int g = 0; g < 40; ++g) {
      const QubitRef t = QubitRef(pick(rng));
      std::vector<QubitRef> cs;
      for (int k = 0; k < 3; ++k) {
        const QubitRef cand = QubitRef(pick(rng));
        if (cand != t &&
            std::find(cs.begin(), cs.end(), cand) == cs.end()) {
          cs.push_back(cand);
        }
      }
      c.append(Gate::mcx(cs, t));
    }
    const std::uint64_t in = rng() & 0xff;
    const Bits out = classical_run(c, Bits::from_value(8, in));
    const StateVector sv = apply(c, StateVector::basis(8, in));
    CHECK(std::abs(sv.amps[out.value()] - Complex(1, 0)) < 1e-12);
  }
}

TEST_CASE("classical_run rejects non-classical gates") {
  Circuit c = wires(2);
  c.append(Gate::h(0));
  CHECK_THROWS_AS(classical_run(c, Bits(2)), SimulationError);
  CHECK_THROWS_AS(classical_run(wires(3), Bits(2)), SimulationError);
}

TEST_CASE("dense engines enforce their qubit limits") {
  // The qubit-count guard fires before any state is touched.
  CHECK_THROWS_AS(apply(wires(27), StateVector::basis(1, 0)),
                  SimulationError);
  StateVector wrong = StateVector::basis(2, 0);
  CHECK_THROWS_AS(apply(wires(3), wrong), SimulationError);
  CHECK_THROWS_AS(unitary_of(wires(13)), SimulationError);
}

TEST_CASE("classical_run agrees with dense apply on the synthesized corpus") {
  // Pull in the X-type families at a size the dense engine still covers.
  std::mt19937_64 rng(103);
  std::vector<Circuit> corpus;
  corpus.push_back(mcsynth::mcx_clean(8));
  corpus.push_back(mcsynth::mcx_dirty(8));
  corpus.push_back(mcsynth::incrementor(10));
  for (const Circuit& c : corpus) {
    const std::size_t m = c.num_qubits();
    for (int it = 0; it < 100; ++it) {
      const std::uint64_t in = rng() & ((std::uint64_t(1) << m) - 1);
      const Bits out = classical_run(c, Bits::from_value(m, in));
      const StateVector sv = apply(c, StateVector::basis(m, in));
      CHECK(std::abs(sv.amps[out.value()] - Complex(1, 0)) < 1e-12);
    }
  }
}

TEST_CASE("equiv modes") {
  const DenseMatrix id = DenseMatrix::identity(4);
  CHECK(equiv(id, id, EquivMode::Exact, 0.0));
  DenseMatrix phased = id;
  const Complex ph(std::cos(std::numbers::pi / 4),
                   std::sin(std::numbers::pi / 4));
  for (auto& a : phased.a) a *= ph;
  CHECK_FALSE(equiv(phased, id, EquivMode::Exact, 1e-9));
  CHECK(equiv(phased, id, EquivMode::GlobalPhase, 1e-9));
  // Symmetric and reflexive at tolerance zero.
  CHECK(equiv(id, phased, EquivMode::GlobalPhase, 1e-9));
  DenseMatrix three = DenseMatrix::identity(8);
  CHECK_THROWS_AS(equiv(id, three, EquivMode::Exact, 0.0),
                  SimulationError);
}

TEST_CASE("oracles") {
  // x = 111, t = 1 -> t flips to 0
  Bits in = Bits::from_string("1111");
  CHECK(oracle_mcx(3, in).str() == "1110");
  CHECK(oracle_mcx(3, Bits::from_string("1010")).str() == "1010");

  CHECK(oracle_incr(4, Bits::from_value(4, 9)).value() == 10);
  CHECK(oracle_incr(4, Bits::from_value(4, 15)).value() == 0);
  CHECK(oracle_incr(16, Bits::from_value(16, 65535)).value() == 0);

  const DenseMatrix m = oracle_mcu(2, Mat2::phase(Angle::rational(1, 2)));
  CHECK(std::abs(m.at(7, 7) - Complex(0, 1)) < 1e-12);
  CHECK(std::abs(m.at(3, 3) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("a circuit followed by its inverse simulates to the identity") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + it % 5;  // up to 6 qubits
    Circuit c = wires(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int g = 0; g < 15; ++g) {
      const QubitRef t = QubitRef(pick(rng));
      std::vector<QubitRef> cs;
      while (cs.size() + 2 < n && (rng() & 1)) {
        const QubitRef cand = QubitRef(pick(rng));
        if (cand != t && std::find(cs.begin(), cs.end(), cand) == cs.end()) {
          cs.push_back(cand);
        }
      }
      switch (kind(rng)) {
        case 0:
          c.append(Gate::mcx(cs, t));
          break;
        case 1:
          c.append(Gate::mch(cs, t));
          break;
        case 2:
          c.append(Gate::mcphase(Angle::real(angle(rng)), cs, t));
          break;
        case 3:
          c.append(Gate::mcphase(Angle::rational(3, 7), cs, t));
          break;
        default:
          c.append(Gate::x(t));
      }
    }
    const DenseMatrix u = unitary_of(c.then(c.inverse()));
    CHECK(equiv(u, DenseMatrix::identity(u.dim), EquivMode::Exact, 1e-10));
  }
}

TEST_CASE("determinant of small permutations") {
  Circuit c = wires(1);
  c.append(Gate::x(0));
  CHECK(std::abs(unitary_of(c).determinant() - Complex(-1, 0)) < 1e-9);
  // On exactly two qubits CX is a single transposition, so det = -1; only
  // from three qubits up does it become an even permutation.
  Circuit cx = wires(2);
  cx.append(Gate::cx(0, 1));
  CHECK(std::abs(unitary_of(cx).determinant() - Complex(-1, 0)) < 1e-9);
  Circuit cx3 = wires(3);
  cx3.append(Gate::cx(0, 1));
  CHECK(std::abs(unitary_of(cx3).determinant() - Complex(1, 0)) < 1e-9);
}
