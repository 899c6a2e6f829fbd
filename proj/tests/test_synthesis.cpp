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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mcsynth/errors.hpp"
#include "mcsynth/simulate.hpp"
#include "test_util.hpp"

using namespace mcsynth;
using namespace mcsynth::testing;

TEST_CASE("factor_control_clean equals the controlled body") {
  // body = X on the target wire; controls = {0}; clean ancilla wire 1.
  Circuit body({{"c", QubitRole::Input},
                {"A", QubitRole::AncillaClean},
                {"t", QubitRole::Target}},
               Level::Mcx);
  body.append(Gate::x(2));
  const Circuit fc = factor_control_clean(body, {0}, 1);
  REQUIRE(fc.size() == 3);
  // On the ancilla=0 subspace this is exactly CX(0 -> 2), ancilla restored.
  for (std::uint64_t in : {0b000ull, 0b001ull, 0b100ull, 0b101ull}) {
    const Bits out = classical_run(fc, Bits::from_value(3, in));
    const std::uint64_t want = (in & 1) ? in ^ 0b100 : in;
    CHECK(out.value() == want);
    CHECK_FALSE(out.get(1));  // ancilla back at 0
  }
}

TEST_CASE("factor_control_clean with a non-classical body") {
  // body = H then T on the last wire; two controls.
  Circuit body({{"c1", QubitRole::Input},
                {"c2", QubitRole::Input},
                {"A", QubitRole::AncillaClean},
                {"t", QubitRole::Target}},
               Level::Mcx);
  body.append(Gate::h(3));
  body.append(Gate::phase(Angle::rational(1, 4), 3));
  const Circuit fc = factor_control_clean(body, {0, 1}, 2);
  Circuit sub = wires(1);
  sub.append(Gate::h(0));
  sub.append(Gate::phase(Angle::rational(1, 4), 0));
  const DenseMatrix expected =
      embed_controlled(unitary_of(sub), 4, {3}, {0, 1});
  // Contract columns: clean ancilla (wire 2) at zero.
  CHECK(columns_match(fc, expected,
                      [](std::uint64_t col) { return ((col >> 2) & 1) == 0; },
                      1e-10));
}

TEST_CASE("factor_control_clean rejects overlap and dirty ancillas") {
  Circuit body({{"c", QubitRole::Input},
                {"A", QubitRole::AncillaDirty},
                {"t", QubitRole::Target}},
               Level::Mcx);
  body.append(Gate::x(2));
  CHECK_THROWS_AS(factor_control_clean(body, {0}, 1), SynthesisError);

  Circuit on_anc({{"c", QubitRole::Input},
                  {"A", QubitRole::AncillaClean},
                  {"t", QubitRole::Target}},
                 Level::Mcx);
  on_anc.append(Gate::x(1));
  CHECK_THROWS_AS(factor_control_clean(on_anc, {0}, 1), SynthesisError);
}

TEST_CASE("double_apply_dirty matches the controlled body on all settings") {
  // Involutive 2-wire body: conjugated X.
  std::mt19937_64 rng(5);
  for (int it = 0; it < 5; ++it) {
    Circuit body({{"c", QubitRole::Input},
                  {"A", QubitRole::AncillaDirty},
                  {"b1", QubitRole::Input},
                  {"b2", QubitRole::Input}},
                 Level::Mcx);
    // W X(b1) W^-1 with a small random W over {b1, b2}.
    Circuit w({{"c", QubitRole::Input},
               {"A", QubitRole::AncillaDirty},
               {"b1", QubitRole::Input},
               {"b2", QubitRole::Input}},
              Level::Mcx);
    for (int g = 0; g < 4; ++g) {
      switch (rng() % 3) {
        case 0:
          w.append(Gate::h(2 + rng() % 2));
          break;
        case 1:
          w.append(Gate::cx(2, 3));
          break;
        default:
          w.append(Gate::phase(Angle::rational(1, 4), 2 + rng() % 2));
      }
    }
    body.append_all(w.gates());
    body.append(Gate::x(2));
    body.append_all(w.inverse().gates());

    const Circuit da = double_apply_dirty(body, {0}, 1);
    // Oracle: body's 4x4 block controlled on wire 0, ancilla untouched.
    Circuit sub = wires(2);
    for (const Gate& g : body.gates()) {
      Gate r = g;
      r.target -= 2;
      for (QubitRef& ctl : r.controls) ctl -= 2;
      sub.append(r);
    }
    const DenseMatrix expected =
        embed_controlled(unitary_of(sub), 4, {2, 3}, {0});
    CHECK(equiv(unitary_of(da), expected, EquivMode::Exact, 1e-10));
  }
}

TEST_CASE("double_apply_dirty rejects non-involutions") {
  Circuit body({{"c", QubitRole::Input},
                {"A", QubitRole::AncillaDirty},
                {"b", QubitRole::Input}},
               Level::Mcx);
  body.append(Gate::phase(Angle::rational(1, 4), 2));
  CHECK_THROWS_AS(double_apply_dirty(body, {0}, 1), SynthesisError);
}

TEST_CASE("compute_half writes AND onto the target when the ancilla is clean") {
  // Base case, 3 controls: every one of the 2^5 basis states.
  Circuit c = wires(5);
  std::vector<QubitRef> controls{0, 1, 2};
  compute_half(c, controls, 3, 4);
  for (std::uint64_t in = 0; in < 32; ++in) {
    const Bits out = classical_run(c, Bits::from_value(5, in));
    const bool want =
        ((in & 7) == 7) ^ ((in >> 4) & 1);
    CHECK(out.get(4) == want);
  }
}

TEST_CASE("compute_half at 14 controls against the AND oracle") {
  const std::size_t m = 14;
  Circuit c = wires(m + 2);
  std::vector<QubitRef> controls(m);
  for (std::size_t i = 0; i < m; ++i) controls[i] = QubitRef(i);
  compute_half(c, controls, QubitRef(m), QubitRef(m + 1));
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    Bits in = random_bits(rng, m + 2);
    in.set(m, false);  // clean ancilla
    bool all = true;
    for (std::size_t i = 0; i < m; ++i) all = all && in.get(i);
    const Bits out = classical_run(c, in);
    CHECK(out.get(m + 1) == (in.get(m + 1) ^ all));
  }
  // Any zero among the first four controls keeps the target unchanged.
  Bits in = Bits::from_value(m + 2, (std::uint64_t(1) << m) - 1);
  in.set(2, false);
  CHECK(classical_run(c, in).get(m + 1) == false);
}

TEST_CASE("compute_half composed with its inverse is the identity") {
  for (std::size_t m : {std::size_t(3), std::size_t(6), std::size_t(9)}) {
    Circuit c = wires(m + 2);
    std::vector<QubitRef> controls(m);
    for (std::size_t i = 0; i < m; ++i) controls[i] = QubitRef(i);
    compute_half(c, controls, QubitRef(m), QubitRef(m + 1));
    const Circuit round = c.then(c.inverse());
    std::mt19937_64 rng(47);
    for (int it = 0; it < 100; ++it) {
      const Bits in = random_bits(rng, m + 2);
      CHECK(classical_run(round, in) == in);
    }
  }
}

TEST_CASE("mcx_clean: trivial examples at n = 8") {
  const Circuit c = mcx_clean(8);
  Bits all_ones = Bits::from_value(10, 0xff);  // x = 1..1, A = 0, t = 0
  Bits out = classical_run(c, all_ones);
  CHECK(out.get(9));
  CHECK_FALSE(out.get(8));  // ancilla restored
  for (std::size_t i = 0; i < 8; ++i) CHECK(out.get(i));

  Bits one_zero = Bits::from_value(10, 0xff ^ (1 << 4));
  CHECK(classical_run(c, one_zero) == one_zero);
}

TEST_CASE("mcx_clean matches the oracle permutation exhaustively, n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Circuit c = mcx_clean(n);
    const std::size_t m = n + 2;
    for (std::uint64_t in = 0; in < (std::uint64_t(1) << m); ++in) {
      if ((in >> n) & 1) continue;  // clean ancilla
      const Bits out = classical_run(c, Bits::from_value(m, in));
      CHECK(out.value() == mcx_family_image(in, n, n + 1));
    }
  }
}

TEST_CASE("mcx_clean dense unitary equals the oracle, small n") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Circuit c = mcx_clean(n);
    const std::size_t m = n + 2;
    DenseMatrix expected;
    expected.dim = std::size_t(1) << m;
    expected.a.assign(expected.dim * expected.dim, Complex(0, 0));
    for (std::uint64_t col = 0; col < expected.dim; ++col) {
      expected.at(mcx_family_image(col, n, n + 1), col) = Complex(1, 0);
    }
    CHECK(equiv(unitary_of(c), expected, EquivMode::Exact, 1e-12));
  }
}

TEST_CASE("mcx-level arity stays within the base-case bound") {
  for (std::size_t n : {std::size_t(6), std::size_t(20), std::size_t(101)}) {
    const Circuit c = mcx_clean(n);
    for (const Gate& g : c.gates()) {
      CHECK(g.num_controls() <= 5);
    }
  }
}

TEST_CASE("mcu_clean specializes to mcx for U = X and to identity for U = I") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Circuit cu = mcu_clean(n, BaseGate::x());
    const Circuit cx = mcx_clean(n);
    const std::size_t m = n + 2;
    for (std::uint64_t in = 0; in < (std::uint64_t(1) << m); ++in) {
      CHECK(classical_run(cu, Bits::from_value(m, in)) ==
            classical_run(cx, Bits::from_value(m, in)));
    }
  }
  const Circuit ci = mcu_clean(5, BaseGate::unitary(Mat2::identity()));
  CHECK(equiv(unitary_of(ci), DenseMatrix::identity(1 << 7),
              EquivMode::Exact, 1e-10));
}

TEST_CASE("mcu_clean matches the dense controlled-U oracle") {
  // The contract covers the clean-ancilla subspace: columns with A = 0.
  const auto clean_anc = [](std::size_t n) {
    return [n](std::uint64_t col) { return ((col >> n) & 1) == 0; };
  };
  const BaseGate phase = BaseGate::phase(Angle::rational(1, 3));
  for (std::size_t n = 1; n <= 6; ++n) {
    const Circuit c = mcu_clean(n, phase);
    std::vector<std::size_t> controls(n);
    for (std::size_t i = 0; i < n; ++i) controls[i] = i;
    const DenseMatrix expected = embed_controlled(
        mat2_to_dense(phase.to_matrix()), n + 2, {n + 1}, controls);
    CHECK(columns_match(c, expected, clean_anc(n), 1e-10));
  }
  const Circuit ch = mcu_clean(4, BaseGate::h());
  std::vector<std::size_t> controls{0, 1, 2, 3};
  const DenseMatrix expected =
      embed_controlled(mat2_to_dense(Mat2::h()), 6, {5}, controls);
  CHECK(columns_match(ch, expected, clean_anc(4), 1e-10));
}

TEST_CASE("mcx_dirty restores the ancilla for both initial values") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Circuit c = mcx_dirty(n);
    const std::size_t m = n + 2;
    for (std::uint64_t in = 0; in < (std::uint64_t(1) << m); ++in) {
      const Bits out = classical_run(c, Bits::from_value(m, in));
      CHECK(out.value() == mcx_family_image(in, n, n + 1));
    }
  }
}

TEST_CASE("mcx_dirty double-fire cancellation") {
  const Circuit c = mcx_dirty(6);
  Bits in = Bits::from_value(8, 0x3f);
  in.set(2, false);   // a zero among the first controls
  in.set(6, true);    // dirty ancilla at 1
  CHECK(classical_run(c, in) == in);
}

TEST_CASE("mcu_dirty wants an involution") {
  CHECK_THROWS_AS(mcu_dirty(6, BaseGate::phase(Angle::rational(1, 3))),
                  SynthesisError);
  CHECK_NOTHROW(mcu_dirty(6, BaseGate::h()));
  CHECK_NOTHROW(mcu_dirty(6, BaseGate::phase(Angle::pi())));
}

TEST_CASE("mcu_dirty(H) equals the controlled-H oracle for both ancilla values") {
  for (std::size_t n : {std::size_t(2), std::size_t(5), std::size_t(6)}) {
    const Circuit c = mcu_dirty(n, BaseGate::h());
    std::vector<std::size_t> controls(n);
    for (std::size_t i = 0; i < n; ++i) controls[i] = i;
    const DenseMatrix expected = embed_controlled(
        mat2_to_dense(Mat2::h()), n + 2, {n + 1}, controls);
    CHECK(equiv(unitary_of(c), expected, EquivMode::Exact, 1e-10));
  }
}

TEST_CASE("fanout_clean copies onto zeroed targets in log depth") {
  Circuit c = wires(8);
  const std::vector<QubitRef> targets{1, 2, 3, 4, 5, 6, 7};
  fanout_clean(c, 0, targets);
  CHECK(c.depth() == 3);
  Bits one(8);
  one.set(0, true);
  const Bits out = classical_run(c, one);
  for (std::size_t i = 0; i < 8; ++i) CHECK(out.get(i));
  CHECK(classical_run(c, Bits(8)) == Bits(8));
}

TEST_CASE("fanout_dirty realizes d_i ^= a on arbitrary targets") {
  Circuit c = wires(5);
  const std::vector<QubitRef> targets{1, 2, 3, 4};
  fanout_dirty(c, 0, targets);
  // a = 1, d = 0101 -> 1010, a preserved.
  Bits in = Bits::from_string("10101");
  const Bits out = classical_run(c, in);
  CHECK(out.str() == "11010");
  // a = 0 -> identity.
  Bits id_in = Bits::from_string("00110");
  CHECK(classical_run(c, id_in) == id_in);
}

TEST_CASE("fanout_dirty affine map, exhaustive and random sizes") {
  std::mt19937_64 rng(53);
  for (std::size_t k : {std::size_t(3), std::size_t(8), std::size_t(33)}) {
    Circuit c = wires(k + 1);
    std::vector<QubitRef> targets(k);
    for (std::size_t i = 0; i < k; ++i) targets[i] = QubitRef(i + 1);
    fanout_dirty(c, 0, targets);
    const std::size_t cases = k <= 8 ? (std::size_t(1) << (k + 1)) : 200;
    for (std::size_t it = 0; it < cases; ++it) {
      const Bits in = k <= 8 ? Bits::from_value(k + 1, it)
                             : random_bits(rng, k + 1);
      const Bits out = classical_run(c, in);
      CHECK(out.get(0) == in.get(0));
      for (std::size_t i = 1; i <= k; ++i) {
        CHECK(out.get(i) == (in.get(i) ^ in.get(0)));
      }
      // Self-inverse layer semantics.
      CHECK(classical_run(c, out) == in);
    }
    CHECK(c.depth() <= 2 * std::size_t(std::ceil(std::log2(double(k)))) + 3);
  }
}

TEST_CASE("rz_fanout with the control at zero is the identity") {
  const std::vector<Angle> thetas{Angle::real(0.7), Angle::real(-1.1),
                                  Angle::real(2.2)};
  const Circuit c = rz_fanout_circuit(thetas);
  const DenseMatrix u = unitary_of(c);
  for (std::uint64_t b = 0; b < 8; ++b) {  // control bit (qubit 3) = 0
    CHECK(std::abs(u.at(b, b) - Complex(1, 0)) < 1e-10);
  }
}

TEST_CASE("rz_fanout with one angle equals a controlled phase") {
  const Angle theta = Angle::rational(2, 7);
  const Circuit c = rz_fanout_circuit({theta});
  const DenseMatrix expected =
      embed_controlled(mat2_to_dense(Mat2::phase(theta)), 2, {0}, {1});
  CHECK(equiv(unitary_of(c), expected, EquivMode::Exact, 1e-10));
}

TEST_CASE("rz_fanout matches the analytic controlled-phase product") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (std::size_t n : {std::size_t(3), std::size_t(5), std::size_t(8)}) {
    std::vector<Angle> thetas;
    std::vector<double> raw;
    for (std::size_t i = 0; i < n; ++i) {
      raw.push_back(dist(rng));
      thetas.push_back(Angle::real(raw.back()));
    }
    const Circuit c = rz_fanout_circuit(thetas);
    const DenseMatrix u = unitary_of(c);
    const std::size_t dim = std::size_t(1) << (n + 1);
    for (std::uint64_t b = 0; b < dim; ++b) {
      double phase = 0;
      if ((b >> n) & 1) {
        for (std::size_t i = 0; i < n; ++i) {
          if ((b >> i) & 1) phase += raw[i];
        }
      }
      const Complex want(std::cos(phase), std::sin(phase));
      CHECK(std::abs(u.at(b, b) - want) < 1e-10);
    }
    // Two fan-out sandwiches of depth ~2*log plus the phase layers.
    CHECK(c.depth() <=
          4 * std::size_t(std::ceil(std::log2(double(n)))) + 6);
  }
}

TEST_CASE("rz_fanout with the control in the middle of the register") {
  Circuit c = wires(5);
  const std::vector<Angle> thetas{Angle::rational(1, 3), Angle::rational(-2, 5),
                                  Angle::rational(1, 7)};
  const std::vector<QubitRef> targets{4, 0, 3};
  rz_fanout(c, thetas, 2, targets);
  const DenseMatrix u = unitary_of(c);
  for (std::uint64_t b = 0; b < 32; ++b) {
    Angle want = Angle::zero();
    if ((b >> 2) & 1) {
      if ((b >> 4) & 1) want = want + thetas[0];
      if (b & 1) want = want + thetas[1];
      if ((b >> 3) & 1) want = want + thetas[2];
    }
    const double r = want.radians();
    CHECK(std::abs(u.at(b, b) - Complex(std::cos(r), std::sin(r))) < 1e-10);
  }
}

TEST_CASE("rz_fanout validates its arguments") {
  Circuit c = wires(3);
  const std::vector<Angle> one{Angle::pi()};
  const std::vector<QubitRef> bad{2};
  CHECK_THROWS_AS(rz_fanout(c, one, 2, bad), SynthesisError);
  const std::vector<Angle> two{Angle::pi(), Angle::pi()};
  const std::vector<QubitRef> dup{0, 0};
  CHECK_THROWS_AS(rz_fanout(c, two, 2, dup), SynthesisError);
}
