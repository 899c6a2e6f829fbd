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

#include <random>

#include "doctest.h"
#include "mcsynth/errors.hpp"

using namespace mcsynth;

namespace {

Circuit three_qubits(Level level = Level::Mcx) {
  return Circuit({{"a", QubitRole::Input},
                  {"b", QubitRole::Input},
                  {"c", QubitRole::Target}},
                 level);
}

Circuit random_circuit(std::mt19937_64& rng, std::size_t qubits,
                       std::size_t gates) {
  std::vector<QubitSpec> specs;
  for (std::size_t i = 0; i < qubits; ++i) {
    specs.push_back({"q" + std::to_string(i), QubitRole::Input});
  }
  Circuit c(specs, Level::Mcx);
  std::uniform_int_distribution<std::size_t> pick(0, qubits - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long> pq(1, 7);
  for (std::size_t i = 0; i < gates; ++i) {
    const QubitRef t = QubitRef(pick(rng));
    switch (kind(rng)) {
      case 0:
        c.append(Gate::x(t));
        break;
      case 1:
        c.append(Gate::h(t));
        break;
      case 2:
        c.append(Gate::phase(Angle::rational(pq(rng), pq(rng)), t));
        break;
      default: {
        QubitRef ctl = QubitRef(pick(rng));
        if (ctl == t) ctl = QubitRef((t + 1) % qubits);
        c.append(Gate::cx(ctl, t));
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("empty circuit reports zeros") {
  const Circuit c = new_circuit({{"x1", QubitRole::Input},
                                 {"x2", QubitRole::Input},
                                 {"x3", QubitRole::Input}});
  const ResourceReport r = c.report();
  CHECK(r.depth == 0);
  CHECK(r.size == 0);
  CHECK(c.level() == Level::Mcx);
}

TEST_CASE("duplicate qubit names are rejected") {
  CHECK_THROWS_AS(new_circuit({{"A", QubitRole::Input},
                               {"A", QubitRole::AncillaClean}}),
                  CircuitError);
}

TEST_CASE("ancilla roles are counted") {
  const Circuit c = new_circuit({{"x1", QubitRole::Input},
                                 {"A", QubitRole::AncillaClean},
                                 {"T", QubitRole::Target}});
  CHECK(c.report().ancilla_clean == 1);
  CHECK(c.report().ancilla_dirty == 0);
}

TEST_CASE("append validates operands and level") {
  Circuit basis({{"a", {}}, {"b", {}}}, Level::Basis);
  basis.append(Gate::cx(0, 1));
  CHECK(basis.size() == 1);
  CHECK_THROWS_AS(basis.append(Gate::mcx({0, 1}, 1)), CircuitError);

  Circuit c = three_qubits();
  CHECK_THROWS_AS(c.append(Gate::cx(1, 1)), CircuitError);
  CHECK_THROWS_AS(c.append(Gate::x(7)), CircuitError);
  CHECK_THROWS_AS(c.append(Gate::mcx({0, 0}, 1)), CircuitError);
  // Controlled phase is fine at mcx level, not at basis level.
  c.append(Gate::mcphase(Angle::rational(1, 2), {0}, 1));
  Circuit b = three_qubits(Level::Basis);
  CHECK_THROWS_AS(b.append(Gate::mcphase(Angle::rational(1, 2), {0}, 1)),
                  CircuitError);
}

TEST_CASE("inverse reverses and inverts gates") {
  Circuit c = three_qubits();
  c.append(Gate::phase(Angle::rational(1, 4), 0));
  c.append(Gate::cx(0, 1));
  const Circuit inv = c.inverse();
  REQUIRE(inv.size() == 2);
  CHECK(inv.gates()[0] == Gate::cx(0, 1));
  CHECK(inv.gates()[1] == Gate::phase(Angle::rational(-1, 4), 0));

  Circuit just_x = three_qubits();
  just_x.append(Gate::x(0));
  CHECK(just_x.inverse() == just_x);
}

TEST_CASE("inverse is an involution on random circuits") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    const Circuit c = random_circuit(rng, 5, 50);
    CHECK(c.inverse().inverse() == c);
  }
}

TEST_CASE("depth follows shared-qubit conflicts") {
  Circuit c({{"a", {}}, {"b", {}}, {"c", {}}, {"d", {}}}, Level::Mcx);
  c.append(Gate::cx(0, 1));
  c.append(Gate::cx(2, 3));
  CHECK(c.depth() == 1);

  Circuit chain({{"a", {}}, {"b", {}}, {"c", {}}}, Level::Mcx);
  chain.append(Gate::cx(0, 1));
  chain.append(Gate::cx(1, 2));
  CHECK(chain.depth() == 2);
}

TEST_CASE("depth is subadditive under concatenation") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    const Circuit a = random_circuit(rng, 6, 30);
    const Circuit b = random_circuit(rng, 6, 30);
    CHECK(a.then(b).depth() <= a.depth() + b.depth());
  }
}

TEST_CASE("depth is invariant under qubit relabeling") {
  std::mt19937_64 rng(17);
  const Circuit c = random_circuit(rng, 6, 40);
  std::vector<QubitRef> perm{3, 5, 1, 0, 4, 2};
  Circuit relabeled(c.qubits(), Level::Mcx);
  for (const Gate& g : c.gates()) {
    Gate r = g;
    r.target = perm[g.target];
    for (QubitRef& ctl : r.controls) ctl = perm[ctl];
    relabeled.append(r);
  }
  CHECK(relabeled.depth() == c.depth());
}

TEST_CASE("report counts buckets and size") {
  Circuit c = three_qubits();
  c.append(Gate::x(0));
  const ResourceReport r = c.report();
  CHECK(r.size == 1);
  CHECK(r.depth == 1);
  CHECK(r.counts.at("x") == 1);

  c.append(Gate::mcx({0, 1}, 2));
  c.append(Gate::mch({0}, 2));
  const ResourceReport r2 = c.report();
  CHECK(r2.counts.at("mcx") == 1);
  CHECK(r2.counts.at("mcu") == 1);
  std::size_t total = 0;
  for (const auto& [k, v] : r2.counts) total += v;
  CHECK(total == r2.size);
}
