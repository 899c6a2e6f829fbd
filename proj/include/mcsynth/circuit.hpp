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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mcsynth/gate.hpp"

namespace mcsynth {

enum class QubitRole : std::uint8_t {
  Input,
  Target,
  AncillaClean,  // guaranteed |0> at entry, restored at exit
  AncillaDirty,  // arbitrary at entry, restored at exit
};

std::string role_name(QubitRole role);

struct QubitSpec {
  std::string name;
  QubitRole role = QubitRole::Input;
};

/// Abstraction level of a circuit. Mcx-level circuits may contain gates with
/// any number of controls; basis-level circuits are restricted to CNOT plus
/// single-qubit gates.
enum class Level : std::uint8_t { Mcx, Basis };

struct ResourceReport {
  std::size_t depth = 0;
  std::size_t size = 0;
  std::map<std::string, std::size_t> counts;
  std::size_t ancilla_clean = 0;
  std::size_t ancilla_dirty = 0;
};

/// Gate-count bucket a gate is reported under: x/h/p/u for uncontrolled
/// bases, cx for singly-controlled X, mcx for multi-controlled X, mcu for
/// any other controlled base.
std::string count_bucket(const Gate& g);

class Circuit {
 public:
  Circuit() = default;
  Circuit(std::vector<QubitSpec> qubits, Level level = Level::Mcx);

  std::size_t num_qubits() const { return qubits_.size(); }
  const std::vector<QubitSpec>& qubits() const { return qubits_; }
  Level level() const { return level_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates the gate against the circuit's qubit count and level, then
  /// appends it.
  void append(Gate g);
  void append_all(const std::vector<Gate>& gs);

  /// Concatenation; qubit lists must agree in size and level.
  Circuit then(const Circuit& other) const;

  /// Gates reversed, each replaced by its inverse.
  Circuit inverse() const;

  /// Longest dependency chain under greedy as-soon-as-possible layering;
  /// two gates conflict iff they share any qubit.
  std::size_t depth() const;

  ResourceReport report() const;

  /// True iff every gate is an (optionally multi-controlled) X.
  bool is_x_type() const;

  void validate_gate(const Gate& g) const;

  bool operator==(const Circuit& other) const;

 private:
  std::vector<QubitSpec> qubits_;
  std::vector<Gate> gates_;
  Level level_ = Level::Mcx;
};

/// Builds an empty mcx-level circuit, rejecting duplicate qubit names.
Circuit new_circuit(std::vector<QubitSpec> qubit_specs);

/// Depth of a gate sequence without constructing a circuit.
class DepthTracker {
 public:
  explicit DepthTracker(std::size_t num_qubits)
      : last_layer_(num_qubits, 0) {}

  void add(const Gate& g) {
    std::size_t layer = 0;
    for (QubitRef c : g.controls) layer = std::max(layer, last_layer_[c]);
    layer = std::max(layer, last_layer_[g.target]) + 1;
    for (QubitRef c : g.controls) last_layer_[c] = layer;
    last_layer_[g.target] = layer;
    depth_ = std::max(depth_, layer);
    ++count_;
  }

  std::size_t depth() const { return depth_; }
  std::size_t count() const { return count_; }

 private:
  std::vector<std::size_t> last_layer_;
  std::size_t depth_ = 0;
  std::size_t count_ = 0;
};

}  // namespace mcsynth
