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
#include <functional>

#include "mcsynth/circuit.hpp"

namespace mcsynth {

/// Rewrites an mcx-level circuit over CNOT plus single-qubit gates. The
/// dense unitary is preserved exactly.
///
/// Gates with up to two controls use fixed networks (controlled-phase
/// splitting, the T-network Toffoli, ZYZ-conjugated controlled-U). X gates
/// with three to five controls split through a borrowed wire outside the
/// gate's support so the result stays at T-level phase precision; when no
/// wire is free (three or four controls on a minimal circuit) an exact
/// controlled-root ladder is used instead, at the cost of finer phases.
/// Five controls require a free wire. Maximal runs of controlled-phase
/// gates sharing one control lower jointly through a CX fan-out sandwich,
/// which keeps phase-gradient columns at logarithmic depth.
Circuit lower_to_basis(const Circuit& c);

/// Streams the lowered gate sequence into `sink` without materializing the
/// lowered circuit. Used for metrics on circuits too large to store twice.
void lower_gates(const Circuit& c, const std::function<void(const Gate&)>& sink);

struct LoweredMetrics {
  std::size_t depth = 0;
  std::size_t size = 0;
};

LoweredMetrics lowered_metrics(const Circuit& c);

}  // namespace mcsynth
