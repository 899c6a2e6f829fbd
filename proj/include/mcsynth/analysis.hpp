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
#include <optional>
#include <string>
#include <vector>

#include "mcsynth/circuit.hpp"
#include "mcsynth/synthesis.hpp"

namespace mcsynth {

/// Exact phase of det(C) for the circuit as an m-qubit operator, reduced
/// mod 2*pi. Gate by gate: a k-controlled base U on m qubits contributes
/// 2^(m-k-1) * arg(det U); X-kind gates are permutations whose sign gives
/// phase pi exactly when k = m-1 and zero otherwise. Rational phase gates
/// keep the result exact; any Unitary2 gate makes it a (flagged) real.
Angle det_phase(const Circuit& c);

/// det phase normalized to [0, 2), as a "p/q" fraction of pi ("real" if any
/// gate had an irrational determinant phase).
std::string det_phase_string(const Circuit& c);

struct PrecisionAudit {
  struct Entry {
    std::size_t gate_index;
    Angle det_phase;  // of the base single-qubit gate itself
  };
  std::vector<Entry> per_gate;
  BigInt max_denominator = 1;
  bool has_unbounded = false;  // some gate has an irrational det phase
  Angle total_phase;
};

PrecisionAudit precision_audit(const Circuit& c);

enum class Family { McxClean, McxDirty, Incrementor, McxNoAncilla };

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);
Circuit make_family(Family f, std::size_t n,
                    const SplitPolicy& policy = {});

struct ScalingRow {
  std::size_t n = 0;
  std::size_t depth_mcx = 0;
  std::size_t depth_basis = 0;
  std::size_t size = 0;        // mcx-level gate count
  std::size_t size_basis = 0;
  std::size_t ancilla_clean = 0;
  std::size_t ancilla_dirty = 0;
  // depth_mcx(n) - depth_mcx(n/2), present when the table contains n/2.
  std::optional<long long> depth_diff;
};

/// One row per n. Rows carry both abstraction levels so the logarithmic
/// depth claims can be read off either one.
std::vector<ScalingRow> scaling_report(Family f, const std::vector<std::size_t>& ns,
                                       const SplitPolicy& policy = {});

struct QuadLogFit {
  double a = 0;
  double b = 0;
  double max_rel_residual = 0;
};

/// Least-squares fit depth ~ a*(log2 n)^2 + b with the largest relative
/// residual over the points.
QuadLogFit fit_quadratic_log(const std::vector<std::size_t>& ns,
                             const std::vector<std::size_t>& depths);

}  // namespace mcsynth
