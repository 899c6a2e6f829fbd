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

#include <span>
#include <vector>

#include "mcsynth/gate.hpp"

namespace mcsynth {

/// CX doubling tree copying |src> onto targets that are all |0>:
/// |a,0,...,0> -> |a,a,...,a>, depth ceil(log2(k+1)).
void emit_fanout_clean(std::vector<Gate>& gates, QubitRef src,
                       std::span<const QubitRef> targets);

/// CNOT-only tree realizing d_i -> d_i ^ a for arbitrary initial d_i and
/// a -> a, depth O(log k). Built as the transpose (reversed order, each CX
/// flipped) of the compute-and-uncompute parity tree for a -> a ^ xor(d).
void emit_fanout_dirty(std::vector<Gate>& gates, QubitRef src,
                       std::span<const QubitRef> targets);

}  // namespace mcsynth
