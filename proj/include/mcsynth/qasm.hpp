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

#include <string>

#include "mcsynth/circuit.hpp"

namespace mcsynth {

/// Canonical OpenQASM-3-style text for a circuit. One register `q`, role
/// and level annotations as line comments, gates drawn from {x, h, cx, p,
/// u} plus the `ctrl(k) @ base` modifier at mcx level. Rational angles
/// serialize exactly as pi*p/q. The emission is canonical: exporting,
/// importing and exporting again is byte-identical.
std::string to_qasm(const Circuit& c);

/// Parses text produced by to_qasm (or hand-written text in the same
/// subset). Throws ParseError with a line number on malformed input.
Circuit from_qasm(const std::string& text);

}  // namespace mcsynth
