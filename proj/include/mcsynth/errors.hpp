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

#include <stdexcept>
#include <string>

namespace mcsynth {

class CircuitError : public std::logic_error {
 public:
  explicit CircuitError(const std::string& message)
      : std::logic_error(message) {}
};

class SynthesisError : public std::logic_error {
 public:
  explicit SynthesisError(const std::string& message)
      : std::logic_error(message) {}
};

class SimulationError : public std::logic_error {
 public:
  explicit SimulationError(const std::string& message)
      : std::logic_error(message) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace mcsynth
