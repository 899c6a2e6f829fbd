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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mcsynth {

using BigInt = boost::multiprecision::cpp_int;

/// An angle is either an exact rational multiple of pi, p*pi/q, or an
/// arbitrary real number of radians. Rational angles are kept in lowest
/// terms with q >= 1 and p/q normalized into (-1, 1], i.e. modulo 2*pi with
/// the representative of pi chosen positive. Exactness is what the phase
/// auditing rests on, so rational angles never silently decay to doubles.
class Angle {
 public:
  Angle() : rational_(true), num_(0), den_(1), radians_(0.0) {}

  static Angle rational(BigInt p, BigInt q);
  static Angle real(double radians);
  static Angle zero() { return Angle(); }
  static Angle pi() { return rational(1, 1); }
  /// pi / 2^k
  static Angle pi_over_pow2(unsigned k, bool negative = false);

  bool is_rational() const { return rational_; }
  bool is_zero() const;

  /// Numerator / denominator of the pi fraction. Only valid for rational
  /// angles.
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  /// Value in radians (approximate for rational angles).
  double radians() const;

  Angle operator-() const;
  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const { return *this + (-other); }
  /// Exact halving: p*pi/q -> p*pi/(2q). Note halve() is not the inverse of
  /// doubling under the mod-2pi normalization.
  Angle halve() const;

  bool operator==(const Angle& other) const;
  bool operator!=(const Angle& other) const { return !(*this == other); }

  /// "pi*p/q" for rational angles, shortest round-trip decimal otherwise.
  std::string str() const;

 private:
  void normalize();

  bool rational_;
  BigInt num_;
  BigInt den_;
  double radians_;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace mcsynth
