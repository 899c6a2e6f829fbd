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

#include "mcsynth/angle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mcsynth/errors.hpp"

namespace mcsynth {

namespace mp = boost::multiprecision;

Angle Angle::rational(BigInt p, BigInt q) {
  if (q <= 0) {
    throw CircuitError("rational angle denominator must be positive");
  }
  Angle a;
  a.rational_ = true;
  a.num_ = std::move(p);
  a.den_ = std::move(q);
  a.normalize();
  return a;
}

Angle Angle::real(double radians) {
  if (!std::isfinite(radians)) {
    throw CircuitError("real angle must be finite");
  }
  Angle a;
  a.rational_ = false;
  a.radians_ = radians;
  return a;
}

Angle Angle::pi_over_pow2(unsigned k, bool negative) {
  BigInt q = BigInt(1) << k;
  return rational(negative ? BigInt(-1) : BigInt(1), q);
}

void Angle::normalize() {
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  // Reduce p/q into (-1, 1] modulo 2.
  BigInt two_q = den_ * 2;
  num_ %= two_q;  // cpp_int % keeps the sign of the dividend
  if (num_ > den_) {
    num_ -= two_q;
  } else if (num_ <= -den_) {
    num_ += two_q;
  }
  radians_ = 0.0;
}

bool Angle::is_zero() const {
  return rational_ ? num_.is_zero() : radians_ == 0.0;
}

double Angle::radians() const {
  if (!rational_) return radians_;
  // Safe for huge denominators: convert via long double ratio.
  return static_cast<double>(std::numbers::pi_v<long double> *
                             static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

Angle Angle::operator-() const {
  if (rational_) {
    return rational(-num_, den_);
  }
  return real(-radians_);
}

Angle Angle::operator+(const Angle& other) const {
  if (rational_ && other.rational_) {
    return rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  }
  return real(radians() + other.radians());
}

Angle Angle::halve() const {
  if (rational_) {
    return rational(num_, den_ * 2);
  }
  return real(radians_ / 2.0);
}

bool Angle::operator==(const Angle& other) const {
  if (rational_ != other.rational_) return false;
  if (rational_) return num_ == other.num_ && den_ == other.den_;
  return radians_ == other.radians_;
}

std::string Angle::str() const {
  if (rational_) {
    return "pi*" + num_.str() + "/" + den_.str();
  }
  return format_double(radians_);
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw std::runtime_error("double formatting failed");
  }
  return std::string(buf, ptr);
}

}  // namespace mcsynth
