// Copyright 2026 The Teamform Authors
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

#ifndef TEAMFORM_NUMERIC_HPP_
#define TEAMFORM_NUMERIC_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace teamform {

// Exact rational number with a 64-bit numerator and a positive 64-bit
// denominator, always kept in lowest terms. Intermediate products use
// 128-bit arithmetic; results that do not fit throw std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" or "p/q".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Non-negative fixed-point quantity with six decimal digits, stored as an
// integer count of millionths. Used for edge affinities, distances and
// path lengths. A dedicated sentinel represents an infinite length;
// addition saturates at it.
class Weight {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Weight() = default;

  static constexpr Weight from_micros(std::int64_t micros) { return Weight(micros); }
  static constexpr Weight from_int(std::int64_t units) { return Weight(units * kScale); }
  static constexpr Weight infinite() { return Weight(kInfinite); }
  // Accepts "12", "0.5", "3.000001"; rejects signs, exponents and more
  // than six fractional digits.
  static std::optional<Weight> parse(std::string_view text);
  // Nearest representable weight to a non-negative rational.
  static Weight round(const Rational& value);

  constexpr std::int64_t micros() const { return micros_; }
  constexpr bool is_infinite() const { return micros_ == kInfinite; }
  constexpr bool is_zero() const { return micros_ == 0; }
  Rational to_rational() const;
  double to_double() const;

  // Shortest decimal form; "inf" for the sentinel.
  std::string str() const;

  friend Weight operator+(Weight a, Weight b);
  friend Weight operator-(Weight a, Weight b);
  Weight& operator+=(Weight o) { return *this = *this + o; }
  Weight& operator-=(Weight o) { return *this = *this - o; }
  friend constexpr bool operator==(Weight a, Weight b) = default;
  friend constexpr auto operator<=>(Weight a, Weight b) = default;

 private:
  static constexpr std::int64_t kInfinite = INT64_MAX;
  constexpr explicit Weight(std::int64_t micros) : micros_(micros) {}

  std::int64_t micros_ = 0;
};

std::ostream& operator<<(std::ostream& os, Weight w);

}  // namespace teamform

#endif  // TEAMFORM_NUMERIC_HPP_
