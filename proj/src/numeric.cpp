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

#include "teamform/numeric.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace teamform {
namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(Wide v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Weight> Weight::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    seen_digit = true;
    int d = c - '0';
    if (seen_dot) {
      if (++frac_digits > 6) return std::nullopt;
      frac = frac * 10 + d;
    } else {
      if (whole > (INT64_MAX / kScale - 9) / 10) return std::nullopt;
      whole = whole * 10 + d;
    }
  }
  if (!seen_digit) return std::nullopt;
  while (frac_digits++ < 6) frac *= 10;
  return Weight(whole * kScale + frac);
}

Weight Weight::round(const Rational& value) {
  if (value < Rational(0)) throw std::domain_error("negative weight");
  Wide scaled = Wide(value.num()) * kScale;
  Wide q = scaled / value.den();
  Wide rem = scaled % value.den();
  if (2 * rem >= value.den()) ++q;
  if (q >= kInfinite) throw std::overflow_error("weight overflow");
  return Weight(static_cast<std::int64_t>(q));
}

Rational Weight::to_rational() const {
  if (is_infinite()) throw std::domain_error("infinite weight has no rational value");
  return Rational(micros_, kScale);
}

double Weight::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(micros_) / kScale;
}

std::string Weight::str() const {
  if (is_infinite()) return "inf";
  std::string out = std::to_string(micros_ / kScale);
  std::int64_t frac = micros_ % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Weight operator+(Weight a, Weight b) {
  if (a.is_infinite() || b.is_infinite()) return Weight::infinite();
  if (a.micros_ > Weight::kInfinite - 1 - b.micros_) throw std::overflow_error("weight overflow");
  return Weight(a.micros_ + b.micros_);
}

Weight operator-(Weight a, Weight b) {
  if (a.is_infinite() || b.is_infinite()) throw std::domain_error("subtraction involving infinity");
  if (b.micros_ > a.micros_) throw std::domain_error("negative weight");
  return Weight(a.micros_ - b.micros_);
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.str(); }

}  // namespace teamform
