// Copyright 2026 The vocabrand Authors
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

#ifndef VOCABRAND_EXACT_PROB_H_
#define VOCABRAND_EXACT_PROB_H_

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vocabrand {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "a/b" (integers, b > 0) or a plain decimal "0.05", "3", ".5", expanded
// exactly (0.05 -> 1/20). Throws ParseError.
Rational ParseRational(std::string_view text);

// Rounds half away from zero to `places` fractional digits, then trims
// trailing zeros ("0.5", not "0.500").
std::string ToDecimal(const Rational& value, int places = 12);

BigInt Pow2(int exponent);

// A probability held as an exact rational in lowest terms, 0 <= p <= 1.
class ExactProb {
 public:
  ExactProb() = default;
  // Throws std::domain_error outside [0, 1].
  explicit ExactProb(Rational value);
  ExactProb(const BigInt& numerator, const BigInt& denominator);

  static ExactProb Parse(std::string_view text);
  static ExactProb One() { return ExactProb(Rational(1)); }

  const Rational& value() const { return value_; }
  BigInt numerator() const;
  BigInt denominator() const;

  // "93/256"; integers render as "0" / "1".
  std::string Fraction() const;
  std::string Decimal(int places = 12) const { return ToDecimal(value_, places); }
  double ToDouble() const { return value_.convert_to<double>(); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactProb& a,
                                          const ExactProb& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

}  // namespace vocabrand

#endif  // VOCABRAND_EXACT_PROB_H_
