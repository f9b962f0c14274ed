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

#include "vocabrand/exact_prob.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "vocabrand/errors.h"

namespace vocabrand {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

BigInt ParseBigInt(std::string_view digits) {
  // cpp_int's string constructor treats a leading 0 as octal.
  BigInt out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw ParseError("malformed rational '" + original + "'");
    }
    BigInt d = ParseBigInt(den);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    out = Rational(ParseBigInt(num), d);
  } else {
    auto dot = text.find('.');
    auto whole = text.substr(0, dot);
    auto frac = dot == std::string_view::npos ? std::string_view{}
                                              : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      throw ParseError("malformed number '" + original + "'");
    }
    BigInt num = whole.empty() ? BigInt(0) : ParseBigInt(whole);
    BigInt scale = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      scale *= 10;
    }
    out = Rational(num, scale);
  }
  return negative ? Rational(-out) : out;
}

std::string ToDecimal(const Rational& value, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt num = boost::multiprecision::numerator(magnitude) * scale;
  const BigInt den = boost::multiprecision::denominator(magnitude);
  BigInt scaled = num / den;
  if ((num % den) * 2 >= den) ++scaled;

  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - places);
  std::string frac = digits.substr(digits.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

BigInt Pow2(int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  BigInt out = 1;
  out <<= exponent;
  return out;
}

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw std::domain_error("probability " + value_.str() +
                            " outside [0, 1]");
  }
}

ExactProb::ExactProb(const BigInt& numerator, const BigInt& denominator)
    : ExactProb(Rational(numerator, denominator)) {}

ExactProb ExactProb::Parse(std::string_view text) {
  Rational value = ParseRational(text);
  if (value < 0 || value > 1) {
    throw ParseError("probability '" + std::string(text) +
                     "' outside [0, 1]");
  }
  return ExactProb(std::move(value));
}

BigInt ExactProb::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt ExactProb::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string ExactProb::Fraction() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace vocabrand
