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

#ifndef VOCABRAND_ERRORS_H_
#define VOCABRAND_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vocabrand {

// Malformed user input: sequences, masks, index sets, rationals, models.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sequence text contained a symbol outside {H,h,1,T,t,0}. `position` is
// 1-based.
class IllegalSymbolError : public ParseError {
 public:
  IllegalSymbolError(std::size_t position, char symbol)
      : ParseError("illegal symbol '" + std::string(1, symbol) +
                   "' at position " + std::to_string(position)),
        position_(position),
        symbol_(symbol) {}

  std::size_t position() const { return position_; }
  char symbol() const { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

// Operands of different lengths (sequence vs mask, source vs target).
class LengthMismatchError : public std::invalid_argument {
 public:
  LengthMismatchError(std::size_t expected, std::size_t actual)
      : std::invalid_argument("length mismatch: expected " +
                              std::to_string(expected) + ", got " +
                              std::to_string(actual)) {}
};

// An exhaustive computation was asked for a length above its cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, int n, int cap)
      : std::runtime_error(what + ": n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

}  // namespace vocabrand

#endif  // VOCABRAND_ERRORS_H_
