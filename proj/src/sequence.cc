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

#include "vocabrand/sequence.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "vocabrand/errors.h"

namespace vocabrand {
namespace {

void CheckPackable(int n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("packed length must be in [1, 64], got " +
                                std::to_string(n));
  }
}

std::uint64_t PackBits(const std::vector<bool>& bits) {
  CheckPackable(static_cast<int>(bits.size()));
  std::uint64_t word = 0;
  for (bool b : bits) word = (word << 1) | (b ? 1u : 0u);
  return word;
}

std::vector<bool> UnpackBits(std::uint64_t word, int n) {
  CheckPackable(n);
  std::vector<bool> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[i] = ((word >> (n - 1 - i)) & 1u) != 0;
  return bits;
}

std::string Trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

BinarySequence::BinarySequence(std::vector<bool> bits, std::string vocab)
    : bits_(std::move(bits)), vocab_(std::move(vocab)) {
  if (bits_.empty()) throw std::invalid_argument("empty binary sequence");
}

BinarySequence BinarySequence::FromPacked(std::uint64_t word, int n,
                                          std::string vocab) {
  return BinarySequence(UnpackBits(word, n), std::move(vocab));
}

BinarySequence BinarySequence::Constant(int n, bool bit, std::string vocab) {
  if (n < 1) throw std::invalid_argument("constant sequence needs n >= 1");
  return BinarySequence(std::vector<bool>(static_cast<std::size_t>(n), bit),
                        std::move(vocab));
}

std::uint64_t BinarySequence::Packed() const { return PackBits(bits_); }

std::string BinarySequence::Render(SymbolCase symbol_case) const {
  const char one = symbol_case == SymbolCase::kUpper ? 'H' : 'h';
  const char zero = symbol_case == SymbolCase::kUpper ? 'T' : 't';
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? one : zero);
  return out;
}

RelabelMask::RelabelMask(std::vector<bool> flips) : flips_(std::move(flips)) {
  if (flips_.empty()) throw std::invalid_argument("empty relabel mask");
}

RelabelMask RelabelMask::Identity(int n) {
  if (n < 1) throw std::invalid_argument("mask length must be >= 1");
  return RelabelMask(std::vector<bool>(static_cast<std::size_t>(n), false));
}

RelabelMask RelabelMask::FromPacked(std::uint64_t word, int n) {
  return RelabelMask(UnpackBits(word, n));
}

int RelabelMask::FlipCount() const {
  return static_cast<int>(std::count(flips_.begin(), flips_.end(), true));
}

std::uint64_t RelabelMask::Packed() const { return PackBits(flips_); }

std::vector<int> RelabelMask::FlipPositions() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (flips_[i]) out.push_back(i + 1);
  }
  return out;
}

std::vector<int> RelabelMask::IndexSet() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!flips_[i]) out.push_back(i + 1);
  }
  return out;
}

std::string RelabelMask::Render() const {
  std::string out;
  out.reserve(flips_.size());
  for (bool f : flips_) out.push_back(f ? '1' : '0');
  return out;
}

RelabelMask RelabelMask::Compose(const RelabelMask& other) const {
  if (other.size() != size()) throw LengthMismatchError(size(), other.size());
  std::vector<bool> out(flips_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = flips_[i] != other.flips_[i];
  return RelabelMask(std::move(out));
}

BinarySequence ParseSequence(std::string_view text, std::string vocab) {
  if (text.empty()) throw ParseError("empty sequence");
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'H':
      case 'h':
      case '1':
        bits.push_back(true);
        break;
      case 'T':
      case 't':
      case '0':
        bits.push_back(false);
        break;
      default:
        throw IllegalSymbolError(i + 1, text[i]);
    }
  }
  return BinarySequence(std::move(bits), std::move(vocab));
}

RelabelMask ParseMaskString(std::string_view text, int n) {
  if (text.empty()) throw ParseError("empty mask");
  std::vector<bool> flips;
  flips.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      flips.push_back(true);
    } else if (text[i] == '0') {
      flips.push_back(false);
    } else {
      throw IllegalSymbolError(i + 1, text[i]);
    }
  }
  if (n >= 0 && static_cast<int>(flips.size()) != n) {
    throw LengthMismatchError(static_cast<std::size_t>(n), flips.size());
  }
  return RelabelMask(std::move(flips));
}

std::set<int> ParseIndexSet(std::string_view text) {
  std::set<int> out;
  if (Trim(text).empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = Trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw ParseError("malformed index set entry '" + token + "'");
    }
    if (!out.insert(value).second) {
      throw ParseError("duplicate index " + token + " in index set");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int CountRuns(const BinarySequence& seq) {
  int runs = 1;
  for (int i = 1; i < seq.size(); ++i) {
    if (seq[i] != seq[i - 1]) ++runs;
  }
  return runs;
}

int CountOnes(const BinarySequence& seq) {
  return static_cast<int>(
      std::count(seq.bits().begin(), seq.bits().end(), true));
}

int CountRunsPacked(std::uint64_t word, int n) {
  if (n <= 1) return 1;
  const std::uint64_t boundary_mask = (std::uint64_t{1} << (n - 1)) - 1;
  return 1 + std::popcount((word ^ (word >> 1)) & boundary_mask);
}

RelabelMask MaskFromIndexSet(const std::set<int>& indices, int n) {
  if (n < 1) throw std::invalid_argument("mask length must be >= 1");
  std::vector<bool> flips(static_cast<std::size_t>(n), true);
  for (int index : indices) {
    if (index < 1 || index > n) {
      throw std::out_of_range("index " + std::to_string(index) +
                              " outside [1, " + std::to_string(n) + "]");
    }
    flips[index - 1] = false;
  }
  return RelabelMask(std::move(flips));
}

BinarySequence ApplyRelabeling(const BinarySequence& seq,
                               const RelabelMask& mask, std::string vocab) {
  if (mask.size() != seq.size()) throw LengthMismatchError(seq.size(), mask.size());
  std::vector<bool> out(seq.bits());
  for (int i = 0; i < seq.size(); ++i) {
    if (mask.flips(i)) out[i] = !out[i];
  }
  if (vocab.empty()) vocab = "relabeled " + seq.vocab();
  return BinarySequence(std::move(out), std::move(vocab));
}

RelabelMask MaskBetween(const BinarySequence& source,
                        const BinarySequence& target) {
  if (source.size() != target.size()) {
    throw LengthMismatchError(source.size(), target.size());
  }
  std::vector<bool> flips(source.bits().size());
  for (int i = 0; i < source.size(); ++i) flips[i] = source[i] != target[i];
  return RelabelMask(std::move(flips));
}

}  // namespace vocabrand
