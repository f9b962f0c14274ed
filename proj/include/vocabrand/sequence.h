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

// Binary outcome sequences and position-wise relabelings.
//
// A relabeling renames the two outcomes independently at every position. With
// the convention that the relabeled "first" symbol (h) agrees with H wherever
// the reading is kept, every relabeling is a flip mask: output bit i is input
// bit i, inverted where the mask is set. Masks compose by exclusive-or, so the
// relabelings of length-n sequences form the group (Z/2)^n acting simply
// transitively on {0,1}^n.
//
// An index set X (1-based positions where the reading is kept, as in "h iff
// i in X and H, or i not in X and T") converts to the mask that flips exactly
// the positions outside X.

#ifndef VOCABRAND_SEQUENCE_H_
#define VOCABRAND_SEQUENCE_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vocabrand {

inline constexpr std::string_view kDefaultVocab = "heads/tails";

enum class SymbolCase { kUpper, kLower };

class BinarySequence {
 public:
  BinarySequence(std::vector<bool> bits, std::string vocab);

  // Unpacks the low `n` bits of `word`; position 1 is bit n-1. n in [1, 64].
  static BinarySequence FromPacked(std::uint64_t word, int n,
                                   std::string vocab = std::string(
                                       kDefaultVocab));
  // Constant sequence of `n` copies of `bit`.
  static BinarySequence Constant(int n, bool bit,
                                 std::string vocab = std::string(
                                     kDefaultVocab));

  int size() const { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<bool>& bits() const { return bits_; }
  const std::string& vocab() const { return vocab_; }

  // Position 1 in the most significant of the low n bits, so numeric order of
  // the packed word is lexicographic order of the rendered string. n <= 64.
  std::uint64_t Packed() const;

  // H/T (or h/t). The vocab label never changes the rendering.
  std::string Render(SymbolCase symbol_case = SymbolCase::kUpper) const;

  // Equality is on bits only; the vocab label is presentation.
  friend bool operator==(const BinarySequence& a, const BinarySequence& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<bool> bits_;
  std::string vocab_;
};

class RelabelMask {
 public:
  explicit RelabelMask(std::vector<bool> flips);

  static RelabelMask Identity(int n);
  static RelabelMask FromPacked(std::uint64_t word, int n);

  int size() const { return static_cast<int>(flips_.size()); }
  bool flips(int i) const { return flips_[static_cast<std::size_t>(i)]; }
  const std::vector<bool>& flip_bits() const { return flips_; }

  int FlipCount() const;
  bool IsIdentity() const { return FlipCount() == 0; }
  std::uint64_t Packed() const;

  // 1-based flipped positions.
  std::vector<int> FlipPositions() const;
  // 1-based positions kept as-is: the index set X this mask stands for.
  std::vector<int> IndexSet() const;
  // Flip string over {0,1}, position 1 first.
  std::string Render() const;

  // Position-wise exclusive-or. Every mask is its own inverse.
  RelabelMask Compose(const RelabelMask& other) const;

  friend bool operator==(const RelabelMask&, const RelabelMask&) = default;

 private:
  std::vector<bool> flips_;
};

// Accepts H/h/1 as the first symbol and T/t/0 as the second. Throws
// ParseError on empty input and IllegalSymbolError naming the 1-based
// position of the first bad character.
BinarySequence ParseSequence(std::string_view text,
                             std::string vocab = std::string(kDefaultVocab));

// Flip string over {0,1} of exactly `n` characters (n < 0: any length).
RelabelMask ParseMaskString(std::string_view text, int n = -1);

// Comma-separated 1-based positions, e.g. "1,4,9". Empty text is the empty
// set. Duplicates are rejected.
std::set<int> ParseIndexSet(std::string_view text);

int CountRuns(const BinarySequence& seq);
int CountOnes(const BinarySequence& seq);

// Run count of the low `n` bits of a packed word; agrees with CountRuns.
int CountRunsPacked(std::uint64_t word, int n);

// Mask for "keep the reading at positions in X, swap it elsewhere". Throws
// std::out_of_range for an index outside [1, n].
RelabelMask MaskFromIndexSet(const std::set<int>& indices, int n);

// Output vocab label is `vocab` when nonempty, otherwise derived from the
// input's label.
BinarySequence ApplyRelabeling(const BinarySequence& seq,
                               const RelabelMask& mask,
                               std::string vocab = {});

// The unique mask carrying `source` onto `target`.
RelabelMask MaskBetween(const BinarySequence& source,
                        const BinarySequence& target);

}  // namespace vocabrand

#endif  // VOCABRAND_SEQUENCE_H_
