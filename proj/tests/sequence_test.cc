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

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vocabrand/errors.h"

namespace vocabrand {
namespace {

const std::set<int> kX{1, 4, 9};
const std::set<int> kY{2, 3, 5, 9};

TEST(ParseSequenceTest, MapsSymbolsInOrder) {
  const BinarySequence a = ParseSequence("HTTHTHHHT");
  EXPECT_EQ(a.size(), 9);
  EXPECT_EQ(a.bits(), (std::vector<bool>{1, 0, 0, 1, 0, 1, 1, 1, 0}));
  EXPECT_EQ(ParseSequence("h").bits(), std::vector<bool>{true});
  EXPECT_EQ(ParseSequence("hT1t0H"), ParseSequence("HTHTTH"));
}

TEST(ParseSequenceTest, RejectsEmptyInput) {
  EXPECT_THROW(ParseSequence(""), ParseError);
}

TEST(ParseSequenceTest, ReportsPositionOfIllegalSymbol) {
  try {
    ParseSequence("HXT");
    FAIL() << "expected IllegalSymbolError";
  } catch (const IllegalSymbolError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.symbol(), 'X');
  }
}

TEST(CountTest, RunsAndOnes) {
  EXPECT_EQ(CountRuns(ParseSequence("HTTHTHHHT")), 6);
  EXPECT_EQ(CountRuns(ParseSequence("HHHHHTTTT")), 2);
  EXPECT_EQ(CountRuns(ParseSequence("H")), 1);
  EXPECT_EQ(CountOnes(ParseSequence("HTTHTHHHT")), 5);
  EXPECT_EQ(CountOnes(ParseSequence("TTTTTTTTT")), 0);
  EXPECT_EQ(CountOnes(ParseSequence("HHHHHTTTT")), 5);
}

TEST(CountTest, VocabLabelDoesNotChangeStatistics) {
  const BinarySequence a = ParseSequence("HTTHTHHHT", "heads/tails");
  const BinarySequence b = ParseSequence("HTTHTHHHT", "hails/teads");
  EXPECT_EQ(CountRuns(a), CountRuns(b));
  EXPECT_EQ(CountOnes(a), CountOnes(b));
  EXPECT_EQ(a, b);
}

TEST(CountTest, MatchesOracleAndPackedFormExhaustively) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const auto seq = BinarySequence::FromPacked(w, n);
      const auto bits = oracle::FromIndex(w, n);
      ASSERT_EQ(CountRuns(seq), oracle::Runs(bits));
      ASSERT_EQ(CountOnes(seq), oracle::Ones(bits));
      ASSERT_EQ(CountRunsPacked(w, n), CountRuns(seq));
      ASSERT_EQ(seq.Packed(), w);
    }
  }
}

TEST(CountTest, RunCountBounds) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const auto seq = BinarySequence::FromPacked(w, n);
      const int r = CountRuns(seq);
      ASSERT_GE(r, 1);
      ASSERT_LE(r, n);
      bool constant = true;
      bool alternating = true;
      for (int i = 1; i < n; ++i) {
        constant = constant && seq[i] == seq[i - 1];
        alternating = alternating && seq[i] != seq[i - 1];
      }
      ASSERT_EQ(r == 1, constant);
      ASSERT_EQ(r == n, alternating);
    }
  }
}

TEST(MaskFromIndexSetTest, FlipsOutsideTheSet) {
  EXPECT_EQ(MaskFromIndexSet(kX, 9).FlipPositions(),
            (std::vector<int>{2, 3, 5, 6, 7, 8}));
  EXPECT_EQ(MaskFromIndexSet(kX, 9).IndexSet(), (std::vector<int>{1, 4, 9}));
  EXPECT_TRUE(MaskFromIndexSet({1, 2, 3, 4}, 4).IsIdentity());
  EXPECT_EQ(MaskFromIndexSet({}, 3).FlipPositions(), (std::vector<int>{1, 2, 3}));
}

TEST(MaskFromIndexSetTest, RejectsOutOfRangeIndex) {
  EXPECT_THROW(MaskFromIndexSet({0}, 3), std::out_of_range);
  EXPECT_THROW(MaskFromIndexSet({4}, 3), std::out_of_range);
}

TEST(ApplyRelabelingTest, ReproducesCorrespondenceTables) {
  const auto a = ParseSequence("HTTHTHHHT");
  const auto b = ParseSequence("HHHHHTTTT");
  const auto d = ParseSequence("TTTTTTTTT");
  EXPECT_EQ(ApplyRelabeling(a, MaskFromIndexSet(kX, 9)).Render(SymbolCase::kLower),
            "hhhhhtttt");
  EXPECT_EQ(ApplyRelabeling(b, MaskFromIndexSet(kX, 9)).Render(SymbolCase::kLower),
            "htththhht");
  EXPECT_EQ(ApplyRelabeling(a, MaskFromIndexSet(kY, 9)).Render(SymbolCase::kLower),
            "ttttttttt");
  EXPECT_EQ(ApplyRelabeling(d, MaskFromIndexSet(kY, 9)).Render(SymbolCase::kLower),
            "htththhht");
}

TEST(ApplyRelabelingTest, IdentityAndLabels) {
  const auto a = ParseSequence("HTTHTHHHT");
  EXPECT_EQ(ApplyRelabeling(a, RelabelMask::Identity(9)), a);
  EXPECT_EQ(ApplyRelabeling(a, RelabelMask::Identity(9), "hails/teads").vocab(),
            "hails/teads");
  EXPECT_NE(ApplyRelabeling(a, RelabelMask::Identity(9)).vocab(), "");
}

TEST(ApplyRelabelingTest, LengthMismatch) {
  EXPECT_THROW(ApplyRelabeling(ParseSequence("HT"), RelabelMask::Identity(3)),
               LengthMismatchError);
  EXPECT_THROW(MaskBetween(ParseSequence("HT"), ParseSequence("HTH")),
               LengthMismatchError);
}

TEST(MaskBetweenTest, FlipsWhereBitsDiffer) {
  const auto a = ParseSequence("HTTHTHHHT");
  EXPECT_TRUE(MaskBetween(a, a).IsIdentity());
  EXPECT_EQ(MaskBetween(a, ParseSequence("111110000")).FlipPositions(),
            (std::vector<int>{2, 3, 5, 6, 7, 8}));
  // TTTTTTTTT vs htththhht (bits 100101110) differ at 1, 4, 6, 7, 8.
  const auto d = ParseSequence("TTTTTTTTT");
  const auto target = ParseSequence("100101110");
  const RelabelMask m = MaskBetween(d, target);
  EXPECT_EQ(m.FlipPositions(), (std::vector<int>{1, 4, 6, 7, 8}));
  EXPECT_EQ(ApplyRelabeling(d, m), target);
  EXPECT_EQ(m, MaskFromIndexSet(kY, 9));
}

TEST(MaskGroupTest, InvolutionAndUniqueTransitivityExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
      const auto source = BinarySequence::FromPacked(s, n);
      for (std::uint64_t m = 0; m < total; ++m) {
        const auto mask = RelabelMask::FromPacked(m, n);
        const auto image = ApplyRelabeling(source, mask);
        ASSERT_EQ(ApplyRelabeling(image, mask), source);
        // The mask carrying source onto image is the one we applied, and no
        // other mask lands there.
        ASSERT_EQ(MaskBetween(source, image), mask);
      }
    }
  }
}

TEST(MaskGroupTest, ComposeIsXorAndSelfInverse) {
  const auto x = MaskFromIndexSet(kX, 9);
  const auto y = MaskFromIndexSet(kY, 9);
  EXPECT_TRUE(x.Compose(x).IsIdentity());
  EXPECT_EQ(x.Compose(y), y.Compose(x));
  const auto a = ParseSequence("HTTHTHHHT");
  EXPECT_EQ(ApplyRelabeling(ApplyRelabeling(a, x), y),
            ApplyRelabeling(a, x.Compose(y)));
}

TEST(MaskGroupTest, IndexSetRelabelingIsItsOwnInverse) {
  // Heads/tails are recovered from teads/hails by the same index set.
  const auto a = ParseSequence("HTTHTHHHT");
  const auto x = MaskFromIndexSet(kX, 9);
  EXPECT_EQ(ApplyRelabeling(ApplyRelabeling(a, x), x), a);
}

TEST(ParseMaskTest, FlipStringAndIndexSet) {
  EXPECT_EQ(ParseMaskString("011011110"), MaskFromIndexSet(kX, 9));
  EXPECT_THROW(ParseMaskString("0110", 9), LengthMismatchError);
  EXPECT_THROW(ParseMaskString("01a"), IllegalSymbolError);
  EXPECT_EQ(ParseIndexSet("1,4,9"), kX);
  EXPECT_EQ(ParseIndexSet(" 2, 3 ,5,9"), kY);
  EXPECT_TRUE(ParseIndexSet("").empty());
  EXPECT_THROW(ParseIndexSet("1,,2"), ParseError);
  EXPECT_THROW(ParseIndexSet("1,x"), ParseError);
  EXPECT_THROW(ParseIndexSet("1,1"), ParseError);
}

}  // namespace
}  // namespace vocabrand
