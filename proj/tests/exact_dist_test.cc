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

#include "vocabrand/exact_dist.h"

#include <string>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vocabrand/errors.h"

namespace vocabrand {
namespace {

ExactProb Over512(int count) { return ExactProb(BigInt(count), BigInt(512)); }

TEST(ExactProbTest, LowestTermsAndRendering) {
  const ExactProb p = Over512(186);
  EXPECT_EQ(p.Fraction(), "93/256");
  EXPECT_EQ(p.Decimal(), "0.36328125");
  EXPECT_EQ(p.Decimal(3), "0.363");
  EXPECT_EQ(Over512(18).Decimal(3), "0.035");
  EXPECT_EQ(Over512(256).Decimal(3), "0.5");
  EXPECT_EQ(Over512(2).Decimal(), "0.00390625");
  EXPECT_EQ(Over512(2).Decimal(3), "0.004");
  EXPECT_EQ(Over512(1).Decimal(3), "0.002");
  EXPECT_EQ(ExactProb::One().Decimal(3), "1");
  EXPECT_EQ(ExactProb().Fraction(), "0");
  EXPECT_EQ(ToDecimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(ToDecimal(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(ToDecimal(Rational(-1, 8), 2), "-0.13");
}

TEST(ExactProbTest, RejectsValuesOutsideUnitInterval) {
  EXPECT_THROW(ExactProb(Rational(3, 2)), std::domain_error);
  EXPECT_THROW(ExactProb(Rational(-1, 2)), std::domain_error);
  EXPECT_THROW(ExactProb::Parse("1.5"), ParseError);
}

TEST(ParseRationalTest, FractionsAndDecimalsAreExact) {
  EXPECT_EQ(ParseRational("1/20"), Rational(1, 20));
  EXPECT_EQ(ParseRational("0.05"), Rational(1, 20));
  EXPECT_EQ(ParseRational(".5"), Rational(1, 2));
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("010/20"), Rational(1, 2));
  EXPECT_EQ(ParseRational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(ExactProb::Parse("0.05"), ExactProb::Parse("1/20"));
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.2.3", ".", "1/x", "0x1"}) {
    EXPECT_THROW(ParseRational(bad), ParseError) << bad;
  }
}

TEST(RunsCountTest, ClosedFormExamples) {
  EXPECT_EQ(RunsCountExact(9, 6), 112);
  EXPECT_EQ(RunsCountExact(9, 1), 2);
  EXPECT_EQ(RunsCountExact(2, 2), 2);
  EXPECT_THROW(RunsCountExact(9, 0), std::out_of_range);
  EXPECT_THROW(RunsCountExact(9, 10), std::out_of_range);
}

TEST(RunsCountTest, ClosedFormMatchesEnumerationOracle) {
  for (int n = 1; n <= 14; ++n) {
    const auto brute = oracle::RunsCounts(n);
    const RunsDistribution enumerated = EnumerateRunsDistribution(n);
    for (int r = 1; r <= n; ++r) {
      ASSERT_EQ(RunsCountExact(n, r), brute[r]) << "n=" << n << " r=" << r;
      ASSERT_EQ(enumerated.count(r), brute[r]) << "n=" << n << " r=" << r;
    }
  }
}

TEST(RunsCountTest, EnumerationOracleSmallTables) {
  EXPECT_EQ(EnumerateRunsDistribution(1).counts(), (std::vector<BigInt>{2}));
  EXPECT_EQ(EnumerateRunsDistribution(2).counts(), (std::vector<BigInt>{2, 2}));
  const auto nine = EnumerateRunsDistribution(9);
  EXPECT_EQ(nine.count(6), 112);
  BigInt total = 0;
  for (const auto& c : nine.counts()) total += c;
  EXPECT_EQ(total, 512);
  EXPECT_THROW(EnumerateRunsDistribution(25), CapExceededError);
  EXPECT_THROW(EnumerateRunsDistribution(10, 8), CapExceededError);
}

TEST(RunsDistributionTest, NormalizationAndSymmetry) {
  for (int n = 1; n <= 60; ++n) {
    const RunsDistribution dist = RunsDistributionExact(n);
    BigInt total = 0;
    for (int r = 1; r <= n; ++r) {
      total += dist.count(r);
      ASSERT_EQ(dist.count(r), dist.count(n + 1 - r));
    }
    ASSERT_EQ(total, Pow2(n)) << n;
    ASSERT_EQ(dist.count(1), 2);
    ASSERT_EQ(dist.count(n), 2);
    ASSERT_EQ(dist.Cdf(n), ExactProb::One());
    ASSERT_EQ(dist.Survival(1), ExactProb::One());
  }
}

TEST(RunsPValueTest, WorkedExampleValues) {
  EXPECT_EQ(RunsPValue(9, 6, Tail::kUpper), Over512(186));
  EXPECT_EQ(RunsPValue(9, 2, Tail::kLower), Over512(18));
  EXPECT_EQ(RunsPValue(9, 1, Tail::kLower), Over512(2));
  EXPECT_EQ(RunsPValue(9, 9, Tail::kUpper), Over512(2));
  EXPECT_THROW(RunsPValue(9, 10, Tail::kUpper), std::out_of_range);
}

TEST(RunsPValueTest, TailsMatchOracleComplementAndMonotone) {
  for (int n = 1; n <= 12; ++n) {
    const auto brute = oracle::RunsCounts(n);
    for (int r = 1; r <= n; ++r) {
      const ExactProb lower = RunsPValue(n, r, Tail::kLower);
      const ExactProb upper = RunsPValue(n, r, Tail::kUpper);
      ASSERT_EQ(lower, ExactProb(BigInt(oracle::SumRange(brute, 1, r)), Pow2(n)));
      ASSERT_EQ(upper, ExactProb(BigInt(oracle::SumRange(brute, r, n)), Pow2(n)));
      // Denominator divides 2^n.
      ASSERT_EQ(Pow2(n) % lower.denominator(), 0);
      if (r < n) {
        ASSERT_EQ(lower.value() + RunsPValue(n, r + 1, Tail::kUpper).value(),
                  Rational(1));
        ASSERT_GE(upper, RunsPValue(n, r + 1, Tail::kUpper));
      }
    }
  }
}

TEST(BinomialPValueTest, WorkedExampleValues) {
  EXPECT_EQ(BinomialPValue(9, 5, Convention::kPaperOneSided), Over512(256));
  EXPECT_EQ(BinomialPValue(9, 0, Convention::kTwoSidedDoubled), Over512(2));
  EXPECT_EQ(BinomialPValue(9, 0, Convention::kTwoSidedDoubled).Decimal(),
            "0.00390625");
  EXPECT_EQ(BinomialPValue(9, 0, Convention::kPaperOneSided), Over512(1));
  EXPECT_EQ(BinomialPValue(9, 5, Convention::kTwoSidedDoubled), ExactProb::One());
  EXPECT_THROW(BinomialPValue(9, 10), std::out_of_range);
  EXPECT_THROW(BinomialPValue(9, -1), std::out_of_range);
}

TEST(BinomialPValueTest, MatchesOracleSymmetricAndMonotone) {
  for (int n = 1; n <= 12; ++n) {
    const auto brute = oracle::OnesCounts(n);
    for (int k = 0; k <= n; ++k) {
      for (bool doubled : {false, true}) {
        const auto expected = oracle::BinomialP(brute, n, k, doubled);
        ASSERT_EQ(BinomialPValue(n, k, doubled ? Convention::kTwoSidedDoubled
                                               : Convention::kPaperOneSided),
                  ExactProb(BigInt(expected.count), Pow2(n)));
      }
      ASSERT_EQ(BinomialUpperTail(n, k), BinomialLowerTail(n, n - k));
      if (k < n) ASSERT_GE(BinomialUpperTail(n, k), BinomialUpperTail(n, k + 1));
    }
  }
}

TEST(SequenceProbabilityTest, PowersOfTwo) {
  EXPECT_EQ(SequenceProbability(9), Over512(1));
  EXPECT_EQ(SequenceProbability(1), ExactProb(BigInt(1), BigInt(2)));
  EXPECT_EQ(SequenceProbability(20), ExactProb(BigInt(1), BigInt(1048576)));
}

TEST(DistributionTableTest, CsvLayout) {
  const std::string csv = TableToCsv(RunsTable(2), "r");
  EXPECT_EQ(csv,
            "r,count,pmf-numerator,pmf-denominator,pmf-decimal\n"
            "1,2,1,2,0.5\n"
            "2,2,1,2,0.5\n");
  EXPECT_EQ(BinomialTable(3).size(), 4u);
  EXPECT_EQ(BinomialTable(3)[1].count, 3);
}

}  // namespace
}  // namespace vocabrand
