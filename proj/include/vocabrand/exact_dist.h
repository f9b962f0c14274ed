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

// Exact null distributions under the fair, independent source: every length-n
// sequence has probability 2^-n. Runs are counted unconditionally over all 2^n
// sequences (no conditioning on the number of ones).

#ifndef VOCABRAND_EXACT_DIST_H_
#define VOCABRAND_EXACT_DIST_H_

#include <string>
#include <string_view>
#include <vector>

#include "vocabrand/exact_prob.h"

namespace vocabrand {

inline constexpr int kEnumerationCap = 24;

enum class Tail { kLower, kUpper, kDoubled };

// kPaperOneSided: P(K >= k) when k >= n/2, else P(K <= k).
// kTwoSidedDoubled: min(1, 2 * the one-sided value).
enum class Convention { kPaperOneSided, kTwoSidedDoubled };

std::string_view TailName(Tail tail);
std::string_view ConventionName(Convention convention);
Convention ParseConvention(std::string_view text);

// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt Binomial(int n, int k);

// Counts of length-n sequences with exactly r runs, r = 1..n.
class RunsDistribution {
 public:
  RunsDistribution(int n, std::vector<BigInt> counts);

  int n() const { return n_; }
  // r in [1, n].
  const BigInt& count(int r) const;
  const std::vector<BigInt>& counts() const { return counts_; }

  ExactProb Pmf(int r) const;
  // P(R <= r).
  ExactProb Cdf(int r) const;
  // P(R >= r).
  ExactProb Survival(int r) const;

 private:
  int n_;
  std::vector<BigInt> counts_;
};

// 2 * C(n-1, r-1). Throws std::out_of_range unless 1 <= r <= n.
BigInt RunsCountExact(int n, int r);

// Closed-form table for any n >= 1.
RunsDistribution RunsDistributionExact(int n);

// Oracle: tallies the run count of every one of the 2^n sequences. Throws
// CapExceededError above `cap`.
RunsDistribution EnumerateRunsDistribution(int n, int cap = kEnumerationCap);

ExactProb RunsPValue(int n, int r, Tail tail);

// C(n, k) / 2^n.
ExactProb BinomialPmf(int n, int k);
// P(K <= k) and P(K >= k) for K ~ Binomial(n, 1/2).
ExactProb BinomialLowerTail(int n, int k);
ExactProb BinomialUpperTail(int n, int k);

// The one-sided tail the paper-one-sided rule picks for k.
Tail BinomialOneSidedTail(int n, int k);

ExactProb BinomialPValue(int n, int k,
                         Convention convention = Convention::kPaperOneSided);

// 1 / 2^n.
ExactProb SequenceProbability(int n);

// Rows of (statistic, count of sequences, pmf). Runs: statistic r = 1..n.
// Binomial: statistic k = 0..n.
struct DistributionRow {
  int statistic;
  BigInt count;
  ExactProb pmf;
};
std::vector<DistributionRow> RunsTable(int n);
std::vector<DistributionRow> BinomialTable(int n);

// CSV with header "<stat>,count,pmf-numerator,pmf-denominator,pmf-decimal".
std::string TableToCsv(const std::vector<DistributionRow>& rows,
                       std::string_view statistic_column);

}  // namespace vocabrand

#endif  // VOCABRAND_EXACT_DIST_H_
