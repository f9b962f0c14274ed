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

// Reject / not-reject decisions at an explicit significance level.
//
// Runs test tail selection: upper when r > (n+1)/2, lower when r < (n+1)/2,
// and on the tie the smaller tail (lower when both are equal). A sequence is
// rejected iff p <= alpha, compared as exact rationals.

#ifndef VOCABRAND_VERDICTS_H_
#define VOCABRAND_VERDICTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vocabrand/exact_dist.h"
#include "vocabrand/exact_prob.h"
#include "vocabrand/sequence.h"

namespace vocabrand {

enum class TestKind { kRuns, kBinomial };

std::string_view TestName(TestKind test);
TestKind ParseTestKind(std::string_view text);

// 1/20.
ExactProb DefaultAlpha();

struct TailedPValue {
  Tail tail;
  ExactProb p;
};

// p-value of an observed statistic (run count or ones count) at length n.
// `convention` only affects the binomial test.
TailedPValue StatisticPValue(TestKind test, int n, int statistic,
                             Convention convention = Convention::kPaperOneSided);

int Statistic(TestKind test, const BinarySequence& seq);
int StatisticPacked(TestKind test, std::uint64_t word, int n);

struct TestVerdict {
  TestKind test;
  Convention convention;
  int n;
  int statistic;
  Tail tail;
  ExactProb p;
  ExactProb alpha;
  bool rejected;
  std::string vocab;

  friend bool operator==(const TestVerdict&, const TestVerdict&) = default;
};

TestVerdict RunTest(TestKind test, const BinarySequence& seq,
                    const ExactProb& alpha,
                    Convention convention = Convention::kPaperOneSided);

TestVerdict RunsTest(const BinarySequence& seq,
                     const ExactProb& alpha = DefaultAlpha());

TestVerdict BinomialTest(const BinarySequence& seq,
                         const ExactProb& alpha = DefaultAlpha(),
                         Convention convention = Convention::kPaperOneSided);

// Per-statistic p-values and decisions for one (test, n, alpha, convention),
// for callers that evaluate many sequences of the same length.
class VerdictTable {
 public:
  VerdictTable(TestKind test, int n, ExactProb alpha,
               Convention convention = Convention::kPaperOneSided);

  TestKind test() const { return test_; }
  int n() const { return n_; }
  const ExactProb& alpha() const { return alpha_; }
  Convention convention() const { return convention_; }

  int min_statistic() const { return test_ == TestKind::kRuns ? 1 : 0; }
  int max_statistic() const { return n_; }

  const TailedPValue& pvalue(int statistic) const;
  bool rejected(int statistic) const;
  bool RejectsPacked(std::uint64_t word) const {
    return rejected_[static_cast<std::size_t>(StatisticPacked(test_, word, n_))];
  }

 private:
  TestKind test_;
  int n_;
  ExactProb alpha_;
  Convention convention_;
  std::vector<TailedPValue> pvalues_;  // indexed by statistic
  std::vector<bool> rejected_;
};

struct RejectionSet {
  TestKind test;
  Convention convention;
  int n;
  ExactProb alpha;
  // Rejected statistic values, ascending.
  std::vector<int> statistics;
  // Number of sequences attaining them and the exact null probability of
  // rejecting, sequence_count / 2^n.
  BigInt sequence_count;
  ExactProb null_size;
  // Every rejected sequence in lexicographic order; present only when asked
  // for.
  std::optional<std::vector<BinarySequence>> sequences;
};

// Statistic-value form for any n. With `list_sequences` the explicit set is
// enumerated as well, which throws CapExceededError above `cap`.
RejectionSet ComputeRejectionSet(TestKind test, int n, const ExactProb& alpha,
                                 Convention convention = Convention::kPaperOneSided,
                                 bool list_sequences = false,
                                 int cap = kEnumerationCap);

}  // namespace vocabrand

#endif  // VOCABRAND_VERDICTS_H_
