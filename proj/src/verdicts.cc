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

#include "vocabrand/verdicts.h"

#include <bit>
#include <stdexcept>
#include <utility>

#include "vocabrand/errors.h"

namespace vocabrand {

std::string_view TestName(TestKind test) {
  return test == TestKind::kRuns ? "runs" : "binomial";
}

TestKind ParseTestKind(std::string_view text) {
  if (text == "runs") return TestKind::kRuns;
  if (text == "binomial") return TestKind::kBinomial;
  throw ParseError("unknown test '" + std::string(text) + "'");
}

ExactProb DefaultAlpha() { return ExactProb(BigInt(1), BigInt(20)); }

TailedPValue StatisticPValue(TestKind test, int n, int statistic,
                             Convention convention) {
  if (test == TestKind::kBinomial) {
    const Tail tail = convention == Convention::kTwoSidedDoubled
                          ? Tail::kDoubled
                          : BinomialOneSidedTail(n, statistic);
    return {tail, BinomialPValue(n, statistic, convention)};
  }
  const int twice = 2 * statistic;
  if (twice > n + 1) return {Tail::kUpper, RunsPValue(n, statistic, Tail::kUpper)};
  if (twice < n + 1) return {Tail::kLower, RunsPValue(n, statistic, Tail::kLower)};
  ExactProb lower = RunsPValue(n, statistic, Tail::kLower);
  ExactProb upper = RunsPValue(n, statistic, Tail::kUpper);
  if (upper < lower) return {Tail::kUpper, std::move(upper)};
  return {Tail::kLower, std::move(lower)};
}

int Statistic(TestKind test, const BinarySequence& seq) {
  return test == TestKind::kRuns ? CountRuns(seq) : CountOnes(seq);
}

int StatisticPacked(TestKind test, std::uint64_t word, int n) {
  return test == TestKind::kRuns ? CountRunsPacked(word, n)
                                 : std::popcount(word);
}

TestVerdict RunTest(TestKind test, const BinarySequence& seq,
                    const ExactProb& alpha, Convention convention) {
  const int statistic = Statistic(test, seq);
  TailedPValue tailed = StatisticPValue(test, seq.size(), statistic, convention);
  const bool rejected = tailed.p <= alpha;
  return TestVerdict{test,        convention,         seq.size(),
                     statistic,   tailed.tail,        std::move(tailed.p),
                     alpha,       rejected,           seq.vocab()};
}

TestVerdict RunsTest(const BinarySequence& seq, const ExactProb& alpha) {
  return RunTest(TestKind::kRuns, seq, alpha);
}

TestVerdict BinomialTest(const BinarySequence& seq, const ExactProb& alpha,
                         Convention convention) {
  return RunTest(TestKind::kBinomial, seq, alpha, convention);
}

VerdictTable::VerdictTable(TestKind test, int n, ExactProb alpha,
                           Convention convention)
    : test_(test), n_(n), alpha_(std::move(alpha)), convention_(convention) {
  if (n < 1) throw std::out_of_range("length must be >= 1");
  pvalues_.reserve(static_cast<std::size_t>(n) + 1);
  rejected_.assign(static_cast<std::size_t>(n) + 1, false);
  for (int s = 0; s <= n; ++s) {
    if (s < min_statistic()) {
      pvalues_.push_back({Tail::kLower, ExactProb::One()});
      continue;
    }
    pvalues_.push_back(StatisticPValue(test, n, s, convention));
    rejected_[static_cast<std::size_t>(s)] = pvalues_.back().p <= alpha_;
  }
}

const TailedPValue& VerdictTable::pvalue(int statistic) const {
  if (statistic < min_statistic() || statistic > max_statistic()) {
    throw std::out_of_range("statistic out of range");
  }
  return pvalues_[static_cast<std::size_t>(statistic)];
}

bool VerdictTable::rejected(int statistic) const {
  if (statistic < min_statistic() || statistic > max_statistic()) {
    throw std::out_of_range("statistic out of range");
  }
  return rejected_[static_cast<std::size_t>(statistic)];
}

RejectionSet ComputeRejectionSet(TestKind test, int n, const ExactProb& alpha,
                                 Convention convention, bool list_sequences,
                                 int cap) {
  const VerdictTable table(test, n, alpha, convention);
  RejectionSet out{test, convention, n, alpha, {}, 0, ExactProb(), std::nullopt};
  for (int s = table.min_statistic(); s <= table.max_statistic(); ++s) {
    if (!table.rejected(s)) continue;
    out.statistics.push_back(s);
    out.sequence_count +=
        test == TestKind::kRuns ? RunsCountExact(n, s) : Binomial(n, s);
  }
  out.null_size = ExactProb(out.sequence_count, Pow2(n));

  if (list_sequences) {
    if (n > cap) throw CapExceededError("explicit rejection set", n, cap);
    std::vector<BinarySequence> sequences;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t word = 0; word < total; ++word) {
      if (table.RejectsPacked(word)) {
        sequences.push_back(BinarySequence::FromPacked(word, n));
      }
    }
    out.sequences = std::move(sequences);
  }
  return out;
}

}  // namespace vocabrand
