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

#include "vocabrand/relabel_audit.h"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "vocabrand/errors.h"
#include "vocabrand/parallel.h"

namespace vocabrand {
namespace {

int HammingDistance(const BinarySequence& a, const BinarySequence& b) {
  return MaskBetween(a, b).FlipCount();
}

// A sequence whose verdict differs from `seq`'s, or nullopt if every sequence
// of this length gets the same verdict.
std::optional<BinarySequence> ExtremeTarget(const BinarySequence& seq,
                                            const VerdictTable& table,
                                            bool original_rejected) {
  const int n = seq.size();
  if (!original_rejected) {
    // Constant sequences attain the smallest p-value of both tests.
    BinarySequence ones = BinarySequence::Constant(n, true);
    BinarySequence zeros = BinarySequence::Constant(n, false);
    if (HammingDistance(seq, zeros) < HammingDistance(seq, ones)) {
      std::swap(ones, zeros);
    }
    for (const auto& candidate : {ones, zeros}) {
      if (table.rejected(Statistic(table.test(), candidate))) return candidate;
    }
    return std::nullopt;
  }

  const int current = Statistic(table.test(), seq);
  int best = -1;
  for (int s = table.min_statistic(); s <= table.max_statistic(); ++s) {
    if (best < 0) {
      best = s;
      continue;
    }
    const auto& p = table.pvalue(s).p;
    const auto& best_p = table.pvalue(best).p;
    if (p > best_p ||
        (p == best_p && std::abs(s - current) < std::abs(best - current))) {
      best = s;
    }
  }
  if (table.rejected(best)) return std::nullopt;

  std::vector<bool> bits(seq.bits());
  if (table.test() == TestKind::kRuns) {
    for (int i = 1; i < n; ++i) bits[i] = i < best ? !bits[i - 1] : bits[i - 1];
  } else {
    int ones = CountOnes(seq);
    for (int i = 0; i < n && ones != best; ++i) {
      if (ones < best && !bits[i]) {
        bits[i] = true;
        ++ones;
      } else if (ones > best && bits[i]) {
        bits[i] = false;
        --ones;
      }
    }
  }
  return BinarySequence(std::move(bits), seq.vocab());
}

std::optional<FlipSearchResult> ConstructiveSearch(const BinarySequence& seq,
                                                   const VerdictTable& table,
                                                   bool minimize) {
  const bool original_rejected = table.rejected(Statistic(table.test(), seq));
  auto target = ExtremeTarget(seq, table, original_rejected);
  if (!target) return std::nullopt;

  std::vector<bool> flips = MaskBetween(seq, *target).flip_bits();
  auto flips_verdict = [&](const std::vector<bool>& candidate) {
    std::vector<bool> bits(seq.bits());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] != candidate[i];
    const BinarySequence relabeled(std::move(bits), seq.vocab());
    return table.rejected(Statistic(table.test(), relabeled)) != original_rejected;
  };
  if (minimize) {
    for (std::size_t i = 0; i < flips.size(); ++i) {
      if (!flips[i]) continue;
      flips[i] = false;
      if (!flips_verdict(flips)) flips[i] = true;
    }
  }

  AuditResult audit = VerdictUnderRelabeling(seq, RelabelMask(std::move(flips)),
                                             table.test(), table.alpha(),
                                             table.convention());
  if (!audit.flipped) {
    throw std::logic_error("constructed relabeling does not reverse the verdict");
  }
  return FlipSearchResult{std::move(audit), SearchMethod::kConstructive, false};
}

std::optional<FlipSearchResult> ExhaustiveMinimalSearch(
    const BinarySequence& seq, const VerdictTable& table) {
  const int n = seq.size();
  const std::uint64_t word = seq.Packed();
  const std::uint64_t limit = std::uint64_t{1} << n;
  const bool original_rejected = table.RejectsPacked(word);
  // Gosper's hack visits the masks of each weight in increasing numeric
  // order, which is lexicographic order of the flip string.
  for (int weight = 0; weight <= n; ++weight) {
    std::uint64_t mask = (std::uint64_t{1} << weight) - 1;
    while (mask < limit) {
      if (table.RejectsPacked(word ^ mask) != original_rejected) {
        AuditResult audit = VerdictUnderRelabeling(
            seq, RelabelMask::FromPacked(mask, n), table.test(), table.alpha(),
            table.convention());
        return FlipSearchResult{std::move(audit), SearchMethod::kExhaustive,
                                true};
      }
      if (mask == 0) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((ripple ^ mask) >> 2) / low);
    }
  }
  return std::nullopt;
}

}  // namespace

AuditResult VerdictUnderRelabeling(const BinarySequence& seq,
                                   const RelabelMask& mask, TestKind test,
                                   const ExactProb& alpha,
                                   Convention convention) {
  BinarySequence relabeled = ApplyRelabeling(seq, mask);
  TestVerdict original = RunTest(test, seq, alpha, convention);
  TestVerdict after = RunTest(test, relabeled, alpha, convention);
  const bool flipped = original.rejected != after.rejected;
  return AuditResult{std::move(original), std::move(after), mask,
                     mask.IndexSet(), std::move(relabeled), flipped};
}

std::string_view SearchMethodName(SearchMethod method) {
  return method == SearchMethod::kExhaustive ? "exhaustive" : "constructive";
}

std::optional<FlipSearchResult> FindFlippingMask(const BinarySequence& seq,
                                                 TestKind test,
                                                 const ExactProb& alpha,
                                                 Convention convention,
                                                 bool minimize,
                                                 int exhaustive_cap) {
  const VerdictTable table(test, seq.size(), alpha, convention);
  if (minimize && seq.size() <= exhaustive_cap && seq.size() <= 63) {
    return ExhaustiveMinimalSearch(seq, table);
  }
  return ConstructiveSearch(seq, table, minimize);
}

PValueSpectrum ComputePValueSpectrum(const BinarySequence& seq, TestKind test,
                                     Convention convention, int cap) {
  const int n = seq.size();
  if (n > cap) throw CapExceededError("p-value spectrum", n, cap);
  using Tally = std::vector<std::uint64_t>;
  const std::uint64_t word = seq.Packed();
  Tally by_statistic = PartitionedReduce(
      std::uint64_t{1} << n, Tally(static_cast<std::size_t>(n) + 1, 0),
      [&](std::uint64_t begin, std::uint64_t end) {
        Tally part(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          ++part[static_cast<std::size_t>(StatisticPacked(test, word ^ mask, n))];
        }
        return part;
      },
      [](Tally acc, const Tally& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        return acc;
      });

  PValueSpectrum spectrum;
  for (int s = 0; s <= n; ++s) {
    if (by_statistic[static_cast<std::size_t>(s)] == 0) continue;
    spectrum[StatisticPValue(test, n, s, convention).p] +=
        by_statistic[static_cast<std::size_t>(s)];
  }
  return spectrum;
}

NullInvarianceReport CheckMaskPreservesUniform(const RelabelMask& mask,
                                               int cap) {
  const int n = mask.size();
  if (n > cap) throw CapExceededError("null invariance check", n, cap);
  const std::uint64_t total = std::uint64_t{1} << n;
  NullInvarianceReport report{n, true, 1, total, std::nullopt, std::nullopt};
  std::vector<bool> hit(total, false);
  for (std::uint64_t word = 0; word < total; ++word) {
    const BinarySequence seq = BinarySequence::FromPacked(word, n);
    const std::uint64_t image = ApplyRelabeling(seq, mask).Packed();
    if (hit[image]) {
      report.passed = false;
      report.witness_mask = mask;
      report.witness_sequence = seq;
      return report;
    }
    hit[image] = true;
  }
  return report;
}

NullInvarianceReport CheckNullInvariance(int n, int cap) {
  if (n < 1) throw std::out_of_range("length must be >= 1");
  if (n > cap) throw CapExceededError("null invariance check", n, cap);
  const std::uint64_t total = std::uint64_t{1} << n;
  NullInvarianceReport report{n, true, 0, total, std::nullopt, std::nullopt};
  for (std::uint64_t m = 0; m < total; ++m) {
    NullInvarianceReport one = CheckMaskPreservesUniform(RelabelMask::FromPacked(m, n), cap);
    ++report.masks_checked;
    if (!one.passed) {
      report.passed = false;
      report.witness_mask = std::move(one.witness_mask);
      report.witness_sequence = std::move(one.witness_sequence);
      return report;
    }
  }
  return report;
}

}  // namespace vocabrand
