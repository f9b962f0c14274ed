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

// Verdicts under alternative vocabularies, and searches for the ones that
// reverse a verdict.
//
// Every relabeling maps the fair independent law onto itself, so the null
// hypothesis reads the same in every vocabulary; the statistic does not.

#ifndef VOCABRAND_RELABEL_AUDIT_H_
#define VOCABRAND_RELABEL_AUDIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "vocabrand/exact_dist.h"
#include "vocabrand/exact_prob.h"
#include "vocabrand/sequence.h"
#include "vocabrand/verdicts.h"

namespace vocabrand {

inline constexpr int kSpectrumCap = 16;
inline constexpr int kInvarianceCap = 12;

struct AuditResult {
  TestVerdict original;
  TestVerdict relabeled;
  RelabelMask mask;
  // Positions whose reading is kept (the index-set form of `mask`).
  std::vector<int> index_set;
  BinarySequence relabeled_sequence;
  bool flipped;
};

AuditResult VerdictUnderRelabeling(
    const BinarySequence& seq, const RelabelMask& mask, TestKind test,
    const ExactProb& alpha, Convention convention = Convention::kPaperOneSided);

enum class SearchMethod { kExhaustive, kConstructive };
std::string_view SearchMethodName(SearchMethod method);

struct FlipSearchResult {
  AuditResult audit;
  SearchMethod method;
  // True only when an exhaustive search proved the flip count minimal.
  bool minimal;
};

// Looks for a mask whose relabeled verdict differs from the original one.
//
// With `minimize` and n <= exhaustive_cap, all masks are scanned by increasing
// flip count; among masks of the least count the lexicographically smallest
// flip string wins. Otherwise the mask is built toward an extreme target (a
// constant sequence to force rejection, a p-maximizing statistic to lift it),
// and with `minimize` pruned greedily; such results carry minimal = false.
// Returns nullopt when no relabeling changes the verdict.
std::optional<FlipSearchResult> FindFlippingMask(
    const BinarySequence& seq, TestKind test, const ExactProb& alpha,
    Convention convention = Convention::kPaperOneSided, bool minimize = false,
    int exhaustive_cap = kEnumerationCap);

// Multiset of p-values of the relabeled sequence over all 2^n masks.
using PValueSpectrum = std::map<ExactProb, std::uint64_t>;

PValueSpectrum ComputePValueSpectrum(
    const BinarySequence& seq, TestKind test,
    Convention convention = Convention::kPaperOneSided,
    int cap = kSpectrumCap);

struct NullInvarianceReport {
  int n;
  bool passed;
  std::uint64_t masks_checked;
  std::uint64_t sequences_per_mask;
  // On failure: the mask and a sequence whose image collides with another.
  std::optional<RelabelMask> witness_mask;
  std::optional<BinarySequence> witness_sequence;
};

// Checks that every mask of length n permutes {0,1}^n, so the uniform law is
// carried to itself.
NullInvarianceReport CheckNullInvariance(int n, int cap = kInvarianceCap);

// Same check for a single mask.
NullInvarianceReport CheckMaskPreservesUniform(const RelabelMask& mask,
                                               int cap = kEnumerationCap);

}  // namespace vocabrand

#endif  // VOCABRAND_RELABEL_AUDIT_H_
