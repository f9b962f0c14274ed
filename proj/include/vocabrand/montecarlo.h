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

// Seeded output sources, empirical rejection rates, exact likelihoods and
// posterior odds against the fair source.
//
// Sampling uses std::mt19937_64; trial i of a run with seed s draws from its
// own engine seeded with splitmix64 of (s, i), so results do not depend on
// how trials are scheduled.

#ifndef VOCABRAND_MONTECARLO_H_
#define VOCABRAND_MONTECARLO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "vocabrand/exact_dist.h"
#include "vocabrand/exact_prob.h"
#include "vocabrand/sequence.h"
#include "vocabrand/verdicts.h"

namespace vocabrand {

struct FairIid {
  friend bool operator==(const FairIid&, const FairIid&) = default;
};
// Each trial is 1 with probability p.
struct Biased {
  ExactProb p;
  friend bool operator==(const Biased&, const Biased&) = default;
};
// First trial fair; each later trial repeats its predecessor with
// probability `stay`.
struct StickyMarkov {
  ExactProb stay;
  friend bool operator==(const StickyMarkov&, const StickyMarkov&) = default;
};

using SourceModel = std::variant<FairIid, Biased, StickyMarkov>;

// "fair", "biased:p=NUM/DEN", "markov:stay=NUM/DEN" (decimals accepted).
SourceModel ParseSourceModel(std::string_view text);
std::string SourceModelName(const SourceModel& model);

// Stream seed for one trial.
std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial);

BinarySequence SampleSequence(const SourceModel& model, int n,
                              std::uint64_t seed);

ExactProb Likelihood(const SourceModel& model, const BinarySequence& seq);

// prior_odds * L(alt) / L(fair). Throws std::domain_error unless
// prior_odds > 0.
Rational PosteriorOdds(const Rational& prior_odds, const SourceModel& alt,
                       const BinarySequence& seq);

struct RejectionRateEstimate {
  std::uint64_t trials;
  std::uint64_t rejections;
  double rate;
  // sqrt(rate * (1 - rate) / trials).
  double standard_error;
  // What the rate converges to under the fair source.
  ExactProb exact_null_size;
};

RejectionRateEstimate EstimateRejectionRate(
    const SourceModel& model, int n, TestKind test, const ExactProb& alpha,
    Convention convention, std::uint64_t trials, std::uint64_t seed);

}  // namespace vocabrand

#endif  // VOCABRAND_MONTECARLO_H_
