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

#include "vocabrand/montecarlo.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vocabrand/errors.h"
#include "vocabrand/parallel.h"

namespace vocabrand {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exact Bernoulli(p) draw for rational p: uniform integer in [0, den)
// compared with the numerator.
bool DrawBernoulli(const ExactProb& p, std::mt19937_64& rng) {
  if (p.value() == 0) return false;
  if (p.value() == 1) return true;
  const BigInt num = p.numerator();
  const BigInt den = p.denominator();
  if (den <= std::numeric_limits<std::uint64_t>::max()) {
    std::uniform_int_distribution<std::uint64_t> uniform(
        0, den.convert_to<std::uint64_t>() - 1);
    return uniform(rng) < num.convert_to<std::uint64_t>();
  }
  const unsigned bits = boost::multiprecision::msb(den) + 1;
  const BigInt top = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt draw = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
      draw = (draw << 64) | BigInt(rng());
    }
    draw &= top;
    if (draw < den) return draw < num;
  }
}

Rational Power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

ExactProb ParseParameter(std::string_view text, std::string_view key,
                         std::string_view model) {
  if (text.substr(0, key.size()) != key || text.size() <= key.size() ||
      text[key.size()] != '=') {
    throw ParseError("model '" + std::string(model) + "' expects " +
                     std::string(key) + "=NUM/DEN");
  }
  return ExactProb::Parse(text.substr(key.size() + 1));
}

}  // namespace

SourceModel ParseSourceModel(std::string_view text) {
  if (text == "fair") return FairIid{};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("unknown model '" + std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto params = text.substr(colon + 1);
  if (kind == "biased") return Biased{ParseParameter(params, "p", text)};
  if (kind == "markov") return StickyMarkov{ParseParameter(params, "stay", text)};
  throw ParseError("unknown model '" + std::string(text) + "'");
}

std::string SourceModelName(const SourceModel& model) {
  return std::visit(
      Overloaded{
          [](const FairIid&) { return std::string("fair"); },
          [](const Biased& m) { return "biased:p=" + m.p.Fraction(); },
          [](const StickyMarkov& m) { return "markov:stay=" + m.stay.Fraction(); },
      },
      model);
}

std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(SplitMix64(seed) ^ trial);
}

BinarySequence SampleSequence(const SourceModel& model, int n,
                              std::uint64_t seed) {
  if (n < 1) throw std::out_of_range("length must be >= 1");
  std::mt19937_64 rng(seed);
  const ExactProb half(BigInt(1), BigInt(2));
  std::vector<bool> bits(static_cast<std::size_t>(n));
  std::visit(
      Overloaded{
          [&](const FairIid&) {
            for (int i = 0; i < n; ++i) bits[i] = DrawBernoulli(half, rng);
          },
          [&](const Biased& m) {
            for (int i = 0; i < n; ++i) bits[i] = DrawBernoulli(m.p, rng);
          },
          [&](const StickyMarkov& m) {
            bits[0] = DrawBernoulli(half, rng);
            for (int i = 1; i < n; ++i) {
              bits[i] = DrawBernoulli(m.stay, rng) ? bits[i - 1] : !bits[i - 1];
            }
          },
      },
      model);
  return BinarySequence(std::move(bits), std::string(kDefaultVocab));
}

ExactProb Likelihood(const SourceModel& model, const BinarySequence& seq) {
  const int n = seq.size();
  return std::visit(
      Overloaded{
          [&](const FairIid&) { return SequenceProbability(n); },
          [&](const Biased& m) {
            const int ones = CountOnes(seq);
            return ExactProb(Power(m.p.value(), ones) *
                             Power(1 - m.p.value(), n - ones));
          },
          [&](const StickyMarkov& m) {
            const int changes = CountRuns(seq) - 1;
            return ExactProb(Rational(1, 2) *
                             Power(m.stay.value(), n - 1 - changes) *
                             Power(1 - m.stay.value(), changes));
          },
      },
      model);
}

Rational PosteriorOdds(const Rational& prior_odds, const SourceModel& alt,
                       const BinarySequence& seq) {
  if (prior_odds <= 0) throw std::domain_error("prior odds must be positive");
  return prior_odds * Likelihood(alt, seq).value() /
         Likelihood(FairIid{}, seq).value();
}

RejectionRateEstimate EstimateRejectionRate(const SourceModel& model, int n,
                                            TestKind test,
                                            const ExactProb& alpha,
                                            Convention convention,
                                            std::uint64_t trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const VerdictTable table(test, n, alpha, convention);
  const std::uint64_t rejections = PartitionedReduce(
      trials, std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t count = 0;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
          const BinarySequence seq =
              SampleSequence(model, n, TrialSeed(seed, trial));
          if (table.rejected(Statistic(test, seq))) ++count;
        }
        return count;
      },
      [](std::uint64_t acc, std::uint64_t part) { return acc + part; });

  const double rate =
      static_cast<double>(rejections) / static_cast<double>(trials);
  const double se = std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
  return RejectionRateEstimate{
      trials, rejections, rate, se,
      ComputeRejectionSet(test, n, alpha, convention).null_size};
}

}  // namespace vocabrand
