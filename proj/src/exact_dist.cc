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

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "vocabrand/errors.h"
#include "vocabrand/parallel.h"
#include "vocabrand/sequence.h"

namespace vocabrand {
namespace {

void CheckLength(int n) {
  if (n < 1) throw std::out_of_range("length must be >= 1");
}

void CheckRunCount(int n, int r) {
  CheckLength(n);
  if (r < 1 || r > n) {
    throw std::out_of_range("run count " + std::to_string(r) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

void CheckOnesCount(int n, int k) {
  CheckLength(n);
  if (k < 0 || k > n) {
    throw std::out_of_range("ones count " + std::to_string(k) +
                            " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

std::string_view TailName(Tail tail) {
  switch (tail) {
    case Tail::kLower:
      return "lower";
    case Tail::kUpper:
      return "upper";
    case Tail::kDoubled:
      return "doubled";
  }
  return "?";
}

std::string_view ConventionName(Convention convention) {
  return convention == Convention::kPaperOneSided ? "paper-one-sided"
                                                  : "two-sided-doubled";
}

Convention ParseConvention(std::string_view text) {
  if (text == "paper-one-sided") return Convention::kPaperOneSided;
  if (text == "two-sided-doubled") return Convention::kTwoSidedDoubled;
  throw ParseError("unknown convention '" + std::string(text) + "'");
}

BigInt Binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

RunsDistribution::RunsDistribution(int n, std::vector<BigInt> counts)
    : n_(n), counts_(std::move(counts)) {
  CheckLength(n_);
  if (static_cast<int>(counts_.size()) != n_) {
    throw std::invalid_argument("runs distribution needs n counts");
  }
}

const BigInt& RunsDistribution::count(int r) const {
  CheckRunCount(n_, r);
  return counts_[static_cast<std::size_t>(r - 1)];
}

ExactProb RunsDistribution::Pmf(int r) const {
  return ExactProb(count(r), Pow2(n_));
}

ExactProb RunsDistribution::Cdf(int r) const {
  CheckRunCount(n_, r);
  BigInt total = 0;
  for (int i = 1; i <= r; ++i) total += count(i);
  return ExactProb(total, Pow2(n_));
}

ExactProb RunsDistribution::Survival(int r) const {
  CheckRunCount(n_, r);
  BigInt total = 0;
  for (int i = r; i <= n_; ++i) total += count(i);
  return ExactProb(total, Pow2(n_));
}

BigInt RunsCountExact(int n, int r) {
  CheckRunCount(n, r);
  // A length-n sequence with r runs: first symbol (2 ways), then r-1 of the
  // n-1 adjacent boundaries are changes.
  return 2 * Binomial(n - 1, r - 1);
}

RunsDistribution RunsDistributionExact(int n) {
  CheckLength(n);
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) counts.push_back(RunsCountExact(n, r));
  return RunsDistribution(n, std::move(counts));
}

RunsDistribution EnumerateRunsDistribution(int n, int cap) {
  CheckLength(n);
  if (n > cap) throw CapExceededError("runs enumeration", n, cap);
  using Tally = std::vector<std::uint64_t>;
  const std::uint64_t total = std::uint64_t{1} << n;
  Tally tally = PartitionedReduce(
      total, Tally(static_cast<std::size_t>(n), 0),
      [n](std::uint64_t begin, std::uint64_t end) {
        Tally part(static_cast<std::size_t>(n), 0);
        for (std::uint64_t word = begin; word < end; ++word) {
          ++part[static_cast<std::size_t>(CountRunsPacked(word, n) - 1)];
        }
        return part;
      },
      [](Tally acc, const Tally& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
        return acc;
      });
  std::vector<BigInt> counts(tally.begin(), tally.end());
  return RunsDistribution(n, std::move(counts));
}

ExactProb RunsPValue(int n, int r, Tail tail) {
  CheckRunCount(n, r);
  BigInt total = 0;
  switch (tail) {
    case Tail::kLower:
      for (int i = 1; i <= r; ++i) total += RunsCountExact(n, i);
      break;
    case Tail::kUpper:
      for (int i = r; i <= n; ++i) total += RunsCountExact(n, i);
      break;
    case Tail::kDoubled:
      throw std::invalid_argument("runs p-value takes a lower or upper tail");
  }
  return ExactProb(total, Pow2(n));
}

ExactProb BinomialPmf(int n, int k) {
  CheckOnesCount(n, k);
  return ExactProb(Binomial(n, k), Pow2(n));
}

ExactProb BinomialLowerTail(int n, int k) {
  CheckOnesCount(n, k);
  BigInt total = 0;
  for (int i = 0; i <= k; ++i) total += Binomial(n, i);
  return ExactProb(total, Pow2(n));
}

ExactProb BinomialUpperTail(int n, int k) {
  CheckOnesCount(n, k);
  BigInt total = 0;
  for (int i = k; i <= n; ++i) total += Binomial(n, i);
  return ExactProb(total, Pow2(n));
}

Tail BinomialOneSidedTail(int n, int k) {
  CheckOnesCount(n, k);
  // k >= n/2 without leaving the integers.
  return 2 * k >= n ? Tail::kUpper : Tail::kLower;
}

ExactProb BinomialPValue(int n, int k, Convention convention) {
  const ExactProb one_sided = BinomialOneSidedTail(n, k) == Tail::kUpper
                                  ? BinomialUpperTail(n, k)
                                  : BinomialLowerTail(n, k);
  if (convention == Convention::kPaperOneSided) return one_sided;
  Rational doubled = 2 * one_sided.value();
  return ExactProb(doubled > 1 ? Rational(1) : doubled);
}

ExactProb SequenceProbability(int n) {
  CheckLength(n);
  return ExactProb(BigInt(1), Pow2(n));
}

std::vector<DistributionRow> RunsTable(int n) {
  const RunsDistribution dist = RunsDistributionExact(n);
  std::vector<DistributionRow> rows;
  for (int r = 1; r <= n; ++r) rows.push_back({r, dist.count(r), dist.Pmf(r)});
  return rows;
}

std::vector<DistributionRow> BinomialTable(int n) {
  CheckLength(n);
  std::vector<DistributionRow> rows;
  for (int k = 0; k <= n; ++k) {
    rows.push_back({k, Binomial(n, k), BinomialPmf(n, k)});
  }
  return rows;
}

std::string TableToCsv(const std::vector<DistributionRow>& rows,
                       std::string_view statistic_column) {
  std::ostringstream out;
  out << statistic_column
      << ",count,pmf-numerator,pmf-denominator,pmf-decimal\n";
  for (const auto& row : rows) {
    out << row.statistic << ',' << row.count << ',' << row.pmf.numerator()
        << ',' << row.pmf.denominator() << ',' << row.pmf.Decimal() << '\n';
  }
  return out.str();
}

}  // namespace vocabrand
