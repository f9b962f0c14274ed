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

// Brute-force reference computations for tests. Nothing here calls into the
// library: sequences are plain int vectors, tails are counted by walking all
// 2^n sequences, and probabilities are (count, 2^n) integer pairs.

#ifndef VOCABRAND_TESTS_ORACLES_H_
#define VOCABRAND_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::vector<int>;

// Position 1 first; the sequence for index `idx` reads its bits from the most
// significant end.
inline Bits FromIndex(std::uint64_t idx, int n) {
  Bits out(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(idx % 2);
    idx /= 2;
  }
  return out;
}

inline Bits FromString(const std::string& s) {
  Bits out;
  for (char c : s) out.push_back(c == 'H' || c == 'h' || c == '1' ? 1 : 0);
  return out;
}

inline std::string Render(const Bits& b) {
  std::string s;
  for (int x : b) s.push_back(x ? 'H' : 'T');
  return s;
}

// Walks maximal segments explicitly.
inline int Runs(const Bits& b) {
  int runs = 0;
  std::size_t i = 0;
  while (i < b.size()) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    ++runs;
    i = j;
  }
  return runs;
}

inline int Ones(const Bits& b) {
  int k = 0;
  for (int x : b) k += x;
  return k;
}

inline std::uint64_t Total(int n) { return std::uint64_t{1} << n; }

// Number of length-n sequences with exactly r runs, indexed by r (0 unused).
inline std::vector<std::uint64_t> RunsCounts(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t idx = 0; idx < Total(n); ++idx) ++counts[Runs(FromIndex(idx, n))];
  return counts;
}

inline std::vector<std::uint64_t> OnesCounts(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t idx = 0; idx < Total(n); ++idx) ++counts[Ones(FromIndex(idx, n))];
  return counts;
}

// Numerator over 2^n of a p-value.
struct Tally {
  std::uint64_t count;
  int n;
};

inline std::uint64_t SumRange(const std::vector<std::uint64_t>& c, int lo, int hi) {
  std::uint64_t s = 0;
  for (int i = lo; i <= hi; ++i) s += c[static_cast<std::size_t>(i)];
  return s;
}

// Runs test p-value: upper tail if 2r > n+1, lower if 2r < n+1, otherwise the
// smaller tail.
inline Tally RunsP(const std::vector<std::uint64_t>& counts, int n, int r) {
  const std::uint64_t lower = SumRange(counts, 1, r);
  const std::uint64_t upper = SumRange(counts, r, n);
  if (2 * r > n + 1) return {upper, n};
  if (2 * r < n + 1) return {lower, n};
  return {std::min(lower, upper), n};
}

// One-sided: upper tail if 2k >= n, else lower. Doubled: min(2^n, 2x).
inline Tally BinomialP(const std::vector<std::uint64_t>& counts, int n, int k,
                       bool doubled) {
  std::uint64_t one = 2 * k >= n ? SumRange(counts, k, n) : SumRange(counts, 0, k);
  if (!doubled) return {one, n};
  return {std::min(Total(n), 2 * one), n};
}

// p <= a/b with p = count/2^n.
inline bool AtMost(const Tally& p, std::uint64_t a, std::uint64_t b) {
  return p.count * b <= a * Total(p.n);
}

struct Setting {
  bool runs;
  bool doubled;
  std::uint64_t alpha_num;
  std::uint64_t alpha_den;
};

// Rejection decisions for one setting and length, with the null counts
// tabulated once.
class Verdicts {
 public:
  Verdicts(const Setting& s, int n)
      : s_(s), n_(n), runs_(RunsCounts(n)), ones_(OnesCounts(n)) {}

  bool Rejected(const Bits& b) const {
    if (s_.runs) return AtMost(RunsP(runs_, n_, Runs(b)), s_.alpha_num, s_.alpha_den);
    return AtMost(BinomialP(ones_, n_, Ones(b), s_.doubled), s_.alpha_num,
                  s_.alpha_den);
  }

 private:
  Setting s_;
  int n_;
  std::vector<std::uint64_t> runs_;
  std::vector<std::uint64_t> ones_;
};

// Minimal-weight flip string (as "0101...") whose relabeling changes the
// verdict; ties go to the lexicographically smallest string.
inline std::optional<std::string> MinimalFlip(const Setting& s, const Bits& seq) {
  const int n = static_cast<int>(seq.size());
  const Verdicts verdicts(s, n);
  auto rejected = [&](const Bits& b) { return verdicts.Rejected(b); };
  const bool original = rejected(seq);
  std::optional<std::string> best;
  int best_weight = n + 1;
  for (std::uint64_t idx = 0; idx < Total(n); ++idx) {
    const Bits flips = FromIndex(idx, n);
    Bits relabeled = seq;
    for (int i = 0; i < n; ++i) relabeled[i] ^= flips[i];
    if (rejected(relabeled) == original) continue;
    std::string str;
    for (int f : flips) str.push_back(f ? '1' : '0');
    const int w = Ones(flips);
    if (w < best_weight || (w == best_weight && str < *best)) {
      best = str;
      best_weight = w;
    }
  }
  return best;
}

}  // namespace oracle

#endif  // VOCABRAND_TESTS_ORACLES_H_
