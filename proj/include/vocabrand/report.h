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

// JSON report schema (version "1").
//
//   {"schema_version": "1", "command": ..., "inputs": {...},
//    "results": [...], "notes": [...]}
//
// Every probability is an object carrying "fraction", "numerator",
// "denominator" (decimal strings, lowest terms) and "decimal". Key order is
// fixed and nothing time-dependent is emitted, so identical inputs give
// byte-identical output.

#ifndef VOCABRAND_REPORT_H_
#define VOCABRAND_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vocabrand/exact_dist.h"
#include "vocabrand/exact_prob.h"
#include "vocabrand/montecarlo.h"
#include "vocabrand/relabel_audit.h"
#include "vocabrand/sequence.h"
#include "vocabrand/verdicts.h"

namespace vocabrand {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

Json RationalJson(const Rational& value);
Json ProbJson(const ExactProb& p);
Json MaskJson(const RelabelMask& mask);
Json VerdictJson(const TestVerdict& verdict);
// The relabeled sequence is rendered in lowercase h/t; it is included only
// with `emit_witness`.
Json AuditJson(const AuditResult& audit, bool emit_witness);
Json FlipSearchJson(const FlipSearchResult& result, bool emit_witness);
Json RejectionSetJson(const RejectionSet& set);
Json SpectrumJson(const PValueSpectrum& spectrum);
Json NullInvarianceJson(const NullInvarianceReport& report);
Json RejectionRateJson(const RejectionRateEstimate& estimate);
Json DistributionJson(const std::vector<DistributionRow>& rows,
                      std::string_view statistic_column);

struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<Json> results;
  std::vector<std::string> notes;

  Json ToJson() const;
  // Two-space indented JSON with a trailing newline.
  std::string Dump() const;
  // Human-readable key/value listing.
  std::string Pretty() const;
};

}  // namespace vocabrand

#endif  // VOCABRAND_REPORT_H_
