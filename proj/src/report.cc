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

#include "vocabrand/report.h"

#include <sstream>

namespace vocabrand {
namespace {

bool IsNumberObject(const Json& j) {
  return j.is_object() && j.contains("fraction") && j.contains("decimal");
}

std::string Scalar(const Json& j) {
  if (IsNumberObject(j)) {
    return j["fraction"].get<std::string>() + " (" +
           j["decimal"].get<std::string>() + ")";
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void PrettyObject(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !IsNumberObject(value)) {
      out << pad << key << ":\n";
      PrettyObject(value, indent + 2, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        if (IsNumberObject(item)) {
          out << pad << "  - " << Scalar(item) << '\n';
        } else {
          out << pad << "  -\n";
          PrettyObject(item, indent + 4, out);
        }
      }
    } else {
      out << pad << key << ": " << Scalar(value) << '\n';
    }
  }
}

}  // namespace

Json RationalJson(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  Json j;
  j["fraction"] = den == 1 ? num.str() : num.str() + "/" + den.str();
  j["numerator"] = num.str();
  j["denominator"] = den.str();
  j["decimal"] = ToDecimal(value);
  return j;
}

Json ProbJson(const ExactProb& p) { return RationalJson(p.value()); }

Json MaskJson(const RelabelMask& mask) {
  Json j;
  j["flips"] = mask.Render();
  j["flip_positions"] = mask.FlipPositions();
  j["index_set"] = mask.IndexSet();
  j["flip_count"] = mask.FlipCount();
  return j;
}

Json VerdictJson(const TestVerdict& verdict) {
  Json j;
  j["test"] = std::string(TestName(verdict.test));
  if (verdict.test == TestKind::kBinomial) {
    j["convention"] = std::string(ConventionName(verdict.convention));
  }
  j["n"] = verdict.n;
  j["statistic"] = verdict.statistic;
  j["tail"] = std::string(TailName(verdict.tail));
  j["p"] = ProbJson(verdict.p);
  j["alpha"] = ProbJson(verdict.alpha);
  j["rejected"] = verdict.rejected;
  j["vocab"] = verdict.vocab;
  return j;
}

Json AuditJson(const AuditResult& audit, bool emit_witness) {
  Json j;
  j["mask"] = MaskJson(audit.mask);
  j["x_set"] = audit.index_set;
  j["original"] = VerdictJson(audit.original);
  j["relabeled"] = VerdictJson(audit.relabeled);
  j["flipped"] = audit.flipped;
  if (emit_witness) {
    j["witness"] = audit.relabeled_sequence.Render(SymbolCase::kLower);
  }
  return j;
}

Json FlipSearchJson(const FlipSearchResult& result, bool emit_witness) {
  Json j;
  j["found"] = true;
  j["method"] = std::string(SearchMethodName(result.method));
  j["minimal"] = result.minimal;
  j["audit"] = AuditJson(result.audit, emit_witness);
  return j;
}

Json RejectionSetJson(const RejectionSet& set) {
  Json j;
  j["test"] = std::string(TestName(set.test));
  if (set.test == TestKind::kBinomial) {
    j["convention"] = std::string(ConventionName(set.convention));
  }
  j["n"] = set.n;
  j["alpha"] = ProbJson(set.alpha);
  j["statistics"] = set.statistics;
  j["sequence_count"] = set.sequence_count.str();
  j["null_size"] = ProbJson(set.null_size);
  if (set.sequences) {
    Json seqs = Json::array();
    for (const auto& s : *set.sequences) seqs.push_back(s.Render());
    j["sequences"] = std::move(seqs);
  }
  return j;
}

Json SpectrumJson(const PValueSpectrum& spectrum) {
  Json j = Json::array();
  for (const auto& [p, count] : spectrum) {
    Json entry;
    entry["p"] = ProbJson(p);
    entry["masks"] = count;
    j.push_back(std::move(entry));
  }
  return j;
}

Json NullInvarianceJson(const NullInvarianceReport& report) {
  Json j;
  j["n"] = report.n;
  j["passed"] = report.passed;
  j["masks_checked"] = report.masks_checked;
  j["sequences_per_mask"] = report.sequences_per_mask;
  if (report.witness_mask) j["witness_mask"] = report.witness_mask->Render();
  if (report.witness_sequence) {
    j["witness_sequence"] = report.witness_sequence->Render();
  }
  return j;
}

Json RejectionRateJson(const RejectionRateEstimate& estimate) {
  Json j;
  j["trials"] = estimate.trials;
  j["rejections"] = estimate.rejections;
  j["rate"] = estimate.rate;
  j["standard_error"] = estimate.standard_error;
  j["exact_null_size"] = ProbJson(estimate.exact_null_size);
  return j;
}

Json DistributionJson(const std::vector<DistributionRow>& rows,
                      std::string_view statistic_column) {
  Json j = Json::array();
  for (const auto& row : rows) {
    Json entry;
    entry[std::string(statistic_column)] = row.statistic;
    entry["count"] = row.count.str();
    entry["pmf"] = ProbJson(row.pmf);
    j.push_back(std::move(entry));
  }
  return j;
}

Json Report::ToJson() const {
  Json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["notes"] = notes;
  return j;
}

std::string Report::Dump() const { return ToJson().dump(2) + "\n"; }

std::string Report::Pretty() const {
  std::ostringstream out;
  out << command << '\n';
  if (!inputs.empty()) {
    out << "inputs:\n";
    PrettyObject(inputs, 2, out);
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << "result " << i + 1 << ":\n";
    if (results[i].is_object()) {
      PrettyObject(results[i], 2, out);
    } else {
      out << "  " << Scalar(results[i]) << '\n';
    }
  }
  for (const auto& note : notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace vocabrand
