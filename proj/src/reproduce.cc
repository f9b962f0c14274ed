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

#include "vocabrand/reproduce.h"

#include <set>
#include <utility>

namespace vocabrand {
namespace {

constexpr int kDisplayPlaces = 3;

struct PinnedVerdict {
  std::string label;
  std::string sequence;
  TestKind test;
  Convention convention;
  int statistic;
  BigInt p_numerator;  // over 512
  std::string display;
  bool rejected;
};

struct PinnedRelabeling {
  std::string label;
  std::string source;
  std::set<int> kept;
  std::string expected;
  std::string vocab;
};

class Reproducer {
 public:
  Reproduction Run();

 private:
  void CheckVerdict(const PinnedVerdict& pin);
  void CheckRelabeling(const PinnedRelabeling& pin);
  void CheckAudit(const std::string& label, const std::string& source,
                  const std::set<int>& kept, TestKind test,
                  Convention convention, bool expect_flipped);
  void Deviation(const std::string& label, const std::string& what) {
    out_.deviations.push_back(label + ": " + what);
  }

  Reproduction out_;
  const ExactProb alpha_ = DefaultAlpha();
};

void Reproducer::CheckVerdict(const PinnedVerdict& pin) {
  const TestVerdict verdict =
      RunTest(pin.test, ParseSequence(pin.sequence), alpha_, pin.convention);
  const ExactProb expected_p(pin.p_numerator, BigInt(512));
  const std::string display = verdict.p.Decimal(kDisplayPlaces);

  bool matches = true;
  if (verdict.statistic != pin.statistic) {
    matches = false;
    Deviation(pin.label, "statistic " + std::to_string(verdict.statistic) +
                             ", expected " + std::to_string(pin.statistic));
  }
  if (verdict.p != expected_p) {
    matches = false;
    Deviation(pin.label, "p " + verdict.p.Fraction() + ", expected " +
                             pin.p_numerator.str() + "/512");
  }
  if (display != pin.display) {
    matches = false;
    Deviation(pin.label, "display " + display + ", expected " + pin.display);
  }
  if (verdict.rejected != pin.rejected) {
    matches = false;
    Deviation(pin.label, "rejected flag differs");
  }

  Json j;
  j["item"] = pin.label;
  j["sequence"] = pin.sequence;
  j["verdict"] = VerdictJson(verdict);
  j["display"] = display;
  j["expected_p"] = pin.p_numerator.str() + "/512";
  j["expected_display"] = pin.display;
  j["matches"] = matches;
  out_.report.results.push_back(std::move(j));
}

void Reproducer::CheckRelabeling(const PinnedRelabeling& pin) {
  const BinarySequence source = ParseSequence(pin.source);
  const RelabelMask mask = MaskFromIndexSet(pin.kept, source.size());
  const std::string rendered =
      ApplyRelabeling(source, mask, pin.vocab).Render(SymbolCase::kLower);
  const bool matches = rendered == pin.expected;
  if (!matches) {
    Deviation(pin.label, "rendered " + rendered + ", expected " + pin.expected);
  }
  Json j;
  j["item"] = pin.label;
  j["source"] = pin.source;
  j["x_set"] = pin.kept;
  j["mask"] = MaskJson(mask);
  j["vocab"] = pin.vocab;
  j["relabeled"] = rendered;
  j["expected"] = pin.expected;
  j["matches"] = matches;
  out_.report.results.push_back(std::move(j));
}

void Reproducer::CheckAudit(const std::string& label, const std::string& source,
                            const std::set<int>& kept, TestKind test,
                            Convention convention, bool expect_flipped) {
  const BinarySequence seq = ParseSequence(source);
  const AuditResult audit =
      VerdictUnderRelabeling(seq, MaskFromIndexSet(kept, seq.size()), test,
                             alpha_, convention);
  if (audit.flipped != expect_flipped) {
    Deviation(label, expect_flipped ? "verdict not reversed"
                                    : "verdict unexpectedly reversed");
  }
  Json j;
  j["item"] = label;
  j["source"] = source;
  j["audit"] = AuditJson(audit, true);
  j["expected_flipped"] = expect_flipped;
  j["matches"] = audit.flipped == expect_flipped;
  out_.report.results.push_back(std::move(j));
}

Reproduction Reproducer::Run() {
  out_.report.command = "reproduce-paper";
  out_.report.inputs["alpha"] = ProbJson(alpha_);
  out_.report.inputs["A"] = "HTTHTHHHT";
  out_.report.inputs["B"] = "HHHHHTTTT";
  out_.report.inputs["D"] = "TTTTTTTTT";
  out_.report.inputs["X"] = std::set<int>{1, 4, 9};
  out_.report.inputs["Y"] = std::set<int>{2, 3, 5, 9};

  const auto runs = TestKind::kRuns;
  const auto binomial = TestKind::kBinomial;
  const auto one_sided = Convention::kPaperOneSided;
  const auto doubled = Convention::kTwoSidedDoubled;
  const std::set<int> x{1, 4, 9};
  const std::set<int> y{2, 3, 5, 9};

  // Runs and binomial verdicts on the original sequences.
  CheckVerdict({"runs A", "HTTHTHHHT", runs, one_sided, 6, 186, "0.363", false});
  CheckVerdict({"runs B", "HHHHHTTTT", runs, one_sided, 2, 18, "0.035", true});
  CheckVerdict({"binomial A", "HTTHTHHHT", binomial, one_sided, 5, 256, "0.5", false});
  CheckVerdict({"binomial B", "HHHHHTTTT", binomial, one_sided, 5, 256, "0.5", false});

  // Teads/hails.
  CheckRelabeling({"A -> a under X", "HTTHTHHHT", x, "hhhhhtttt", "hails/teads"});
  CheckRelabeling({"B -> b under X", "HHHHHTTTT", x, "htththhht", "hails/teads"});
  CheckVerdict({"runs a", "hhhhhtttt", runs, one_sided, 2, 18, "0.035", true});
  CheckVerdict({"runs b", "htththhht", runs, one_sided, 6, 186, "0.363", false});
  CheckAudit("runs reversal A/a", "HTTHTHHHT", x, runs, one_sided, true);
  CheckAudit("runs reversal B/b", "HHHHHTTTT", x, runs, one_sided, true);

  // Schmeads/schmails.
  CheckRelabeling({"A -> c under Y", "HTTHTHHHT", y, "ttttttttt", "schmeads/schmails"});
  CheckRelabeling({"D -> d under Y", "TTTTTTTTT", y, "htththhht", "schmeads/schmails"});
  CheckVerdict({"binomial c one-sided", "ttttttttt", binomial, one_sided, 0, 1, "0.002", true});
  CheckVerdict({"binomial c doubled", "ttttttttt", binomial, doubled, 0, 2, "0.004", true});
  CheckVerdict({"binomial D one-sided", "TTTTTTTTT", binomial, one_sided, 0, 1, "0.002", true});
  CheckVerdict({"binomial D doubled", "TTTTTTTTT", binomial, doubled, 0, 2, "0.004", true});
  CheckVerdict({"binomial d one-sided", "htththhht", binomial, one_sided, 5, 256, "0.5", false});
  CheckVerdict({"binomial d doubled", "htththhht", binomial, doubled, 5, 512, "1", false});
  CheckAudit("binomial reversal A/c one-sided", "HTTHTHHHT", y, binomial, one_sided, true);
  CheckAudit("binomial reversal A/c doubled", "HTTHTHHHT", y, binomial, doubled, true);
  CheckAudit("binomial reversal D/d one-sided", "TTTTTTTTT", y, binomial, one_sided, true);
  CheckAudit("binomial reversal D/d doubled", "TTTTTTTTT", y, binomial, doubled, true);

  out_.report.notes.push_back(
      "0.004 for (c) is 2/512 = 0.00390625 under the two-sided-doubled "
      "convention; the one-sided rule (at least k when k >= n/2, else at most "
      "k) gives 1/512 = 0.001953125, which displays as 0.002. Both verdicts "
      "reject at alpha = 1/20.");
  out_.report.notes.push_back(
      "alpha = 1/20 is a chosen level; any alpha in [18/512, 186/512) gives "
      "the same runs verdicts.");
  out_.report.notes.push_back(
      "polarity: h corresponds to H where the reading is kept, so an index "
      "set X is the mask flipping every position outside X.");
  for (const auto& deviation : out_.deviations) {
    out_.report.notes.push_back("DEVIATION " + deviation);
  }
  return std::move(out_);
}

}  // namespace

Reproduction ReproduceWorkedExample() { return Reproducer().Run(); }

}  // namespace vocabrand
