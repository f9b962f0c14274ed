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

#include "vocabrand/cli.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "vocabrand/errors.h"
#include "vocabrand/exact_dist.h"
#include "vocabrand/montecarlo.h"
#include "vocabrand/relabel_audit.h"
#include "vocabrand/report.h"
#include "vocabrand/reproduce.h"
#include "vocabrand/sequence.h"
#include "vocabrand/verdicts.h"

namespace vocabrand {
namespace {

struct Options {
  std::string seq;
  std::string vocab{kDefaultVocab};
  std::string alpha = "1/20";
  std::string convention = "paper-one-sided";
  std::string x_set;
  std::string mask;
  std::string test = "runs";
  std::string model;
  std::string prior_odds = "1";
  std::string format = "json";
  bool minimize = false;
  bool pretty = false;
  bool emit_witness = false;
  int n = 0;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

// Exit code carried out of a handler alongside its report.
struct Outcome {
  Report report;
  int exit_code = kExitOk;
  std::optional<std::string> raw;  // printed verbatim instead of the report
};

class Cli {
 public:
  Cli();
  int Run(const std::vector<std::string>& args, std::ostream& out,
          std::ostream& err);

 private:
  using Handler = std::function<Outcome()>;

  CLI::App* AddCommand(const std::string& name, const std::string& help,
                       Handler handler);
  void AddSeq(CLI::App* cmd);
  void AddAlpha(CLI::App* cmd);
  void AddConvention(CLI::App* cmd);
  void AddTest(CLI::App* cmd);
  void AddMask(CLI::App* cmd);

  BinarySequence Sequence() const { return ParseSequence(opt_.seq, opt_.vocab); }
  ExactProb Alpha() const { return ExactProb::Parse(opt_.alpha); }
  Convention Conv() const { return ParseConvention(opt_.convention); }
  TestKind Test() const { return ParseTestKind(opt_.test); }
  RelabelMask Mask(int n) const;
  Json SeqInputs() const;

  Outcome RunsTestCommand();
  Outcome BinomialTestCommand();
  Outcome RelabelCommand();
  Outcome AuditCommand();
  Outcome FlipSearchCommand();
  Outcome SpectrumCommand();
  Outcome DistributionCommand();
  Outcome RejectionSetCommand();
  Outcome SimulateCommand();
  Outcome PosteriorCommand();
  Outcome ReproduceCommand();

  CLI::App app_{"Exact randomness tests and vocabulary relabelings", "vocabrand"};
  Options opt_;
  std::vector<std::pair<CLI::App*, Handler>> commands_;
};

Cli::Cli() {
  app_.require_subcommand(1);
  app_.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* c = AddCommand("runs-test", "Runs test on one sequence",
                       [this] { return RunsTestCommand(); });
  AddSeq(c);
  AddAlpha(c);

  c = AddCommand("binomial-test", "Binomial test on one sequence",
                 [this] { return BinomialTestCommand(); });
  AddSeq(c);
  AddAlpha(c);
  AddConvention(c);

  c = AddCommand("relabel", "Apply a relabeling to a sequence",
                 [this] { return RelabelCommand(); });
  AddSeq(c);
  AddMask(c);

  c = AddCommand("audit", "Compare verdicts before and after a relabeling",
                 [this] { return AuditCommand(); });
  AddSeq(c);
  AddMask(c);
  AddTest(c);
  AddAlpha(c);
  AddConvention(c);
  c->add_flag("--emit-witness", opt_.emit_witness,
              "Include the relabeled sequence");

  c = AddCommand("flip-search", "Find a relabeling that reverses the verdict",
                 [this] { return FlipSearchCommand(); });
  AddSeq(c);
  AddTest(c);
  AddAlpha(c);
  AddConvention(c);
  c->add_flag("--minimize", opt_.minimize, "Fewest flipped positions");
  c->add_flag("--emit-witness", opt_.emit_witness,
              "Include the relabeled sequence");

  c = AddCommand("spectrum", "p-values of a sequence under every relabeling",
                 [this] { return SpectrumCommand(); });
  AddSeq(c);
  AddTest(c);
  AddConvention(c);

  c = AddCommand("distribution", "Exact null distribution of a statistic",
                 [this] { return DistributionCommand(); });
  c->add_option("--n", opt_.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  AddTest(c);
  c->add_option("--format", opt_.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  c = AddCommand("rejection-set", "Statistic values (and sequences) rejected",
                 [this] { return RejectionSetCommand(); });
  c->add_option("--n", opt_.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  AddTest(c);
  AddAlpha(c);
  AddConvention(c);
  c->add_flag("--emit-witness", opt_.emit_witness,
              "List every rejected sequence");

  c = AddCommand("simulate", "Seeded simulation of a source",
                 [this] { return SimulateCommand(); });
  c->add_option("--model", opt_.model, "fair | biased:p=NUM/DEN | markov:stay=NUM/DEN")
      ->required();
  c->add_option("--n", opt_.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  c->add_option("--trials", opt_.trials, "Number of simulated sequences")
      ->check(CLI::PositiveNumber);
  c->add_option("--seed", opt_.seed, "64-bit seed");
  AddTest(c);
  AddAlpha(c);
  AddConvention(c);

  c = AddCommand("posterior", "Posterior odds of an alternative source vs fair",
                 [this] { return PosteriorCommand(); });
  AddSeq(c);
  c->add_option("--model", opt_.model, "Alternative source model")->required();
  c->add_option("--prior-odds", opt_.prior_odds, "Prior odds alt:fair");

  AddCommand("reproduce-paper", "Reproduce and check the worked example",
             [this] { return ReproduceCommand(); });
}

CLI::App* Cli::AddCommand(const std::string& name, const std::string& help,
                          Handler handler) {
  CLI::App* cmd = app_.add_subcommand(name, help);
  cmd->add_flag("--pretty", opt_.pretty, "Human-readable output");
  commands_.emplace_back(cmd, std::move(handler));
  return cmd;
}

void Cli::AddSeq(CLI::App* cmd) {
  cmd->add_option("--seq", opt_.seq, "Sequence over H/h/1 and T/t/0")->required();
  cmd->add_option("--vocab", opt_.vocab, "Vocabulary label");
}

void Cli::AddAlpha(CLI::App* cmd) {
  cmd->add_option("--alpha", opt_.alpha, "Significance level, e.g. 1/20 or 0.05");
}

void Cli::AddConvention(CLI::App* cmd) {
  cmd->add_option("--convention", opt_.convention, "Binomial p-value convention")
      ->check(CLI::IsMember({"paper-one-sided", "two-sided-doubled"}));
}

void Cli::AddTest(CLI::App* cmd) {
  cmd->add_option("--test", opt_.test, "runs or binomial")
      ->check(CLI::IsMember({"runs", "binomial"}));
}

void Cli::AddMask(CLI::App* cmd) {
  auto* x = cmd->add_option("--x-set", opt_.x_set,
                            "1-based positions whose reading is kept");
  auto* m = cmd->add_option("--mask", opt_.mask, "Flip string over {0,1}");
  x->excludes(m);
  auto* group = cmd->add_option_group("relabeling");
  group->add_option(x);
  group->add_option(m);
  group->require_option(1);
}

RelabelMask Cli::Mask(int n) const {
  if (!opt_.mask.empty()) return ParseMaskString(opt_.mask, n);
  return MaskFromIndexSet(ParseIndexSet(opt_.x_set), n);
}

Json Cli::SeqInputs() const {
  Json j;
  j["seq"] = opt_.seq;
  j["vocab"] = opt_.vocab;
  return j;
}

Outcome Cli::RunsTestCommand() {
  Outcome o;
  o.report.inputs = SeqInputs();
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.results.push_back(VerdictJson(RunsTest(Sequence(), Alpha())));
  return o;
}

Outcome Cli::BinomialTestCommand() {
  Outcome o;
  o.report.inputs = SeqInputs();
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.inputs["convention"] = opt_.convention;
  const BinarySequence seq = Sequence();
  Json verdict = VerdictJson(BinomialTest(seq, Alpha(), Conv()));
  if (Conv() == Convention::kTwoSidedDoubled) {
    verdict["one_sided_p"] = ProbJson(BinomialPValue(seq.size(), CountOnes(seq)));
  }
  o.report.results.push_back(std::move(verdict));
  if (Conv() == Convention::kTwoSidedDoubled) {
    o.report.notes.push_back(
        "two-sided-doubled convention: min(1, 2 x one-sided tail); one-sided "
        "p = " + BinomialPValue(seq.size(), CountOnes(seq)).Fraction());
  }
  return o;
}

Outcome Cli::RelabelCommand() {
  Outcome o;
  const BinarySequence seq = Sequence();
  const RelabelMask mask = Mask(seq.size());
  const BinarySequence out = ApplyRelabeling(seq, mask);
  o.report.inputs = SeqInputs();
  o.report.inputs[opt_.mask.empty() ? "x_set" : "mask"] =
      opt_.mask.empty() ? opt_.x_set : opt_.mask;
  Json j;
  j["mask"] = MaskJson(mask);
  j["relabeled"] = out.Render(SymbolCase::kLower);
  j["vocab"] = out.vocab();
  o.report.results.push_back(std::move(j));
  return o;
}

Outcome Cli::AuditCommand() {
  Outcome o;
  const BinarySequence seq = Sequence();
  o.report.inputs = SeqInputs();
  o.report.inputs["test"] = opt_.test;
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.inputs["convention"] = opt_.convention;
  const AuditResult audit =
      VerdictUnderRelabeling(seq, Mask(seq.size()), Test(), Alpha(), Conv());
  o.report.results.push_back(AuditJson(audit, opt_.emit_witness));
  return o;
}

Outcome Cli::FlipSearchCommand() {
  Outcome o;
  const BinarySequence seq = Sequence();
  o.report.inputs = SeqInputs();
  o.report.inputs["test"] = opt_.test;
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.inputs["convention"] = opt_.convention;
  o.report.inputs["minimize"] = opt_.minimize;
  const auto found =
      FindFlippingMask(seq, Test(), Alpha(), Conv(), opt_.minimize);
  if (found) {
    o.report.results.push_back(FlipSearchJson(*found, opt_.emit_witness));
    if (opt_.minimize && !found->minimal) {
      o.report.notes.push_back(
          "length above the exhaustive cap: greedy result, not guaranteed "
          "minimal");
    }
  } else {
    Json j;
    j["found"] = false;
    o.report.results.push_back(std::move(j));
  }
  return o;
}

Outcome Cli::SpectrumCommand() {
  Outcome o;
  o.report.inputs = SeqInputs();
  o.report.inputs["test"] = opt_.test;
  o.report.inputs["convention"] = opt_.convention;
  for (auto& entry : SpectrumJson(ComputePValueSpectrum(Sequence(), Test(), Conv()))) {
    o.report.results.push_back(std::move(entry));
  }
  return o;
}

Outcome Cli::DistributionCommand() {
  Outcome o;
  const bool runs = Test() == TestKind::kRuns;
  const auto rows = runs ? RunsTable(opt_.n) : BinomialTable(opt_.n);
  const std::string column = runs ? "r" : "k";
  if (opt_.format == "csv") {
    o.raw = TableToCsv(rows, column);
    return o;
  }
  o.report.inputs["n"] = opt_.n;
  o.report.inputs["test"] = opt_.test;
  for (auto& entry : DistributionJson(rows, column)) {
    o.report.results.push_back(std::move(entry));
  }
  return o;
}

Outcome Cli::RejectionSetCommand() {
  Outcome o;
  o.report.inputs["n"] = opt_.n;
  o.report.inputs["test"] = opt_.test;
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.inputs["convention"] = opt_.convention;
  o.report.results.push_back(RejectionSetJson(ComputeRejectionSet(
      Test(), opt_.n, Alpha(), Conv(), opt_.emit_witness)));
  return o;
}

Outcome Cli::SimulateCommand() {
  Outcome o;
  const SourceModel model = ParseSourceModel(opt_.model);
  o.report.inputs["model"] = SourceModelName(model);
  o.report.inputs["n"] = opt_.n;
  o.report.inputs["trials"] = opt_.trials;
  o.report.inputs["seed"] = opt_.seed;
  o.report.inputs["test"] = opt_.test;
  o.report.inputs["alpha"] = ProbJson(Alpha());
  o.report.inputs["convention"] = opt_.convention;

  Json sample;
  sample["first_sample"] =
      SampleSequence(model, opt_.n, TrialSeed(opt_.seed, 0)).Render();
  o.report.results.push_back(std::move(sample));
  o.report.results.push_back(RejectionRateJson(EstimateRejectionRate(
      model, opt_.n, Test(), Alpha(), Conv(), opt_.trials, opt_.seed)));
  return o;
}

Outcome Cli::PosteriorCommand() {
  Outcome o;
  const BinarySequence seq = Sequence();
  const SourceModel model = ParseSourceModel(opt_.model);
  const Rational prior = ParseRational(opt_.prior_odds);
  if (prior <= 0) throw ParseError("prior odds must be positive");
  o.report.inputs = SeqInputs();
  o.report.inputs["model"] = SourceModelName(model);
  o.report.inputs["prior_odds"] = RationalJson(prior);

  const ExactProb alt = Likelihood(model, seq);
  const ExactProb fair = Likelihood(FairIid{}, seq);
  Json j;
  j["likelihood_alt"] = ProbJson(alt);
  j["likelihood_fair"] = ProbJson(fair);
  j["likelihood_ratio"] = RationalJson(alt.value() / fair.value());
  j["posterior_odds"] = RationalJson(PosteriorOdds(prior, model, seq));
  o.report.results.push_back(std::move(j));
  o.report.notes.push_back(
      "the alternative model is a user-chosen stand-in, not a model of any "
      "particular source");
  return o;
}

Outcome Cli::ReproduceCommand() {
  Reproduction r = ReproduceWorkedExample();
  Outcome o{std::move(r.report), r.ok() ? kExitOk : kExitComputationError, {}};
  return o;
}

int Cli::Run(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  std::vector<const char*> argv{"vocabrand"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app_.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app_.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  for (auto& [cmd, handler] : commands_) {
    if (!cmd->parsed()) continue;
    try {
      Outcome outcome = handler();
      outcome.report.command = cmd->get_name();
      if (outcome.raw) {
        out << *outcome.raw;
      } else {
        out << (opt_.pretty ? outcome.report.Pretty() : outcome.report.Dump());
      }
      if (outcome.exit_code != kExitOk) {
        err << "error: " << cmd->get_name() << " failed\n";
      }
      return outcome.exit_code;
    } catch (const CapExceededError& e) {
      err << "error: " << e.what() << '\n';
      return kExitComputationError;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsageError;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitComputationError;
    }
  }
  err << "error: no subcommand\n";
  return kExitUsageError;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Cli cli;
  return cli.Run(args, out, err);
}

}  // namespace vocabrand
