// Copyright 2026 The Authors.
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

#include "petition/cli.h"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "petition/coverage.h"
#include "petition/debate_graph.h"
#include "petition/debate_io.h"
#include "petition/refutes.h"
#include "petition/synthetic.h"

namespace petition {
namespace {

std::string Fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

struct ScoringFlags {
  ScoringParams params;
  int answer_depth = 1;

  void Register(CLI::App& command, bool with_level) {
    if (with_level) {
      command.add_option("--level", params.level, "Reach depth for ranking")
          ->capture_default_str();
    }
    command.add_option("--gamma", params.gamma, "Per-level discount")
        ->capture_default_str();
    command.add_option("--alpha", params.alpha, "Weight of forward edges")
        ->capture_default_str();
    command.add_option("--beta", params.beta, "Weight of backward edges")
        ->capture_default_str();
    command.add_option("--answer-depth", answer_depth,
                       "Refutes depth counted as answering")
        ->capture_default_str();
  }
};

DebateGraph WithMode(const DebateGraph& graph, std::optional<Mode> mode) {
  if (!mode || *mode == graph.mode()) return graph;
  DebateInput input = graph.ToInput();
  input.mode = *mode;
  return DebateGraph::Build(std::move(input));
}

int RunValidate(const std::string& input, std::ostream& out,
                std::ostream& err) {
  const DebateGraph graph = LoadDebate(input);
  for (const Violation& v : Validate(graph)) err << v.ToString() << "\n";
  out << "OK, " << graph.size() << " justifications, "
      << graph.refutes().size() << " refutes edges";
  if (!graph.subsumes().empty()) {
    out << ", " << graph.subsumes().size() << " subsumes edges";
  }
  out << "\n";
  return kExitOk;
}

void Emit(const std::string& text, const std::string& output,
          std::ostream& out) {
  if (output.empty()) {
    out << text;
  } else {
    WriteFileAtomic(output, text);
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Recommend justifications in petition debates"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string truth_path;
  std::size_t k = 1;
  std::string side = "both";
  std::string mode_text;
  ScoringFlags scoring;
  std::size_t limit = kDefaultExactLimit;
  GenerativeConfig generative;
  std::vector<int> levels = {1, 2, 3, 4};
  std::size_t seeds = 1;

  CLI::App* validate = app.add_subcommand("validate", "Check a debate file");
  validate->add_option("--input", input, "Debate file")->required();

  CLI::App* recommend =
      app.add_subcommand("recommend", "Rank and select justifications");
  recommend->add_option("--input", input, "Debate file")->required();
  recommend->add_option("--k", k, "Justifications per side")
      ->required()
      ->check(CLI::PositiveNumber);
  recommend->add_option("--side", side, "support, oppose or both")
      ->check(CLI::IsMember({"support", "oppose", "both"}));
  recommend->add_option("--mode", mode_text, "Override the debate mode")
      ->check(CLI::IsMember({"sjp", "wsjp", "csjp"}));
  scoring.Register(*recommend, true);
  recommend->add_option("--output", output, "Report file (default stdout)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Compare greedy against the exact optimum");
  oracle->add_option("--input", input, "Debate file")->required();
  oracle->add_option("--k", k, "Justifications per side")
      ->required()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--limit", limit, "Largest side solved exactly")
      ->capture_default_str();
  oracle->add_option("--side", side, "support, oppose or both")
      ->check(CLI::IsMember({"support", "oppose", "both"}));
  scoring.Register(*oracle, true);

  CLI::App* generate =
      app.add_subcommand("generate", "Sample a synthetic debate");
  generate->add_option("--arguments", generative.num_arguments,
                       "Argument pool size per side")
      ->required();
  generate->add_option("--per-side", generative.per_side,
                       "Justifications per side")
      ->required();
  generate->add_option("--votes", generative.total_votes, "Total signatures")
      ->required();
  generate->add_option("--seed", generative.seed, "Random seed")->required();
  generate->add_option("--subsume-fraction", generative.subsume_fraction,
                       "Probability of a subsumes claim")
      ->capture_default_str();
  generate->add_option("--output", output, "Debate file")->required();
  generate->add_option("--truth", truth_path, "Ground-truth file")->required();

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score recommendations against ground truth");
  evaluate->add_option("--truth", truth_path, "Ground-truth file")->required();
  evaluate->add_option("--input", input, "Debate file")->required();
  evaluate->add_option("--k", k, "Justifications per side")
      ->required()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--levels", levels, "Comma separated levels")
      ->delimiter(',')
      ->required();
  evaluate->add_option("--seeds", seeds, "Debates (or baseline draws)")
      ->required()
      ->check(CLI::PositiveNumber);
  scoring.Register(*evaluate, false);
  evaluate->add_option("--output", output, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::optional<Mode> mode =
        mode_text.empty() ? std::nullopt : ParseMode(mode_text);
    scoring.params.Check();

    if (validate->parsed()) return RunValidate(input, out, err);

    if (recommend->parsed()) {
      const DebateGraph graph = WithMode(LoadDebate(input), mode);
      Report report;
      report.k = k;
      report.side = side == "support"  ? SideFilter::kSupport
                    : side == "oppose" ? SideFilter::kOppose
                                       : SideFilter::kBoth;
      report.params = scoring.params;
      report.answer = AnswerConfig{graph.mode(), scoring.answer_depth};
      report.recommendation =
          Recommend(graph, k, report.params, report.answer);
      Emit(CanonicalJson(ReportToJson(graph, report)), output, out);
      return kExitOk;
    }

    if (oracle->parsed()) {
      const DebateGraph graph = LoadDebate(input);
      const AnswerConfig answer{graph.mode(), scoring.answer_depth};
      for (Stance stance : {Stance::kSupport, Stance::kOppose}) {
        if (side != "both" && side != ToString(stance)) continue;
        const CoverageResult exact =
            ExactSelect(graph, stance, k, answer, scoring.params, limit);
        const CoverageResult greedy =
            GreedySelect(graph, stance, k, answer, scoring.params);
        const double ratio =
            exact.answered_signatories == 0
                ? 1.0
                : static_cast<double>(greedy.answered_signatories) /
                      static_cast<double>(exact.answered_signatories);
        out << "side=" << ToString(stance)
            << " exact=" << exact.answered_signatories
            << " greedy=" << greedy.answered_signatories
            << " ratio=" << Fixed(ratio) << "\n";
      }
      return kExitOk;
    }

    if (generate->parsed()) {
      const SyntheticDebate debate = SampleDebate(generative);
      SaveDebate(debate.graph, output);
      SaveTruth(TruthFile{debate.truth, debate.config}, truth_path);
      out << "generated " << debate.graph.size() << " justifications, "
          << debate.graph.refutes().size() << " refutes edges, "
          << debate.graph.TotalSignatures() << " signatures\n";
      return kExitOk;
    }

    if (evaluate->parsed()) {
      const DebateGraph graph = LoadDebate(input);
      const TruthFile truth = LoadTruth(truth_path);
      const std::uint64_t baseline_seed =
          truth.config ? truth.config->seed : 0;
      const SweepReport on_input = EvaluateDebate(
          graph, truth.truth, levels, k, scoring.params, seeds, baseline_seed);

      nlohmann::json document = {{"input", SweepToJson(on_input)}};
      std::optional<SweepReport> sweep;
      if (truth.config) {
        sweep = SweepLevels(*truth.config, levels, k, seeds, scoring.params);
        document["sweep"] = SweepToJson(*sweep);
      }

      auto print = [&out](const std::string& title, const SweepReport& r) {
        out << title << "\n"
            << "level support oppose baseline_support baseline_oppose\n";
        for (const SweepRow& row : r.rows) {
          out << row.level << " " << Fixed(Summarize(row.support).mean) << " "
              << Fixed(Summarize(row.oppose).mean) << " "
              << Fixed(Summarize(row.baseline_support).mean) << " "
              << Fixed(Summarize(row.baseline_oppose).mean) << "\n";
        }
      };
      print("input debate", on_input);
      if (sweep) {
        print("sweep over " + std::to_string(seeds) + " sampled debates",
              *sweep);
      }
      if (!output.empty()) WriteFileAtomic(output, CanonicalJson(document));
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    for (const Violation& v : e.violations()) err << v.ToString() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kIoError:
        return kExitIo;
      case ErrorCode::kParseError:
        return kExitParse;
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kConfigInvalid:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace petition
