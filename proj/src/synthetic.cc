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

#include "petition/synthetic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <utility>

#include "petition/random.h"

namespace petition {

void GenerativeConfig::Check() const {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kConfigInvalid, message);
  };
  if (num_arguments < 1 || num_arguments > kMaxArguments) {
    fail("num_arguments must lie in [1, " + std::to_string(kMaxArguments) +
         "]");
  }
  if (per_side < 1) fail("per_side must be >= 1");
  if (total_votes < 2 * static_cast<std::uint64_t>(per_side)) {
    fail("total_votes must be at least 2 * per_side");
  }
  if (!(subsume_fraction >= 0.0 && subsume_fraction <= 1.0)) {
    fail("subsume_fraction must lie in [0, 1]");
  }
}

namespace {

struct Draft {
  std::string id;
  Stance stance;
  std::uint64_t arguments;  // bitmask over the side's pool
  std::uint64_t signatures = 1;
};

std::string MakeId(char prefix, int ordinal, int count) {
  std::string digits = std::to_string(ordinal);
  std::string width = std::to_string(count);
  return prefix + std::string(width.size() - digits.size(), '0') + digits;
}

std::vector<int> MaskToIndices(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

SyntheticDebate SampleDebate(const GenerativeConfig& config) {
  config.Check();
  Rng rng(config.seed);
  const std::uint64_t nonempty_subsets =
      (std::uint64_t{1} << config.num_arguments) - 1;

  std::vector<Draft> drafts;
  std::vector<RefutesEdge> refutes;
  std::vector<SubsumesEdge> subsumes;
  GroundTruth truth;

  for (int round = 0; round < config.per_side; ++round) {
    for (Stance stance : {Stance::kSupport, Stance::kOppose}) {
      Draft draft{MakeId(stance == Stance::kSupport ? 'p' : 'n', round + 1,
                         config.per_side),
                  stance, 1 + UniformIndex(rng, nonempty_subsets)};

      // The first justification of each side refutes nothing.
      if (round > 0) {
        std::vector<std::size_t> candidates;
        std::vector<std::uint64_t> weights;
        for (std::size_t i = 0; i < drafts.size(); ++i) {
          if (drafts[i].stance != stance) {
            candidates.push_back(i);
            weights.push_back(std::popcount(drafts[i].arguments));
          }
        }
        const Draft& target = drafts[candidates[WeightedIndex(rng, weights)]];
        refutes.push_back(RefutesEdge{draft.id, target.id, std::nullopt});
        truth.refute_targets.emplace(draft.id, target.id);
      }

      if (config.subsume_fraction > 0.0 &&
          Bernoulli(rng, config.subsume_fraction)) {
        std::vector<std::size_t> contained;
        for (std::size_t i = 0; i < drafts.size(); ++i) {
          if (drafts[i].stance == stance &&
              (drafts[i].arguments & ~draft.arguments) == 0) {
            contained.push_back(i);
          }
        }
        if (!contained.empty()) {
          const Draft& target =
              drafts[contained[UniformIndex(rng, contained.size())]];
          subsumes.push_back(SubsumesEdge{draft.id, target.id});
        }
      }
      drafts.push_back(std::move(draft));
    }
  }

  // One baseline vote each, the rest drawn one by one in proportion to the
  // argument counts (a multinomial split).
  std::vector<std::uint64_t> weights;
  for (const Draft& d : drafts) weights.push_back(std::popcount(d.arguments));
  const std::uint64_t remaining = config.total_votes - drafts.size();
  for (std::uint64_t v = 0; v < remaining; ++v) {
    ++drafts[WeightedIndex(rng, weights)].signatures;
  }

  std::vector<Justification> justifications;
  for (std::size_t i = 0; i < drafts.size(); ++i) {
    const Draft& d = drafts[i];
    justifications.push_back(Justification{
        d.id, d.stance, std::nullopt, static_cast<std::int64_t>(i + 1),
        d.signatures});
    truth.stances.emplace(d.id, d.stance);
    truth.argument_sets.emplace(d.id, MaskToIndices(d.arguments));
  }

  const Mode mode = config.subsume_fraction > 0.0 ? Mode::kCsjp : Mode::kSjp;
  DebateGraph graph = BuildGraph(
      Petition{"synthetic-" + std::to_string(config.seed), std::nullopt},
      std::move(justifications), std::move(refutes), std::move(subsumes),
      mode);
  return SyntheticDebate{std::move(graph), std::move(truth), config};
}

double ArgumentCoverage(const GroundTruth& truth,
                        std::span<const std::string> selection, Stance side) {
  if (selection.empty()) {
    throw Error(ErrorCode::kEmptySelection, "selection is empty");
  }
  std::set<int> selected;
  for (const std::string& id : selection) {
    auto stance = truth.stances.find(id);
    auto arguments = truth.argument_sets.find(id);
    if (stance == truth.stances.end() ||
        arguments == truth.argument_sets.end()) {
      throw Error(ErrorCode::kUnknownId, "no ground truth for '" + id + "'");
    }
    if (stance->second != side) {
      throw Error(ErrorCode::kMixedStanceSelection,
                  "'" + id + "' is not on the " +
                      std::string(ToString(side)) + " side");
    }
    selected.insert(arguments->second.begin(), arguments->second.end());
  }
  std::set<int> pool;
  for (const auto& [id, arguments] : truth.argument_sets) {
    auto stance = truth.stances.find(id);
    if (stance != truth.stances.end() && stance->second == side) {
      pool.insert(arguments.begin(), arguments.end());
    }
  }
  if (pool.empty()) return 1.0;
  return static_cast<double>(selected.size()) /
         static_cast<double>(pool.size());
}

Summary Summarize(std::span<const double> values) {
  Summary out;
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  return out;
}

namespace {

std::vector<std::string> Ids(const DebateGraph& graph,
                             std::span<const NodeIndex> indices) {
  std::vector<std::string> out;
  for (NodeIndex i : indices) out.push_back(graph.at(i).id);
  return out;
}

// Uniform random subset of min(k, |side|) members of the side.
std::vector<std::string> RandomSelection(const DebateGraph& graph, Stance side,
                                         std::size_t k, Rng& rng) {
  std::vector<NodeIndex> members = graph.Side(side);
  const std::size_t take = std::min(k, members.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(members[i], members[i + UniformIndex(rng, members.size() - i)]);
  }
  members.resize(take);
  return Ids(graph, members);
}

double SelectionCoverage(const DebateGraph& graph, const GroundTruth& truth,
                         const CoverageResult& result) {
  // A side whose gains are all zero selects nothing and covers nothing.
  if (result.selected.empty()) return 0.0;
  return ArgumentCoverage(truth, Ids(graph, result.selected), result.side);
}

constexpr std::uint64_t kBaselineStream = 0x9e3779b97f4a7c15ULL;

void CheckSweep(std::span<const int> levels, std::size_t k) {
  if (levels.empty()) {
    throw Error(ErrorCode::kConfigInvalid, "levels must be nonempty");
  }
  for (int level : levels) {
    if (level < 1) throw Error(ErrorCode::kConfigInvalid, "level must be >= 1");
  }
  if (k < 1) throw Error(ErrorCode::kConfigInvalid, "k must be >= 1");
}

}  // namespace

SweepReport SweepLevels(const GenerativeConfig& config,
                        std::span<const int> levels, std::size_t k,
                        std::size_t seeds, const ScoringParams& params) {
  config.Check();
  CheckSweep(levels, k);
  if (seeds < 1) throw Error(ErrorCode::kConfigInvalid, "seeds must be >= 1");

  SweepReport report{k, seeds, params, {}};
  for (int level : levels) report.rows.push_back(SweepRow{level, {}, {}, {}, {}});

  for (std::size_t s = 0; s < seeds; ++s) {
    GenerativeConfig sample_config = config;
    sample_config.seed = config.seed + s;
    const SyntheticDebate debate = SampleDebate(sample_config);
    const AnswerConfig answer{debate.graph.mode(), 1};

    Rng baseline_rng(sample_config.seed ^ kBaselineStream);
    const double baseline_support = ArgumentCoverage(
        debate.truth,
        RandomSelection(debate.graph, Stance::kSupport, k, baseline_rng),
        Stance::kSupport);
    const double baseline_oppose = ArgumentCoverage(
        debate.truth,
        RandomSelection(debate.graph, Stance::kOppose, k, baseline_rng),
        Stance::kOppose);

    for (SweepRow& row : report.rows) {
      ScoringParams level_params = params;
      level_params.level = row.level;
      const Recommendation rec = Recommend(debate.graph, k, level_params, answer);
      row.support.push_back(
          SelectionCoverage(debate.graph, debate.truth, rec.support));
      row.oppose.push_back(
          SelectionCoverage(debate.graph, debate.truth, rec.oppose));
      row.baseline_support.push_back(baseline_support);
      row.baseline_oppose.push_back(baseline_oppose);
    }
  }
  return report;
}

SweepReport EvaluateDebate(const DebateGraph& graph, const GroundTruth& truth,
                           std::span<const int> levels, std::size_t k,
                           const ScoringParams& params,
                           std::size_t baseline_draws,
                           std::uint64_t baseline_seed) {
  CheckSweep(levels, k);
  if (baseline_draws < 1) {
    throw Error(ErrorCode::kConfigInvalid, "baseline draws must be >= 1");
  }
  for (const Justification& j : graph.justifications()) {
    if (!truth.argument_sets.contains(j.id)) {
      throw Error(ErrorCode::kConfigInvalid,
                  "ground truth does not cover '" + j.id + "'");
    }
  }

  Rng rng(baseline_seed ^ kBaselineStream);
  std::vector<double> baseline_support;
  std::vector<double> baseline_oppose;
  for (std::size_t d = 0; d < baseline_draws; ++d) {
    for (Stance side : {Stance::kSupport, Stance::kOppose}) {
      std::vector<std::string> pick = RandomSelection(graph, side, k, rng);
      const double value =
          pick.empty() ? 0.0 : ArgumentCoverage(truth, pick, side);
      (side == Stance::kSupport ? baseline_support : baseline_oppose)
          .push_back(value);
    }
  }

  SweepReport report{k, baseline_draws, params, {}};
  const AnswerConfig answer{graph.mode(), 1};
  for (int level : levels) {
    ScoringParams level_params = params;
    level_params.level = level;
    const Recommendation rec = Recommend(graph, k, level_params, answer);
    report.rows.push_back(SweepRow{
        level,
        {SelectionCoverage(graph, truth, rec.support)},
        {SelectionCoverage(graph, truth, rec.oppose)},
        baseline_support,
        baseline_oppose,
    });
  }
  return report;
}

}  // namespace petition
