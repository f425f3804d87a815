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

// Synthetic debates drawn from a forward-sampled generative model, with the
// hidden argument sets kept aside as ground truth for evaluation.
//
// Justifications arrive alternately for and against the petition. Each one
// carries a uniformly drawn nonempty subset of its side's argument pool,
// refutes an earlier opposing justification chosen with probability
// proportional to that justification's argument count, and collects votes
// in proportion to its own argument count.

#ifndef PETITION_SYNTHETIC_H_
#define PETITION_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "petition/coverage.h"
#include "petition/debate_graph.h"
#include "petition/refutes.h"

namespace petition {

struct GenerativeConfig {
  // Size of each side's argument pool. The pools are disjoint.
  int num_arguments = 12;
  int per_side = 30;
  std::uint64_t total_votes = 500;
  std::uint64_t seed = 0;
  // Probability that a justification claims to subsume an earlier one whose
  // arguments it contains. Nonzero yields a CSJP debate.
  double subsume_fraction = 0.0;

  // Throws Error(kConfigInvalid).
  void Check() const;

  friend bool operator==(const GenerativeConfig&, const GenerativeConfig&) =
      default;
};

inline constexpr int kMaxArguments = 62;

struct GroundTruth {
  std::map<std::string, Stance> stances;
  // Hidden argument indices of each justification, sorted.
  std::map<std::string, std::vector<int>> argument_sets;
  // Realized refutes choice; justifications without a target are absent.
  std::map<std::string, std::string> refute_targets;

  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

struct SyntheticDebate {
  DebateGraph graph;
  GroundTruth truth;
  GenerativeConfig config;
};

SyntheticDebate SampleDebate(const GenerativeConfig& config);

// Fraction of the side's realized argument pool covered by the union of the
// selection's argument sets. Throws Error(kEmptySelection) on an empty
// selection.
double ArgumentCoverage(const GroundTruth& truth,
                        std::span<const std::string> selection, Stance side);

struct Summary {
  double mean = 0.0;
  // Sample standard deviation; 0 for fewer than two values.
  double stddev = 0.0;
};

Summary Summarize(std::span<const double> values);

struct SweepRow {
  int level = 0;
  // One entry per evaluated debate, in seed order.
  std::vector<double> support;
  std::vector<double> oppose;
  // Uniform random selections of the same size on the same debates.
  std::vector<double> baseline_support;
  std::vector<double> baseline_oppose;
};

struct SweepReport {
  std::size_t k = 0;
  std::size_t seeds = 0;
  ScoringParams params;
  std::vector<SweepRow> rows;
};

// Coverage of the recommended selections for each level over `seeds`
// debates sampled with seeds config.seed, config.seed + 1, ...
SweepReport SweepLevels(const GenerativeConfig& config,
                        std::span<const int> levels, std::size_t k,
                        std::size_t seeds, const ScoringParams& params);

// Same table for one fixed debate; the baseline columns average
// `baseline_draws` random selections drawn from `baseline_seed`.
SweepReport EvaluateDebate(const DebateGraph& graph, const GroundTruth& truth,
                           std::span<const int> levels, std::size_t k,
                           const ScoringParams& params,
                           std::size_t baseline_draws,
                           std::uint64_t baseline_seed);

}  // namespace petition

#endif  // PETITION_SYNTHETIC_H_
