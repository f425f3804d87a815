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

// Selection of at most K justifications per side that answer the largest
// number of signatories.
//
// A justification a answers the signatories of a group j (the v_j voters who
// selected j) when j is a itself or a claims to refute j. In CSJP mode a also
// answers every group in its subsumes closure and every group refuted by a
// member of that closure. Counting is per group: a group answered twice still
// contributes v_j once, which makes the objective a weighted max-coverage.

#ifndef PETITION_COVERAGE_H_
#define PETITION_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "petition/debate_graph.h"
#include "petition/refutes.h"

namespace petition {

struct AnswerConfig {
  Mode mode = Mode::kSjp;
  // Refutes reach depth used for answering; 1 is the direct relation.
  int answer_depth = 1;

  void Check() const;
};

struct CoverageResult {
  Stance side = Stance::kSupport;
  std::vector<NodeIndex> selected;
  std::uint64_t answered_signatories = 0;
  // Answered group -> signatories in that group.
  std::map<NodeIndex, std::uint64_t> covered_groups;
  // marginal_gains[i] is what selected[i] added on top of selected[0..i).
  std::vector<std::uint64_t> marginal_gains;

  friend bool operator==(const CoverageResult&, const CoverageResult&) =
      default;
};

// Groups answered by `a`, sorted.
std::vector<NodeIndex> Answers(const DebateGraph& graph, NodeIndex a,
                               const AnswerConfig& config);

// Throws Error(kMixedStanceSelection) unless all of `selection` share a
// stance.
std::uint64_t CoveredSignatories(const DebateGraph& graph,
                                 std::span<const NodeIndex> selection,
                                 const AnswerConfig& config);

// Repeatedly takes the largest marginal gain. Equal gains go to the higher
// discounted score, then the more recent justification, then the smaller id.
// Stops after k picks or once nothing adds coverage.
CoverageResult GreedySelect(const DebateGraph& graph, Stance side,
                            std::size_t k, const AnswerConfig& config,
                            const ScoringParams& params = {});

inline constexpr std::size_t kDefaultExactLimit = 20;

// Exhaustive optimum over all subsets of size <= k. Among optimal subsets the
// smallest wins, then the one whose members rank best under the greedy
// tie-breaking order. Throws Error(kSideTooLargeForExact) when the side has
// more than `limit` justifications.
CoverageResult ExactSelect(const DebateGraph& graph, Stance side,
                           std::size_t k, const AnswerConfig& config,
                           const ScoringParams& params = {},
                           std::size_t limit = kDefaultExactLimit);

struct Recommendation {
  CoverageResult support;
  CoverageResult oppose;
  Ranking support_ranking;
  Ranking oppose_ranking;
};

Recommendation Recommend(const DebateGraph& graph, std::size_t k,
                         const ScoringParams& params,
                         const AnswerConfig& config);

}  // namespace petition

#endif  // PETITION_COVERAGE_H_
