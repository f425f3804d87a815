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

// Bounded-depth reach over claimed_refutes and the discounted vote score.
//
// Reach uses the debate-specific transitivity: if p refutes n', n' refutes
// p' and p' refutes n, then p is taken to refute n as well. Level 1 holds
// the direct targets; each further level takes two hops (through a
// justification of the origin's own stance) from the previous level.

#ifndef PETITION_REFUTES_H_
#define PETITION_REFUTES_H_

#include <cstddef>
#include <vector>

#include "petition/debate_graph.h"

namespace petition {

struct ScoringParams {
  int level = 3;
  double gamma = 0.5;
  double alpha = 1.0;
  double beta = 1.0;

  // Throws Error(kInvalidArgument) on level < 1, gamma outside (0, 1] or
  // negative alpha/beta.
  void Check() const;
};

struct ReachResult {
  NodeIndex origin = 0;
  // per_level[k - 1] holds the ids first reached at level k, sorted. Always
  // exactly `level` entries, some possibly empty.
  std::vector<std::vector<NodeIndex>> per_level;

  std::vector<NodeIndex> Union() const;
  std::size_t cardinality() const;
};

// Throws Error(kLevelZero) for level < 1 and Error(kUnknownId) for a bad
// origin.
ReachResult Refutes(const DebateGraph& graph, NodeIndex origin, int level);

// votes(k) = votes_j(k) + alpha * votes_fwd(k) + beta * votes_back(k).
//
// votes_j(k) sums the signatures of R_k. The edge terms sum, each edge once,
// the weights of the refutes edges that produced R_k: for k = 1 the origin's
// own edges; for k >= 2 the edges u -> t (u in R_{k-1}) and t -> i (i in
// R_k) lying on some two-hop path into R_k.
double VotesAtLevel(const DebateGraph& graph, const ReachResult& reach, int k,
                    const ScoringParams& params);

// Sum over k = 1..level of gamma^k * votes(k).
double DiscountedScore(const DebateGraph& graph, NodeIndex index,
                       const ScoringParams& params);

struct RankedJustification {
  NodeIndex index = 0;
  std::size_t reach_cardinality = 0;
  double score = 0.0;

  friend bool operator==(const RankedJustification&,
                         const RankedJustification&) = default;
};

struct Ranking {
  std::vector<RankedJustification> ranked;
  // Largest reach cardinality on the side, 0 for an empty side.
  std::size_t j_level = 0;
};

// Sorted by reach cardinality, then score (both descending), then recency,
// then id.
Ranking RankByReach(const DebateGraph& graph, Stance side,
                    const ScoringParams& params);

}  // namespace petition

#endif  // PETITION_REFUTES_H_
