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

#include "petition/refutes.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace petition {

void ScoringParams::Check() const {
  if (level < 1) {
    throw Error(ErrorCode::kInvalidArgument, "level must be >= 1");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gamma must lie in (0, 1]");
  }
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and beta must be >= 0");
  }
}

std::vector<NodeIndex> ReachResult::Union() const {
  std::vector<NodeIndex> out;
  for (const auto& level : per_level) {
    out.insert(out.end(), level.begin(), level.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ReachResult::cardinality() const {
  std::size_t total = 0;
  for (const auto& level : per_level) total += level.size();
  return total;
}

ReachResult Refutes(const DebateGraph& graph, NodeIndex origin, int level) {
  if (level < 1) throw Error(ErrorCode::kLevelZero, "level must be >= 1");
  if (origin >= graph.size()) {
    throw Error(ErrorCode::kUnknownId,
                "justification index out of range: " + std::to_string(origin));
  }
  ReachResult result;
  result.origin = origin;
  result.per_level.reserve(level);

  std::vector<bool> seen(graph.size(), false);
  std::vector<NodeIndex> frontier;
  for (const DebateGraph::Edge& e : graph.OutgoingRefutes(origin)) {
    seen[e.target] = true;
    frontier.push_back(e.target);
  }
  result.per_level.push_back(frontier);

  for (int k = 2; k <= level; ++k) {
    std::vector<NodeIndex> next;
    for (NodeIndex u : frontier) {
      for (const DebateGraph::Edge& hop : graph.OutgoingRefutes(u)) {
        for (const DebateGraph::Edge& e : graph.OutgoingRefutes(hop.target)) {
          if (!seen[e.target]) {
            seen[e.target] = true;
            next.push_back(e.target);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    result.per_level.push_back(next);
    frontier = std::move(next);
  }
  return result;
}

double VotesAtLevel(const DebateGraph& graph, const ReachResult& reach, int k,
                    const ScoringParams& params) {
  if (k < 1 || static_cast<std::size_t>(k) > reach.per_level.size()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(k) + " outside reach result");
  }
  const std::vector<NodeIndex>& members = reach.per_level[k - 1];
  std::uint64_t own = 0;
  for (NodeIndex i : members) own += graph.at(i).signatures;

  std::uint64_t forward = 0;
  std::uint64_t backward = 0;
  if (k == 1) {
    for (const DebateGraph::Edge& e : graph.OutgoingRefutes(reach.origin)) {
      forward += e.weight;
    }
  } else {
    std::vector<bool> in_level(graph.size(), false);
    for (NodeIndex i : members) in_level[i] = true;
    // Edges are identified by (source, target); both sets dedupe repeats
    // coming from several two-hop paths.
    std::set<std::pair<NodeIndex, NodeIndex>> forward_edges;
    std::set<std::pair<NodeIndex, NodeIndex>> backward_edges;
    for (NodeIndex u : reach.per_level[k - 2]) {
      for (const DebateGraph::Edge& hop : graph.OutgoingRefutes(u)) {
        for (const DebateGraph::Edge& e : graph.OutgoingRefutes(hop.target)) {
          if (!in_level[e.target]) continue;
          if (forward_edges.emplace(hop.source, hop.target).second) {
            forward += hop.weight;
          }
          if (backward_edges.emplace(e.source, e.target).second) {
            backward += e.weight;
          }
        }
      }
    }
  }
  return static_cast<double>(own) + params.alpha * static_cast<double>(forward) +
         params.beta * static_cast<double>(backward);
}

namespace {

double ScoreReach(const DebateGraph& graph, const ReachResult& reach,
                  const ScoringParams& params) {
  double score = 0.0;
  double discount = 1.0;
  for (int k = 1; k <= params.level; ++k) {
    discount *= params.gamma;
    score += discount * VotesAtLevel(graph, reach, k, params);
  }
  return score;
}

}  // namespace

double DiscountedScore(const DebateGraph& graph, NodeIndex index,
                       const ScoringParams& params) {
  params.Check();
  return ScoreReach(graph, Refutes(graph, index, params.level), params);
}

Ranking RankByReach(const DebateGraph& graph, Stance side,
                    const ScoringParams& params) {
  params.Check();
  Ranking ranking;
  for (NodeIndex i : graph.Side(side)) {
    ReachResult reach = Refutes(graph, i, params.level);
    double score = ScoreReach(graph, reach, params);
    ranking.ranked.push_back(RankedJustification{i, reach.cardinality(), score});
    ranking.j_level = std::max(ranking.j_level, reach.cardinality());
  }
  std::sort(ranking.ranked.begin(), ranking.ranked.end(),
            [&graph](const RankedJustification& a,
                     const RankedJustification& b) {
              if (a.reach_cardinality != b.reach_cardinality) {
                return a.reach_cardinality > b.reach_cardinality;
              }
              if (a.score != b.score) return a.score > b.score;
              return graph.MoreRecent(a.index, b.index);
            });
  return ranking;
}

}  // namespace petition
