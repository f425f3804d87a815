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

#include "petition/coverage.h"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace petition {

void AnswerConfig::Check() const {
  if (answer_depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "answer_depth must be >= 1");
  }
}

std::vector<NodeIndex> Answers(const DebateGraph& graph, NodeIndex a,
                               const AnswerConfig& config) {
  config.Check();
  if (a >= graph.size()) {
    throw Error(ErrorCode::kUnknownId,
                "justification index out of range: " + std::to_string(a));
  }
  std::vector<NodeIndex> base = config.mode == Mode::kCsjp
                                    ? SubsumesClosure(graph, a)
                                    : std::vector<NodeIndex>{a};
  std::vector<NodeIndex> out = base;
  for (NodeIndex b : base) {
    std::vector<NodeIndex> reached =
        Refutes(graph, b, config.answer_depth).Union();
    out.insert(out.end(), reached.begin(), reached.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t CoveredSignatories(const DebateGraph& graph,
                                 std::span<const NodeIndex> selection,
                                 const AnswerConfig& config) {
  for (NodeIndex a : selection) {
    if (a >= graph.size()) {
      throw Error(ErrorCode::kUnknownId,
                  "justification index out of range: " + std::to_string(a));
    }
    if (graph.at(a).stance != graph.at(selection.front()).stance) {
      throw Error(ErrorCode::kMixedStanceSelection,
                  "selection mixes supporting and opposing justifications");
    }
  }
  std::vector<bool> covered(graph.size(), false);
  std::uint64_t total = 0;
  for (NodeIndex a : selection) {
    for (NodeIndex group : Answers(graph, a, config)) {
      if (!covered[group]) {
        covered[group] = true;
        total += graph.at(group).signatures;
      }
    }
  }
  return total;
}

namespace {

// Side members in tie-breaking order: score desc, more recent, id.
std::vector<NodeIndex> PreferenceOrder(const DebateGraph& graph, Stance side,
                                       const ScoringParams& params) {
  std::vector<NodeIndex> members = graph.Side(side);
  std::vector<double> score(graph.size(), 0.0);
  for (NodeIndex i : members) score[i] = DiscountedScore(graph, i, params);
  std::sort(members.begin(), members.end(), [&](NodeIndex a, NodeIndex b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return graph.MoreRecent(a, b);
  });
  return members;
}

// Builds the accounting for a selection taken in the given order.
CoverageResult Account(const DebateGraph& graph, Stance side,
                       const std::vector<NodeIndex>& ordered,
                       const std::vector<std::vector<NodeIndex>>& answers) {
  CoverageResult result;
  result.side = side;
  for (NodeIndex a : ordered) {
    std::uint64_t gain = 0;
    for (NodeIndex group : answers[a]) {
      if (result.covered_groups.emplace(group, graph.at(group).signatures)
              .second) {
        gain += graph.at(group).signatures;
      }
    }
    result.selected.push_back(a);
    result.marginal_gains.push_back(gain);
    result.answered_signatories += gain;
  }
  return result;
}

void CheckK(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

}  // namespace

CoverageResult GreedySelect(const DebateGraph& graph, Stance side,
                            std::size_t k, const AnswerConfig& config,
                            const ScoringParams& params) {
  CheckK(k);
  config.Check();
  params.Check();
  const std::vector<NodeIndex> order = PreferenceOrder(graph, side, params);
  std::vector<std::vector<NodeIndex>> answers(graph.size());
  for (NodeIndex a : order) answers[a] = Answers(graph, a, config);

  std::vector<bool> covered(graph.size(), false);
  std::vector<bool> taken(graph.size(), false);
  std::vector<NodeIndex> picks;
  while (picks.size() < k) {
    std::uint64_t best_gain = 0;
    std::optional<NodeIndex> best;
    for (NodeIndex a : order) {
      if (taken[a]) continue;
      std::uint64_t gain = 0;
      for (NodeIndex group : answers[a]) {
        if (!covered[group]) gain += graph.at(group).signatures;
      }
      // Strict comparison keeps the earliest candidate in preference order.
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    if (!best) break;
    taken[*best] = true;
    for (NodeIndex group : answers[*best]) covered[group] = true;
    picks.push_back(*best);
  }
  return Account(graph, side, picks, answers);
}

CoverageResult ExactSelect(const DebateGraph& graph, Stance side,
                           std::size_t k, const AnswerConfig& config,
                           const ScoringParams& params, std::size_t limit) {
  CheckK(k);
  config.Check();
  params.Check();
  const std::vector<NodeIndex> order = PreferenceOrder(graph, side, params);
  if (order.size() > limit) {
    throw Error(ErrorCode::kSideTooLargeForExact,
                "side has " + std::to_string(order.size()) +
                    " justifications, exact limit is " + std::to_string(limit));
  }
  std::vector<std::vector<NodeIndex>> answers(graph.size());
  for (NodeIndex a : order) answers[a] = Answers(graph, a, config);

  const std::size_t n = order.size();
  const std::size_t max_size = std::min(k, n);
  std::vector<NodeIndex> best;
  std::uint64_t best_value = 0;
  std::vector<std::size_t> positions;
  std::vector<int> cover_count(graph.size(), 0);

  // Sizes ascend and combinations of each size come in lexicographic order of
  // preference positions, so keeping only strict improvements applies the
  // documented tie-break.
  for (std::size_t size = 1; size <= max_size; ++size) {
    positions.resize(size);
    for (std::size_t i = 0; i < size; ++i) positions[i] = i;
    while (true) {
      std::fill(cover_count.begin(), cover_count.end(), 0);
      std::uint64_t value = 0;
      for (std::size_t p : positions) {
        for (NodeIndex group : answers[order[p]]) {
          if (cover_count[group]++ == 0) value += graph.at(group).signatures;
        }
      }
      if (value > best_value) {
        best_value = value;
        best.clear();
        for (std::size_t p : positions) best.push_back(order[p]);
      }
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && positions[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++positions[i - 1];
      for (std::size_t j = i; j < size; ++j) {
        positions[j] = positions[j - 1] + 1;
      }
    }
  }
  return Account(graph, side, best, answers);
}

Recommendation Recommend(const DebateGraph& graph, std::size_t k,
                         const ScoringParams& params,
                         const AnswerConfig& config) {
  Recommendation out;
  out.support = GreedySelect(graph, Stance::kSupport, k, config, params);
  out.oppose = GreedySelect(graph, Stance::kOppose, k, config, params);
  out.support_ranking = RankByReach(graph, Stance::kSupport, params);
  out.oppose_ranking = RankByReach(graph, Stance::kOppose, params);
  return out;
}

}  // namespace petition
