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

#include "petition/debate_graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

namespace petition {

Stance Opposite(Stance stance) {
  return stance == Stance::kSupport ? Stance::kOppose : Stance::kSupport;
}

std::string_view ToString(Stance stance) {
  return stance == Stance::kSupport ? "support" : "oppose";
}

std::string_view ToString(Mode mode) {
  switch (mode) {
    case Mode::kSjp:
      return "sjp";
    case Mode::kWsjp:
      return "wsjp";
    case Mode::kCsjp:
      return "csjp";
  }
  return "sjp";
}

std::optional<Stance> ParseStance(std::string_view text) {
  if (text == "support") return Stance::kSupport;
  if (text == "oppose") return Stance::kOppose;
  return std::nullopt;
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "sjp") return Mode::kSjp;
  if (text == "wsjp") return Mode::kWsjp;
  if (text == "csjp") return Mode::kCsjp;
  return std::nullopt;
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyPetitionId:
      return "EmptyPetitionId";
    case ViolationKind::kEmptyId:
      return "EmptyId";
    case ViolationKind::kDuplicateId:
      return "DuplicateId";
    case ViolationKind::kDanglingEdge:
      return "DanglingEdge";
    case ViolationKind::kSelfEdge:
      return "SelfEdge";
    case ViolationKind::kDuplicateEdge:
      return "DuplicateEdge";
    case ViolationKind::kSameStanceRefutes:
      return "SameStanceRefutes";
    case ViolationKind::kCrossStanceSubsumes:
      return "CrossStanceSubsumes";
    case ViolationKind::kMultipleRefutesInSjpMode:
      return "MultipleRefutesInSjpMode";
    case ViolationKind::kMissingWeight:
      return "MissingWeight";
    case ViolationKind::kZeroWeight:
      return "ZeroWeight";
    case ViolationKind::kWeightExceedsSignatures:
      return "WeightExceedsSignatures";
    case ViolationKind::kSubsumesCycle:
      return "SubsumesCycle";
    case ViolationKind::kSubsumesOutsideCsjp:
      return "SubsumesOutsideCsjp";
  }
  return "Unknown";
}

std::string Violation::ToString() const {
  std::string out = severity == Severity::kWarning ? "warning " : "error ";
  out += petition::ToString(kind);
  out += "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ",";
    out += ids[i];
  }
  out += "}";
  return out;
}

bool HasErrors(std::span<const Violation> violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) {
                       return v.severity == Severity::kError;
                     });
}

namespace {

std::string JoinViolations(const std::vector<Violation>& violations) {
  std::string out = "validation failed:";
  for (const Violation& v : violations) {
    out += " ";
    out += v.ToString();
  }
  return out;
}

// Groups of ids that lie on a common subsumes cycle (strongly connected
// components with more than one member), each sorted.
std::vector<std::vector<std::string>> SubsumesCycles(
    const std::map<std::string, std::vector<std::string>>& adjacency) {
  std::map<std::string, std::set<std::string>> reach;
  for (const auto& [start, _] : adjacency) {
    std::set<std::string>& seen = reach[start];
    std::vector<std::string> stack = {start};
    while (!stack.empty()) {
      std::string node = std::move(stack.back());
      stack.pop_back();
      auto it = adjacency.find(node);
      if (it == adjacency.end()) continue;
      for (const std::string& next : it->second) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  std::set<std::string> assigned;
  std::vector<std::vector<std::string>> cycles;
  for (const auto& [node, reachable] : reach) {
    if (assigned.contains(node) || !reachable.contains(node)) continue;
    std::vector<std::string> component;
    for (const std::string& other : reachable) {
      auto it = reach.find(other);
      if (it != reach.end() && it->second.contains(node)) {
        component.push_back(other);
      }
    }
    for (const std::string& member : component) assigned.insert(member);
    if (component.size() > 1) cycles.push_back(std::move(component));
  }
  return cycles;
}

}  // namespace

std::vector<Violation> Validate(const DebateInput& input) {
  std::vector<Violation> out;
  auto report = [&out](ViolationKind kind, std::vector<std::string> ids,
                       Severity severity = Severity::kError) {
    out.push_back(Violation{kind, severity, std::move(ids)});
  };

  if (input.petition.id.empty()) report(ViolationKind::kEmptyPetitionId, {});

  std::map<std::string, const Justification*> by_id;
  std::set<std::string> duplicates;
  for (const Justification& j : input.justifications) {
    if (j.id.empty()) {
      report(ViolationKind::kEmptyId, {});
      continue;
    }
    if (!by_id.emplace(j.id, &j).second) duplicates.insert(j.id);
  }
  for (const std::string& id : duplicates) {
    report(ViolationKind::kDuplicateId, {id});
  }

  const bool single_target = input.mode != Mode::kWsjp;
  std::set<std::pair<std::string, std::string>> seen_refutes;
  std::map<std::string, std::size_t> outgoing_count;
  std::map<std::string, std::uint64_t> outgoing_weight;
  for (const RefutesEdge& e : input.refutes) {
    if (e.source == e.target) {
      report(ViolationKind::kSelfEdge, {e.source});
      continue;
    }
    auto source = by_id.find(e.source);
    auto target = by_id.find(e.target);
    if (source == by_id.end() || target == by_id.end()) {
      report(ViolationKind::kDanglingEdge, {e.source, e.target});
      continue;
    }
    if (!seen_refutes.emplace(e.source, e.target).second) {
      report(ViolationKind::kDuplicateEdge, {e.source, e.target});
      continue;
    }
    if (source->second->stance == target->second->stance) {
      report(ViolationKind::kSameStanceRefutes, {e.source, e.target});
    }
    ++outgoing_count[e.source];
    if (!single_target) {
      if (!e.weight.has_value()) {
        report(ViolationKind::kMissingWeight, {e.source, e.target});
      } else if (*e.weight == 0) {
        report(ViolationKind::kZeroWeight, {e.source, e.target});
      } else {
        outgoing_weight[e.source] += *e.weight;
      }
    }
  }
  for (const auto& [source, count] : outgoing_count) {
    if (single_target && count > 1) {
      report(ViolationKind::kMultipleRefutesInSjpMode, {source});
    }
  }
  for (const auto& [source, total] : outgoing_weight) {
    if (total > by_id.at(source)->signatures) {
      report(ViolationKind::kWeightExceedsSignatures, {source});
    }
  }

  std::set<std::pair<std::string, std::string>> seen_subsumes;
  std::map<std::string, std::vector<std::string>> subsumes_adjacency;
  for (const SubsumesEdge& e : input.subsumes) {
    if (e.source == e.target) {
      report(ViolationKind::kSelfEdge, {e.source});
      continue;
    }
    auto source = by_id.find(e.source);
    auto target = by_id.find(e.target);
    if (source == by_id.end() || target == by_id.end()) {
      report(ViolationKind::kDanglingEdge, {e.source, e.target});
      continue;
    }
    if (!seen_subsumes.emplace(e.source, e.target).second) {
      report(ViolationKind::kDuplicateEdge, {e.source, e.target});
      continue;
    }
    if (source->second->stance != target->second->stance) {
      report(ViolationKind::kCrossStanceSubsumes, {e.source, e.target});
      continue;
    }
    subsumes_adjacency[e.source].push_back(e.target);
  }
  if (!input.subsumes.empty() && input.mode != Mode::kCsjp) {
    report(ViolationKind::kSubsumesOutsideCsjp, {}, Severity::kWarning);
  }
  for (std::vector<std::string>& cycle : SubsumesCycles(subsumes_adjacency)) {
    report(ViolationKind::kSubsumesCycle, std::move(cycle), Severity::kWarning);
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.severity, a.kind, a.ids) <
           std::tie(b.severity, b.kind, b.ids);
  });
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::kValidationFailed, JoinViolations(violations)),
      violations_(std::move(violations)) {}

DebateGraph DebateGraph::Build(DebateInput input) {
  std::vector<Violation> violations = Validate(input);
  if (HasErrors(violations)) throw ValidationError(std::move(violations));

  DebateGraph graph;
  graph.petition_ = std::move(input.petition);
  graph.mode_ = input.mode;
  graph.nodes_ = std::move(input.justifications);
  std::sort(graph.nodes_.begin(), graph.nodes_.end(),
            [](const Justification& a, const Justification& b) {
              return a.id < b.id;
            });
  for (NodeIndex i = 0; i < graph.nodes_.size(); ++i) {
    graph.index_.emplace(graph.nodes_[i].id, i);
  }

  const bool weighted = graph.mode_ == Mode::kWsjp;
  for (const RefutesEdge& e : input.refutes) {
    NodeIndex source = graph.index_.at(e.source);
    std::uint64_t weight =
        weighted ? *e.weight : graph.nodes_[source].signatures;
    graph.refutes_.push_back(Edge{source, graph.index_.at(e.target), weight});
  }
  for (const SubsumesEdge& e : input.subsumes) {
    graph.subsumes_.push_back(
        Edge{graph.index_.at(e.source), graph.index_.at(e.target), 0});
  }

  auto finalize = [n = graph.nodes_.size()](std::vector<Edge>& edges,
                                            std::vector<std::size_t>& offsets) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    offsets.assign(n + 1, 0);
    for (const Edge& e : edges) ++offsets[e.source + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  };
  finalize(graph.refutes_, graph.refutes_offsets_);
  finalize(graph.subsumes_, graph.subsumes_offsets_);
  return graph;
}

std::optional<NodeIndex> DebateGraph::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex DebateGraph::IndexOf(std::string_view id) const {
  std::optional<NodeIndex> index = Find(id);
  if (!index) {
    throw Error(ErrorCode::kUnknownId,
                "unknown justification id '" + std::string(id) + "'");
  }
  return *index;
}

std::span<const DebateGraph::Edge> DebateGraph::OutgoingRefutes(
    NodeIndex source) const {
  return std::span<const Edge>(refutes_).subspan(
      refutes_offsets_.at(source),
      refutes_offsets_.at(source + 1) - refutes_offsets_.at(source));
}

std::span<const DebateGraph::Edge> DebateGraph::OutgoingSubsumes(
    NodeIndex source) const {
  return std::span<const Edge>(subsumes_).subspan(
      subsumes_offsets_.at(source),
      subsumes_offsets_.at(source + 1) - subsumes_offsets_.at(source));
}

std::vector<NodeIndex> DebateGraph::Side(Stance stance) const {
  std::vector<NodeIndex> out;
  for (NodeIndex i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].stance == stance) out.push_back(i);
  }
  return out;
}

std::uint64_t DebateGraph::TotalSignatures() const {
  std::uint64_t total = 0;
  for (const Justification& j : nodes_) total += j.signatures;
  return total;
}

bool DebateGraph::MoreRecent(NodeIndex a, NodeIndex b) const {
  const std::int64_t ta = nodes_.at(a).timestamp;
  const std::int64_t tb = nodes_.at(b).timestamp;
  if (ta != tb) return ta > tb;
  return a < b;
}

DebateInput DebateGraph::ToInput() const {
  DebateInput input;
  input.petition = petition_;
  input.mode = mode_;
  input.justifications = nodes_;
  for (const Edge& e : refutes_) {
    input.refutes.push_back(
        RefutesEdge{nodes_[e.source].id, nodes_[e.target].id, e.weight});
  }
  for (const Edge& e : subsumes_) {
    input.subsumes.push_back(
        SubsumesEdge{nodes_[e.source].id, nodes_[e.target].id});
  }
  return input;
}

DebateGraph BuildGraph(Petition petition,
                       std::vector<Justification> justifications,
                       std::vector<RefutesEdge> refutes,
                       std::vector<SubsumesEdge> subsumes, Mode mode) {
  return DebateGraph::Build(DebateInput{std::move(petition),
                                        std::move(justifications),
                                        std::move(refutes),
                                        std::move(subsumes), mode});
}

std::vector<Violation> Validate(const DebateGraph& graph) {
  return Validate(graph.ToInput());
}

std::vector<NodeIndex> SubsumesClosure(const DebateGraph& graph,
                                       NodeIndex index) {
  if (index >= graph.size()) {
    throw Error(ErrorCode::kUnknownId,
                "justification index out of range: " + std::to_string(index));
  }
  if (graph.mode() != Mode::kCsjp) return {index};
  std::vector<bool> seen(graph.size(), false);
  std::vector<NodeIndex> stack = {index};
  seen[index] = true;
  std::vector<NodeIndex> out;
  while (!stack.empty()) {
    NodeIndex node = stack.back();
    stack.pop_back();
    out.push_back(node);
    for (const DebateGraph::Edge& e : graph.OutgoingSubsumes(node)) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace petition
