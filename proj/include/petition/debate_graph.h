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

// Core debate model: a petition, the supporting and opposing justifications
// attached to its signatures, and the voter-asserted claimed_refutes and
// claimed_subsumes relations between them.

#ifndef PETITION_DEBATE_GRAPH_H_
#define PETITION_DEBATE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "petition/error.h"

namespace petition {

enum class Stance { kSupport, kOppose };

// SJP: one refutes target per justification, inherited by all its signers.
// WSJP: per-voter refutes targets, aggregated into weighted edges.
// CSJP: SJP plus the claimed_subsumes relation.
enum class Mode { kSjp, kWsjp, kCsjp };

Stance Opposite(Stance stance);
std::string_view ToString(Stance stance);
std::string_view ToString(Mode mode);
std::optional<Stance> ParseStance(std::string_view text);
std::optional<Mode> ParseMode(std::string_view text);

struct Petition {
  std::string id;
  std::optional<std::string> title;

  friend bool operator==(const Petition&, const Petition&) = default;
};

struct Justification {
  std::string id;
  Stance stance = Stance::kSupport;
  // Stored verbatim, never interpreted.
  std::optional<std::string> content;
  std::int64_t timestamp = 0;
  std::uint64_t signatures = 0;

  friend bool operator==(const Justification&, const Justification&) = default;
};

// Raw claimed_refutes edge as supplied by a caller or a file. The weight is
// required in WSJP mode; in SJP/CSJP mode it is replaced by the source's
// signature count.
struct RefutesEdge {
  std::string source;
  std::string target;
  std::optional<std::uint64_t> weight;

  friend bool operator==(const RefutesEdge&, const RefutesEdge&) = default;
};

struct SubsumesEdge {
  std::string source;
  std::string target;

  friend bool operator==(const SubsumesEdge&, const SubsumesEdge&) = default;
};

// Unvalidated inputs of a debate, in whatever order the caller has them.
struct DebateInput {
  Petition petition;
  std::vector<Justification> justifications;
  std::vector<RefutesEdge> refutes;
  std::vector<SubsumesEdge> subsumes;
  Mode mode = Mode::kSjp;
};

enum class ViolationKind {
  kEmptyPetitionId,
  kEmptyId,
  kDuplicateId,
  kDanglingEdge,
  kSelfEdge,
  kDuplicateEdge,
  kSameStanceRefutes,
  kCrossStanceSubsumes,
  kMultipleRefutesInSjpMode,
  kMissingWeight,
  kZeroWeight,
  kWeightExceedsSignatures,
  // Warnings.
  kSubsumesCycle,
  kSubsumesOutsideCsjp,
};

enum class Severity { kError, kWarning };

std::string_view ToString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Severity severity = Severity::kError;
  std::vector<std::string> ids;

  std::string ToString() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Reports every broken invariant of the raw inputs plus non-fatal warnings.
// The result is sorted so that it does not depend on input order.
std::vector<Violation> Validate(const DebateInput& input);

bool HasErrors(std::span<const Violation> violations);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

using NodeIndex = std::size_t;

// Immutable, validated debate. Justifications are stored sorted by id, so a
// NodeIndex is a stable handle: equal graphs assign equal indices.
class DebateGraph {
 public:
  struct Edge {
    NodeIndex source;
    NodeIndex target;
    std::uint64_t weight;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  // Throws ValidationError carrying the full violation list.
  static DebateGraph Build(DebateInput input);

  const Petition& petition() const { return petition_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return nodes_.size(); }

  std::span<const Justification> justifications() const { return nodes_; }
  const Justification& at(NodeIndex index) const { return nodes_.at(index); }

  std::optional<NodeIndex> Find(std::string_view id) const;
  // Throws Error(kUnknownId).
  NodeIndex IndexOf(std::string_view id) const;

  // All edges sorted by (source, target).
  std::span<const Edge> refutes() const { return refutes_; }
  std::span<const Edge> subsumes() const { return subsumes_; }

  std::span<const Edge> OutgoingRefutes(NodeIndex source) const;
  std::span<const Edge> OutgoingSubsumes(NodeIndex source) const;

  // Indices of one side in id order.
  std::vector<NodeIndex> Side(Stance stance) const;

  std::uint64_t TotalSignatures() const;

  // Strict recency order: later timestamp first, equal timestamps fall back
  // to ascending id.
  bool MoreRecent(NodeIndex a, NodeIndex b) const;

  // Canonical raw form with explicit weights; Build(ToInput()) == *this.
  DebateInput ToInput() const;

  friend bool operator==(const DebateGraph&, const DebateGraph&) = default;

 private:
  DebateGraph() = default;

  Petition petition_;
  Mode mode_ = Mode::kSjp;
  std::vector<Justification> nodes_;
  std::vector<Edge> refutes_;
  std::vector<Edge> subsumes_;
  // CSR offsets into refutes_ / subsumes_, size() + 1 entries each.
  std::vector<std::size_t> refutes_offsets_;
  std::vector<std::size_t> subsumes_offsets_;
  std::unordered_map<std::string, NodeIndex> index_;
};

DebateGraph BuildGraph(Petition petition,
                       std::vector<Justification> justifications,
                       std::vector<RefutesEdge> refutes,
                       std::vector<SubsumesEdge> subsumes, Mode mode);

// Warnings only for a built graph, since Build rejects errors.
std::vector<Violation> Validate(const DebateGraph& graph);

// The justification plus everything reachable from it over claimed_subsumes,
// sorted by index. Outside CSJP mode this is just {index}.
std::vector<NodeIndex> SubsumesClosure(const DebateGraph& graph,
                                       NodeIndex index);

}  // namespace petition

#endif  // PETITION_DEBATE_GRAPH_H_
