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

// JSON debate, ground-truth and report files.
//
// Every file is written in one canonical form: object keys sorted, two-space
// indentation, justifications ordered by id, edges by (source, target) and
// real numbers with six fixed decimals. Equal values therefore serialize to
// identical bytes.

#ifndef PETITION_DEBATE_IO_H_
#define PETITION_DEBATE_IO_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "petition/coverage.h"
#include "petition/debate_graph.h"
#include "petition/refutes.h"
#include "petition/synthetic.h"

namespace petition {

inline constexpr int kDebateSchemaVersion = 1;

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  // 1-based; 0 when the problem is not tied to a text position.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string CanonicalJson(const nlohmann::json& value);

// Writes through a temporary sibling and renames it into place, so a failed
// write leaves no partial file. Throws Error(kIoError).
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);
std::string ReadFile(const std::filesystem::path& path);

nlohmann::json DebateToJson(const DebateGraph& graph);
// Throws ParseError on schema problems and ValidationError on graph
// invariant violations.
DebateGraph DebateFromJson(const nlohmann::json& document);
DebateGraph ParseDebate(std::string_view text);

DebateGraph LoadDebate(const std::filesystem::path& path);
void SaveDebate(const DebateGraph& graph, const std::filesystem::path& path);

struct TruthFile {
  GroundTruth truth;
  // Present for generated debates; lets evaluation resample siblings.
  std::optional<GenerativeConfig> config;
};

nlohmann::json TruthToJson(const TruthFile& file);
TruthFile TruthFromJson(const nlohmann::json& document);
TruthFile LoadTruth(const std::filesystem::path& path);
void SaveTruth(const TruthFile& file, const std::filesystem::path& path);

enum class SideFilter { kSupport, kOppose, kBoth };

struct Report {
  std::size_t k = 1;
  SideFilter side = SideFilter::kBoth;
  ScoringParams params;
  AnswerConfig answer;
  Recommendation recommendation;
};

nlohmann::json ReportToJson(const DebateGraph& graph, const Report& report);
void SaveReport(const DebateGraph& graph, const Report& report,
                const std::filesystem::path& path);

nlohmann::json SweepToJson(const SweepReport& sweep);

}  // namespace petition

#endif  // PETITION_DEBATE_IO_H_
