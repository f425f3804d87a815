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

#include "petition/debate_io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

namespace petition {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(ErrorCode::kParseError,
            line == 0 ? message
                      : "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

void WriteCanonical(const json& value, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (value.type()) {
    case json::value_t::number_float: {
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "%.6f", value.get<double>());
      out += buffer;
      return;
    }
    case json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += inner;
        WriteCanonical(value[i], indent + 2, out);
        out += i + 1 < value.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      // json objects are std::map backed, so iteration is key-sorted.
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, item] : value.items()) {
        out += inner + json(key).dump() + ": ";
        WriteCanonical(item, indent + 2, out);
        out += ++i < value.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    default:
      out += value.dump();
      return;
  }
}

// Schema helpers. `where` names the enclosing element in messages.

void ExpectObject(const json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError(where + " must be an object");
}

void CheckKeys(const json& object, std::initializer_list<std::string_view> required,
               std::initializer_list<std::string_view> optional,
               const std::string& where) {
  for (std::string_view key : required) {
    if (!object.contains(key)) {
      throw ParseError(where + " is missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, _] : object.items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) {
      throw ParseError(where + " has unknown field '" + key + "'");
    }
  }
}

std::string GetString(const json& object, std::string_view key,
                      const std::string& where) {
  const json& value = object.at(key);
  if (!value.is_string()) {
    throw ParseError(where + "." + std::string(key) + " must be a string");
  }
  return value.get<std::string>();
}

std::uint64_t GetUnsigned(const json& object, std::string_view key,
                          const std::string& where) {
  const json& value = object.at(key);
  if (!value.is_number_unsigned() &&
      !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ParseError(where + "." + std::string(key) +
                     " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

std::int64_t GetInteger(const json& object, std::string_view key,
                        const std::string& where) {
  const json& value = object.at(key);
  if (value.is_number_unsigned()) {
    if (value.get<std::uint64_t>() >
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(where + "." + std::string(key) + " is out of range");
    }
    return static_cast<std::int64_t>(value.get<std::uint64_t>());
  }
  if (!value.is_number_integer()) {
    throw ParseError(where + "." + std::string(key) + " must be an integer");
  }
  return value.get<std::int64_t>();
}

double GetReal(const json& object, std::string_view key,
               const std::string& where) {
  const json& value = object.at(key);
  if (!value.is_number()) {
    throw ParseError(where + "." + std::string(key) + " must be a number");
  }
  return value.get<double>();
}

const json& GetArray(const json& object, std::string_view key,
                     const std::string& where) {
  const json& value = object.at(key);
  if (!value.is_array()) {
    throw ParseError(where + "." + std::string(key) + " must be an array");
  }
  return value;
}

Stance GetStance(const json& object, const std::string& where) {
  std::string text = GetString(object, "stance", where);
  std::optional<Stance> stance = ParseStance(text);
  if (!stance) {
    throw ParseError(where + ".stance: unsupported stance '" + text + "'");
  }
  return *stance;
}

void CheckSchemaVersion(const json& document) {
  const std::uint64_t version =
      GetUnsigned(document, "schema_version", "document");
  if (version < 1 || version > static_cast<std::uint64_t>(kDebateSchemaVersion)) {
    throw ParseError("unsupported schema_version " + std::to_string(version) +
                     " (this build reads version " +
                     std::to_string(kDebateSchemaVersion) + ")");
  }
}

json ParseText(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                                  text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
  }
}

json SummaryToJson(const Summary& summary) {
  return json{{"mean", summary.mean}, {"stddev", summary.stddev}};
}

json GenerativeConfigToJson(const GenerativeConfig& config) {
  return json{{"num_arguments", config.num_arguments},
              {"per_side", config.per_side},
              {"seed", config.seed},
              {"subsume_fraction", config.subsume_fraction},
              {"total_votes", config.total_votes}};
}

json ParamsToJson(const ScoringParams& params) {
  return json{{"alpha", params.alpha},
              {"beta", params.beta},
              {"gamma", params.gamma},
              {"level", params.level}};
}

}  // namespace

std::string CanonicalJson(const json& value) {
  std::string out;
  WriteCanonical(value, 0, out);
  out += "\n";
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw Error(ErrorCode::kIoError, "cannot write " + temp.string());
    }
    stream.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    stream.flush();
    if (!stream) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw Error(ErrorCode::kIoError, "failed writing " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw Error(ErrorCode::kIoError,
                "cannot move " + temp.string() + " to " + path.string() +
                    ": " + ec.message());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) {
    throw Error(ErrorCode::kIoError, "failed reading " + path.string());
  }
  return buffer.str();
}

json DebateToJson(const DebateGraph& graph) {
  json petition = {{"id", graph.petition().id}};
  if (graph.petition().title) petition["title"] = *graph.petition().title;

  json justifications = json::array();
  for (const Justification& j : graph.justifications()) {
    json item = {{"id", j.id},
                 {"stance", ToString(j.stance)},
                 {"timestamp", j.timestamp},
                 {"signatures", j.signatures}};
    if (j.content) item["content"] = *j.content;
    justifications.push_back(std::move(item));
  }

  json refutes = json::array();
  for (const DebateGraph::Edge& e : graph.refutes()) {
    json item = {{"source", graph.at(e.source).id},
                 {"target", graph.at(e.target).id}};
    // Outside WSJP the weight is implied by the source's signatures.
    if (graph.mode() == Mode::kWsjp) item["weight"] = e.weight;
    refutes.push_back(std::move(item));
  }

  json subsumes = json::array();
  for (const DebateGraph::Edge& e : graph.subsumes()) {
    subsumes.push_back(json{{"source", graph.at(e.source).id},
                            {"target", graph.at(e.target).id}});
  }

  return json{{"schema_version", kDebateSchemaVersion},
              {"petition", std::move(petition)},
              {"mode", ToString(graph.mode())},
              {"justifications", std::move(justifications)},
              {"refutes", std::move(refutes)},
              {"subsumes", std::move(subsumes)}};
}

DebateGraph DebateFromJson(const json& document) {
  ExpectObject(document, "document");
  CheckKeys(document,
            {"schema_version", "petition", "mode", "justifications", "refutes"},
            {"subsumes"}, "document");
  CheckSchemaVersion(document);

  DebateInput input;
  const json& petition = document.at("petition");
  ExpectObject(petition, "petition");
  CheckKeys(petition, {"id"}, {"title"}, "petition");
  input.petition.id = GetString(petition, "id", "petition");
  if (petition.contains("title")) {
    input.petition.title = GetString(petition, "title", "petition");
  }

  const std::string mode_text = GetString(document, "mode", "document");
  std::optional<Mode> mode = ParseMode(mode_text);
  if (!mode) throw ParseError("unsupported mode '" + mode_text + "'");
  input.mode = *mode;

  const json& justifications =
      GetArray(document, "justifications", "document");
  for (std::size_t i = 0; i < justifications.size(); ++i) {
    const std::string where = "justifications[" + std::to_string(i) + "]";
    const json& item = justifications[i];
    ExpectObject(item, where);
    CheckKeys(item, {"id", "stance", "timestamp", "signatures"}, {"content"},
              where);
    Justification j;
    j.id = GetString(item, "id", where);
    j.stance = GetStance(item, where);
    j.timestamp = GetInteger(item, "timestamp", where);
    j.signatures = GetUnsigned(item, "signatures", where);
    if (item.contains("content")) j.content = GetString(item, "content", where);
    input.justifications.push_back(std::move(j));
  }

  const json& refutes = GetArray(document, "refutes", "document");
  for (std::size_t i = 0; i < refutes.size(); ++i) {
    const std::string where = "refutes[" + std::to_string(i) + "]";
    const json& item = refutes[i];
    ExpectObject(item, where);
    CheckKeys(item, {"source", "target"}, {"weight"}, where);
    RefutesEdge e;
    e.source = GetString(item, "source", where);
    e.target = GetString(item, "target", where);
    if (item.contains("weight")) e.weight = GetUnsigned(item, "weight", where);
    input.refutes.push_back(std::move(e));
  }

  if (document.contains("subsumes")) {
    const json& subsumes = GetArray(document, "subsumes", "document");
    for (std::size_t i = 0; i < subsumes.size(); ++i) {
      const std::string where = "subsumes[" + std::to_string(i) + "]";
      const json& item = subsumes[i];
      ExpectObject(item, where);
      CheckKeys(item, {"source", "target"}, {}, where);
      input.subsumes.push_back(SubsumesEdge{GetString(item, "source", where),
                                            GetString(item, "target", where)});
    }
  }
  return DebateGraph::Build(std::move(input));
}

DebateGraph ParseDebate(std::string_view text) {
  return DebateFromJson(ParseText(text));
}

DebateGraph LoadDebate(const std::filesystem::path& path) {
  return ParseDebate(ReadFile(path));
}

void SaveDebate(const DebateGraph& graph, const std::filesystem::path& path) {
  WriteFileAtomic(path, CanonicalJson(DebateToJson(graph)));
}

json TruthToJson(const TruthFile& file) {
  json justifications = json::array();
  for (const auto& [id, arguments] : file.truth.argument_sets) {
    json item = {{"id", id}, {"arguments", arguments}};
    auto stance = file.truth.stances.find(id);
    if (stance != file.truth.stances.end()) {
      item["stance"] = ToString(stance->second);
    }
    auto target = file.truth.refute_targets.find(id);
    if (target != file.truth.refute_targets.end()) {
      item["refutes"] = target->second;
    }
    justifications.push_back(std::move(item));
  }
  json out = {{"schema_version", kDebateSchemaVersion},
              {"justifications", std::move(justifications)}};
  if (file.config) out["config"] = GenerativeConfigToJson(*file.config);
  return out;
}

TruthFile TruthFromJson(const json& document) {
  ExpectObject(document, "document");
  CheckKeys(document, {"schema_version", "justifications"}, {"config"},
            "document");
  CheckSchemaVersion(document);

  TruthFile file;
  if (document.contains("config")) {
    const json& c = document.at("config");
    ExpectObject(c, "config");
    CheckKeys(c,
              {"num_arguments", "per_side", "seed", "subsume_fraction",
               "total_votes"},
              {}, "config");
    GenerativeConfig config;
    config.num_arguments =
        static_cast<int>(std::min<std::int64_t>(
            GetInteger(c, "num_arguments", "config"),
            std::numeric_limits<int>::max()));
    config.per_side = static_cast<int>(std::min<std::int64_t>(
        GetInteger(c, "per_side", "config"), std::numeric_limits<int>::max()));
    config.seed = GetUnsigned(c, "seed", "config");
    config.subsume_fraction = GetReal(c, "subsume_fraction", "config");
    config.total_votes = GetUnsigned(c, "total_votes", "config");
    try {
      config.Check();
    } catch (const Error& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    file.config = config;
  }

  const json& justifications =
      GetArray(document, "justifications", "document");
  for (std::size_t i = 0; i < justifications.size(); ++i) {
    const std::string where = "justifications[" + std::to_string(i) + "]";
    const json& item = justifications[i];
    ExpectObject(item, where);
    CheckKeys(item, {"id", "stance", "arguments"}, {"refutes"}, where);
    const std::string id = GetString(item, "id", where);
    if (file.truth.argument_sets.contains(id)) {
      throw ParseError(where + ": duplicate id '" + id + "'");
    }
    file.truth.stances.emplace(id, GetStance(item, where));
    std::vector<int> arguments;
    for (const json& a : GetArray(item, "arguments", where)) {
      if (!a.is_number_integer() || a.get<std::int64_t>() < 0 ||
          a.get<std::int64_t>() >= kMaxArguments) {
        throw ParseError(where + ".arguments holds an invalid index");
      }
      arguments.push_back(a.get<int>());
    }
    std::sort(arguments.begin(), arguments.end());
    arguments.erase(std::unique(arguments.begin(), arguments.end()),
                    arguments.end());
    file.truth.argument_sets.emplace(id, std::move(arguments));
    if (item.contains("refutes")) {
      file.truth.refute_targets.emplace(id, GetString(item, "refutes", where));
    }
  }
  return file;
}

TruthFile LoadTruth(const std::filesystem::path& path) {
  return TruthFromJson(ParseText(ReadFile(path)));
}

void SaveTruth(const TruthFile& file, const std::filesystem::path& path) {
  WriteFileAtomic(path, CanonicalJson(TruthToJson(file)));
}

namespace {

json CoverageToJson(const DebateGraph& graph, const CoverageResult& result) {
  json selected = json::array();
  for (NodeIndex i : result.selected) selected.push_back(graph.at(i).id);
  json groups = json::object();
  for (const auto& [group, count] : result.covered_groups) {
    groups[graph.at(group).id] = count;
  }
  return json{{"selected", std::move(selected)},
              {"answered_signatories", result.answered_signatories},
              {"covered_groups", std::move(groups)},
              {"marginal_gains", result.marginal_gains}};
}

json SideToJson(const DebateGraph& graph, const CoverageResult& coverage,
                const Ranking& ranking) {
  json ranked = json::array();
  for (const RankedJustification& r : ranking.ranked) {
    ranked.push_back(json{{"id", graph.at(r.index).id},
                          {"reach_cardinality", r.reach_cardinality},
                          {"score", r.score}});
  }
  return json{{"coverage", CoverageToJson(graph, coverage)},
              {"ranking", std::move(ranked)},
              {"j_level", ranking.j_level}};
}

std::string_view ToString(SideFilter side) {
  switch (side) {
    case SideFilter::kSupport:
      return "support";
    case SideFilter::kOppose:
      return "oppose";
    case SideFilter::kBoth:
      return "both";
  }
  return "both";
}

}  // namespace

json ReportToJson(const DebateGraph& graph, const Report& report) {
  json out;
  out["petition"] = graph.petition().id;
  out["query"] = json{{"k", report.k},
                      {"mode", ToString(report.answer.mode)},
                      {"answer_depth", report.answer.answer_depth},
                      {"side", ToString(report.side)},
                      {"params", ParamsToJson(report.params)}};
  const Recommendation& rec = report.recommendation;
  if (report.side != SideFilter::kOppose) {
    out["support"] = SideToJson(graph, rec.support, rec.support_ranking);
  }
  if (report.side != SideFilter::kSupport) {
    out["oppose"] = SideToJson(graph, rec.oppose, rec.oppose_ranking);
  }
  return out;
}

void SaveReport(const DebateGraph& graph, const Report& report,
                const std::filesystem::path& path) {
  WriteFileAtomic(path, CanonicalJson(ReportToJson(graph, report)));
}

json SweepToJson(const SweepReport& sweep) {
  json rows = json::array();
  for (const SweepRow& row : sweep.rows) {
    const Summary support = Summarize(row.support);
    const Summary oppose = Summarize(row.oppose);
    const Summary baseline_support = Summarize(row.baseline_support);
    const Summary baseline_oppose = Summarize(row.baseline_oppose);
    rows.push_back(json{
        {"level", row.level},
        {"support", SummaryToJson(support)},
        {"oppose", SummaryToJson(oppose)},
        {"baseline_support", SummaryToJson(baseline_support)},
        {"baseline_oppose", SummaryToJson(baseline_oppose)},
        {"margin_support", support.mean - baseline_support.mean},
        {"margin_oppose", oppose.mean - baseline_oppose.mean},
    });
  }
  return json{{"k", sweep.k},
              {"seeds", sweep.seeds},
              {"params", ParamsToJson(sweep.params)},
              {"rows", std::move(rows)}};
}

}  // namespace petition
