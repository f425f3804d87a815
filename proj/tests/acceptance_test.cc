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

// Acceptance suite. Each criterion runs in full and prints one PASS/FAIL
// line; the process fails if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "petition/cli.h"
#include "petition/coverage.h"
#include "petition/debate_io.h"
#include "petition/refutes.h"
#include "petition/synthetic.h"
#include "test_support.h"

namespace petition {
namespace {

namespace fs = std::filesystem;
using testing::IdList;
using testing::Ids;
using testing::RandomDebate;
using testing::RandomDebateOptions;

// Collects failures for one criterion; details are printed (capped) so a red
// line comes with its first counterexamples.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (details_.size() < 5) details_.push_back(what);
  }
  void Note(const std::string& note) { notes_.push_back(note); }

  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& details() const { return details_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

std::string Fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

Mode ModeFor(int i) { return static_cast<Mode>(i % 3); }

// 1. Reach equals chain enumeration on small random graphs.
void ReachOracle(Check& check) {
  Rng rng(1001);
  for (int g = 0; g < 200; ++g) {
    RandomDebateOptions options;
    options.mode = Mode::kWsjp;
    options.max_nodes = 12;
    options.max_out = 2;
    const DebateInput in = RandomDebate(rng, options);
    const DebateGraph graph = DebateGraph::Build(in);
    for (NodeIndex j = 0; j < graph.size(); ++j) {
      for (int level = 1; level <= 4; ++level) {
        check.Expect(Ids(graph, Refutes(graph, j, level).Union()) ==
                         testing::BruteForceReach(in, graph.at(j).id, level),
                     "graph " + std::to_string(g) + " origin " +
                         graph.at(j).id + " level " + std::to_string(level));
      }
    }
  }
}

// 2. Greedy stays within 1 - 1/e of the exact optimum.
void GreedyVersusExact(Check& check) {
  Rng rng(2002);
  const double bound = 1.0 - 1.0 / std::exp(1.0);
  std::size_t optimal = 0;
  std::size_t compared = 0;
  double worst = 1.0;
  for (int i = 0; i < 500; ++i) {
    RandomDebateOptions options;
    options.mode = ModeFor(i);
    options.min_nodes = 4;
    options.max_nodes = 32;
    options.max_side = 16;
    options.max_out = 3;
    options.edge_probability = 0.7;
    options.max_signatures = 20;
    const DebateGraph graph = DebateGraph::Build(RandomDebate(rng, options));
    const std::size_t k = 1 + (i / 3) % 3;
    const AnswerConfig config{graph.mode(), 1};
    for (Stance side : {Stance::kSupport, Stance::kOppose}) {
      if (graph.Side(side).empty()) continue;
      const auto greedy = GreedySelect(graph, side, k, config);
      const auto exact = ExactSelect(graph, side, k, config);
      const double g = static_cast<double>(greedy.answered_signatories);
      const double e = static_cast<double>(exact.answered_signatories);
      check.Expect(g >= bound * e && g <= e,
                   "instance " + std::to_string(i) + " greedy " + Fixed(g) +
                       " exact " + Fixed(e));
      ++compared;
      if (greedy.answered_signatories == exact.answered_signatories) {
        ++optimal;
      }
      if (e > 0) worst = std::min(worst, g / e);
    }
  }
  check.Note("exactly optimal in " + std::to_string(optimal) + "/" +
             std::to_string(compared) + " side instances (" +
             Fixed(static_cast<double>(optimal) / compared) +
             "), worst ratio " + Fixed(worst));
}

// 3. Structural and algorithmic invariants.
void Invariants(Check& check) {
  constexpr int kCases = 1000;
  Rng rng(3003);

  auto random_graph = [&rng](int i) {
    RandomDebateOptions options;
    options.mode = ModeFor(i);
    options.max_nodes = 14;
    return DebateGraph::Build(RandomDebate(rng, options));
  };

  std::size_t before = check.failures();
  for (int i = 0; i < kCases; ++i) {
    const DebateGraph g = random_graph(i);
    bool ok = true;
    for (const DebateGraph::Edge& e : g.refutes()) {
      ok &= g.at(e.source).stance != g.at(e.target).stance;
    }
    for (NodeIndex j = 0; j < g.size(); ++j) {
      for (NodeIndex r : Refutes(g, j, 4).Union()) {
        ok &= g.at(r).stance != g.at(j).stance;
      }
    }
    check.Expect(ok, "bipartiteness case " + std::to_string(i));
  }
  check.Note("bipartiteness: " +
             std::to_string(check.failures() - before) + " failures");

  before = check.failures();
  for (int i = 0; i < kCases; ++i) {
    const DebateGraph g = random_graph(i);
    bool ok = true;
    for (NodeIndex j = 0; j < g.size(); ++j) {
      std::vector<NodeIndex> previous;
      for (int level = 1; level <= 5; ++level) {
        std::vector<NodeIndex> current = Refutes(g, j, level).Union();
        ok &= std::includes(current.begin(), current.end(), previous.begin(),
                            previous.end());
        previous = std::move(current);
      }
    }
    check.Expect(ok, "level monotonicity case " + std::to_string(i));
  }
  check.Note("level monotonicity: " +
             std::to_string(check.failures() - before) + " failures");

  before = check.failures();
  for (int i = 0; i < kCases; ++i) {
    const DebateGraph g = random_graph(i);
    const AnswerConfig config{g.mode(), 1 + i % 2};
    bool k_monotone = true;
    bool gains_ok = true;
    bool conserved = true;
    for (Stance side : {Stance::kSupport, Stance::kOppose}) {
      std::uint64_t previous = 0;
      for (std::size_t k = 1; k <= 5; ++k) {
        const CoverageResult r = GreedySelect(g, side, k, config);
        k_monotone &= r.answered_signatories >= previous;
        previous = r.answered_signatories;
        for (std::size_t p = 1; p < r.marginal_gains.size(); ++p) {
          gains_ok &= r.marginal_gains[p] <= r.marginal_gains[p - 1];
        }
        conserved &= r.answered_signatories <= g.TotalSignatures();
      }
    }
    check.Expect(k_monotone, "K monotonicity case " + std::to_string(i));
    check.Expect(gains_ok, "marginal gains case " + std::to_string(i));
    check.Expect(conserved, "conservation case " + std::to_string(i));
  }
  check.Note("K monotonicity / gains / conservation: " +
             std::to_string(check.failures() - before) + " failures");

  // Dyadic parameters keep scaled scores exact in floating point.
  before = check.failures();
  const double gammas[] = {0.25, 0.5, 0.75, 1.0};
  const double weights[] = {0.0, 0.5, 1.0, 2.0};
  for (int i = 0; i < kCases; ++i) {
    const DebateGraph g = random_graph(i);
    const std::uint64_t c = 2 + UniformIndex(rng, 6);
    DebateInput scaled = g.ToInput();
    for (Justification& j : scaled.justifications) j.signatures *= c;
    for (RefutesEdge& e : scaled.refutes) {
      if (e.weight) *e.weight *= c;
    }
    const DebateGraph h = DebateGraph::Build(scaled);
    const ScoringParams params{1 + static_cast<int>(UniformIndex(rng, 4)),
                               gammas[UniformIndex(rng, 4)],
                               weights[UniformIndex(rng, 4)],
                               weights[UniformIndex(rng, 4)]};
    bool same = true;
    for (Stance side : {Stance::kSupport, Stance::kOppose}) {
      const Ranking a = RankByReach(g, side, params);
      const Ranking b = RankByReach(h, side, params);
      same &= a.j_level == b.j_level && a.ranked.size() == b.ranked.size();
      for (std::size_t p = 0; same && p < a.ranked.size(); ++p) {
        same &= a.ranked[p].index == b.ranked[p].index &&
                b.ranked[p].score == static_cast<double>(c) * a.ranked[p].score;
      }
    }
    check.Expect(same, "scale invariance case " + std::to_string(i));
  }
  check.Note("scale argmax-invariance: " +
             std::to_string(check.failures() - before) + " failures");

  before = check.failures();
  for (int i = 0; i < kCases; ++i) {
    RandomDebateOptions options;
    options.mode = Mode::kSjp;
    options.max_nodes = 14;
    const DebateInput sjp = RandomDebate(rng, options);
    DebateInput wsjp = sjp;
    wsjp.mode = Mode::kWsjp;
    for (RefutesEdge& e : wsjp.refutes) e.weight = testing::Signatures(sjp, e.source);
    DebateInput csjp = sjp;
    csjp.mode = Mode::kCsjp;

    const DebateGraph base = DebateGraph::Build(sjp);
    const std::size_t k = 1 + i % 4;
    const Recommendation expected =
        Recommend(base, k, ScoringParams{}, AnswerConfig{Mode::kSjp, 1});
    bool same = true;
    for (const DebateInput* variant : {&wsjp, &csjp}) {
      const DebateGraph g = DebateGraph::Build(*variant);
      const Recommendation got =
          Recommend(g, k, ScoringParams{}, AnswerConfig{g.mode(), 1});
      same &= got.support == expected.support && got.oppose == expected.oppose;
      same &= got.support_ranking.ranked == expected.support_ranking.ranked &&
              got.oppose_ranking.ranked == expected.oppose_ranking.ranked;
    }
    check.Expect(same, "mode reduction case " + std::to_string(i));
  }
  check.Note("mode reduction: " + std::to_string(check.failures() - before) +
             " failures");
}

// 4. Recommendations beat random selections on synthetic ground truth.
void GenerativePipeline(Check& check) {
  const GenerativeConfig config{12, 30, 500, 0, 0.0};
  const std::vector<int> levels = {1, 2, 3, 4};
  const SweepReport sweep =
      SweepLevels(config, levels, 3, 100, ScoringParams{});
  check.Note("level support(mean+-sd) oppose(mean+-sd) baseline_support "
             "baseline_oppose");
  double level1 = 0.0;
  double best_deeper = 0.0;
  for (const SweepRow& row : sweep.rows) {
    const Summary s = Summarize(row.support);
    const Summary o = Summarize(row.oppose);
    const Summary bs = Summarize(row.baseline_support);
    const Summary bo = Summarize(row.baseline_oppose);
    check.Note(std::to_string(row.level) + " " + Fixed(s.mean) + "+-" +
               Fixed(s.stddev) + " " + Fixed(o.mean) + "+-" + Fixed(o.stddev) +
               " " + Fixed(bs.mean) + " " + Fixed(bo.mean) + "  margins " +
               Fixed(s.mean - bs.mean) + " " + Fixed(o.mean - bo.mean));
    check.Expect(s.mean > bs.mean, "support level " +
                                       std::to_string(row.level) +
                                       " does not beat the baseline");
    check.Expect(o.mean > bo.mean, "oppose level " +
                                       std::to_string(row.level) +
                                       " does not beat the baseline");
    const double both = (s.mean + o.mean) / 2.0;
    if (row.level == 1) {
      level1 = both;
    } else {
      best_deeper = std::max(best_deeper, both);
    }
  }
  check.Note(std::string("observation: best of levels 2-4 ") +
             (best_deeper >= level1 ? ">=" : "<") + " level 1 (" +
             Fixed(best_deeper) + " vs " + Fixed(level1) + ")");
}

// 5. Hand fixture values.
void HandFixture(Check& check) {
  const DebateGraph g = testing::F1();
  const NodeIndex p1 = g.IndexOf("p1");
  check.Expect(Ids(g, Refutes(g, p1, 2).Union()) ==
                   std::set<std::string>{"n1", "n2"},
               "refutes(p1, 2)");
  const double score = DiscountedScore(g, p1, ScoringParams{2, 0.5, 0.0, 0.0});
  check.Expect(std::fabs(score - 3.25) <= 1e-12,
               "discounted score " + Fixed(score));
  const AnswerConfig sjp{Mode::kSjp, 1};
  check.Expect(GreedySelect(g, Stance::kOppose, 1, sjp).answered_signatories ==
                   6,
               "oppose K=1 coverage");
  check.Expect(
      GreedySelect(g, Stance::kSupport, 2, sjp).answered_signatories == 14,
      "support K=2 coverage");
  check.Expect(
      ExactSelect(g, Stance::kSupport, 2, sjp).answered_signatories == 14,
      "support K=2 exact optimum");
  check.Expect(
      RankByReach(g, Stance::kSupport, ScoringParams{2, 0.5, 1.0, 1.0})
              .j_level == 2,
      "j_level(support, 2)");
}

std::string RunCliCapture(const std::vector<std::string>& args, int& status) {
  std::vector<const char*> argv = {"petition"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  status = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

// 6. Canonical serialization and reproducible CLI reports.
void Serialization(Check& check) {
  const fs::path dir =
      fs::temp_directory_path() /
      ("petition_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Rng rng(6006);
  for (int i = 0; i < 100; ++i) {
    RandomDebateOptions options;
    options.mode = ModeFor(i);
    DebateInput in = RandomDebate(rng, options);
    if (i % 5 == 0 && !in.justifications.empty()) {
      in.justifications.back().content = "text \"with\" escapes\n\t";
    }
    const DebateGraph g = DebateGraph::Build(in);
    const fs::path a = dir / "a.json";
    const fs::path b = dir / "b.json";
    SaveDebate(g, a);
    const DebateGraph loaded = LoadDebate(a);
    SaveDebate(loaded, b);
    // Permuted inputs must serialize identically as well.
    DebateInput reversed = in;
    std::reverse(reversed.justifications.begin(), reversed.justifications.end());
    std::reverse(reversed.refutes.begin(), reversed.refutes.end());
    const bool permuted_equal =
        CanonicalJson(DebateToJson(DebateGraph::Build(reversed))) ==
        ReadFile(a);
    check.Expect(loaded == g && ReadFile(a) == ReadFile(b) && permuted_equal,
                 "round trip graph " + std::to_string(i));
  }

  const fs::path f1 = dir / "f1.json";
  SaveDebate(testing::F1(), f1);
  const std::vector<std::string> base = {"recommend", "--input", f1.string(),
                                         "--level", "2", "--gamma", "0.5",
                                         "--alpha", "0", "--beta", "0", "--k"};
  for (const char* k : {"1", "2"}) {
    std::vector<std::string> args = base;
    args.push_back(k);
    int s1 = -1, s2 = -1;
    const std::string first = RunCliCapture(args, s1);
    const std::string second = RunCliCapture(args, s2);
    check.Expect(s1 == 0 && s2 == 0 && first == second,
                 std::string("CLI byte-identical for k=") + k);
    const nlohmann::json doc = nlohmann::json::parse(first);
    if (std::string(k) == "1") {
      check.Expect(doc["oppose"]["coverage"]["answered_signatories"] == 6,
                   "CLI oppose K=1 coverage");
    } else {
      check.Expect(doc["support"]["coverage"]["answered_signatories"] == 14,
                   "CLI support K=2 coverage");
      check.Expect(doc["support"]["j_level"] == 2, "CLI j_level");
      check.Expect(doc["support"]["ranking"][0]["id"] == "p1" &&
                       first.find("\"score\": 3.250000") != std::string::npos,
                   "CLI p1 score 3.250000");
    }
  }
  fs::remove_all(dir);
}

struct Criterion {
  int number;
  std::string name;
  double time_limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace petition

int main() {
  using namespace petition;
  const std::vector<Criterion> criteria = {
      {1, "reach-oracle equivalence", 5.0, ReachOracle},
      {2, "greedy vs exact coverage", 60.0, GreedyVersusExact},
      {3, "invariant suite", 0.0, Invariants},
      {4, "generative pipeline", 120.0, GenerativePipeline},
      {5, "hand fixture F1", 0.0, HandFixture},
      {6, "serialization", 0.0, Serialization},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    c.run(check);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = c.time_limit_seconds == 0.0 ||
                         seconds < c.time_limit_seconds;
    const bool pass = check.failures() == 0 && in_time;
    failed += !pass;
    std::printf("[%s] criterion %d: %s (%zu checks, %zu failures, %.3f s",
                pass ? "PASS" : "FAIL", c.number, c.name.c_str(), check.cases(),
                check.failures(), seconds);
    if (c.time_limit_seconds > 0.0) {
      std::printf(", limit %.0f s", c.time_limit_seconds);
    }
    std::printf(")\n");
    for (const std::string& note : check.notes()) {
      std::printf("    %s\n", note.c_str());
    }
    for (const std::string& detail : check.details()) {
      std::printf("    failed: %s\n", detail.c_str());
    }
  }
  std::printf("%s: %d of %zu criteria failed\n", failed ? "FAIL" : "PASS",
              failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
