// Copyright 2026 The specgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "specgap/error.hpp"
#include "specgap/fixtures.hpp"
#include "specgap/report.hpp"
#include "test_util.hpp"

using namespace specgap;
using specgap::testing::source_dir;
namespace fs = std::filesystem;

namespace {

AssetPaths assets() { return {source_dir() / "assets"}; }

std::vector<RunRecord> scripted(ExperimentKind kind, int reps = 1) {
  static const auto tasks = load_tasks(assets().tasks());
  RunContext ctx;
  ctx.generator = std::make_shared<ScriptedProvider>();
  ctx.merger = ctx.generator;
  ctx.evaluator = std::make_shared<RecordedEvaluator>(assets().sandbox());
  RunPlan plan;
  plan.experiment = kind;
  plan.repetitions = reps;
  plan.seed = 3;
  return run_plan(plan, tasks, ctx, {});
}

std::vector<RunRecord> round_trip(const std::vector<RunRecord>& rs) {
  fs::path p = fs::temp_directory_path() / ("specgap_report_" + std::to_string(::getpid()) + ".jsonl");
  write_text_file(p, records_jsonl(rs, true));
  auto back = read_records(p);
  fs::remove(p);
  return back;
}

}  // namespace

TEST_CASE("scripted main run: positive gap at every level and monotone conflicts") {
  ReportBundle b = summarize(scripted(ExperimentKind::Main));
  REQUIRE(b.level_table.size() == 4);
  for (const auto& row : b.level_table) {
    REQUIRE(row.gap());
    CHECK(*row.gap() > 0.0);
  }
  CHECK(*b.level_table[0].split > *b.level_table[3].split);
  for (std::size_t i = 1; i < 4; ++i) CHECK(*b.level_table[i].conflicts >= *b.level_table[i - 1].conflicts);
  CHECK(b.detector_table.back().label == "All");
  CHECK(b.error_records == 0);
}

TEST_CASE("a single record gives a one-row table without spread") {
  auto rs = scripted(ExperimentKind::Main);
  std::vector<RunRecord> one = {rs.front()};
  ReportBundle b = summarize(one);
  REQUIRE(b.level_table.size() == 1);
  CHECK(b.level_table[0].single);
  CHECK_FALSE(b.level_table[0].split);
  CHECK_FALSE(b.level_table[0].gap());
  REQUIRE(b.curves.size() == 1);
  CHECK_FALSE(b.curves[0].points[0].sd);
  CHECK_THROWS_AS(summarize({}), DataError);
}

TEST_CASE("repetitions produce a spread for curve points") {
  ReportBundle b = summarize(scripted(ExperimentKind::Main, 2));
  for (const auto& s : b.curves) {
    for (const auto& p : s.points) {
      REQUIRE(p.sd);
      CHECK(*p.sd == doctest::Approx(0.0));  // the scripted agents are deterministic
    }
  }
}

TEST_CASE("replayed reference records reproduce the recovery table") {
  auto records = read_records(assets().golden() / "reference_runs.jsonl");
  ReportBundle b = summarize(records);
  std::map<std::string, std::pair<int, int>> expected = {{"Single", {30, 31}}, {"Naive", {0, 31}},
                                                         {"Blind", {14, 31}},  {"Guided", {2, 31}},
                                                         {"SpecOnly", {30, 31}}, {"Resolve", {30, 31}}};
  REQUIRE(b.condition_table.size() == 6);
  for (const auto& row : b.condition_table) {
    CAPTURE(row.condition);
    CHECK(row.passed == expected.at(row.condition).first);
    CHECK(row.total == expected.at(row.condition).second);
  }
  std::string csv = emit_csv(b, CsvTable::Conditions);
  CHECK(csv.find("recovery,SpecOnly,L3,30,31,96.8,100.0,1") != std::string::npos);
  CHECK(csv.find("recovery,Guided,L3,2,31,6.5,0.0,1") != std::string::npos);
  CHECK(csv.find("recovery,Blind,L3,14,31,45.2,0.0,1") != std::string::npos);
  CHECK(csv.find("recovery,Naive,L3,0,31,0.0,0.0,1") != std::string::npos);
  REQUIRE(b.effects.size() == 1);
  CHECK(b.effects[0].name == "recovery");
}

TEST_CASE("emit is byte-stable and survives a log round trip") {
  auto rs = scripted(ExperimentKind::Main);
  auto iv = scripted(ExperimentKind::InitVisibility);
  rs.insert(rs.end(), iv.begin(), iv.end());
  ReportBundle b = summarize(rs);
  ReportBundle again = summarize(round_trip(rs));
  for (auto f : {ReportFormat::Csv, ReportFormat::Json, ReportFormat::Plotdata}) {
    CHECK(emit(b, f) == emit(b, f));
    CHECK(emit(b, f) == emit(again, f));
  }
  CHECK(emit_audit(b) == emit_audit(again));
  CHECK(emit_csv(b).rfind("level,single,split,gap,conflicts\n", 0) == 0);
}

TEST_CASE("plot data has four points per main-experiment condition") {
  ReportBundle b = summarize(scripted(ExperimentKind::Main));
  std::string plot = emit_plotdata(b);
  CHECK(plot.rfind("experiment,condition,x,y,err\n", 0) == 0);
  int single = 0, split = 0;
  std::istringstream in(plot);
  std::string line;
  while (std::getline(in, line)) {
    single += line.rfind("main,Single,", 0) == 0;
    split += line.rfind("main,Split,", 0) == 0;
  }
  CHECK(single == 4);
  CHECK(split == 4);
}

TEST_CASE("every emitted cell is traceable to contributing records") {
  auto rs = scripted(ExperimentKind::Main);
  auto rec = scripted(ExperimentKind::Recovery);
  rs.insert(rs.end(), rec.begin(), rec.end());
  ReportBundle b = summarize(rs);
  std::set<std::string> hashes;
  for (const auto& r : rs) hashes.insert(record_hash(r));
  for (const auto& row : b.level_table) {
    std::string id = "levels." + std::string(to_string(row.level));
    CHECK(b.audit.count(id + ".single"));
    CHECK(b.audit.count(id + ".split"));
    CHECK(b.audit.count(id + ".gap"));
    CHECK(b.audit.count(id + ".conflicts"));
  }
  for (const auto& row : b.detector_table) CHECK(b.audit.count("detector." + row.label));
  for (const auto& e : b.effects) CHECK(b.audit.count("effects." + e.name));
  for (const auto& [id, hs] : b.audit) {
    CAPTURE(id);
    CHECK_FALSE(hs.empty());
    for (const auto& h : hs) CHECK(hashes.count(h));
  }
}

TEST_CASE("init-visibility effects per level and pooled") {
  ReportBundle b = summarize(scripted(ExperimentKind::InitVisibility));
  std::set<std::string> names;
  for (const auto& e : b.effects) names.insert(e.name);
  CHECK(names == std::set<std::string>{"init-visibility/L0", "init-visibility/L1", "init-visibility/L2",
                                       "init-visibility/L3", "init-visibility/all"});
  for (const auto& e : b.effects) {
    // Coordination never helps the scripted agents.
    CHECK(e.table.main_effect_1 >= 0.0);
  }
}

TEST_CASE("format names parse") {
  CHECK(parse_report_format("plotdata") == ReportFormat::Plotdata);
  CHECK_FALSE(parse_report_format("xml"));
  CHECK(parse_csv_table("detector") == CsvTable::Detector);
  CHECK_FALSE(parse_csv_table("other"));
}
