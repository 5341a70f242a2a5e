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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specgap/experiment.hpp"
#include "specgap/stats.hpp"

namespace specgap {

struct LevelRow {
  SpecLevel level = SpecLevel::L0;
  std::optional<double> single;     // mean pass rate, percent
  std::optional<double> split;      // naive-merged split pass rate, percent
  std::optional<double> conflicts;  // mean reported conflicts
  /// single - split, recomputed on demand.
  std::optional<double> gap() const;
};

struct DetectorRow {
  std::string label;  // L0..L3 or All
  ConfusionCounts counts;
};

struct NamedEffects {
  std::string name;  // e.g. recovery, init-visibility/L0, init-visibility/all
  EffectTable table;
};

struct CurvePoint {
  int x = 0;  // level index
  double mean = 0.0;
  std::optional<double> sd;  // across repetition means; absent for one repetition
};

struct CurveSeries {
  std::string experiment;
  std::string condition;
  std::vector<CurvePoint> points;
};

/// Per-condition summary for the recovery and init-visibility grids.
struct ConditionRow {
  std::string experiment;
  std::string condition;
  SpecLevel level = SpecLevel::L0;
  double mean = 0.0;        // percent
  double success = 0.0;     // percent of runs at or above the success threshold
  int passed = 0;           // summed over runs
  int total = 0;
  int runs = 0;
};

struct ReportBundle {
  std::vector<LevelRow> level_table;
  std::vector<DetectorRow> detector_table;
  std::vector<NamedEffects> effects;
  std::vector<CurveSeries> curves;
  std::vector<ConditionRow> condition_table;
  int error_records = 0;
  /// Table cell id -> content hashes of the records that produced it.
  std::map<std::string, std::vector<std::string>> audit;
};

/// Content hash of a record without timing, as used in the audit map.
std::string record_hash(const RunRecord& r);

/// Aggregates a record stream. Means are taken over repetitions first, then
/// over tasks. Records that failed in a pipeline stage count as 0 percent.
/// Throws DataError on an empty stream.
ReportBundle summarize(const std::vector<RunRecord>& records);

enum class ReportFormat { Csv, Json, Plotdata };
enum class CsvTable { Levels, Detector, Effects, Conditions };

std::optional<ReportFormat> parse_report_format(std::string_view text);
std::optional<CsvTable> parse_csv_table(std::string_view text);

std::string emit_csv(const ReportBundle& bundle, CsvTable table = CsvTable::Levels);
std::string emit_json(const ReportBundle& bundle);
/// One block per series: "experiment,condition,x,y,err" rows.
std::string emit_plotdata(const ReportBundle& bundle);
std::string emit_audit(const ReportBundle& bundle);
std::string emit(const ReportBundle& bundle, ReportFormat format);

}  // namespace specgap
