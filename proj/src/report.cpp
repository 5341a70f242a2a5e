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

#include "specgap/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "specgap/error.hpp"
#include "specgap/hashing.hpp"

namespace specgap {

namespace {

constexpr SpecLevel kLevels[] = {SpecLevel::L0, SpecLevel::L1, SpecLevel::L2, SpecLevel::L3};

double record_rate(const RunRecord& r) {
  auto p = r.pass_rate();
  return p ? *p : 0.0;
}

struct Sample {
  std::map<std::string, std::map<int, std::vector<double>>> by_task_rep;  // task -> rep -> values
  std::vector<std::string> hashes;

  void add(const RunRecord& r, double v, const std::string& hash) {
    by_task_rep[r.task_id][r.repetition].push_back(v);
    hashes.push_back(hash);
  }
  bool empty() const { return by_task_rep.empty(); }

  // Mean over repetitions per task, then over tasks.
  double value() const {
    std::vector<double> per_task;
    for (const auto& [task, reps] : by_task_rep) {
      std::vector<double> rep_means;
      for (const auto& [rep, vs] : reps) rep_means.push_back(mean(vs));
      per_task.push_back(mean(rep_means));
    }
    return mean(per_task);
  }

  // Sample sd of the per-repetition means over tasks.
  std::optional<double> rep_sd() const {
    std::map<int, std::vector<double>> by_rep;
    for (const auto& [task, reps] : by_task_rep) {
      for (const auto& [rep, vs] : reps) by_rep[rep].push_back(mean(vs));
    }
    std::vector<double> means;
    for (const auto& [rep, vs] : by_rep) means.push_back(mean(vs));
    return sample_sd(means);
  }
};

std::string level_name(SpecLevel l) { return std::string(to_string(l)); }

std::string fmt_pct(const std::optional<double>& v, int digits = 1) {
  if (!v) return "";
  std::string s = fmt::format("{:.{}f}", *v, digits);
  if (s == "-0.0" || s == "-0.00") s.erase(0, 1);
  return s;
}

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
}

nlohmann::ordered_json effect_json(const EffectTable& t) {
  nlohmann::ordered_json j;
  j["factor1"] = t.factor1;
  j["levels1"] = t.levels1;
  j["factor2"] = t.factor2;
  j["levels2"] = t.levels2;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      cells.push_back({{t.factor1, t.levels1[i]}, {t.factor2, t.levels2[k]}, {"mean", t.cells[i][k]}});
    }
  }
  j["cells"] = cells;
  j["effect1_at"] = {{t.levels2[0], t.effect1_at[0]}, {t.levels2[1], t.effect1_at[1]}};
  j["effect2_at"] = {{t.levels1[0], t.effect2_at[0]}, {t.levels1[1], t.effect2_at[1]}};
  j["main_effect_1"] = t.main_effect_1;
  j["main_effect_2"] = t.main_effect_2;
  j["interaction"] = t.interaction;
  return j;
}

}  // namespace

std::optional<double> LevelRow::gap() const {
  if (!single || !split) return std::nullopt;
  return *single - *split;
}

std::string record_hash(const RunRecord& r) { return sha256_hex(r.to_json(false).dump()); }

ReportBundle summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw DataError("empty record stream");
  ReportBundle b;

  // (experiment, condition, level) -> pass-rate sample
  std::map<std::tuple<std::string, std::string, SpecLevel>, Sample> rates;
  std::map<SpecLevel, Sample> conflict_counts;
  std::map<std::tuple<std::string, std::string, SpecLevel>, std::vector<const RunRecord*>> members;
  std::map<SpecLevel, std::vector<std::pair<ConfusionCounts, std::string>>> detections;
  std::vector<std::string> hashes;
  hashes.reserve(records.size());

  for (const auto& r : records) {
    std::string h = record_hash(r);
    if (r.status != "ok") ++b.error_records;
    std::string exp(to_string(r.experiment));
    bool evaluated = r.condition != "Conflicts";
    if (evaluated) {
      auto key = std::make_tuple(exp, r.condition, r.level);
      rates[key].add(r, record_rate(r), h);
      members[key].push_back(&r);
    }
    if (r.experiment == ExperimentKind::Main && r.condition == "Conflicts") {
      double n = r.conflict_report ? static_cast<double>(r.conflict_report->conflicts.size()) : 0.0;
      conflict_counts[r.level].add(r, n, h);
    }
    if (r.experiment == ExperimentKind::Main && r.condition == "Split") {
      int n = r.conflict_report ? static_cast<int>(r.conflict_report->conflicts.size()) : 0;
      detections[r.level].emplace_back(classify_detection(record_rate(r), n), h);
    }
  }

  auto sample = [&](const std::string& exp, const std::string& cond, SpecLevel l) -> const Sample* {
    auto it = rates.find({exp, cond, l});
    return it == rates.end() ? nullptr : &it->second;
  };
  auto note = [&](const std::string& id, const std::vector<std::string>& hs) {
    auto& v = b.audit[id];
    v.insert(v.end(), hs.begin(), hs.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };

  // Level table from the main experiment.
  for (SpecLevel l : kLevels) {
    const Sample* s = sample("main", "Single", l);
    const Sample* p = sample("main", "Split", l);
    auto c = conflict_counts.find(l);
    if (!s && !p && c == conflict_counts.end()) continue;
    LevelRow row;
    row.level = l;
    std::string id = "levels." + level_name(l);
    if (s) {
      row.single = s->value();
      note(id + ".single", s->hashes);
    }
    if (p) {
      row.split = p->value();
      note(id + ".split", p->hashes);
    }
    if (s && p) {
      note(id + ".gap", s->hashes);
      note(id + ".gap", p->hashes);
    }
    if (c != conflict_counts.end()) {
      row.conflicts = c->second.value();
      note(id + ".conflicts", c->second.hashes);
    }
    b.level_table.push_back(row);
  }

  // Detector table.
  if (!detections.empty()) {
    DetectorRow all{"All", {}};
    std::vector<std::string> all_hashes;
    for (SpecLevel l : kLevels) {
      auto it = detections.find(l);
      if (it == detections.end()) continue;
      DetectorRow row{level_name(l), {}};
      std::vector<std::string> hs;
      for (const auto& [c, h] : it->second) {
        row.counts += c;
        hs.push_back(h);
      }
      all.counts += row.counts;
      all_hashes.insert(all_hashes.end(), hs.begin(), hs.end());
      note("detector." + row.label, hs);
      b.detector_table.push_back(row);
    }
    note("detector.All", all_hashes);
    b.detector_table.push_back(all);
  }

  // Recovery effects: spec level x conflict report.
  {
    const Sample* blind = sample("recovery", "Blind", SpecLevel::L3);
    const Sample* guided = sample("recovery", "Guided", SpecLevel::L3);
    const Sample* spec_only = sample("recovery", "SpecOnly", SpecLevel::L3);
    const Sample* resolve = sample("recovery", "Resolve", SpecLevel::L3);
    if (blind && guided && spec_only && resolve) {
      EffectTable t = factorial_effects({{{blind->value(), guided->value()}, {spec_only->value(), resolve->value()}}},
                                        "merger_spec", {"L3", "L0"}, "conflict_report", {"no", "yes"});
      b.effects.push_back({"recovery", t});
      for (const Sample* s : {blind, guided, spec_only, resolve}) note("effects.recovery", s->hashes);
    }
  }

  // Init-visibility effects: agent mode x init visibility, per level and pooled.
  {
    Sample pooled[2][2];
    const char* names[2][2] = {{"Split-Hidden", "Split-Visible"}, {"Single-Hidden", "Single-Visible"}};
    bool any_level = false;
    bool pooled_complete = true;
    std::vector<std::string> pooled_hashes;
    for (SpecLevel l : kLevels) {
      const Sample* cells[2][2];
      bool complete = true;
      bool any = false;
      for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
          cells[i][k] = sample("init-visibility", names[i][k], l);
          complete = complete && cells[i][k];
          any = any || cells[i][k];
        }
      }
      if (!any) continue;
      any_level = true;
      if (!complete) {
        pooled_complete = false;
        continue;
      }
      std::array<std::array<std::optional<double>, 2>, 2> v;
      std::string id = "effects.init-visibility/" + level_name(l);
      for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
          v[i][k] = cells[i][k]->value();
          note(id, cells[i][k]->hashes);
          pooled_hashes.insert(pooled_hashes.end(), cells[i][k]->hashes.begin(), cells[i][k]->hashes.end());
          for (const auto& [task, reps] : cells[i][k]->by_task_rep) {
            for (const auto& [rep, vs] : reps) {
              // Pool per (task, level) so each level weighs equally within a task.
              auto& dst = pooled[i][k].by_task_rep[task + "\n" + level_name(l)][rep];
              dst.insert(dst.end(), vs.begin(), vs.end());
            }
          }
        }
      }
      b.effects.push_back({"init-visibility/" + level_name(l),
                           factorial_effects(v, "agents", {"Split", "Single"}, "init", {"Hidden", "Visible"})});
    }
    if (any_level && pooled_complete) {
      std::array<std::array<std::optional<double>, 2>, 2> v;
      for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) v[i][k] = pooled[i][k].value();
      }
      b.effects.push_back(
          {"init-visibility/all", factorial_effects(v, "agents", {"Split", "Single"}, "init", {"Hidden", "Visible"})});
      note("effects.init-visibility/all", pooled_hashes);
    }
  }

  // Degradation curves and per-condition rows.
  std::set<std::pair<std::string, std::string>> series_keys;
  for (const auto& [key, s] : rates) series_keys.insert({std::get<0>(key), std::get<1>(key)});
  for (const auto& [exp, cond] : series_keys) {
    CurveSeries series{exp, cond, {}};
    for (SpecLevel l : kLevels) {
      const Sample* s = sample(exp, cond, l);
      if (!s) continue;
      series.points.push_back({static_cast<int>(l), s->value(), s->rep_sd()});
      note(fmt::format("curves.{}.{}.{}", exp, cond, level_name(l)), s->hashes);
    }
    b.curves.push_back(series);
  }
  // Curves and condition rows follow a stable order: experiment, then the
  // order in which conditions appear in the record stream.
  std::map<std::string, std::map<std::string, std::size_t>> first_seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    first_seen[std::string(to_string(records[i].experiment))].emplace(records[i].condition, i);
  }
  std::stable_sort(b.curves.begin(), b.curves.end(), [&](const CurveSeries& x, const CurveSeries& y) {
    if (x.experiment != y.experiment) return x.experiment < y.experiment;
    return first_seen[x.experiment][x.condition] < first_seen[y.experiment][y.condition];
  });

  for (const auto& series : b.curves) {
    if (series.experiment == "main") continue;
    for (const auto& pt : series.points) {
      SpecLevel l = static_cast<SpecLevel>(pt.x);
      ConditionRow row;
      row.experiment = series.experiment;
      row.condition = series.condition;
      row.level = l;
      row.mean = pt.mean;
      int successes = 0;
      for (const RunRecord* r : members[{series.experiment, series.condition, l}]) {
        ++row.runs;
        if (r->test_outcome) {
          row.passed += r->test_outcome->passed;
          row.total += r->test_outcome->total;
        }
        if (record_rate(*r) >= kSuccessThreshold) ++successes;
      }
      row.success = row.runs ? 100.0 * successes / row.runs : 0.0;
      b.condition_table.push_back(row);
      note(fmt::format("conditions.{}.{}.{}", row.experiment, row.condition, level_name(l)),
           rates[{series.experiment, series.condition, l}].hashes);
    }
  }
  return b;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  if (text == "plotdata") return ReportFormat::Plotdata;
  return std::nullopt;
}

std::optional<CsvTable> parse_csv_table(std::string_view text) {
  if (text == "levels") return CsvTable::Levels;
  if (text == "detector") return CsvTable::Detector;
  if (text == "effects") return CsvTable::Effects;
  if (text == "conditions") return CsvTable::Conditions;
  return std::nullopt;
}

std::string emit_csv(const ReportBundle& b, CsvTable table) {
  std::ostringstream out;
  switch (table) {
    case CsvTable::Levels:
      out << "level,single,split,gap,conflicts\n";
      for (const auto& r : b.level_table) {
        out << to_string(r.level) << ',' << fmt_pct(r.single) << ',' << fmt_pct(r.split) << ',' << fmt_pct(r.gap())
            << ',' << fmt_pct(r.conflicts, 2) << '\n';
      }
      break;
    case CsvTable::Detector:
      out << "level,tp,fn,fp,recall,precision\n";
      for (const auto& r : b.detector_table) {
        out << r.label << ',' << r.counts.tp << ',' << r.counts.fn << ',' << r.counts.fp << ','
            << fmt_pct(r.counts.recall()) << ',' << fmt_pct(r.counts.precision()) << '\n';
      }
      break;
    case CsvTable::Effects:
      out << "name,factor1,factor2,effect1_low,effect1_high,effect2_low,effect2_high,main1,main2,interaction\n";
      for (const auto& e : b.effects) {
        const auto& t = e.table;
        out << e.name << ',' << t.factor1 << ',' << t.factor2 << ',' << fmt_pct(t.effect1_at[0]) << ','
            << fmt_pct(t.effect1_at[1]) << ',' << fmt_pct(t.effect2_at[0]) << ',' << fmt_pct(t.effect2_at[1]) << ','
            << fmt_pct(t.main_effect_1) << ',' << fmt_pct(t.main_effect_2) << ',' << fmt_pct(t.interaction) << '\n';
      }
      break;
    case CsvTable::Conditions:
      out << "experiment,condition,level,passed,total,mean,success,runs\n";
      for (const auto& r : b.condition_table) {
        out << r.experiment << ',' << r.condition << ',' << to_string(r.level) << ',' << r.passed << ',' << r.total
            << ',' << fmt_pct(r.mean) << ',' << fmt_pct(r.success) << ',' << r.runs << '\n';
      }
      break;
  }
  return out.str();
}

std::string emit_json(const ReportBundle& b) {
  nlohmann::ordered_json j;
  j["level_table"] = nlohmann::ordered_json::array();
  for (const auto& r : b.level_table) {
    j["level_table"].push_back({{"level", to_string(r.level)},
                                {"single", opt_json(r.single)},
                                {"split", opt_json(r.split)},
                                {"gap", opt_json(r.gap())},
                                {"conflicts", opt_json(r.conflicts)}});
  }
  j["detector_table"] = nlohmann::ordered_json::array();
  for (const auto& r : b.detector_table) {
    j["detector_table"].push_back({{"level", r.label},
                                   {"tp", r.counts.tp},
                                   {"fn", r.counts.fn},
                                   {"fp", r.counts.fp},
                                   {"recall", opt_json(r.counts.recall())},
                                   {"precision", opt_json(r.counts.precision())}});
  }
  j["effects"] = nlohmann::ordered_json::array();
  for (const auto& e : b.effects) {
    nlohmann::ordered_json ej = {{"name", e.name}};
    ej.update(effect_json(e.table));
    j["effects"].push_back(ej);
  }
  j["curves"] = nlohmann::ordered_json::array();
  for (const auto& s : b.curves) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : s.points) pts.push_back({{"x", p.x}, {"mean", p.mean}, {"sd", opt_json(p.sd)}});
    j["curves"].push_back({{"experiment", s.experiment}, {"condition", s.condition}, {"points", pts}});
  }
  j["condition_table"] = nlohmann::ordered_json::array();
  for (const auto& r : b.condition_table) {
    j["condition_table"].push_back({{"experiment", r.experiment},
                                    {"condition", r.condition},
                                    {"level", to_string(r.level)},
                                    {"passed", r.passed},
                                    {"total", r.total},
                                    {"mean", r.mean},
                                    {"success", r.success},
                                    {"runs", r.runs}});
  }
  j["error_records"] = b.error_records;
  return j.dump(2) + "\n";
}

std::string emit_plotdata(const ReportBundle& b) {
  std::ostringstream out;
  out << "experiment,condition,x,y,err\n";
  for (const auto& s : b.curves) {
    for (const auto& p : s.points) {
      out << s.experiment << ',' << s.condition << ',' << p.x << ',' << fmt::format("{:.4f}", p.mean) << ','
          << (p.sd ? fmt::format("{:.4f}", *p.sd) : std::string()) << '\n';
    }
  }
  return out.str();
}

std::string emit_audit(const ReportBundle& b) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [id, hs] : b.audit) j[id] = hs;
  return j.dump(2) + "\n";
}

std::string emit(const ReportBundle& b, ReportFormat format) {
  switch (format) {
    case ReportFormat::Csv: return emit_csv(b);
    case ReportFormat::Json: return emit_json(b);
    case ReportFormat::Plotdata: return emit_plotdata(b);
  }
  return {};
}

}  // namespace specgap
