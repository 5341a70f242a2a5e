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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specgap/ablation.hpp"
#include "specgap/agents.hpp"
#include "specgap/conflict.hpp"
#include "specgap/sandbox.hpp"
#include "specgap/task.hpp"

namespace specgap {

enum class ExperimentKind { Main, Recovery, InitVisibility };

std::string_view to_string(ExperimentKind e);
/// "main", "recovery", "init-visibility" (also "init_visibility").
std::optional<ExperimentKind> parse_experiment(std::string_view text);

/// One cell of a plan: what to run for a task at a level.
struct ConditionSpec {
  std::string label;  // Single, Split, Conflicts, Naive, Blind, ..., Split-Hidden
  enum class Pipeline { Single, Split, Conflicts, Merger } pipeline = Pipeline::Single;
  bool init_visible = true;
  std::optional<MergeConditionName> merge;  // Merger pipeline only
  std::optional<SpecLevel> fixed_level;     // overrides the plan level (recovery)
  Bias bias_a = Bias::List;                 // split pipelines only
  Bias bias_b = Bias::Dict;
};

struct RunPlan {
  ExperimentKind experiment = ExperimentKind::Main;
  std::vector<std::string> task_ids;  // empty: every loaded task
  std::vector<SpecLevel> levels = {SpecLevel::L0, SpecLevel::L1, SpecLevel::L2, SpecLevel::L3};
  std::vector<ConditionSpec> conditions;  // empty: the experiment's standard grid
  int repetitions = 1;
  std::uint64_t seed = 0;
  std::string generation_provider = "scripted";
  std::string merger_provider = "scripted";

  /// Standard grids: main = Single/Split/Conflicts per level; recovery =
  /// Single(L0), Naive, Blind, Guided, SpecOnly, Resolve with generation at
  /// L3; init-visibility = {Single, Split} x {Visible, Hidden} per level.
  static std::vector<ConditionSpec> standard_conditions(ExperimentKind e);
};

/// One executed cell. Everything but timing is a pure function of the inputs.
struct RunRecord {
  std::string task_id;
  ExperimentKind experiment = ExperimentKind::Main;
  SpecLevel level = SpecLevel::L0;
  std::string condition;
  bool init_visible = true;
  int repetition = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";  // ok | error
  std::string error_stage;
  std::string error_message;
  std::map<std::string, std::string> prompts;    // role -> artifact digest
  std::map<std::string, std::string> fragments;  // single | a | b | merger -> artifact digest
  std::string merged_source;                     // digest of the evaluated source
  std::optional<ConflictReport> conflict_report;
  std::vector<std::string> discarded;
  std::optional<SandboxResponse> test_outcome;
  std::map<std::string, std::string> providers;
  std::map<std::string, std::string> biases;  // a | b -> list | dict, split pipelines only
  std::map<std::string, double> timing_ms;

  std::string key() const;
  std::optional<double> pass_rate() const;  // percent; 0 for a timed-out empty run

  nlohmann::ordered_json to_json(bool with_timing = true) const;
  static RunRecord from_json(const nlohmann::json& j);
};

/// Reads a JSONL log. Throws DataError on malformed lines or unknown schema.
std::vector<RunRecord> read_records(const std::filesystem::path& path);

/// Content-addressed store: <dir>/<sha256>.txt. Thread-safe.
class ArtifactStore {
 public:
  explicit ArtifactStore(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string put(std::string_view text);  // returns the hex digest
  std::string get(const std::string& digest) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Shared state for executing cells.
struct RunContext {
  std::shared_ptr<AgentProvider> generator;
  std::shared_ptr<AgentProvider> merger;
  std::shared_ptr<Evaluator> evaluator;
  std::shared_ptr<ArtifactStore> artifacts;  // optional

  /// Responses keyed by (provider, prompt, seed) so cells that share a
  /// generation step see the same fragments even with nondeterministic providers.
  std::string cached_complete(AgentProvider& provider, const CompletionRequest& req);

 private:
  std::mutex cache_mutex_;
  std::map<std::string, std::shared_future<std::string>> cache_;
};

/// Seed of a cell: derive_seed(plan seed, task, level, slot, repetition).
std::uint64_t cell_seed(std::uint64_t plan_seed, std::string_view task_id, SpecLevel level, std::string_view slot,
                        int repetition);

/// Runs one cell. Stage failures are recorded (status "error"), not thrown.
RunRecord run_condition(RunContext& ctx, const TaskBundle& task, ExperimentKind experiment, SpecLevel level,
                        const ConditionSpec& cond, int repetition, std::uint64_t plan_seed);

struct RunOptions {
  int workers = 1;
  std::optional<std::filesystem::path> out;  // JSONL log; artifacts go to <out>.artifacts/
  std::function<void(const RunRecord&)> on_record;
};

/// Executes task x level x condition x repetition, ordered by that key.
/// Cells whose key is already in the log are skipped and returned as read.
std::vector<RunRecord> run_plan(const RunPlan& plan, const std::vector<TaskBundle>& tasks, RunContext& ctx,
                                const RunOptions& options);

}  // namespace specgap
