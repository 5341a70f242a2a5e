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

#include "specgap/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

#include "specgap/error.hpp"
#include "specgap/hashing.hpp"
#include "specgap/merge.hpp"

namespace specgap {

namespace {

constexpr int kSchema = 1;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Raised inside a cell to name the failing stage.
struct StageError {
  std::string stage;
  std::string message;
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError{name, e.what()};
  }
}

std::string seed_text(std::uint64_t s) { return std::to_string(s); }

}  // namespace

std::string_view to_string(ExperimentKind e) {
  switch (e) {
    case ExperimentKind::Main: return "main";
    case ExperimentKind::Recovery: return "recovery";
    case ExperimentKind::InitVisibility: return "init-visibility";
  }
  return "?";
}

std::optional<ExperimentKind> parse_experiment(std::string_view text) {
  if (text == "main") return ExperimentKind::Main;
  if (text == "recovery") return ExperimentKind::Recovery;
  if (text == "init-visibility" || text == "init_visibility") return ExperimentKind::InitVisibility;
  return std::nullopt;
}

std::vector<ConditionSpec> RunPlan::standard_conditions(ExperimentKind e) {
  using P = ConditionSpec::Pipeline;
  switch (e) {
    case ExperimentKind::Main:
      return {{"Single", P::Single, true, std::nullopt, std::nullopt},
              {"Split", P::Split, false, std::nullopt, std::nullopt},
              {"Conflicts", P::Conflicts, false, std::nullopt, std::nullopt}};
    case ExperimentKind::Recovery:
      return {{"Single", P::Single, true, std::nullopt, SpecLevel::L0},
              {"Naive", P::Split, false, std::nullopt, SpecLevel::L3},
              {"Blind", P::Merger, false, MergeConditionName::Blind, SpecLevel::L3},
              {"Guided", P::Merger, false, MergeConditionName::Guided, SpecLevel::L3},
              {"SpecOnly", P::Merger, false, MergeConditionName::SpecOnly, SpecLevel::L3},
              {"Resolve", P::Merger, false, MergeConditionName::Resolve, SpecLevel::L3}};
    case ExperimentKind::InitVisibility:
      return {{"Single-Visible", P::Single, true, std::nullopt, std::nullopt},
              {"Single-Hidden", P::Single, false, std::nullopt, std::nullopt},
              {"Split-Visible", P::Split, true, std::nullopt, std::nullopt},
              {"Split-Hidden", P::Split, false, std::nullopt, std::nullopt}};
  }
  return {};
}

std::string RunRecord::key() const {
  return task_id + "|" + std::string(to_string(experiment)) + "|" + std::string(to_string(level)) + "|" + condition +
         "|" + std::to_string(repetition);
}

std::optional<double> RunRecord::pass_rate() const {
  if (!test_outcome) return std::nullopt;
  if (test_outcome->total == 0) {
    if (test_outcome->timed_out) return 0.0;
    return std::nullopt;
  }
  return 100.0 * test_outcome->passed / test_outcome->total;
}

nlohmann::ordered_json RunRecord::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["task_id"] = task_id;
  j["experiment"] = to_string(experiment);
  j["level"] = to_string(level);
  j["condition"] = condition;
  j["init_visible"] = init_visible;
  j["repetition"] = repetition;
  j["seed"] = seed;
  j["status"] = status;
  if (status != "ok") {
    j["error_stage"] = error_stage;
    j["error_message"] = error_message;
  }
  j["prompts"] = prompts;
  j["fragments"] = fragments;
  j["merged_source"] = merged_source.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(merged_source);
  j["conflict_report"] = conflict_report ? report_to_json(*conflict_report) : nlohmann::ordered_json();
  j["discarded"] = discarded;
  if (test_outcome) {
    auto t = test_outcome->to_json();
    if (auto r = pass_rate()) {
      t["pass_rate"] = *r;
      t["success"] = *r >= 80.0;
    }
    j["test_outcome"] = t;
  } else {
    j["test_outcome"] = nullptr;
  }
  j["providers"] = providers;
  if (!biases.empty()) j["biases"] = biases;
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  RunRecord r;
  try {
    if (j.at("schema").get<int>() != kSchema) throw DataError("unsupported record schema " + j.at("schema").dump());
    r.task_id = j.at("task_id").get<std::string>();
    auto e = parse_experiment(j.at("experiment").get<std::string>());
    if (!e) throw DataError("unknown experiment " + j.at("experiment").dump());
    r.experiment = *e;
    auto lvl = parse_level(j.at("level").get<std::string>());
    if (!lvl) throw DataError("unknown level " + j.at("level").dump());
    r.level = *lvl;
    r.condition = j.at("condition").get<std::string>();
    r.init_visible = j.at("init_visible").get<bool>();
    r.repetition = j.at("repetition").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.error_stage = j.value("error_stage", "");
    r.error_message = j.value("error_message", "");
    r.prompts = j.value("prompts", std::map<std::string, std::string>{});
    r.fragments = j.value("fragments", std::map<std::string, std::string>{});
    if (j.contains("merged_source") && !j["merged_source"].is_null()) r.merged_source = j["merged_source"].get<std::string>();
    if (j.contains("conflict_report") && !j["conflict_report"].is_null()) {
      r.conflict_report = report_from_json(j["conflict_report"]);
    }
    r.discarded = j.value("discarded", std::vector<std::string>{});
    if (j.contains("test_outcome") && !j["test_outcome"].is_null()) {
      r.test_outcome = SandboxResponse::from_json(j["test_outcome"]);
    }
    r.providers = j.value("providers", std::map<std::string, std::string>{});
    r.biases = j.value("biases", std::map<std::string, std::string>{});
    r.timing_ms = j.value("timing_ms", std::map<std::string, double>{});
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed run record: ") + e.what());
  }
  return r;
}

std::vector<RunRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::vector<RunRecord> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(RunRecord::from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::string ArtifactStore::put(std::string_view text) {
  std::string digest = sha256_hex(text);
  auto path = dir_ / (digest + ".txt");
  if (!std::filesystem::exists(path)) write_text_file(path, text);
  return digest;
}

std::string ArtifactStore::get(const std::string& digest) const { return read_text_file(dir_ / (digest + ".txt")); }

std::string RunContext::cached_complete(AgentProvider& provider, const CompletionRequest& req) {
  std::string key = sha256_hex(provider.id() + "\n" + seed_text(req.seed) + "\n" + req.prompt.text());
  std::promise<std::string> promise;
  std::shared_future<std::string> future;
  bool owner = false;
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      future = promise.get_future().share();
      cache_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(provider.complete(req));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::uint64_t cell_seed(std::uint64_t plan_seed, std::string_view task_id, SpecLevel level, std::string_view slot,
                        int repetition) {
  std::string ps = seed_text(plan_seed);
  std::string rep = std::to_string(repetition);
  return derive_seed({ps, task_id, to_string(level), slot, rep});
}

RunRecord run_condition(RunContext& ctx, const TaskBundle& task, ExperimentKind experiment, SpecLevel level,
                        const ConditionSpec& cond, int repetition, std::uint64_t plan_seed) {
  if (cond.fixed_level) level = *cond.fixed_level;
  RunRecord rec;
  rec.task_id = task.id;
  rec.experiment = experiment;
  rec.level = level;
  rec.condition = cond.label;
  rec.init_visible = cond.init_visible;
  rec.repetition = repetition;
  rec.seed = cell_seed(plan_seed, task.id, level, cond.label, repetition);
  rec.providers["generation"] = ctx.generator->id();
  if (cond.pipeline == ConditionSpec::Pipeline::Merger) rec.providers["merger"] = ctx.merger->id();
  if (cond.pipeline != ConditionSpec::Pipeline::Conflicts) rec.providers["evaluator"] = ctx.evaluator->id();

  auto store = [&](std::string_view text) { return ctx.artifacts ? ctx.artifacts->put(text) : sha256_hex(text); };
  auto t_start = Clock::now();

  auto generate = [&](AgentProvider& provider, const Prompt& prompt, std::uint64_t seed, double temperature,
                      const GenerationContext& gctx, const std::string& role) {
    rec.prompts[role] = store(prompt.text());
    CompletionRequest req{prompt, seed, temperature, &gctx};
    auto t0 = Clock::now();
    std::string response = ctx.cached_complete(provider, req);
    rec.timing_ms["generate_" + role] = ms_since(t0);
    std::string code = extract_code(response);
    rec.fragments[role] = store(code);
    return code;
  };
  auto evaluate = [&](const std::string& source) {
    rec.merged_source = store(source);
    auto t0 = Clock::now();
    rec.test_outcome = ctx.evaluator->evaluate({source, task.test_source, task.timeout_seconds});
    rec.timing_ms["evaluate"] = ms_since(t0);
  };

  try {
    if (cond.pipeline == ConditionSpec::Pipeline::Single) {
      std::string code = stage("generate", [&] {
        SkeletonVariant variant = make_variant(task.id, task.skeleton, level, cond.init_visible);
        GenerationContext g;
        g.task = &task;
        g.cfg = AgentConfig::for_role(AgentRole::Single);
        g.variant = &variant;
        Prompt prompt = build_generation_prompt(g.cfg, variant, nullptr);
        return generate(*ctx.generator, prompt, rec.seed, g.cfg.temperature, g, "single");
      });
      stage("evaluate", [&] { evaluate(code); });
    } else {
      // Both split agents, shared by every condition built on the same fragments.
      std::string slot = cond.init_visible ? "split-visible" : "split";
      std::uint64_t split_seed = cell_seed(plan_seed, task.id, level, slot, repetition);
      MethodAssignment assignment = stage("split", [&] { return split_methods(task.skeleton); });
      std::string frag_a, frag_b;
      rec.biases["a"] = std::string(to_string(cond.bias_a));
      rec.biases["b"] = std::string(to_string(cond.bias_b));
      stage("generate", [&] {
        SkeletonVariant variant = make_variant(task.id, task.skeleton, level, cond.init_visible);
        for (AgentRole role : {AgentRole::SplitA, AgentRole::SplitB}) {
          GenerationContext g;
          g.task = &task;
          g.cfg = AgentConfig::for_role(role);
          g.cfg.bias = role == AgentRole::SplitA ? cond.bias_a : cond.bias_b;
          g.variant = &variant;
          g.assignment = &assignment;
          Prompt prompt = build_generation_prompt(g.cfg, variant, &assignment);
          std::string role_name = role == AgentRole::SplitA ? "a" : "b";
          std::uint64_t seed = derive_seed({seed_text(split_seed), to_string(role)});
          (role == AgentRole::SplitA ? frag_a : frag_b) =
              generate(*ctx.generator, prompt, seed, g.cfg.temperature, g, role_name);
        }
      });
      ConflictReport report = stage("detect", [&] {
        auto t0 = Clock::now();
        auto r = detect_conflicts(frag_a, frag_b);
        rec.timing_ms["detect"] = ms_since(t0);
        return r;
      });
      rec.conflict_report = report;
      if (cond.pipeline == ConditionSpec::Pipeline::Split) {
        std::string merged = stage("merge", [&] {
          MergeResult m = naive_merge_detailed(frag_a, frag_b, assignment, task.class_name);
          rec.discarded = m.discarded;
          return m.source;
        });
        stage("evaluate", [&] { evaluate(merged); });
      } else if (cond.pipeline == ConditionSpec::Pipeline::Merger) {
        if (!cond.merge) throw StageError{"plan", "merger condition without a merge kind"};
        MergeCondition mc = MergeCondition::of(*cond.merge);
        std::string merged = stage("merger", [&] {
          SkeletonVariant spec = make_variant(task.id, task.skeleton, *mc.merger_spec_level, false);
          GenerationContext g;
          g.task = &task;
          g.cfg = AgentConfig::for_role(AgentRole::Merger);
          g.variant = &spec;
          g.fragment_a = frag_a;
          g.fragment_b = frag_b;
          g.report = mc.include_conflict_report ? &report : nullptr;
          Prompt prompt = build_merger_prompt(mc, spec, frag_a, frag_b, g.report);
          return generate(*ctx.merger, prompt, rec.seed, g.cfg.temperature, g, "merger");
        });
        stage("evaluate", [&] { evaluate(merged); });
      }
    }
  } catch (const StageError& e) {
    rec.status = "error";
    rec.error_stage = e.stage;
    rec.error_message = e.message;
  }
  rec.timing_ms["total"] = ms_since(t_start);
  return rec;
}

namespace {

struct Cell {
  const TaskBundle* task;
  SpecLevel level;
  std::size_t cond_index;
  int repetition;
  std::string key;
};

}  // namespace

std::vector<RunRecord> run_plan(const RunPlan& plan, const std::vector<TaskBundle>& tasks, RunContext& ctx,
                                const RunOptions& options) {
  if (plan.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  std::vector<ConditionSpec> conditions =
      plan.conditions.empty() ? RunPlan::standard_conditions(plan.experiment) : plan.conditions;

  std::vector<const TaskBundle*> selected;
  if (plan.task_ids.empty()) {
    for (const auto& t : tasks) selected.push_back(&t);
  } else {
    for (const auto& id : plan.task_ids) {
      auto it = std::find_if(tasks.begin(), tasks.end(), [&](const TaskBundle& t) { return t.id == id; });
      if (it == tasks.end()) throw DataError("unknown task '" + id + "'");
      selected.push_back(&*it);
    }
  }
  std::sort(selected.begin(), selected.end(), [](auto* a, auto* b) { return a->id < b->id; });

  std::vector<Cell> cells;
  std::set<std::string> seen;
  for (const auto* task : selected) {
    std::vector<Cell> for_task;
    for (SpecLevel level : plan.levels) {
      for (std::size_t c = 0; c < conditions.size(); ++c) {
        SpecLevel effective = conditions[c].fixed_level.value_or(level);
        for (int rep = 0; rep < plan.repetitions; ++rep) {
          RunRecord probe;
          probe.task_id = task->id;
          probe.experiment = plan.experiment;
          probe.level = effective;
          probe.condition = conditions[c].label;
          probe.repetition = rep;
          std::string key = probe.key();
          if (seen.insert(key).second) for_task.push_back({task, effective, c, rep, key});
        }
      }
    }
    std::stable_sort(for_task.begin(), for_task.end(), [](const Cell& a, const Cell& b) {
      if (a.level != b.level) return a.level < b.level;
      if (a.cond_index != b.cond_index) return a.cond_index < b.cond_index;
      return a.repetition < b.repetition;
    });
    cells.insert(cells.end(), for_task.begin(), for_task.end());
  }

  std::map<std::string, RunRecord> existing;
  std::ofstream log;
  if (options.out) {
    if (std::filesystem::exists(*options.out)) {
      // An interrupted run can leave a torn final line; drop it before resuming.
      std::string text = read_text_file(*options.out);
      std::size_t keep = text.empty() || text.back() == '\n' ? text.size() : text.rfind('\n') + 1;
      if (keep != text.size()) std::filesystem::resize_file(*options.out, keep);
      for (auto& r : read_records(*options.out)) existing.emplace(r.key(), std::move(r));
    }
    if (options.out->has_parent_path()) std::filesystem::create_directories(options.out->parent_path());
    log.open(*options.out, std::ios::app);
    if (!log) throw DataError("cannot append to " + options.out->string());
    if (!ctx.artifacts) {
      auto dir = *options.out;
      dir += ".artifacts";
      ctx.artifacts = std::make_shared<ArtifactStore>(dir);
    }
  }

  std::vector<std::optional<RunRecord>> results(cells.size());
  std::vector<bool> fresh(cells.size(), false);
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto it = existing.find(cells[i].key);
    if (it != existing.end()) {
      const ConditionSpec& cond = conditions[cells[i].cond_index];
      std::uint64_t expect = cell_seed(plan.seed, cells[i].task->id, cells[i].level, cond.label, cells[i].repetition);
      if (it->second.seed != expect) {
        throw DataError("existing log entry " + it->first + " was produced with a different plan seed");
      }
      results[i] = it->second;
    } else {
      todo.push_back(i);
    }
  }

  // Workers fill results; the appender writes fresh records in cell order.
  std::mutex mu;
  std::size_t next_write = 0;
  std::atomic<std::size_t> next_job{0};
  auto flush_ready = [&] {
    while (next_write < cells.size() && results[next_write]) {
      if (fresh[next_write]) {
        if (log.is_open()) {
          log << results[next_write]->to_json().dump() << "\n";
          log.flush();
        }
        if (options.on_record) options.on_record(*results[next_write]);
      }
      ++next_write;
    }
  };
  {
    std::lock_guard lock(mu);
    flush_ready();
  }
  auto worker = [&] {
    while (true) {
      std::size_t j = next_job++;
      if (j >= todo.size()) return;
      const Cell& cell = cells[todo[j]];
      RunRecord rec = run_condition(ctx, *cell.task, plan.experiment, cell.level, conditions[cell.cond_index],
                                    cell.repetition, plan.seed);
      std::lock_guard lock(mu);
      results[todo[j]] = std::move(rec);
      fresh[todo[j]] = true;
      flush_ready();
    }
  };
  int n = std::max(1, std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(todo.size(), 1))));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  {
    std::lock_guard lock(mu);
    flush_ready();
  }
  if (log.is_open() && !log) throw DataError("write failed for " + options.out->string());

  std::vector<RunRecord> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace specgap
