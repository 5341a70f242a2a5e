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

#include "specgap/fixtures.hpp"

#include <cstdlib>

#include "specgap/error.hpp"
#include "specgap/task.hpp"

namespace specgap {

namespace fs = std::filesystem;

AssetPaths default_assets() {
  if (const char* v = std::getenv("SPECGAP_ASSETS"); v && *v) return {v};
  return {SPECGAP_ASSET_DIR};
}

std::string ReferenceProvider::complete(const CompletionRequest& req) {
  const GenerationContext* ctx = req.context;
  if (!ctx || !ctx->variant) throw std::invalid_argument("the reference provider needs a generation context");
  std::string file;
  switch (ctx->cfg.role) {
    case AgentRole::Single: file = "responses/single_L0.py"; break;
    case AgentRole::SplitA: file = "agent_a.py"; break;
    case AgentRole::SplitB: file = "agent_b.py"; break;
    case AgentRole::Merger: {
      bool rich = ctx->variant->level == SpecLevel::L0;
      bool report = ctx->report != nullptr;
      file = rich ? (report ? "responses/merger_resolve.py" : "responses/merger_spec_only.py")
                  : (report ? "responses/merger_guided.py" : "responses/merger_blind.py");
      break;
    }
  }
  return read_text_file(dir_ / file);
}

RunPlan reference_plan() {
  RunPlan p;
  p.experiment = ExperimentKind::Recovery;
  p.task_ids = {kReferenceTask};
  p.levels = {SpecLevel::L3};
  p.seed = 0;
  p.generation_provider = "replay";
  p.merger_provider = "replay";
  return p;
}

std::vector<ConditionSpec> same_bias_conditions() {
  using P = ConditionSpec::Pipeline;
  ConditionSpec lists{"SameBias-List", P::Conflicts, false, std::nullopt, std::nullopt, Bias::List, Bias::List};
  ConditionSpec dicts{"SameBias-Dict", P::Conflicts, false, std::nullopt, std::nullopt, Bias::Dict, Bias::Dict};
  return {lists, dicts};
}

std::vector<RunPlan> desk_plans() {
  std::vector<RunPlan> plans;
  for (ExperimentKind e : {ExperimentKind::Main, ExperimentKind::InitVisibility, ExperimentKind::Recovery}) {
    RunPlan p;
    p.experiment = e;
    p.seed = 7;
    plans.push_back(p);
  }
  RunPlan same;
  same.experiment = ExperimentKind::Main;
  same.conditions = same_bias_conditions();
  same.seed = 7;
  plans.push_back(same);
  return plans;
}

std::string records_jsonl(const std::vector<RunRecord>& records, bool with_timing) {
  std::string out;
  for (const auto& r : records) out += r.to_json(with_timing).dump() + "\n";
  return out;
}

namespace {

std::size_t count_files(const fs::path& dir) {
  std::size_t n = 0;
  if (!fs::exists(dir)) return 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.is_regular_file() ? 1 : 0;
  return n;
}

void reset_dir(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
}

}  // namespace

FixtureBuildSummary build_fixtures(const AssetPaths& assets, std::shared_ptr<Evaluator> live) {
  reset_dir(assets.replay());
  reset_dir(assets.sandbox());
  reset_dir(assets.golden());
  auto tasks = load_tasks(assets.tasks());
  auto recorder = std::make_shared<RecordingEvaluator>(std::move(live), assets.sandbox());

  {
    RunContext ctx;
    ctx.generator = std::make_shared<ScriptedProvider>();
    ctx.merger = ctx.generator;
    ctx.evaluator = recorder;
    for (const auto& plan : desk_plans()) run_plan(plan, tasks, ctx, {});
  }
  {
    auto reference = std::make_shared<RecordingProvider>(std::make_shared<ReferenceProvider>(assets.reference()),
                                                        assets.replay());
    RunContext ctx;
    ctx.generator = reference;
    ctx.merger = reference;
    ctx.evaluator = recorder;
    for (const auto& r : run_plan(reference_plan(), tasks, ctx, {})) {
      if (r.status != "ok") throw DataError("reference recording failed for " + r.key() + ": " + r.error_message);
    }
  }

  // Goldens come from a pure replay so they match what readers reproduce.
  {
    RunContext ctx;
    ctx.generator = std::make_shared<ReplayProvider>(assets.replay());
    ctx.merger = ctx.generator;
    ctx.evaluator = std::make_shared<RecordedEvaluator>(assets.sandbox());
    auto records = run_plan(reference_plan(), tasks, ctx, {});
    for (const auto& r : records) {
      if (r.status != "ok") throw DataError("reference replay failed for " + r.key() + ": " + r.error_message);
    }
    write_text_file(assets.golden() / "reference_runs.jsonl", records_jsonl(records));
  }
  for (const auto& t : tasks) {
    if (t.id != "bank_account") continue;
    SkeletonVariant v = make_variant(t.id, t.skeleton, SpecLevel::L1, false);
    write_text_file(assets.golden() / "bank_account_L1_hidden.py", v.source);
    write_text_file(assets.golden() / "bank_account_L1_hidden.json", variant_metadata_json(v));
  }
  return {count_files(assets.replay()), count_files(assets.sandbox()), count_files(assets.golden())};
}

void install_fixtures(const AssetPaths& assets, const fs::path& dest) {
  std::error_code ec;
  fs::create_directories(dest, ec);
  if (ec) throw DataError("cannot create " + dest.string() + ": " + ec.message());
  for (const char* sub : {"tasks", "reference", "fixtures"}) {
    fs::path from = assets.root / sub;
    if (!fs::exists(from)) throw DataError("missing asset directory " + from.string());
    fs::copy(from, dest / sub, fs::copy_options::recursive | fs::copy_options::overwrite_existing, ec);
    if (ec) throw DataError("cannot copy " + from.string() + " to " + dest.string() + ": " + ec.message());
  }
}

}  // namespace specgap
