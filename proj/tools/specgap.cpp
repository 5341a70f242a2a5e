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

// specgap: command-line entry point for ablation, conflict detection,
// merging, agent runs, experiments, metrics and reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "specgap/ablation.hpp"
#include "specgap/agents.hpp"
#include "specgap/config.hpp"
#include "specgap/conflict.hpp"
#include "specgap/error.hpp"
#include "specgap/experiment.hpp"
#include "specgap/fixtures.hpp"
#include "specgap/merge.hpp"
#include "specgap/report.hpp"
#include "specgap/sandbox.hpp"
#include "specgap/skeleton.hpp"
#include "specgap/stats.hpp"
#include "specgap/task.hpp"

namespace fs = std::filesystem;
using namespace specgap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand.
struct Common {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string config;
};

void add_common(CLI::App* app, Common& c, const std::string& formats) {
  app->add_option("--seed", c.seed, "Seed for generation and plans");
  app->add_option("--out", c.out, "Write output here instead of stdout");
  app->add_option("--format", c.format, "Output format: " + formats);
  app->add_option("--config", c.config, "key = value settings file (also SPECGAP_CONFIG)");
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  try {
    write_text_file(out, text);
  } catch (const std::exception& e) {
    throw DataError("cannot write " + out + ": " + e.what());
  }
}

std::string require_format(const std::string& given, std::initializer_list<std::string_view> allowed) {
  std::string f = given.empty() ? std::string(*allowed.begin()) : given;
  for (auto a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("unsupported --format '" + f + "' (expected " + list + ")");
}

// Config file, then flags, then environment.
Settings resolve_settings(const Common& c, const std::map<std::string, std::string>& flags) {
  Settings s;
  std::string path = c.config;
  if (path.empty()) {
    if (const char* v = std::getenv("SPECGAP_CONFIG"); v && *v) path = v;
  }
  if (!path.empty()) s.merge_file(path);
  for (const auto& [k, v] : flags) {
    if (!v.empty()) s.set(k, v);
  }
  if (c.seed) s.set("seed", std::to_string(*c.seed));
  s.merge_env();
  return s;
}

SpecLevel level_arg(const std::string& text) {
  auto l = parse_level(text);
  if (!l) throw UsageError("unknown level '" + text + "' (expected L0..L3)");
  return *l;
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::shared_ptr<AgentProvider> provider_from(const std::string& id, const Settings& s) {
  if (id == "external") {
    ExternalConfig cfg;
    cfg.base_url = s.get_or("api_base", "");
    cfg.model = s.get_or("model", "");
    cfg.max_in_flight = s.get_int("max_in_flight", cfg.max_in_flight);
    return std::make_shared<ExternalProvider>(ExternalConfig::from_env(cfg));
  }
  fs::path fixtures = s.get_or("fixtures", default_assets().replay().string());
  return make_provider(id, fixtures);
}

std::shared_ptr<Evaluator> evaluator_from(const Settings& s, const std::string& record_dir) {
  std::shared_ptr<Evaluator> ev;
  if (auto cmd = s.get("sandbox"); cmd && !cmd->empty()) {
    auto argv = split_list(*cmd, ' ');
    if (argv.empty()) throw UsageError("empty sandbox command");
    ev = std::make_shared<ShimEvaluator>(argv);
  } else {
    ev = std::make_shared<RecordedEvaluator>(s.get_or("recorded_sandbox", default_assets().sandbox().string()));
  }
  if (!record_dir.empty()) ev = std::make_shared<RecordingEvaluator>(ev, record_dir);
  return ev;
}

TaskBundle task_arg(const std::string& task, const std::string& tasks_root) {
  fs::path p = task;
  if (fs::exists(p / "task.json")) return load_task(p);
  fs::path root = tasks_root.empty() ? default_assets().tasks() : fs::path(tasks_root);
  if (fs::exists(root / task / "task.json")) return load_task(root / task);
  throw DataError("no task '" + task + "' (expected a task directory or a bundled task id)");
}

// ----------------------------------------------------------------------------

int cmd_ablate(const std::string& skeleton, const std::string& task, const std::string& level, bool hidden,
               const Common& c) {
  std::string fmt = require_format(c.format, {"source", "json"});
  if (skeleton.empty() == task.empty()) throw UsageError("give exactly one of --skeleton or --task");
  std::string id;
  ClassSkeleton sk;
  if (!task.empty()) {
    TaskBundle t = task_arg(task, "");
    id = t.id;
    sk = t.skeleton;
  } else {
    id = fs::path(skeleton).stem().string();
    sk = parse_class(read_text_file(skeleton));
  }
  SkeletonVariant v = make_variant(id, sk, level_arg(level), !hidden);
  if (fmt == "source") {
    write_output(c.out, v.source);
  } else {
    auto meta = nlohmann::ordered_json::parse(variant_metadata_json(v));
    meta["source"] = v.source;
    write_output(c.out, meta.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_detect(const std::string& a, const std::string& b, const Common& c) {
  std::string fmt = require_format(c.format, {"text", "json"});
  ConflictReport r = detect_conflicts(read_text_file(a), read_text_file(b));
  write_output(c.out, fmt == "text" ? render_report(r) : report_to_json(r).dump(2) + "\n");
  return kExitOk;
}

int cmd_merge(const std::string& skeleton, const std::string& a, const std::string& b, const std::string& class_name,
              bool split_only, const Common& c) {
  std::string fmt = require_format(c.format, {"source", "json"});
  ClassSkeleton sk = parse_class(read_text_file(skeleton));
  MethodAssignment asg = split_methods(sk);
  if (split_only) {
    nlohmann::ordered_json j = {{"group_a", asg.group_a}, {"group_b", asg.group_b}, {"order", asg.order}};
    write_output(c.out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (a.empty() || b.empty()) throw UsageError("merge needs two fragments, or --split-only");
  std::optional<std::string> name = class_name.empty() ? std::optional<std::string>(sk.class_name) : class_name;
  MergeResult m = naive_merge_detailed(read_text_file(a), read_text_file(b), asg, name);
  if (fmt == "source") {
    write_output(c.out, m.source);
  } else {
    nlohmann::ordered_json j = {{"source", m.source}, {"discarded", m.discarded}, {"group_a", asg.group_a},
                                {"group_b", asg.group_b}};
    write_output(c.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

struct AgentsArgs {
  std::string task;
  std::string level = "L0";
  std::string role = "single";
  std::string init = "visible";
  std::string provider;
  std::string fixtures;
  std::string condition = "Blind";
  std::string fragment_a, fragment_b;
  bool prompt_only = false;
};

int cmd_agents(const AgentsArgs& a, const Common& c) {
  std::string fmt = require_format(c.format, {"code", "json"});
  Settings s = resolve_settings(c, {{"provider", a.provider}, {"fixtures", a.fixtures}});
  TaskBundle task = task_arg(a.task, "");
  if (a.init != "visible" && a.init != "hidden") throw UsageError("--init must be visible or hidden");
  SpecLevel level = level_arg(a.level);
  std::uint64_t seed = s.get_u64("seed", 0);

  GenerationContext g;
  g.task = &task;
  Prompt prompt;
  SkeletonVariant variant;
  MethodAssignment assignment;
  ConflictReport report;
  if (a.role == "merger") {
    auto name = parse_condition(a.condition);
    if (!name) throw UsageError("unknown merge condition '" + a.condition + "'");
    MergeCondition mc = MergeCondition::of(*name);
    if (!mc.uses_merger()) throw UsageError("condition " + a.condition + " has no merger");
    if (a.fragment_a.empty() || a.fragment_b.empty()) throw UsageError("the merger needs --fragment-a and --fragment-b");
    g.cfg = AgentConfig::for_role(AgentRole::Merger);
    g.fragment_a = read_text_file(a.fragment_a);
    g.fragment_b = read_text_file(a.fragment_b);
    variant = make_variant(task.id, task.skeleton, *mc.merger_spec_level, false);
    report = detect_conflicts(g.fragment_a, g.fragment_b);
    g.report = mc.include_conflict_report ? &report : nullptr;
    g.variant = &variant;
    prompt = build_merger_prompt(mc, variant, g.fragment_a, g.fragment_b, g.report);
  } else {
    AgentRole role;
    if (a.role == "single") {
      role = AgentRole::Single;
    } else if (a.role == "a") {
      role = AgentRole::SplitA;
    } else if (a.role == "b") {
      role = AgentRole::SplitB;
    } else {
      throw UsageError("--role must be single, a, b or merger");
    }
    g.cfg = AgentConfig::for_role(role);
    variant = make_variant(task.id, task.skeleton, level, a.init == "visible");
    g.variant = &variant;
    if (role != AgentRole::Single) {
      assignment = split_methods(task.skeleton);
      g.assignment = &assignment;
    }
    prompt = build_generation_prompt(g.cfg, variant, g.assignment);
  }

  if (a.prompt_only) {
    if (fmt == "code") {
      write_output(c.out, prompt.text() + "\n");
    } else {
      nlohmann::ordered_json j = {{"system", prompt.system}, {"user", prompt.user}};
      write_output(c.out, j.dump(2) + "\n");
    }
    return kExitOk;
  }
  auto provider = provider_from(s.get_or("provider", "scripted"), s);
  std::string response = provider->complete({prompt, seed, g.cfg.temperature, &g});
  std::string code = extract_code(response);
  if (fmt == "code") {
    write_output(c.out, code);
  } else {
    nlohmann::ordered_json j = {{"provider", provider->id()}, {"seed", seed}, {"system", prompt.system},
                                {"user", prompt.user}, {"code", code}};
    write_output(c.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

struct RunArgs {
  std::string experiment = "main";
  std::string tasks;
  std::string task_ids;
  std::string levels;
  int reps = 1;
  std::string workers;
  std::string provider, merger_provider, fixtures, sandbox, recorded_sandbox;
  std::string record_sandbox, record_fixtures;
  std::string biases;
  std::string conditions;
};

int cmd_run(const RunArgs& a, const Common& c) {
  require_format(c.format, {"jsonl"});
  Settings s = resolve_settings(c, {{"provider", a.provider},
                                    {"merger_provider", a.merger_provider},
                                    {"fixtures", a.fixtures},
                                    {"sandbox", a.sandbox},
                                    {"recorded_sandbox", a.recorded_sandbox},
                                    {"workers", a.workers}});
  auto exp = parse_experiment(a.experiment);
  if (!exp) throw UsageError("unknown experiment '" + a.experiment + "' (main, recovery, init-visibility)");
  if (a.reps < 1) throw UsageError("--reps must be at least 1");

  RunPlan plan;
  plan.experiment = *exp;
  plan.task_ids = split_list(a.task_ids);
  if (!a.levels.empty()) {
    plan.levels.clear();
    for (const auto& l : split_list(a.levels)) plan.levels.push_back(level_arg(l));
  }
  plan.repetitions = a.reps;
  plan.seed = s.get_u64("seed", 0);
  plan.generation_provider = s.get_or("provider", "scripted");
  plan.merger_provider = s.get_or("merger_provider", plan.generation_provider);
  if (!a.conditions.empty()) {
    auto standard = RunPlan::standard_conditions(plan.experiment);
    for (const auto& label : split_list(a.conditions)) {
      auto it = std::find_if(standard.begin(), standard.end(), [&](const ConditionSpec& cs) { return cs.label == label; });
      if (it == standard.end()) throw UsageError("condition '" + label + "' is not part of the " + a.experiment + " grid");
      plan.conditions.push_back(*it);
    }
  }
  if (!a.biases.empty()) {
    auto parts = split_list(a.biases);
    auto parse_bias = [](const std::string& b) {
      if (b == "list") return Bias::List;
      if (b == "dict") return Bias::Dict;
      throw UsageError("bias must be list or dict, got '" + b + "'");
    };
    if (parts.size() != 2) throw UsageError("--biases takes two values, e.g. list,dict");
    if (plan.conditions.empty()) plan.conditions = RunPlan::standard_conditions(plan.experiment);
    for (auto& cs : plan.conditions) {
      cs.bias_a = parse_bias(parts[0]);
      cs.bias_b = parse_bias(parts[1]);
    }
  }

  fs::path root = a.tasks.empty() ? default_assets().tasks() : fs::path(a.tasks);
  auto tasks = load_tasks(root);

  RunContext ctx;
  ctx.generator = provider_from(plan.generation_provider, s);
  ctx.merger = plan.merger_provider == plan.generation_provider ? ctx.generator : provider_from(plan.merger_provider, s);
  if (!a.record_fixtures.empty()) {
    ctx.generator = std::make_shared<RecordingProvider>(ctx.generator, a.record_fixtures);
    ctx.merger = std::make_shared<RecordingProvider>(ctx.merger, a.record_fixtures);
  }
  ctx.evaluator = evaluator_from(s, a.record_sandbox);

  RunOptions opts;
  opts.workers = std::max(1, s.get_int("workers", 1));
  if (!c.out.empty() && c.out != "-") opts.out = c.out;
  std::size_t errors = 0;
  opts.on_record = [&](const RunRecord& r) {
    if (r.status != "ok") {
      ++errors;
      std::cerr << "error " << r.key() << " [" << r.error_stage << "]: " << r.error_message << "\n";
    }
  };
  auto records = run_plan(plan, tasks, ctx, opts);
  if (!opts.out) std::cout << records_jsonl(records, true);
  std::cerr << records.size() << " records, " << errors << " errors\n";
  return kExitOk;
}

// Paired Single vs Split pass rates per (task, level), means over repetitions.
std::vector<std::pair<double, double>> gap_pairs(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, SpecLevel>, std::array<std::vector<double>, 2>> cells;
  for (const auto& r : records) {
    if (r.experiment != ExperimentKind::Main) continue;
    int slot = r.condition == "Single" ? 0 : r.condition == "Split" ? 1 : -1;
    if (slot < 0) continue;
    cells[{r.task_id, r.level}][slot].push_back(r.pass_rate().value_or(0.0));
  }
  std::vector<std::pair<double, double>> pairs;
  for (const auto& [key, v] : cells) {
    if (v[0].empty() || v[1].empty()) continue;
    pairs.emplace_back(mean(v[0]), mean(v[1]));
  }
  return pairs;
}

int cmd_metrics(const std::string& runs, const std::string& what, const Common& c) {
  std::string fmt = require_format(c.format, {"json", "csv"});
  auto records = read_records(runs);
  if (what == "gap") {
    ReportBundle b = summarize(records);
    if (fmt == "csv") {
      write_output(c.out, emit_csv(b, CsvTable::Levels));
      return kExitOk;
    }
    auto pairs = gap_pairs(records);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(emit_json(b))["level_table"];
    nlohmann::ordered_json out = {{"level_table", j}, {"pairs", pairs.size()}};
    if (!pairs.empty()) {
      try {
        WilcoxonResult w = wilcoxon_signed_rank(pairs);
        out["wilcoxon"] = {{"w", w.w}, {"n", w.n}, {"p", w.p}, {"exact", w.exact}};
      } catch (const DataError& e) {
        out["wilcoxon"] = {{"error", e.what()}};
      }
      try {
        out["cohens_d"] = cohens_d(pairs);
      } catch (const DataError& e) {
        out["cohens_d"] = nullptr;
      }
    }
    write_output(c.out, out.dump(2) + "\n");
    return kExitOk;
  }
  ReportBundle b = summarize(records);
  if (what == "detector") {
    if (fmt == "csv") {
      write_output(c.out, emit_csv(b, CsvTable::Detector));
    } else {
      write_output(c.out, nlohmann::ordered_json::parse(emit_json(b))["detector_table"].dump(2) + "\n");
    }
    return kExitOk;
  }
  if (what == "effects") {
    if (fmt == "csv") {
      write_output(c.out, emit_csv(b, CsvTable::Effects));
    } else {
      write_output(c.out, nlohmann::ordered_json::parse(emit_json(b))["effects"].dump(2) + "\n");
    }
    return kExitOk;
  }
  throw UsageError("--what must be detector, effects or gap");
}

int cmd_report(const std::string& runs, const std::string& table, const Common& c) {
  std::string fmt = require_format(c.format, {"csv", "json", "plotdata"});
  ReportBundle b = summarize(read_records(runs));
  std::string text;
  if (fmt == "csv") {
    auto t = parse_csv_table(table);
    if (!t) throw UsageError("--table must be levels, detector, effects or conditions");
    text = emit_csv(b, *t);
  } else {
    text = emit(b, *parse_report_format(fmt));
  }
  write_output(c.out, text);
  if (!c.out.empty() && c.out != "-") write_output(c.out + ".audit.json", emit_audit(b));
  return kExitOk;
}

int cmd_fixtures(const std::string& action, const std::string& dest, const std::string& sandbox, const Common& c) {
  Settings s = resolve_settings(c, {{"sandbox", sandbox}});
  AssetPaths assets = default_assets();
  if (action == "install") {
    if (dest.empty()) throw UsageError("fixtures install needs --dest");
    install_fixtures(assets, dest);
    std::cerr << "installed fixtures under " << dest << "\n";
    return kExitOk;
  }
  if (action == "build") {
    auto cmd = s.get("sandbox");
    if (!cmd || cmd->empty()) throw UsageError("fixtures build needs --sandbox");
    auto summary = build_fixtures(assets, std::make_shared<ShimEvaluator>(split_list(*cmd, ' ')));
    std::cerr << summary.replay_fixtures << " replay fixtures, " << summary.sandbox_responses
              << " sandbox responses, " << summary.golden_files << " golden files\n";
    return kExitOk;
  }
  throw UsageError("fixtures action must be install or build");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"specgap: specification ablation and multi-agent coordination toolkit"};
  app.require_subcommand(1);

  Common common;

  std::string skeleton, task, level = "L0";
  bool hidden = false;
  auto* ablate = app.add_subcommand("ablate", "Render a skeleton at a specification level");
  ablate->add_option("--skeleton", skeleton, "Python file with one class");
  ablate->add_option("--task", task, "Task directory or bundled task id");
  ablate->add_option("--level", level, "L0..L3");
  ablate->add_flag("--hide-init", hidden, "Replace the constructor body with pass");
  add_common(ablate, common, "source, json");

  std::string frag_a, frag_b;
  auto* detect = app.add_subcommand("detect", "Report conflicts between two fragments");
  detect->add_option("fragment_a", frag_a, "Agent A fragment")->required();
  detect->add_option("fragment_b", frag_b, "Agent B fragment")->required();
  add_common(detect, common, "text, json");

  std::string class_name;
  bool split_only = false;
  auto* merge = app.add_subcommand("merge", "Split methods or naively merge two fragments");
  merge->add_option("--skeleton", skeleton, "Skeleton that defines the split")->required();
  merge->add_option("fragment_a", frag_a, "Agent A fragment");
  merge->add_option("fragment_b", frag_b, "Agent B fragment");
  merge->add_option("--class-name", class_name, "Name of the merged class");
  merge->add_flag("--split-only", split_only, "Print the method assignment only");
  add_common(merge, common, "source, json");

  AgentsArgs agents_args;
  auto* agents = app.add_subcommand("agents", "Build a prompt and run one agent");
  agents->add_option("--task", agents_args.task, "Task directory or bundled task id")->required();
  agents->add_option("--level", agents_args.level, "L0..L3");
  agents->add_option("--role", agents_args.role, "single, a, b or merger");
  agents->add_option("--init", agents_args.init, "visible or hidden");
  agents->add_option("--provider", agents_args.provider, "scripted, replay or external");
  agents->add_option("--fixtures", agents_args.fixtures, "Replay fixture directory");
  agents->add_option("--condition", agents_args.condition, "Merger condition: Blind, Guided, SpecOnly, Resolve");
  agents->add_option("--fragment-a", agents_args.fragment_a, "Merger input from agent A");
  agents->add_option("--fragment-b", agents_args.fragment_b, "Merger input from agent B");
  agents->add_flag("--prompt-only", agents_args.prompt_only, "Print the prompt without calling a provider");
  add_common(agents, common, "code, json");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run an experiment plan and append JSONL records");
  run->add_option("--experiment", run_args.experiment, "main, recovery or init-visibility");
  run->add_option("--tasks", run_args.tasks, "Task root directory");
  run->add_option("--task-ids", run_args.task_ids, "Comma-separated task ids");
  run->add_option("--levels", run_args.levels, "Comma-separated levels");
  run->add_option("--conditions", run_args.conditions, "Comma-separated subset of the experiment's conditions");
  run->add_option("--reps", run_args.reps, "Repetitions per cell");
  run->add_option("--workers", run_args.workers, "Parallel cells");
  run->add_option("--provider", run_args.provider, "Generation provider");
  run->add_option("--merger-provider", run_args.merger_provider, "Merger provider");
  run->add_option("--fixtures", run_args.fixtures, "Replay fixture directory");
  run->add_option("--sandbox", run_args.sandbox, "Shim command line for live evaluation");
  run->add_option("--recorded-sandbox", run_args.recorded_sandbox, "Recorded sandbox response directory");
  run->add_option("--record-sandbox", run_args.record_sandbox, "Save every evaluation here");
  run->add_option("--record-fixtures", run_args.record_fixtures, "Save every completion here as a replay fixture");
  run->add_option("--biases", run_args.biases, "Split agent biases, e.g. list,dict");
  add_common(run, common, "jsonl");

  std::string runs, what = "gap", table = "levels";
  auto* metrics = app.add_subcommand("metrics", "Detector, effect and gap statistics from a run log");
  metrics->add_option("--runs", runs, "JSONL run log")->required();
  metrics->add_option("--what", what, "detector, effects or gap");
  add_common(metrics, common, "json, csv");

  auto* report = app.add_subcommand("report", "Tables and plot data from a run log");
  report->add_option("--runs", runs, "JSONL run log")->required();
  report->add_option("--table", table, "CSV table: levels, detector, effects, conditions");
  add_common(report, common, "csv, json, plotdata");

  std::string action, dest, sandbox;
  auto* fixtures = app.add_subcommand("fixtures", "Install or rebuild the bundled fixtures");
  fixtures->add_option("action", action, "install or build")->required();
  fixtures->add_option("--dest", dest, "Install destination");
  fixtures->add_option("--sandbox", sandbox, "Shim command line used by build");
  add_common(fixtures, common, "none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ablate) return cmd_ablate(skeleton, task, level, hidden, common);
    if (*detect) return cmd_detect(frag_a, frag_b, common);
    if (*merge) return cmd_merge(skeleton, frag_a, frag_b, class_name, split_only, common);
    if (*agents) return cmd_agents(agents_args, common);
    if (*run) return cmd_run(run_args, common);
    if (*metrics) return cmd_metrics(runs, what, common);
    if (*report) return cmd_report(runs, table, common);
    if (*fixtures) return cmd_fixtures(action, dest, sandbox, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
