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

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "specgap/agents.hpp"
#include "specgap/experiment.hpp"
#include "specgap/sandbox.hpp"

namespace specgap {

/// Layout of the bundled assets: tasks/, reference/, fixtures/{replay,sandbox,golden}/.
struct AssetPaths {
  std::filesystem::path root;

  std::filesystem::path tasks() const { return root / "tasks"; }
  std::filesystem::path reference() const { return root / "reference"; }
  std::filesystem::path replay() const { return root / "fixtures" / "replay"; }
  std::filesystem::path sandbox() const { return root / "fixtures" / "sandbox"; }
  std::filesystem::path golden() const { return root / "fixtures" / "golden"; }
};

/// SPECGAP_ASSETS when set, else the asset directory of the source tree.
AssetPaths default_assets();

inline constexpr char kReferenceTask[] = "assessment_system";

/// Serves the published AssessmentSystem responses by role and merger
/// condition. Used once to record replay fixtures keyed by the exact prompts.
class ReferenceProvider : public AgentProvider {
 public:
  explicit ReferenceProvider(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string id() const override { return "reference"; }
  ProviderCaps caps() const override { return {true, false}; }
  std::string complete(const CompletionRequest& req) override;

 private:
  std::filesystem::path dir_;
};

/// The recovery grid on the AssessmentSystem task, replayed from fixtures.
RunPlan reference_plan();

/// Split conditions with both agents sharing one bias; conflicts only.
std::vector<ConditionSpec> same_bias_conditions();

/// Scripted plans over the bundled benchmark: main, init-visibility,
/// recovery, and the same-bias conflict grid.
std::vector<RunPlan> desk_plans();

struct FixtureBuildSummary {
  std::size_t replay_fixtures = 0;
  std::size_t sandbox_responses = 0;
  std::size_t golden_files = 0;
};

/// Regenerates replay fixtures, recorded sandbox responses and goldens by
/// running every bundled plan against a live evaluator.
FixtureBuildSummary build_fixtures(const AssetPaths& assets, std::shared_ptr<Evaluator> live);

/// Copies tasks, reference material and fixtures under dest.
void install_fixtures(const AssetPaths& assets, const std::filesystem::path& dest);

/// JSONL of records without timing, one per line.
std::string records_jsonl(const std::vector<RunRecord>& records, bool with_timing = false);

}  // namespace specgap
