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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>

#include "specgap/ablation.hpp"
#include "specgap/conflict.hpp"
#include "specgap/merge.hpp"
#include "specgap/prompts.hpp"
#include "specgap/task.hpp"

namespace specgap {

enum class AgentRole { Single, SplitA, SplitB, Merger };
enum class Bias { List, Dict, None };

std::string_view to_string(AgentRole role);
std::string_view to_string(Bias bias);

struct AgentConfig {
  AgentRole role = AgentRole::Single;
  Bias bias = Bias::None;
  double temperature = 0.0;
  std::string provider_id = "scripted";
  std::string system_prompt;  // empty: the role's default template

  /// split_a: list bias, 0.7; split_b: dict bias, 0.7; single and merger: no bias, 0.0.
  static AgentConfig for_role(AgentRole role);
};

/// Generation prompt for single and split roles. The assignment must be
/// present exactly for split roles. Throws std::invalid_argument otherwise.
Prompt build_generation_prompt(const AgentConfig& cfg, const SkeletonVariant& variant,
                               const MethodAssignment* assignment);

/// Contents of every fenced block, concatenated; the response itself when it
/// has no fence. Throws ParseError when the result holds no parseable class.
std::string extract_code(std::string_view response);

/// Container kind a docstring assigns to self.<field>: the container word
/// closest to the mention in a structure-referencing sentence.
std::optional<ContainerKind> documented_kind(const ClassSkeleton& sk, std::string_view field);

/// Deterministic bias simulator. Field kinds come from a visible
/// constructor, then from documented structure, then from the bias (list when
/// unbiased). Assigned methods are taken from the task implementation whose
/// kinds match best; the rest become stubs. The seed does not change output.
std::string scripted_generate(const AgentConfig& cfg, const TaskBundle& task, const SkeletonVariant& variant,
                              const MethodAssignment* assignment, std::uint64_t seed);

/// Deterministic merger: field kinds come from the merger's specification,
/// otherwise from Agent A's constructor. The conflict report is not used.
std::string scripted_merge(const TaskBundle& task, const SkeletonVariant& merger_variant, std::string_view frag_a,
                           std::string_view frag_b, const ConflictReport* report, std::uint64_t seed);

struct ProviderCaps {
  bool deterministic = false;
  bool external = false;
};

/// Structured view of a request, available to simulators that do not read prompts.
struct GenerationContext {
  const TaskBundle* task = nullptr;
  AgentConfig cfg;
  const SkeletonVariant* variant = nullptr;  // generation variant, or the merger's specification
  const MethodAssignment* assignment = nullptr;
  std::string fragment_a;  // merger only
  std::string fragment_b;  // merger only
  const ConflictReport* report = nullptr;
};

struct CompletionRequest {
  Prompt prompt;
  std::uint64_t seed = 0;
  double temperature = 0.0;
  const GenerationContext* context = nullptr;
};

class AgentProvider {
 public:
  virtual ~AgentProvider() = default;
  virtual std::string id() const = 0;
  virtual ProviderCaps caps() const = 0;
  /// Raw response text. Thread-safe.
  virtual std::string complete(const CompletionRequest& req) = 0;
};

/// Convenience form without context.
std::string complete(AgentProvider& provider, const Prompt& prompt, std::uint64_t seed);

/// Runs scripted_generate / scripted_merge. Requires a GenerationContext and
/// throws std::invalid_argument without one.
class ScriptedProvider : public AgentProvider {
 public:
  std::string id() const override { return "scripted"; }
  ProviderCaps caps() const override { return {true, false}; }
  std::string complete(const CompletionRequest& req) override;
};

/// Serves <dir>/<prompt_hash(prompt.text())>.txt. Throws ReplayMissError.
class ReplayProvider : public AgentProvider {
 public:
  explicit ReplayProvider(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string id() const override { return "replay"; }
  ProviderCaps caps() const override { return {true, false}; }
  std::string complete(const CompletionRequest& req) override;
  std::filesystem::path fixture_path(const Prompt& prompt) const;

 private:
  std::filesystem::path dir_;
};

/// Forwards to another provider and stores each response as a replay fixture.
class RecordingProvider : public AgentProvider {
 public:
  RecordingProvider(std::shared_ptr<AgentProvider> inner, std::filesystem::path dir)
      : inner_(std::move(inner)), dir_(std::move(dir)) {}
  std::string id() const override { return inner_->id(); }
  ProviderCaps caps() const override { return inner_->caps(); }
  std::string complete(const CompletionRequest& req) override;

 private:
  std::shared_ptr<AgentProvider> inner_;
  std::filesystem::path dir_;
  std::mutex write_mutex_;
};

struct ExternalConfig {
  std::string base_url;  // e.g. https://api.example.com/v1
  std::string api_key;
  std::string model;
  int max_in_flight = 4;
  int max_retries = 3;
  std::chrono::milliseconds backoff{500};
  std::chrono::seconds timeout{120};
  int max_tokens = 4096;

  /// Reads SPECGAP_API_BASE, SPECGAP_API_KEY and SPECGAP_MODEL over \p defaults.
  static ExternalConfig from_env(ExternalConfig defaults);
  static ExternalConfig from_env();
};

/// Chat-completions client over HTTP(S) with JSON bodies. Bounds in-flight
/// requests, retries transport failures, 429 and 5xx with exponential
/// backoff (honoring Retry-After), and fails fast on other statuses.
class ExternalProvider : public AgentProvider {
 public:
  explicit ExternalProvider(ExternalConfig cfg);
  std::string id() const override { return "external:" + cfg_.model; }
  ProviderCaps caps() const override { return {false, true}; }
  std::string complete(const CompletionRequest& req) override;

 private:
  std::string post_once(const std::string& body, std::optional<std::chrono::milliseconds>& retry_after, bool& retryable);

  ExternalConfig cfg_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  std::counting_semaphore<1024> slots_;
};

/// "scripted", "replay" (needs \p fixtures) or "external".
std::shared_ptr<AgentProvider> make_provider(std::string_view id, const std::filesystem::path& fixtures = {});

}  // namespace specgap
