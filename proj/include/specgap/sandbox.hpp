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
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace specgap {

struct SandboxRequest {
  std::string class_source;
  std::string test_source;
  double timeout_seconds = 10.0;

  nlohmann::ordered_json to_json() const;
};

struct SandboxResponse {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int errored = 0;
  bool timed_out = false;
  std::string stderr_tail;

  nlohmann::ordered_json to_json() const;
  /// Throws DataError on missing fields, negative counts, or counts that do
  /// not add up when not timed out.
  static SandboxResponse from_json(const nlohmann::json& j);
  bool operator==(const SandboxResponse&) const = default;
};

class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual std::string id() const = 0;
  /// Thread-safe.
  virtual SandboxResponse evaluate(const SandboxRequest& req) = 0;
};

/// Runs the shim command once per request in its own process group, sends
/// one JSON line on stdin and reads one JSON line from stdout. The group is
/// killed one second after the request timeout; the response then reports
/// timed_out with zero counts.
class ShimEvaluator : public Evaluator {
 public:
  explicit ShimEvaluator(std::vector<std::string> argv) : argv_(std::move(argv)) {}
  std::string id() const override { return "shim"; }
  SandboxResponse evaluate(const SandboxRequest& req) override;

 private:
  std::vector<std::string> argv_;
};

/// sha256(class_source + "\n\0\n" + test_source), hex.
std::string evaluation_key(std::string_view class_source, std::string_view test_source);

/// Serves <dir>/<evaluation_key>.json. Throws ReplayMissError.
class RecordedEvaluator : public Evaluator {
 public:
  explicit RecordedEvaluator(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string id() const override { return "recorded"; }
  SandboxResponse evaluate(const SandboxRequest& req) override;

 private:
  std::filesystem::path dir_;
};

/// Forwards to another evaluator and stores each response as a fixture.
class RecordingEvaluator : public Evaluator {
 public:
  RecordingEvaluator(std::shared_ptr<Evaluator> inner, std::filesystem::path dir)
      : inner_(std::move(inner)), dir_(std::move(dir)) {}
  std::string id() const override { return inner_->id(); }
  SandboxResponse evaluate(const SandboxRequest& req) override;

 private:
  std::shared_ptr<Evaluator> inner_;
  std::filesystem::path dir_;
  std::mutex write_mutex_;
};

}  // namespace specgap
