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

#include <atomic>
#include <filesystem>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "specgap/agents.hpp"
#include "specgap/error.hpp"
#include "specgap/hashing.hpp"
#include "test_util.hpp"

using namespace specgap;
using specgap::testing::asset;
using specgap::testing::source_dir;
namespace fs = std::filesystem;

namespace {

TaskBundle task(const std::string& id) { return load_task(source_dir() / "assets" / "tasks" / id); }

ContainerKind init_kind(const std::string& code, const std::string& field) {
  StateModel m = analyze_fragment(code);
  return m.field(field) ? m.field(field)->init_kind : ContainerKind::Unknown;
}

std::string generate(const TaskBundle& t, AgentRole role, SpecLevel level, bool visible, MethodAssignment* asg) {
  SkeletonVariant v = make_variant(t.id, t.skeleton, level, visible);
  return scripted_generate(AgentConfig::for_role(role), t, v, asg, 1);
}

fs::path temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("specgap_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

// Minimal OpenAI-style endpoint on a free local port.
struct StubServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> calls{0};
  std::string last_body;
  std::mutex mutex;

  template <typename Handler>
  explicit StubServer(Handler handler) {
    server.Post("/v1/chat/completions", [this, handler](const httplib::Request& req, httplib::Response& res) {
      {
        std::lock_guard lock(mutex);
        last_body = req.body;
      }
      handler(++calls, req, res);
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~StubServer() {
    server.stop();
    thread.join();
  }
  ExternalConfig config() const {
    ExternalConfig c;
    c.base_url = "http://127.0.0.1:" + std::to_string(port) + "/v1";
    c.model = "stub-model";
    c.api_key = "k";
    c.backoff = std::chrono::milliseconds(5);
    c.timeout = std::chrono::seconds(5);
    return c;
  }
};

std::string completion_json(const std::string& content) {
  return nlohmann::json{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}}.dump();
}

}  // namespace

TEST_CASE("extract_code takes fenced blocks, plain fences and raw code") {
  std::string cls = "class A:\n    def __init__(self):\n        self.x = []\n";
  CHECK(extract_code("Here you go:\n```python\n" + cls + "```\nDone.") == cls);
  CHECK(extract_code("```\n" + cls + "```") == cls);
  CHECK(extract_code(cls) == cls);
  CHECK_THROWS_AS(extract_code("I cannot help with that."), ParseError);
}

TEST_CASE("documented_kind reads the container word next to a field mention") {
  ClassSkeleton sk = parse_class(asset("reference/skeleton_L0.py"));
  CHECK(documented_kind(sk, "students") == ContainerKind::Dict);
  CHECK_FALSE(documented_kind(sk, "scores"));
  CHECK_FALSE(documented_kind(ablate(sk, SpecLevel::L2), "students"));
}

TEST_CASE("the single agent with a visible constructor uses the true kinds") {
  for (const char* id : {"assessment_system", "job_board", "inventory", "task_queue", "library_catalog",
                         "bank_account"}) {
    CAPTURE(id);
    TaskBundle t = task(id);
    std::string code = generate(t, AgentRole::Single, SpecLevel::L3, true, nullptr);
    for (const auto& [field, kind] : t.fields) CHECK(init_kind(code, field) == kind);
    for (const auto& m : parse_class(code).methods) CHECK_FALSE(m.is_stub);
  }
}

TEST_CASE("split agents follow their bias without structure hints and the docs with them") {
  TaskBundle t = task("assessment_system");
  MethodAssignment asg = split_methods(t.skeleton);
  std::string a3 = generate(t, AgentRole::SplitA, SpecLevel::L3, false, &asg);
  std::string b3 = generate(t, AgentRole::SplitB, SpecLevel::L3, false, &asg);
  CHECK(init_kind(a3, "students") == ContainerKind::List);
  CHECK(init_kind(b3, "students") == ContainerKind::Dict);
  CHECK(detect_conflicts(a3, b3).count(ConflictKind::Type) >= 1);

  std::string a0 = generate(t, AgentRole::SplitA, SpecLevel::L0, false, &asg);
  CHECK(init_kind(a0, "students") == ContainerKind::Dict);

  ClassSkeleton frag = parse_class(a3);
  for (const auto& m : frag.methods) {
    bool mine = std::find(asg.group_a.begin(), asg.group_a.end(), m.name) != asg.group_a.end();
    CHECK(m.is_stub == !mine);
  }
  CHECK_THROWS_AS(generate(t, AgentRole::SplitA, SpecLevel::L3, false, nullptr), std::invalid_argument);
}

TEST_CASE("the scripted merger prefers documented kinds, then agent A's constructor") {
  TaskBundle t = task("inventory");
  MethodAssignment asg = split_methods(t.skeleton);
  std::string a = generate(t, AgentRole::SplitA, SpecLevel::L3, false, &asg);
  std::string b = generate(t, AgentRole::SplitB, SpecLevel::L3, false, &asg);
  SkeletonVariant l3 = make_variant(t.id, t.skeleton, SpecLevel::L3, false);
  SkeletonVariant l0 = make_variant(t.id, t.skeleton, SpecLevel::L0, false);
  CHECK(init_kind(scripted_merge(t, l3, a, b, nullptr, 0), "items") == ContainerKind::List);
  CHECK(init_kind(scripted_merge(t, l0, a, b, nullptr, 0), "items") == ContainerKind::Dict);
}

TEST_CASE("generation prompts name the bias, the assignment and the constructor rule") {
  TaskBundle t = task("assessment_system");
  MethodAssignment asg = split_methods(t.skeleton);
  SkeletonVariant hidden = make_variant(t.id, t.skeleton, SpecLevel::L3, false);
  Prompt pa = build_generation_prompt(AgentConfig::for_role(AgentRole::SplitA), hidden, &asg);
  Prompt pb = build_generation_prompt(AgentConfig::for_role(AgentRole::SplitB), hidden, &asg);
  CHECK(pa.system != pb.system);
  CHECK(pa.user.find("YOUR methods to implement:") != std::string::npos);
  CHECK(pa.user.find("Collaborator's methods (write each as a stub):") != std::string::npos);
  CHECK(pa.user.find("add_student") < pa.user.find("add_course_score"));
  CHECK(pb.user.find("add_course_score") < pb.user.find("add_student"));
  Prompt single = build_generation_prompt(AgentConfig::for_role(AgentRole::Single),
                                          make_variant(t.id, t.skeleton, SpecLevel::L0, true), nullptr);
  CHECK(single.user.find("```python") != std::string::npos);
  CHECK(single.user.find("self.students = {}") != std::string::npos);
  CHECK_THROWS_AS(build_generation_prompt(AgentConfig::for_role(AgentRole::SplitA), hidden, nullptr),
                  std::invalid_argument);
}

TEST_CASE("recording then replay returns the same completion and misses are reported") {
  fs::path dir = temp_dir("replay");
  TaskBundle t = task("job_board");
  SkeletonVariant v = make_variant(t.id, t.skeleton, SpecLevel::L1, true);
  GenerationContext g;
  g.task = &t;
  g.cfg = AgentConfig::for_role(AgentRole::Single);
  g.variant = &v;
  Prompt p = build_generation_prompt(g.cfg, v, nullptr);

  RecordingProvider rec(std::make_shared<ScriptedProvider>(), dir);
  std::string out = rec.complete({p, 3, 0.0, &g});
  ReplayProvider replay(dir);
  CHECK(fs::exists(replay.fixture_path(p)));
  CHECK(replay.fixture_path(p).filename() == prompt_hash(p.text()) + ".txt");
  CHECK(complete(replay, p, 99) == out);

  Prompt other = p;
  other.user += "\nextra";
  CHECK_THROWS_AS(complete(replay, other, 3), ReplayMissError);
  CHECK_THROWS_AS(ScriptedProvider().complete({p, 0, 0.0, nullptr}), std::invalid_argument);
  CHECK_THROWS_AS(make_provider("replay"), std::invalid_argument);
  CHECK_THROWS_AS(make_provider("nope"), std::invalid_argument);
  CHECK(make_provider("scripted")->id() == "scripted");
  fs::remove_all(dir);
}

TEST_CASE("external provider sends the chat request and returns the message content") {
  StubServer server([](int, const httplib::Request&, httplib::Response& res) {
    res.set_content(completion_json("```python\nclass A:\n    pass\n```"), "application/json");
  });
  ExternalProvider p(server.config());
  std::string out = complete(p, Prompt{"sys", "usr"}, 42);
  CHECK(out.find("class A") != std::string::npos);
  auto body = nlohmann::json::parse(server.last_body);
  CHECK(body["model"] == "stub-model");
  CHECK(body["seed"] == 42);
  CHECK(body["messages"][0]["content"] == "sys");
  CHECK(body["messages"][1]["role"] == "user");
  CHECK(p.id() == "external:stub-model");
}

TEST_CASE("external provider retries 429 and 5xx, honours Retry-After, and gives up on 4xx") {
  StubServer flaky([](int n, const httplib::Request&, httplib::Response& res) {
    if (n == 1) {
      res.status = 429;
      res.set_header("Retry-After", "0.01");
    } else if (n == 2) {
      res.status = 503;
    } else {
      res.set_content(completion_json("ok"), "application/json");
    }
  });
  ExternalProvider p(flaky.config());
  CHECK(complete(p, Prompt{"s", "u"}, 1) == "ok");
  CHECK(flaky.calls == 3);

  StubServer down([](int, const httplib::Request&, httplib::Response& res) { res.status = 500; });
  ExternalConfig cfg = down.config();
  cfg.max_retries = 2;
  ExternalProvider q(cfg);
  CHECK_THROWS_AS(complete(q, Prompt{"s", "u"}, 1), TransportError);
  CHECK(down.calls == 3);

  StubServer bad([](int, const httplib::Request&, httplib::Response& res) { res.status = 400; });
  ExternalProvider r(bad.config());
  CHECK_THROWS_AS(complete(r, Prompt{"s", "u"}, 1), TransportError);
  CHECK(bad.calls == 1);
}

TEST_CASE("external provider configuration is validated") {
  ExternalConfig c;
  CHECK_THROWS_AS(ExternalProvider{c}, std::invalid_argument);
  c.base_url = "localhost:1";
  c.model = "m";
  CHECK_THROWS_AS(ExternalProvider{c}, std::invalid_argument);
}
