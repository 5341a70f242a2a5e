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

#include <chrono>
#include <set>

#include "doctest.h"
#include "specgap/conflict.hpp"
#include "test_util.hpp"

using namespace specgap;
using specgap::testing::asset;

namespace {

std::set<std::pair<ConflictKind, std::string>> signature(const ConflictReport& r) {
  std::set<std::pair<ConflictKind, std::string>> out;
  for (const auto& c : r.conflicts) out.insert({c.kind, c.subject});
  return out;
}

const char* kCaller =
    "class Shop:\n"
    "    def __init__(self):\n"
    "        self.items = {}\n\n"
    "    def restock(self, name):\n"
    "        self.add(name, 1, 2)\n"
    "        for x in self.total():\n"
    "            print(x)\n\n"
    "    def add(self, name, qty):\n"
    "        pass\n\n"
    "    def total(self):\n"
    "        pass\n";

const char* kCallee =
    "class Shop:\n"
    "    def __init__(self):\n"
    "        self.items = {}\n\n"
    "    def restock(self, name):\n"
    "        pass\n\n"
    "    def add(self, name, qty):\n"
    "        self.items[name] = self.items.get(name, 0) + qty\n\n"
    "    def total(self):\n"
    "        return 0\n";

}  // namespace

TEST_CASE("Reference fragments give three TYPE conflicts and one STATE conflict") {
  auto t0 = std::chrono::steady_clock::now();
  ConflictReport r = detect_conflicts(asset("reference/agent_a.py"), asset("reference/agent_b.py"));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  REQUIRE(r.size() == 4);
  CHECK(r.count(ConflictKind::Type) == 3);
  CHECK(r.count(ConflictKind::State) == 1);
  CHECK(r.conflicts[0].subject == "students");
  CHECK(r.conflicts[1].subject == "courses");
  CHECK(r.conflicts[2].subject == "scores");
  CHECK(r.conflicts[3].kind == ConflictKind::State);
  CHECK(r.conflicts[3].severity == Severity::Low);
  CHECK(r.conflicts[0].severity == Severity::High);
  CHECK(render_report(r) == asset("reference/conflict_report.txt"));
}

TEST_CASE("swapping the fragments keeps the same conflicts with evidence swapped") {
  std::string a = asset("reference/agent_a.py");
  std::string b = asset("reference/agent_b.py");
  ConflictReport ab = detect_conflicts(a, b);
  ConflictReport ba = detect_conflicts(b, a);
  CHECK(signature(ab) == signature(ba));
  for (const auto& c : ab.conflicts) {
    auto it = std::find_if(ba.conflicts.begin(), ba.conflicts.end(),
                           [&](const Conflict& o) { return o.kind == c.kind && o.subject == c.subject; });
    REQUIRE(it != ba.conflicts.end());
    CHECK(it->evidence_a == c.evidence_b);
    CHECK(it->evidence_b == c.evidence_a);
  }
}

TEST_CASE("identical fragments have no conflicts") {
  std::string a = asset("reference/agent_a.py");
  ConflictReport r = detect_conflicts(a, a);
  CHECK(r.conflicts.empty());
  CHECK(render_report(r).find("Conflict") == std::string::npos);
}

TEST_CASE("cross-fragment arity mismatch is a PROTOCOL conflict and bad return use is RETURN") {
  ConflictReport r = detect_conflicts(kCaller, kCallee);
  CHECK(r.count(ConflictKind::Protocol) == 1);
  CHECK(r.count(ConflictKind::Return) == 1);
  CHECK(r.count(ConflictKind::Type) == 0);
  for (const auto& c : r.conflicts) {
    if (c.kind == ConflictKind::Protocol) {
      CHECK(c.subject == "add");
      CHECK(c.severity == Severity::Med);
    }
    if (c.kind == ConflictKind::Return) CHECK(c.subject == "total");
  }
  std::string text = render_report(r);
  CHECK(text.find("[PROTOCOL, MED]") != std::string::npos);
  CHECK(text.find("[RETURN, LOW]") != std::string::npos);
  // PROTOCOL ranks before RETURN.
  CHECK(text.find("PROTOCOL") < text.find("RETURN"));
}

TEST_CASE("usage analysis infers container kinds") {
  StateModel m = analyze_fragment(asset("reference/agent_a.py"));
  REQUIRE(m.field("students"));
  CHECK(m.field("students")->init_kind == ContainerKind::List);
  CHECK(m.field("students")->mutated);
  StateModel b = analyze_fragment(asset("reference/agent_b.py"));
  CHECK(b.field("students")->init_kind == ContainerKind::Dict);

  FieldState f;
  f.usage_ops.push_back({UsageKind::Append, "", false, "m"});
  CHECK(infer_kind_from_usage(f) == ContainerKind::List);
  f.usage_ops.push_back({UsageKind::ItemsIter, "", false, "m"});
  CHECK(infer_kind_from_usage(f) == ContainerKind::Unknown);
}

TEST_CASE("a field used by only one fragment raises no STATE conflict") {
  const char* a =
      "class C:\n    def __init__(self):\n        self.log = []\n\n    def f(self, x):\n        self.log.append(x)\n";
  const char* b = "class C:\n    def __init__(self):\n        pass\n\n    def g(self):\n        return 1\n";
  CHECK(detect_conflicts(a, b).conflicts.empty());
}

TEST_CASE("report JSON round trip") {
  ConflictReport r = detect_conflicts(asset("reference/agent_a.py"), asset("reference/agent_b.py"));
  auto j = report_to_json(r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  CHECK(j["counts"]["TYPE"] == 3);
}
