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

#include <sstream>

#include "../support/random_skeleton.hpp"
#include "doctest.h"
#include "specgap/ablation.hpp"
#include "specgap/docstring.hpp"
#include "specgap/error.hpp"
#include "specgap/skeleton.hpp"
#include "test_util.hpp"

using namespace specgap;
using specgap::testing::asset;

namespace {

std::vector<std::string> display_signatures(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("    def ", 0) == 0 && line.find("__init__") == std::string::npos) out.push_back(line.substr(4));
  }
  return out;
}

std::vector<std::string> segment_texts(const ClassSkeleton& sk) {
  std::vector<std::string> out;
  auto add = [&](const std::optional<DocstringParts>& d) {
    if (!d) return;
    for (const auto& s : d->segments) out.push_back(s.text);
  };
  add(sk.class_docstring);
  add(sk.init.docstring);
  for (const auto& m : sk.methods) add(m.docstring);
  return out;
}

int docstring_count(const ClassSkeleton& sk) {
  int n = sk.class_docstring ? 1 : 0;
  n += sk.init.docstring ? 1 : 0;
  for (const auto& m : sk.methods) n += m.docstring ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("parse_class reads methods, params and constructor of the AssessmentSystem skeleton") {
  ClassSkeleton sk = parse_class(asset("reference/skeleton_L0.py"));
  CHECK(sk.class_name == "AssessmentSystem");
  REQUIRE(sk.methods.size() == 6);
  CHECK(sk.methods[0].name == "add_student");
  CHECK(sk.methods[5].name == "get_top_student");
  REQUIRE(sk.methods[0].params.size() == 4);
  CHECK(sk.methods[0].params[1].name == "name");
  CHECK(sk.init.body_text.find("self.students = {}") != std::string::npos);
  CHECK_FALSE(sk.init.is_stub);
  CHECK(sk.methods[0].is_stub);
  REQUIRE(sk.methods[0].docstring);
  CHECK(sk.methods[0].docstring->doctest_blocks.size() == 1);
  CHECK(sk.methods[0].docstring->param_lines.size() == 3);
}

TEST_CASE("render then parse is the identity on the bundled skeletons") {
  for (const char* task : {"assessment_system", "bank_account", "inventory", "job_board", "library_catalog",
                           "task_queue"}) {
    CAPTURE(task);
    ClassSkeleton sk = parse_class(asset(std::string("tasks/") + task + "/skeleton.py"));
    ClassSkeleton again = parse_class(render_skeleton(sk));
    CHECK(again == sk);
  }
}

TEST_CASE("a class without a constructor is rejected unless synthesis is requested") {
  std::string src = "class A:\n    def f(self):\n        pass\n";
  CHECK_THROWS_AS(parse_class(src), MissingConstructorError);
  ClassSkeleton sk = parse_class(src, InitPolicy::Synthesize);
  CHECK(sk.init_synthesized);
  CHECK(sk.methods.size() == 1);
}

TEST_CASE("malformed source raises ParseError") {
  CHECK_THROWS_AS(parse_class("def f():\n    pass\n"), ParseError);
  CHECK_THROWS_AS(parse_class("class A:\n    def __init__(self:\n        pass\n"), ParseError);
}

TEST_CASE("docstring segments are classified") {
  DocstringParts d = parse_docstring(
      "Add a student into self.students dict.\nReturns None if the student is missing.\n"
      ":param name: str\n:return: bool\n>>> s.add('a')\nTrue");
  CHECK(d.structure_ref_sentences.size() == 1);
  CHECK(d.edge_case_sentences.size() == 1);
  CHECK(d.param_lines.size() == 1);
  REQUIRE(d.return_line);
  CHECK(d.doctest_blocks.size() == 1);
  CHECK(mentions_structure("Stored in self.items"));
  CHECK(mentions_structure("Keeps a mapping of names"));
  CHECK_FALSE(mentions_structure("Computes the average"));
  CHECK(mentions_edge_case("Return 0 when empty"));
  CHECK_FALSE(mentions_edge_case("Adds the value"));
}

TEST_CASE("L3 keeps exactly the six published signatures and no docstrings") {
  ClassSkeleton sk = parse_class(asset("reference/skeleton_L0.py"));
  ClassSkeleton l3 = ablate(sk, SpecLevel::L3);
  auto expected = display_signatures(asset("reference/skeleton_L3_display.txt"));
  REQUIRE(expected.size() == 6);
  REQUIRE(l3.methods.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(l3.methods[i].signature_text == expected[i]);
  CHECK(docstring_count(l3) == 0);
  CHECK(render_skeleton(l3).find("\"\"\"") == std::string::npos);
  CHECK(l3.init.body_text == sk.init.body_text);
}

TEST_CASE("L1 drops doctests and keeps everything else") {
  ClassSkeleton sk = parse_class(asset("reference/skeleton_L0.py"));
  ClassSkeleton l1 = ablate(sk, SpecLevel::L1);
  std::string text = render_skeleton(l1);
  CHECK(text.find(">>>") == std::string::npos);
  CHECK(text.find("Add a new student into self.students dict") != std::string::npos);
  CHECK(text.find(":param grade: int, student grade") != std::string::npos);
  CHECK(text.find(":return: float or None") != std::string::npos);
}

TEST_CASE("L2 keeps one untagged sentence or a phrase built from the name") {
  ClassSkeleton sk = parse_class(
      "class A:\n"
      "    def __init__(self):\n"
      "        self.items = []\n\n"
      "    def add_item(self, x):\n"
      "        \"\"\"\n"
      "        Stores x in self.items list.\n"
      "        Register the value for later.\n"
      "        Raises ValueError when x is invalid.\n"
      "        \"\"\"\n\n"
      "    def get_total(self):\n"
      "        \"\"\"Returns None if self.items is empty.\"\"\"\n");
  ClassSkeleton l2 = ablate(sk, SpecLevel::L2);
  REQUIRE(l2.methods[0].docstring);
  CHECK(l2.methods[0].docstring->raw == "Register the value for later.");
  REQUIRE(l2.methods[1].docstring);
  CHECK(l2.methods[1].docstring->raw == "Get total.");
  CHECK(phrase_from_name("get_course_average") == "Get course average.");
  CHECK(phrase_from_name("__repr__").empty());
}

TEST_CASE("hide_init replaces the constructor body and keeps its signature") {
  ClassSkeleton sk = parse_class(asset("tasks/bank_account/skeleton.py"));
  ClassSkeleton h = hide_init(sk);
  CHECK(h.init.signature_text == sk.init.signature_text);
  CHECK(h.init.body_text == "pass");
  CHECK(h.methods == sk.methods);
}

TEST_CASE("hidden-init L1 variant of the bank account matches the golden file") {
  ClassSkeleton sk = parse_class(asset("tasks/bank_account/skeleton.py"));
  SkeletonVariant v = make_variant("bank_account", sk, SpecLevel::L1, false);
  CHECK(v.source == asset("fixtures/golden/bank_account_L1_hidden.py"));
  CHECK(variant_metadata_json(v) == asset("fixtures/golden/bank_account_L1_hidden.json"));
  CHECK(v.components_present == components_of(SpecLevel::L1));
}

TEST_CASE("component sets and docstring forms per level") {
  CHECK(components_of(SpecLevel::L0).size() == 5);
  CHECK(components_of(SpecLevel::L1).count(Component::Doctests) == 0);
  CHECK(components_of(SpecLevel::L2) == std::set<Component>{Component::Signatures, Component::Docstrings});
  CHECK(components_of(SpecLevel::L3) == std::set<Component>{Component::Signatures});
  CHECK(docstring_form(SpecLevel::L2) == DocstringForm::Simplified);
  CHECK(parse_level("L2") == SpecLevel::L2);
  CHECK_FALSE(parse_level("L4"));
}

TEST_CASE("randomized skeletons: nesting, idempotence, composition and hide_init commutation") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    std::string src = specgap::testing::RandomSkeleton(seed).generate();
    CAPTURE(src);
    ClassSkeleton sk = parse_class(src);
    REQUIRE(parse_class(render_skeleton(sk)) == sk);
    ClassSkeleton prev = sk;
    for (SpecLevel l : kAllLevels) {
      ClassSkeleton a = ablate(sk, l);
      // Signatures survive every level.
      REQUIRE(a.methods.size() == sk.methods.size());
      for (std::size_t i = 0; i < a.methods.size(); ++i) {
        CHECK(a.methods[i].signature_text == sk.methods[i].signature_text);
      }
      CHECK(ablate(a, l) == a);
      CHECK(hide_init(a) == ablate(hide_init(sk), l));
      CHECK(parse_class(render_skeleton(a)) == a);
      // Composition: ablating further from any richer level gives the same result.
      for (SpecLevel richer : kAllLevels) {
        if (richer > l) break;
        CHECK(ablate(ablate(sk, richer), l) == a);
      }
      // Nesting: every segment is present at the previous level, except the
      // phrase synthesized from a method name at L2.
      auto before = segment_texts(prev);
      for (const auto& m : a.methods) {
        if (!m.docstring) continue;
        for (const auto& seg : m.docstring->segments) {
          bool synthesized = l == SpecLevel::L2 && seg.text == phrase_from_name(m.name);
          bool found = std::find(before.begin(), before.end(), seg.text) != before.end();
          CHECK((found || synthesized));
        }
      }
      CHECK(docstring_count(a) <= docstring_count(prev) + static_cast<int>(sk.methods.size()));
      if (l == SpecLevel::L3) CHECK(docstring_count(a) == 0);
      if (l >= SpecLevel::L1) CHECK(render_skeleton(a).find(">>>") == std::string::npos);
      if (l >= SpecLevel::L2) {
        for (const auto& m : a.methods) {
          if (m.docstring) CHECK(m.docstring->structure_ref_sentences.empty());
          if (m.docstring) CHECK(m.docstring->edge_case_sentences.empty());
        }
      }
      prev = a;
    }
  }
}
