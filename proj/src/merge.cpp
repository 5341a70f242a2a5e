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

#include "specgap/merge.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "specgap/error.hpp"
#include "specgap/pylex.hpp"

namespace specgap {

namespace {

// Top-level import statements, in order, so helpers such as defaultdict
// survive the merge.
std::vector<std::string> module_imports(std::string_view source) {
  std::vector<std::string> out;
  for (const auto& line : py::lex(source).lines) {
    if (line.indent != 0 || line.tokens.empty()) continue;
    if (line.tokens[0].is_name("import") || line.tokens[0].is_name("from")) {
      out.emplace_back(source.substr(line.begin, line.end - line.begin));
    }
  }
  return out;
}

const MethodDef& require_implemented(const ClassSkeleton& sk, const std::string& method, const char* agent) {
  const MethodDef* m = sk.find(method);
  if (!m || m->is_stub) throw IncompleteFragmentError(method, agent);
  return *m;
}

std::string trim_newlines(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

MergeCondition MergeCondition::of(MergeConditionName name) {
  switch (name) {
    case MergeConditionName::Single:
    case MergeConditionName::Naive: return {name, std::nullopt, false};
    case MergeConditionName::Blind: return {name, SpecLevel::L3, false};
    case MergeConditionName::Guided: return {name, SpecLevel::L3, true};
    case MergeConditionName::SpecOnly: return {name, SpecLevel::L0, false};
    case MergeConditionName::Resolve: return {name, SpecLevel::L0, true};
  }
  return {name, std::nullopt, false};
}

std::string_view to_string(MergeConditionName name) {
  switch (name) {
    case MergeConditionName::Single: return "Single";
    case MergeConditionName::Naive: return "Naive";
    case MergeConditionName::Blind: return "Blind";
    case MergeConditionName::Guided: return "Guided";
    case MergeConditionName::SpecOnly: return "SpecOnly";
    case MergeConditionName::Resolve: return "Resolve";
  }
  return "?";
}

std::optional<MergeConditionName> parse_condition(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '-' && c != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  static const std::map<std::string, MergeConditionName> kNames = {
      {"single", MergeConditionName::Single}, {"naive", MergeConditionName::Naive},
      {"blind", MergeConditionName::Blind},   {"guided", MergeConditionName::Guided},
      {"speconly", MergeConditionName::SpecOnly}, {"resolve", MergeConditionName::Resolve}};
  auto it = kNames.find(key);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

MethodAssignment split_methods(const ClassSkeleton& sk) {
  if (sk.methods.size() < 3) {
    throw IneligibleTaskError("class " + sk.class_name + " has " + std::to_string(sk.methods.size()) +
                              " methods; at least 3 are needed to split");
  }
  MethodAssignment a;
  for (std::size_t i = 0; i < sk.methods.size(); ++i) {
    (i % 2 == 0 ? a.group_a : a.group_b).push_back(sk.methods[i].name);
    a.order.push_back(sk.methods[i].name);
  }
  return a;
}

MergeResult naive_merge_detailed(std::string_view frag_a, std::string_view frag_b, const MethodAssignment& assignment,
                                 std::optional<std::string> class_name) {
  ClassSkeleton a = parse_class(frag_a, InitPolicy::Synthesize);
  ClassSkeleton b = parse_class(frag_b, InitPolicy::Synthesize);

  std::set<std::string> in_a(assignment.group_a.begin(), assignment.group_a.end());
  std::set<std::string> in_b(assignment.group_b.begin(), assignment.group_b.end());
  std::vector<std::string> order = assignment.order;
  if (order.empty()) {
    // Without a recorded order, alternate the two groups.
    for (std::size_t i = 0; i < std::max(assignment.group_a.size(), assignment.group_b.size()); ++i) {
      if (i < assignment.group_a.size()) order.push_back(assignment.group_a[i]);
      if (i < assignment.group_b.size()) order.push_back(assignment.group_b[i]);
    }
  }

  MergeResult result;
  ClassSkeleton merged;
  merged.class_name = class_name.value_or(a.class_name);
  merged.bases = a.bases;
  merged.class_docstring = a.class_docstring;
  merged.init = a.init;
  merged.trailing_source = a.trailing_source;
  for (const auto& name : order) {
    if (in_a.count(name)) {
      merged.methods.push_back(require_implemented(a, name, "A"));
    } else if (in_b.count(name)) {
      merged.methods.push_back(require_implemented(b, name, "B"));
    }
  }

  for (const auto& m : a.methods) {
    if (!in_a.count(m.name)) result.discarded.push_back("A." + m.name);
  }
  if (!b.init_synthesized) result.discarded.push_back("B.__init__");
  for (const auto& m : b.methods) {
    if (!in_b.count(m.name)) result.discarded.push_back("B." + m.name);
  }
  if (!b.trailing_source.empty()) result.discarded.push_back("B.<class body statements>");

  std::vector<std::string> imports = module_imports(frag_a);
  for (auto& line : module_imports(frag_b)) {
    if (std::find(imports.begin(), imports.end(), line) == imports.end()) imports.push_back(std::move(line));
  }
  for (const auto& line : imports) result.source += line + "\n";
  if (!imports.empty()) result.source += "\n\n";
  result.source += render_skeleton(merged);
  return result;
}

std::string naive_merge(std::string_view frag_a, std::string_view frag_b, const MethodAssignment& assignment,
                        std::optional<std::string> class_name) {
  return naive_merge_detailed(frag_a, frag_b, assignment, std::move(class_name)).source;
}

std::string class_description(const ClassSkeleton& sk) {
  if (!sk.class_docstring || sk.class_docstring->summary.empty()) return "No description provided.";
  std::string out;
  for (const auto& s : sk.class_docstring->summary) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

Prompt build_merger_prompt(const MergeCondition& cond, const SkeletonVariant& variant, std::string_view frag_a,
                           std::string_view frag_b, const ConflictReport* report) {
  if (!cond.uses_merger()) {
    throw std::invalid_argument(std::string(to_string(cond.name)) + " does not use a merger");
  }
  if (variant.level != *cond.merger_spec_level) {
    throw std::invalid_argument("merger variant is " + std::string(to_string(variant.level)) + " but " +
                                std::string(to_string(cond.name)) + " needs " +
                                std::string(to_string(*cond.merger_spec_level)));
  }
  if ((report != nullptr) != cond.include_conflict_report) {
    throw std::invalid_argument(cond.include_conflict_report ? "conflict report required" : "unexpected conflict report");
  }
  bool full_spec = *cond.merger_spec_level == SpecLevel::L0;
  Prompt p;
  p.system = render_template(
      prompt_template("merger_system"),
      {{"spec_sentence", full_spec ? " Use the full specification to guide your merge." : ""},
       {"conflict_sentence", cond.include_conflict_report ? " Pay attention to the detected conflicts." : ""}});
  std::string conflicts;
  if (report) conflicts = render_template(prompt_template("merger_conflicts"), {{"report", render_report(*report)}});
  p.user = render_template(prompt_template("merger_user"),
                           {{"class_name", variant.skeleton.class_name},
                            {"skeleton", trim_newlines(variant.source)},
                            {"fragment_a", trim_newlines(std::string(frag_a))},
                            {"fragment_b", trim_newlines(std::string(frag_b))},
                            {"conflict_section", conflicts}});
  return p;
}

}  // namespace specgap
