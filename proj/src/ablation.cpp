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

#include "specgap/ablation.hpp"

#include <cctype>

#include "json.hpp"

namespace specgap {

namespace {

std::optional<DocstringParts> keep_segments(const std::optional<DocstringParts>& doc, const std::vector<bool>& keep) {
  if (!doc) return std::nullopt;
  DocstringParts rebuilt = rebuild_docstring(*doc, keep);
  if (rebuilt.empty()) return std::nullopt;
  return rebuilt;
}

std::optional<DocstringParts> without_doctests(const std::optional<DocstringParts>& doc) {
  if (!doc) return std::nullopt;
  std::vector<bool> keep;
  for (const auto& seg : doc->segments) keep.push_back(seg.kind != SegmentKind::Doctest);
  return keep_segments(doc, keep);
}

// First untagged prose sentence, else a phrase from the name, else nothing.
std::optional<DocstringParts> simplified(const std::optional<DocstringParts>& doc, std::string_view name) {
  if (doc) {
    for (const auto& seg : doc->segments) {
      if (seg.kind == SegmentKind::Prose && !seg.edge_case && !seg.structure_ref) {
        return parse_docstring(seg.text);
      }
    }
  }
  std::string phrase = phrase_from_name(name);
  if (phrase.empty() || !doc) return std::nullopt;
  return parse_docstring(phrase);
}

template <typename F>
ClassSkeleton transform_docstrings(const ClassSkeleton& sk, F&& fn) {
  ClassSkeleton out = sk;
  out.class_docstring = fn(sk.class_docstring, std::string_view{});
  out.init.docstring = fn(sk.init.docstring, std::string_view(sk.init.name));
  for (auto& m : out.methods) m.docstring = fn(m.docstring, std::string_view(m.name));
  return out;
}

}  // namespace

std::string_view to_string(SpecLevel level) {
  switch (level) {
    case SpecLevel::L0: return "L0";
    case SpecLevel::L1: return "L1";
    case SpecLevel::L2: return "L2";
    case SpecLevel::L3: return "L3";
  }
  return "L?";
}

std::string_view to_string(Component c) {
  switch (c) {
    case Component::Signatures: return "signatures";
    case Component::Docstrings: return "docstrings";
    case Component::Doctests: return "doctests";
    case Component::EdgeCases: return "edge-cases";
    case Component::StructureRefs: return "structure-refs";
  }
  return "?";
}

std::string_view to_string(DocstringForm f) {
  switch (f) {
    case DocstringForm::Full: return "full";
    case DocstringForm::Simplified: return "simplified";
    case DocstringForm::None: return "none";
  }
  return "?";
}

std::optional<SpecLevel> parse_level(std::string_view text) {
  for (auto level : kAllLevels) {
    if (text == to_string(level)) return level;
  }
  if (text.size() == 1 && text[0] >= '0' && text[0] <= '3') return static_cast<SpecLevel>(text[0] - '0');
  return std::nullopt;
}

std::set<Component> components_of(SpecLevel level) {
  switch (level) {
    case SpecLevel::L0:
      return {Component::Signatures, Component::Docstrings, Component::Doctests, Component::EdgeCases,
              Component::StructureRefs};
    case SpecLevel::L1:
      return {Component::Signatures, Component::Docstrings, Component::EdgeCases, Component::StructureRefs};
    case SpecLevel::L2:
      return {Component::Signatures, Component::Docstrings};
    case SpecLevel::L3:
      return {Component::Signatures};
  }
  return {};
}

DocstringForm docstring_form(SpecLevel level) {
  switch (level) {
    case SpecLevel::L0:
    case SpecLevel::L1: return DocstringForm::Full;
    case SpecLevel::L2: return DocstringForm::Simplified;
    case SpecLevel::L3: return DocstringForm::None;
  }
  return DocstringForm::None;
}

std::string phrase_from_name(std::string_view name) {
  if (name.starts_with("__") && name.ends_with("__")) return {};
  std::string phrase;
  std::size_t i = 0;
  while (i < name.size()) {
    while (i < name.size() && name[i] == '_') ++i;
    std::size_t start = i;
    while (i < name.size() && name[i] != '_') ++i;
    if (i > start) {
      if (!phrase.empty()) phrase += ' ';
      phrase += std::string(name.substr(start, i - start));
    }
  }
  if (phrase.empty()) return {};
  phrase[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(phrase[0])));
  return phrase + ".";
}

ClassSkeleton ablate(const ClassSkeleton& sk, SpecLevel level) {
  switch (level) {
    case SpecLevel::L0:
      return sk;
    case SpecLevel::L1:
      return transform_docstrings(sk, [](const std::optional<DocstringParts>& d, std::string_view) {
        return without_doctests(d);
      });
    case SpecLevel::L2:
      return transform_docstrings(sk, [](const std::optional<DocstringParts>& d, std::string_view name) {
        return simplified(d, name);
      });
    case SpecLevel::L3:
      return transform_docstrings(sk, [](const std::optional<DocstringParts>&, std::string_view) {
        return std::optional<DocstringParts>{};
      });
  }
  return sk;
}

ClassSkeleton hide_init(const ClassSkeleton& sk) {
  ClassSkeleton out = sk;
  out.init.body_text = "pass";
  out.init.is_stub = true;
  out.init.docstring.reset();
  return out;
}

SkeletonVariant make_variant(std::string task_id, const ClassSkeleton& sk, SpecLevel level, bool init_visible) {
  SkeletonVariant v;
  v.base_task_id = std::move(task_id);
  v.level = level;
  v.init_visible = init_visible;
  v.skeleton = ablate(sk, level);
  if (!init_visible) v.skeleton = hide_init(v.skeleton);
  v.source = render_skeleton(v.skeleton);
  v.components_present = components_of(level);
  return v;
}

std::string variant_metadata_json(const SkeletonVariant& v) {
  nlohmann::ordered_json j;
  j["task_id"] = v.base_task_id;
  j["level"] = to_string(v.level);
  j["init_visible"] = v.init_visible;
  j["docstring_form"] = to_string(docstring_form(v.level));
  auto comps = nlohmann::ordered_json::array();
  for (auto c : v.components_present) comps.push_back(to_string(c));
  j["components_present"] = comps;
  return j.dump(2) + "\n";
}

}  // namespace specgap
