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

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "specgap/skeleton.hpp"

namespace specgap {

/// Specification levels, from full docstrings (L0) down to bare signatures (L3).
enum class SpecLevel { L0 = 0, L1 = 1, L2 = 2, L3 = 3 };

inline constexpr SpecLevel kAllLevels[] = {SpecLevel::L0, SpecLevel::L1, SpecLevel::L2, SpecLevel::L3};

/// Information components, one per row of the level table.
enum class Component { Signatures, Docstrings, Doctests, EdgeCases, StructureRefs };

/// How much of each docstring survives at a level.
enum class DocstringForm { Full, Simplified, None };

std::string_view to_string(SpecLevel level);
std::string_view to_string(Component c);
std::string_view to_string(DocstringForm f);
std::optional<SpecLevel> parse_level(std::string_view text);

std::set<Component> components_of(SpecLevel level);
DocstringForm docstring_form(SpecLevel level);

/// Removes information from every docstring in \p sk:
///   L0 keeps everything; L1 drops doctest blocks; L2 keeps one simplified
///   sentence (the first prose sentence carrying neither an edge-case nor a
///   structure tag, or a phrase built from the method name); L3 drops all
///   docstrings. Signatures and bodies are never touched.
ClassSkeleton ablate(const ClassSkeleton& sk, SpecLevel level);

/// Replaces the constructor body with "pass" and drops its docstring.
ClassSkeleton hide_init(const ClassSkeleton& sk);

/// "get_top_student" -> "Get top student."; empty for dunder names.
std::string phrase_from_name(std::string_view method_name);

struct SkeletonVariant {
  std::string base_task_id;
  SpecLevel level = SpecLevel::L0;
  bool init_visible = true;
  ClassSkeleton skeleton;
  std::string source;
  std::set<Component> components_present;
};

SkeletonVariant make_variant(std::string task_id, const ClassSkeleton& sk, SpecLevel level, bool init_visible);

/// JSON object with task id, level, init_visible, docstring form and components.
std::string variant_metadata_json(const SkeletonVariant& v);

}  // namespace specgap
