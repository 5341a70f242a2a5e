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
#include <string>
#include <string_view>
#include <vector>

#include "specgap/ablation.hpp"
#include "specgap/conflict.hpp"
#include "specgap/prompts.hpp"
#include "specgap/skeleton.hpp"

namespace specgap {

/// Disjoint halves of a class's non-constructor methods.
struct MethodAssignment {
  std::vector<std::string> group_a;  // even source indices
  std::vector<std::string> group_b;  // odd source indices
  std::vector<std::string> order;    // all methods in source order

  bool operator==(const MethodAssignment&) const = default;
};

enum class MergeConditionName { Single, Naive, Blind, Guided, SpecOnly, Resolve };

struct MergeCondition {
  MergeConditionName name = MergeConditionName::Blind;
  std::optional<SpecLevel> merger_spec_level;  // absent for Single and Naive
  bool include_conflict_report = false;

  static MergeCondition of(MergeConditionName name);
  bool uses_merger() const { return merger_spec_level.has_value(); }
};

std::string_view to_string(MergeConditionName name);
/// Accepts "blind", "guided", "spec-only", "resolve", "single", "naive" in any case.
std::optional<MergeConditionName> parse_condition(std::string_view text);

/// Alternating-index split. Throws IneligibleTaskError below three methods.
MethodAssignment split_methods(const ClassSkeleton& sk);

struct MergeResult {
  std::string source;
  std::vector<std::string> discarded;  // "A.helper", "B.__init__", ...
};

/// A's constructor plus each side's assigned implemented methods in source
/// order. The class takes \p class_name when given, else frag_a's name.
/// Throws IncompleteFragmentError when an assigned method is missing or a stub.
MergeResult naive_merge_detailed(std::string_view frag_a, std::string_view frag_b, const MethodAssignment& assignment,
                                 std::optional<std::string> class_name = std::nullopt);

std::string naive_merge(std::string_view frag_a, std::string_view frag_b, const MethodAssignment& assignment,
                        std::optional<std::string> class_name = std::nullopt);

/// Merger prompt for a recovery condition. Throws std::invalid_argument when
/// the condition has no merger, the variant level differs from the
/// condition's, or the report presence does not match the condition.
Prompt build_merger_prompt(const MergeCondition& cond, const SkeletonVariant& variant, std::string_view frag_a,
                           std::string_view frag_b, const ConflictReport* report);

/// "Class docstring prose" or a placeholder when the variant has none.
std::string class_description(const ClassSkeleton& sk);

}  // namespace specgap
