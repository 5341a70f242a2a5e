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

namespace specgap {

enum class SegmentKind { Prose, Param, Return, Doctest };

/// One classified piece of a docstring, kept in source order.
struct DocSegment {
  SegmentKind kind = SegmentKind::Prose;
  std::string text;       // verbatim; may span lines
  std::string separator;  // whitespace that preceded it in the docstring
  bool edge_case = false;
  bool structure_ref = false;

  bool operator==(const DocSegment&) const = default;
};

/// Docstring split into the information components that ablation removes.
///
/// `segments` is authoritative; the category vectors are views over it,
/// filled by parse_docstring. A segment may appear in several views (a
/// return line that mentions None is also an edge-case sentence).
struct DocstringParts {
  std::string raw;  // cleaned docstring text (see cleandoc)
  std::vector<DocSegment> segments;

  std::vector<std::string> summary;  // prose sentences in order
  std::vector<std::string> param_lines;
  std::optional<std::string> return_line;
  std::vector<std::string> doctest_blocks;
  std::vector<std::string> edge_case_sentences;
  std::vector<std::string> structure_ref_sentences;

  bool empty() const { return segments.empty(); }
  bool operator==(const DocstringParts&) const = default;
};

/// Classifies \p raw line by line, then sentence by sentence:
///   - a doctest block starts at a ">>>" line and runs to the next blank line;
///   - lines starting with ":param" / ":return" are param / return lines;
///   - remaining non-blank lines form prose runs split into sentences;
///   - prose, param and return segments are tagged structure_ref when they
///     mention self.<name> or a container word, and edge_case when they use
///     one of the edge-case phrases.
DocstringParts parse_docstring(std::string_view raw);

/// Rebuilds a docstring from a subset of another docstring's segments.
/// Wherever segments were dropped the survivors are separated by a blank
/// line so that re-parsing yields the same segments.
DocstringParts rebuild_docstring(const DocstringParts& from, const std::vector<bool>& keep);

/// Python inspect.cleandoc: strips the first line, removes the common
/// indentation of the remaining lines and leading/trailing blank lines.
/// Trailing whitespace on each line is also removed.
std::string cleandoc(std::string_view literal_body);

bool mentions_structure(std::string_view sentence);
bool mentions_edge_case(std::string_view sentence);

}  // namespace specgap
