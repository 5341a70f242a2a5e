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

#include "specgap/docstring.hpp"

namespace specgap {

struct Param {
  std::string name;  // "*args", "**kw", and the bare markers "*" and "/" keep their stars
  bool has_default = false;

  bool operator==(const Param&) const = default;
};

/// A method as it appears in the class body.
///
/// `signature_text` is the header from "def" through the final colon, with
/// the class-body indentation removed from continuation lines. `body_text`
/// holds the statements after the docstring, dedented to column 0. A body
/// that is empty once the docstring is removed is stored as "pass".
struct MethodDef {
  std::string name;
  std::vector<Param> params;
  std::string signature_text;
  std::optional<DocstringParts> docstring;
  std::string body_text = "pass";
  bool is_stub = true;

  bool operator==(const MethodDef&) const = default;
};

struct ClassSkeleton {
  std::string class_name;
  std::string bases;  // text between the parentheses of the class header
  std::optional<DocstringParts> class_docstring;
  MethodDef init;
  std::vector<MethodDef> methods;  // source order, never contains __init__
  std::string trailing_source;     // other class-level statements, dedented
  bool init_synthesized = false;  // provenance only; ignored by ==

  const MethodDef* find(std::string_view method) const;
  bool operator==(const ClassSkeleton& other) const;
};

enum class InitPolicy { Require, Synthesize };

/// Parses the single top-level class in \p source.
///
/// Throws ParseError for syntax errors and for zero or several classes, and
/// MissingConstructorError when there is no __init__ under
/// InitPolicy::Require. Module-level imports and statements are ignored.
ClassSkeleton parse_class(std::string_view source, InitPolicy policy = InitPolicy::Require);

/// Subject-language source for \p sk, indented with four spaces.
std::string render_skeleton(const ClassSkeleton& sk);

/// Renders a single method at class-body indentation (used by prompts).
std::string render_method(const MethodDef& m);

/// Builds a MethodDef from a header and body, filling params and is_stub.
MethodDef make_method(std::string signature_text, std::string body_text,
                      std::optional<DocstringParts> docstring = std::nullopt);

/// True when \p body is exactly one no-op statement ("pass" or "...").
bool is_noop_body(std::string_view body);

/// The synthesized empty constructor.
MethodDef empty_constructor();

}  // namespace specgap
