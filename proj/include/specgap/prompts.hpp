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

#include <map>
#include <string>
#include <string_view>

namespace specgap {

/// A chat prompt. The replay key and the record digest use text().
struct Prompt {
  std::string system;
  std::string user;

  std::string text() const;
};

/// Template text by file stem under assets/prompts (one trailing newline removed).
/// Throws DataError for an unknown name.
const std::string& prompt_template(std::string_view name);

/// Substitutes every {{name}} placeholder. Throws DataError when a placeholder
/// has no value or a value is never used.
std::string render_template(std::string_view tpl, const std::map<std::string, std::string>& values);

/// Prefixes every non-empty line of \p text.
std::string indent_lines(std::string_view text, std::string_view prefix);

}  // namespace specgap
