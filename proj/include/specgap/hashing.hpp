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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace specgap {

/// Lowercase hex SHA-256 digest of \p data.
std::string sha256_hex(std::string_view data);

/// LF-only line endings with trailing whitespace stripped from every line
/// and from the end of the text. Replay fixtures are keyed on this form.
std::string normalize_prompt(std::string_view text);

/// sha256_hex(normalize_prompt(text)).
std::string prompt_hash(std::string_view text);

/// 64-bit seed from the first eight digest bytes of the '|'-joined parts.
std::uint64_t derive_seed(std::initializer_list<std::string_view> parts);

}  // namespace specgap
