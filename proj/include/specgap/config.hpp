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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <cstdint>
#include <string_view>

namespace specgap {

/// Provider and runner defaults. Sources apply in order: built-in defaults,
/// config file, command-line flags, environment (SPECGAP_<KEY>).
class Settings {
 public:
  static const std::map<std::string, std::string>& known_keys();  // key -> description

  /// Parses key = value lines. '#' starts a comment, [section] headers are
  /// ignored, values may be double-quoted. Throws DataError on unknown keys
  /// or malformed lines.
  void merge_text(std::string_view text, std::string_view origin = "config");
  void merge_file(const std::filesystem::path& path);
  /// SPECGAP_PROVIDER, SPECGAP_MERGER_PROVIDER, ... for every known key.
  void merge_env();
  void set(const std::string& key, std::string value);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace specgap
