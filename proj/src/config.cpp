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

#include "specgap/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "specgap/error.hpp"
#include "specgap/task.hpp"

namespace specgap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string env_name(const std::string& key) {
  std::string out = "SPECGAP_";
  for (char c : key) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const std::map<std::string, std::string>& Settings::known_keys() {
  static const std::map<std::string, std::string> keys = {
      {"provider", "generation provider: scripted, replay or external"},
      {"merger_provider", "merger provider: scripted, replay or external"},
      {"fixtures", "replay fixture directory"},
      {"sandbox", "shim command line for live evaluation"},
      {"recorded_sandbox", "directory of recorded sandbox responses"},
      {"workers", "parallel cells"},
      {"seed", "plan seed"},
      {"api_base", "base URL of an OpenAI-compatible endpoint"},
      {"model", "model name for the external provider"},
      {"max_in_flight", "concurrent external requests"},
  };
  return keys;
}

void Settings::set(const std::string& key, std::string value) {
  if (!known_keys().count(key)) throw DataError("unknown setting '" + key + "'");
  values_[key] = std::move(value);
}

void Settings::merge_text(std::string_view text, std::string_view origin) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::string_view body = line;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        body = line.substr(0, i);
        break;
      }
    }
    body = trim(body);
    if (body.empty() || (body.front() == '[' && body.back() == ']')) continue;
    std::size_t eq = body.find('=');
    std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw DataError(where + ": expected key = value");
    std::string key(trim(body.substr(0, eq)));
    std::string_view value = trim(body.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (!known_keys().count(key)) throw DataError(where + ": unknown setting '" + key + "'");
    values_[key] = std::string(value);
  }
}

void Settings::merge_file(const std::filesystem::path& path) { merge_text(read_text_file(path), path.string()); }

void Settings::merge_env() {
  for (const auto& [key, _] : known_keys()) {
    if (const char* v = std::getenv(env_name(key).c_str()); v && *v) values_[key] = v;
  }
}

std::optional<std::string> Settings::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string Settings::get_or(const std::string& key, std::string fallback) const {
  auto v = get(key);
  return v ? *v : std::move(fallback);
}

int Settings::get_int(const std::string& key, int fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  int out = 0;
  auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || p != v->data() + v->size()) throw DataError("setting " + key + " is not an integer: " + *v);
  return out;
}

std::uint64_t Settings::get_u64(const std::string& key, std::uint64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || p != v->data() + v->size()) throw DataError("setting " + key + " is not an integer: " + *v);
  return out;
}

}  // namespace specgap
