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

#include "specgap/prompts.hpp"

#include <set>

#include "specgap/error.hpp"

namespace specgap {

namespace detail {
const std::map<std::string, std::string, std::less<>>& embedded_templates();
}  // namespace detail

std::string indent_lines(std::string_view text, std::string_view prefix) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty()) out.append(prefix);
    out.append(line);
    if (nl == std::string_view::npos) break;
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

std::string Prompt::text() const { return system + "\n\n" + user; }

const std::string& prompt_template(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> trimmed = [] {
    std::map<std::string, std::string, std::less<>> out;
    for (const auto& [k, v] : detail::embedded_templates()) {
      std::string text = v;
      if (!text.empty() && text.back() == '\n') text.pop_back();
      out.emplace(k, std::move(text));
    }
    return out;
  }();
  auto it = trimmed.find(name);
  if (it == trimmed.end()) throw DataError("unknown prompt template '" + std::string(name) + "'");
  return it->second;
}

std::string render_template(std::string_view tpl, const std::map<std::string, std::string>& values) {
  std::string out;
  std::set<std::string> used;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = tpl.find("{{", pos);
    if (open == std::string_view::npos) break;
    std::size_t close = tpl.find("}}", open + 2);
    if (close == std::string_view::npos) throw DataError("unterminated placeholder in template");
    std::string key(tpl.substr(open + 2, close - open - 2));
    auto it = values.find(key);
    if (it == values.end()) throw DataError("no value for placeholder '" + key + "'");
    out.append(tpl.substr(pos, open - pos));
    out += it->second;
    used.insert(key);
    pos = close + 2;
  }
  out.append(tpl.substr(pos));
  for (const auto& [k, v] : values) {
    if (!used.count(k)) throw DataError("template has no placeholder '" + k + "'");
  }
  return out;
}

}  // namespace specgap
