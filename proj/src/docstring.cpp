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

#include "specgap/docstring.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace specgap {

namespace {

constexpr std::array<std::string_view, 11> kContainerWords = {
    "list", "lists", "dict", "dicts", "dictionary", "mapping", "set", "tuple", "array", "queue", "stack"};

// "None" is matched case-sensitively; the rest ignore case.
constexpr std::array<std::string_view, 9> kEdgePhrases = {
    "empty", "not found", "missing", "fewer than", "below", "threshold", "0 when", "return 0", "invalid"};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool contains_phrase(std::string_view text, std::string_view phrase, bool ignore_case) {
  if (phrase.empty() || text.size() < phrase.size()) return false;
  for (std::size_t i = 0; i + phrase.size() <= text.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < phrase.size() && match; ++j) {
      char a = text[i + j];
      char b = phrase[j];
      match = ignore_case ? lower(a) == lower(b) : a == b;
    }
    if (!match) continue;
    bool left_ok = i == 0 || !word_char(text[i - 1]);
    std::size_t after = i + phrase.size();
    bool right_ok = after >= text.size() || !word_char(text[after]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool has_self_attribute(std::string_view text) {
  for (std::size_t pos = text.find("self."); pos != std::string_view::npos; pos = text.find("self.", pos + 1)) {
    if (pos > 0 && word_char(text[pos - 1])) continue;
    std::size_t after = pos + 5;
    if (after < text.size() && (std::isalpha(static_cast<unsigned char>(text[after])) || text[after] == '_')) {
      return true;
    }
  }
  return false;
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (;;) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

void tag(DocSegment& seg) {
  if (seg.kind == SegmentKind::Doctest) return;
  seg.structure_ref = mentions_structure(seg.text);
  seg.edge_case = mentions_edge_case(seg.text);
}

void fill_views(DocstringParts& parts) {
  std::vector<std::string> returns;
  for (const auto& seg : parts.segments) {
    switch (seg.kind) {
      case SegmentKind::Prose: parts.summary.push_back(seg.text); break;
      case SegmentKind::Param: parts.param_lines.push_back(seg.text); break;
      case SegmentKind::Return: returns.push_back(seg.text); break;
      case SegmentKind::Doctest: parts.doctest_blocks.push_back(seg.text); break;
    }
    if (seg.edge_case) parts.edge_case_sentences.push_back(seg.text);
    if (seg.structure_ref) parts.structure_ref_sentences.push_back(seg.text);
  }
  if (!returns.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < returns.size(); ++i) {
      if (i) joined += '\n';
      joined += returns[i];
    }
    parts.return_line = std::move(joined);
  }
}

// Splits a prose run (lines joined by '\n') into sentences. A sentence ends
// at '.', '!' or '?' followed by whitespace or the end of the run.
void split_sentences(std::string_view run, std::string leading_separator, std::vector<DocSegment>& out) {
  std::size_t start = 0;
  std::string separator = std::move(leading_separator);
  while (start < run.size()) {
    std::size_t end = run.size();
    for (std::size_t i = start; i < run.size(); ++i) {
      char c = run[i];
      if ((c == '.' || c == '!' || c == '?') &&
          (i + 1 == run.size() || std::isspace(static_cast<unsigned char>(run[i + 1])))) {
        end = i + 1;
        break;
      }
    }
    DocSegment seg;
    seg.kind = SegmentKind::Prose;
    seg.text = std::string(run.substr(start, end - start));
    seg.separator = separator;
    out.push_back(std::move(seg));
    std::size_t next = end;
    while (next < run.size() && std::isspace(static_cast<unsigned char>(run[next]))) ++next;
    separator = std::string(run.substr(end, next - end));
    start = next;
  }
}

}  // namespace

bool mentions_structure(std::string_view sentence) {
  if (has_self_attribute(sentence)) return true;
  return std::any_of(kContainerWords.begin(), kContainerWords.end(),
                     [&](std::string_view w) { return contains_phrase(sentence, w, true); });
}

bool mentions_edge_case(std::string_view sentence) {
  if (contains_phrase(sentence, "None", false)) return true;
  return std::any_of(kEdgePhrases.begin(), kEdgePhrases.end(),
                     [&](std::string_view p) { return contains_phrase(sentence, p, true); });
}

std::string cleandoc(std::string_view literal_body) {
  std::string expanded;
  for (char c : literal_body) {
    if (c == '\t') {
      std::size_t col = expanded.size() - (expanded.rfind('\n') == std::string::npos ? 0 : expanded.rfind('\n') + 1);
      expanded.append(8 - col % 8, ' ');
    } else if (c != '\r') {
      expanded.push_back(c);
    }
  }
  auto lines = split_lines(expanded);
  std::size_t margin = std::string::npos;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto content = trim_left(lines[i]);
    if (content.empty()) continue;
    margin = std::min(margin, lines[i].size() - content.size());
  }
  std::vector<std::string> cleaned;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (i == 0) {
      line = trim_left(line);
    } else if (margin != std::string::npos) {
      line.remove_prefix(std::min(margin, line.size() - trim_left(line).size()));
    }
    std::string s(line);
    auto last = s.find_last_not_of(" \t");
    s.erase(last == std::string::npos ? 0 : last + 1);
    cleaned.push_back(std::move(s));
  }
  while (!cleaned.empty() && cleaned.front().empty()) cleaned.erase(cleaned.begin());
  while (!cleaned.empty() && cleaned.back().empty()) cleaned.pop_back();
  std::string out;
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (i) out += '\n';
    out += cleaned[i];
  }
  return out;
}

DocstringParts parse_docstring(std::string_view raw) {
  DocstringParts parts;
  parts.raw = std::string(raw);
  auto lines = split_lines(raw);

  std::string pending_sep;  // whitespace seen since the last segment
  std::string run;          // current prose run
  std::string run_sep;
  bool have_run = false;

  auto flush_run = [&] {
    if (!have_run) return;
    split_sentences(run, run_sep, parts.segments);
    run.clear();
    have_run = false;
  };

  std::size_t i = 0;
  bool first_line = true;
  auto add_newline = [&] {
    if (!first_line) pending_sep += '\n';
    first_line = false;
  };

  while (i < lines.size()) {
    std::string_view line = lines[i];
    std::string_view content = trim_left(line);
    std::string indent(line.substr(0, line.size() - content.size()));

    if (is_blank(line)) {
      flush_run();
      add_newline();
      pending_sep += std::string(line);
      ++i;
      continue;
    }

    if (content.starts_with(">>>")) {
      flush_run();
      add_newline();
      DocSegment seg;
      seg.kind = SegmentKind::Doctest;
      seg.separator = pending_sep + indent;
      pending_sep.clear();
      std::string block(content);
      ++i;
      while (i < lines.size() && !is_blank(lines[i])) {
        block += '\n';
        block += std::string(lines[i]);
        ++i;
      }
      seg.text = std::move(block);
      parts.segments.push_back(std::move(seg));
      continue;
    }

    if (content.starts_with(":param") || content.starts_with(":return")) {
      flush_run();
      add_newline();
      DocSegment seg;
      seg.kind = content.starts_with(":param") ? SegmentKind::Param : SegmentKind::Return;
      seg.separator = pending_sep + indent;
      pending_sep.clear();
      seg.text = std::string(content);
      tag(seg);
      parts.segments.push_back(std::move(seg));
      ++i;
      continue;
    }

    add_newline();
    if (!have_run) {
      run_sep = pending_sep + indent;
      pending_sep.clear();
      run = std::string(content);
      have_run = true;
    } else {
      // Line breaks inside a prose run stay in the sentence text.
      run += pending_sep;
      run += std::string(line);
      pending_sep.clear();
    }
    ++i;
  }
  flush_run();

  for (auto& seg : parts.segments) tag(seg);
  if (!parts.segments.empty()) parts.segments.front().separator.clear();
  fill_views(parts);
  return parts;
}

DocstringParts rebuild_docstring(const DocstringParts& from, const std::vector<bool>& keep) {
  std::string text;
  bool gap = false;
  bool any = false;
  for (std::size_t i = 0; i < from.segments.size(); ++i) {
    if (i < keep.size() && !keep[i]) {
      gap = true;
      continue;
    }
    const auto& seg = from.segments[i];
    if (any) text += gap ? std::string("\n\n") : seg.separator;
    text += seg.text;
    any = true;
    gap = false;
  }
  return parse_docstring(text);
}

}  // namespace specgap
