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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace specgap::py {

enum class TokKind { Name, Number, String, Op };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;  // byte offset into the lexed source
  int line;            // 1-based
  int column;          // 0-based, tabs expanded to multiples of 8
  int depth;           // enclosing bracket depth; a bracket pair shares its outer depth

  bool is(std::string_view t) const { return text == t; }
  bool is_name(std::string_view t) const { return kind == TokKind::Name && text == t; }
};

/// One Python logical line: physical lines joined across brackets and
/// backslash continuations. Comment-only and blank lines are not logical
/// lines; they are listed separately in LexedSource::comments.
struct LogicalLine {
  int indent = 0;
  std::size_t begin = 0;  // start of the first physical line
  std::size_t end = 0;    // end of the last physical line, newline excluded
  int first_line = 0;
  int last_line = 0;
  std::vector<Token> tokens;
};

struct CommentLine {
  int line = 0;
  int indent = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct LexedSource {
  std::vector<LogicalLine> lines;
  std::vector<CommentLine> comments;
};

/// Tokenizes enough of Python 3 to recover statement structure and the
/// attribute/call/subscript shapes the analyzer needs. Throws ParseError on
/// unterminated strings and unbalanced brackets.
LexedSource lex(std::string_view source);

/// Column of the first non-blank character of the physical line at \p begin.
int indentation_at(std::string_view source, std::size_t begin);

/// Index of the bracket closing the one at tokens[open], or npos.
std::size_t matching_bracket(const std::vector<Token>& tokens, std::size_t open);

/// String literal contents without prefix letters and quotes.
std::string string_body(std::string_view literal);

}  // namespace specgap::py
