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

#include "specgap/pylex.hpp"

#include <array>
#include <optional>
#include <cctype>

#include "specgap/error.hpp"

namespace specgap::py {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

constexpr std::array<std::string_view, 4> kOps3 = {"**=", "//=", ">>=", "<<="};
constexpr std::array<std::string_view, 20> kOps2 = {"**", "//", "==", "!=", "<=", ">=", "->",
                                                    "+=", "-=", "*=", "/=", "%=", "&=", "|=",
                                                    "^=", ":=", "<<", ">>", "@=", "<>"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexedSource run() {
    while (pos_ < src_.size()) {
      start_physical_line();
    }
    if (current_) finish_logical();
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  int column_of(std::size_t offset) const {
    int col = 0;
    for (std::size_t i = line_start_; i < offset; ++i) {
      col = src_[i] == '\t' ? (col / 8 + 1) * 8 : col + 1;
    }
    return col;
  }

  void newline() {
    ++pos_;
    ++line_;
    line_start_ = pos_;
  }

  // Called at the start of a physical line outside any logical line.
  void start_physical_line() {
    std::size_t begin = pos_;
    line_start_ = pos_;
    while (peek() == ' ' || peek() == '\t' || peek() == '\f') ++pos_;
    char c = peek();
    if (c == '\n' || c == '\r' || c == '\0') {
      if (c == '\r') ++pos_;
      if (peek() == '\n') newline();
      else if (c == '\r') { ++line_; line_start_ = pos_; }
      return;
    }
    if (c == '#') {
      std::size_t end = src_.find('\n', pos_);
      if (end == std::string_view::npos) end = src_.size();
      std::size_t stop = end;
      if (stop > pos_ && src_[stop - 1] == '\r') --stop;
      out_.comments.push_back({line_, column_of(pos_), begin, stop});
      pos_ = end;
      if (pos_ < src_.size()) newline();
      return;
    }
    current_ = LogicalLine{};
    current_->indent = column_of(pos_);
    current_->begin = begin;
    current_->first_line = line_;
    scan_logical();
  }

  void scan_logical() {
    for (;;) {
      char c = peek();
      if (c == '\0') {
        if (depth_ > 0) throw ParseError("unbalanced bracket at end of input", line_, column_of(pos_));
        current_->end = pos_;
        finish_logical();
        return;
      }
      if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        ++pos_;
        continue;
      }
      if (c == '\\' && (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
        pos_ += peek(1) == '\r' ? 2 : 1;
        newline();
        continue;
      }
      if (c == '\n') {
        if (depth_ > 0) {
          newline();
          continue;
        }
        std::size_t stop = pos_;
        if (stop > 0 && src_[stop - 1] == '\r') --stop;
        current_->end = stop;
        newline();
        finish_logical();
        return;
      }
      if (c == '#') {
        while (peek() != '\n' && peek() != '\0') ++pos_;
        continue;
      }
      scan_token();
    }
  }

  void finish_logical() {
    current_->last_line = current_->tokens.empty() ? current_->first_line
                                                   : line_at_end_;
    out_.lines.push_back(std::move(*current_));
    current_.reset();
  }

  void push(TokKind kind, std::size_t start, int line, int col) {
    Token t{kind, std::string(src_.substr(start, pos_ - start)), start, line, col, depth_};
    current_->tokens.push_back(std::move(t));
    line_at_end_ = line_;
  }

  void scan_token() {
    std::size_t start = pos_;
    int line = line_;
    int col = column_of(pos_);
    unsigned char c = static_cast<unsigned char>(peek());

    if (is_ident_start(c)) {
      // String prefixes: r, b, u, f and two-letter combinations.
      std::size_t p = pos_;
      while (p < src_.size() && p - pos_ < 2 && std::string_view("rRbBuUfF").find(src_[p]) != std::string_view::npos) ++p;
      if (p > pos_ && p < src_.size() && (src_[p] == '"' || src_[p] == '\'')) {
        pos_ = p;
        scan_string(start, line, col);
        return;
      }
      while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      push(TokKind::Name, start, line, col);
      return;
    }
    if (c == '"' || c == '\'') {
      scan_string(start, line, col);
      return;
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      bool hex = c == '0' && (peek(1) == 'x' || peek(1) == 'X');
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
          ++pos_;
        } else if ((d == '+' || d == '-') && !hex && (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')) {
          ++pos_;
        } else {
          break;
        }
      }
      push(TokKind::Number, start, line, col);
      return;
    }
    for (auto op : kOps3) {
      if (src_.substr(pos_, 3) == op) {
        pos_ += 3;
        push(TokKind::Op, start, line, col);
        return;
      }
    }
    if (src_.substr(pos_, 3) == "...") {
      pos_ += 3;
      push(TokKind::Op, start, line, col);
      return;
    }
    for (auto op : kOps2) {
      if (src_.substr(pos_, 2) == op) {
        pos_ += 2;
        push(TokKind::Op, start, line, col);
        return;
      }
    }
    if (c == '(' || c == '[' || c == '{') {
      ++pos_;
      push(TokKind::Op, start, line, col);
      ++depth_;
      return;
    }
    if (c == ')' || c == ']' || c == '}') {
      if (depth_ == 0) throw ParseError(std::string("unmatched '") + char(c) + "'", line, col + 1);
      --depth_;
      ++pos_;
      push(TokKind::Op, start, line, col);
      return;
    }
    if (std::string_view("+-*/%@&|^~<>=.,:;!").find(char(c)) != std::string_view::npos) {
      ++pos_;
      push(TokKind::Op, start, line, col);
      return;
    }
    throw ParseError(std::string("unexpected character '") + char(c) + "'", line, col + 1);
  }

  void scan_string(std::size_t start, int line, int col) {
    char q = peek();
    bool triple = peek(1) == q && peek(2) == q;
    pos_ += triple ? 3 : 1;
    for (;;) {
      char c = peek();
      if (c == '\0') throw ParseError("unterminated string literal", line, col + 1);
      if (c == '\\') {
        if (peek(1) == '\n') {
          ++pos_;
          newline();
        } else {
          pos_ += 2;
        }
        continue;
      }
      if (c == '\n') {
        if (!triple) throw ParseError("unterminated string literal", line, col + 1);
        newline();
        continue;
      }
      if (c == q) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (peek(1) == q && peek(2) == q) {
          pos_ += 3;
          break;
        }
      }
      ++pos_;
    }
    push(TokKind::String, start, line, col);
    line_at_end_ = line_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
  int line_at_end_ = 1;
  int depth_ = 0;
  std::optional<LogicalLine> current_;
  LexedSource out_;
};

}  // namespace

LexedSource lex(std::string_view source) { return Lexer(source).run(); }

int indentation_at(std::string_view source, std::size_t begin) {
  int col = 0;
  for (std::size_t i = begin; i < source.size(); ++i) {
    if (source[i] == ' ') ++col;
    else if (source[i] == '\t') col = (col / 8 + 1) * 8;
    else break;
  }
  return col;
}

std::size_t matching_bracket(const std::vector<Token>& tokens, std::size_t open) {
  if (open >= tokens.size()) return std::string::npos;
  int depth = tokens[open].depth;
  for (std::size_t i = open + 1; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind == TokKind::Op && t.depth == depth && (t.text == ")" || t.text == "]" || t.text == "}")) {
      return i;
    }
  }
  return std::string::npos;
}

std::string string_body(std::string_view literal) {
  std::size_t p = 0;
  while (p < literal.size() && literal[p] != '"' && literal[p] != '\'') ++p;
  literal.remove_prefix(p);
  if (literal.size() >= 6 && (literal.starts_with("\"\"\"") || literal.starts_with("'''"))) {
    return std::string(literal.substr(3, literal.size() - 6));
  }
  if (literal.size() >= 2) return std::string(literal.substr(1, literal.size() - 2));
  return {};
}

}  // namespace specgap::py
