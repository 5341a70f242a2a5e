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

#include "specgap/skeleton.hpp"

#include <algorithm>
#include <set>

#include "specgap/error.hpp"
#include "specgap/pylex.hpp"

namespace specgap {

namespace {

using py::LexedSource;
using py::LogicalLine;
using py::Token;
using py::TokKind;

constexpr int kIndent = 4;

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (;;) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

// Removes up to `columns` of leading whitespace from each line; blank lines
// become empty and leading/trailing blank lines are dropped.
std::string dedent(std::string_view text, int columns) {
  auto lines = split_lines(text);
  for (auto& line : lines) {
    int col = 0;
    std::size_t i = 0;
    while (i < line.size() && col < columns && (line[i] == ' ' || line[i] == '\t')) {
      col = line[i] == '\t' ? (col / 8 + 1) * 8 : col + 1;
      ++i;
    }
    line.erase(0, i);
    if (line.find_first_not_of(" \t") == std::string::npos) line.clear();
  }
  while (!lines.empty() && lines.front().empty()) lines.erase(lines.begin());
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return join_lines(lines);
}

// Prefixes every non-empty line except the first with `pad`.
std::string indent_continuations(std::string_view text, std::string_view pad) {
  auto lines = split_lines(text);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!lines[i].empty()) lines[i] = std::string(pad) + lines[i];
  }
  return join_lines(lines);
}

std::string indent_all(std::string_view text, std::string_view pad) {
  auto lines = split_lines(text);
  for (auto& line : lines) {
    if (!line.empty()) line = std::string(pad) + line;
  }
  return join_lines(lines);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool is_docstring_line(const LogicalLine& line) {
  if (line.tokens.size() != 1 || line.tokens[0].kind != TokKind::String) return false;
  // Byte and f-strings are never docstrings.
  const auto& t = line.tokens[0].text;
  for (char c : t) {
    if (c == '"' || c == '\'') break;
    if (c == 'b' || c == 'B' || c == 'f' || c == 'F') return false;
  }
  return true;
}

DocstringParts docstring_from(const Token& tok) { return parse_docstring(cleandoc(py::string_body(tok.text))); }

std::vector<Param> parse_params(const std::vector<Token>& toks, std::size_t open, std::size_t close) {
  std::vector<Param> params;
  int inner = toks[open].depth + 1;
  std::size_t start = open + 1;
  auto flush = [&](std::size_t end) {
    if (start >= end) return;
    Param p;
    const Token& first = toks[start];
    if (first.is("*") || first.is("**")) {
      if (start + 1 < end && toks[start + 1].kind == TokKind::Name) {
        p.name = first.text + toks[start + 1].text;
      } else {
        p.name = first.text;
      }
    } else {
      p.name = first.text;
    }
    for (std::size_t i = start; i < end; ++i) {
      if (toks[i].depth == inner && toks[i].is("=")) p.has_default = true;
    }
    params.push_back(std::move(p));
  };
  for (std::size_t i = open + 1; i < close; ++i) {
    if (toks[i].depth == inner && toks[i].is(",")) {
      flush(i);
      start = i + 1;
    }
  }
  flush(close);
  return params;
}

std::size_t header_colon(const LogicalLine& line, std::size_t from) {
  int base = line.tokens.front().depth;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    if (line.tokens[i].depth == base && line.tokens[i].is(":")) return i;
  }
  throw ParseError("expected ':' at end of header", line.first_line, line.indent + 1);
}

struct Statement {
  std::size_t head;         // index into lexed.lines
  std::size_t end_line;     // one past the last sub-line
  std::size_t end_offset;   // end of the last physical line, comments included
};

class ClassParser {
 public:
  ClassParser(std::string_view src, InitPolicy policy) : src_(src), policy_(policy), lexed_(py::lex(src)) {}

  ClassSkeleton run() {
    std::size_t head = find_class();
    const LogicalLine& header = lexed_.lines[head];
    const auto& toks = header.tokens;
    if (toks.size() < 3 || toks[1].kind != TokKind::Name) {
      throw ParseError("malformed class header", header.first_line, header.indent + 1);
    }
    ClassSkeleton sk;
    sk.class_name = toks[1].text;
    std::size_t next = 2;
    if (toks[2].is("(")) {
      std::size_t close = py::matching_bracket(toks, 2);
      sk.bases = trim(src_.substr(toks[2].offset + 1, toks[close].offset - toks[2].offset - 1));
      next = close + 1;
    }
    std::size_t colon = header_colon(header, next);
    if (colon != next) throw ParseError("expected ':' after class name", header.first_line, toks[next].column + 1);

    std::size_t body_begin = head + 1;
    std::size_t body_end = body_begin;
    while (body_end < lexed_.lines.size() && lexed_.lines[body_end].indent > 0) ++body_end;

    if (colon + 1 < toks.size() || body_begin == body_end) {
      // Inline or empty suite: no methods.
      return finish(std::move(sk));
    }

    int body_indent = lexed_.lines[body_begin].indent;
    std::string decorators;
    bool first_statement = true;
    std::vector<std::string> trailing;

    for (std::size_t i = body_begin; i < body_end;) {
      const LogicalLine& line = lexed_.lines[i];
      if (line.indent < body_indent) {
        throw ParseError("unindent does not match any outer indentation level", line.first_line, line.indent + 1);
      }
      if (line.indent > body_indent) throw ParseError("unexpected indent", line.first_line, line.indent + 1);
      Statement st = statement_at(i, body_end, body_indent);
      const Token& t0 = line.tokens.front();

      if (t0.is("@")) {
        decorators += dedent(src_.substr(line.begin, line.end - line.begin), body_indent) + "\n";
      } else if (t0.is_name("def") || (t0.is_name("async") && line.tokens.size() > 1 && line.tokens[1].is_name("def"))) {
        MethodDef m = parse_method(st, body_indent, decorators);
        decorators.clear();
        add_method(sk, std::move(m), line);
      } else if (first_statement && is_docstring_line(line)) {
        sk.class_docstring = docstring_from(t0);
      } else {
        trailing.push_back(dedent(src_.substr(line.begin, st.end_offset - line.begin), body_indent));
      }
      first_statement = false;
      i = st.end_line;
    }
    if (!decorators.empty()) throw ParseError("decorator without a following def");
    sk.trailing_source = join_lines(trailing);
    return finish(std::move(sk));
  }

 private:
  std::size_t find_class() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < lexed_.lines.size(); ++i) {
      const auto& line = lexed_.lines[i];
      if (line.indent != 0 || line.tokens.empty() || !line.tokens[0].is_name("class")) continue;
      if (found) throw ParseError("multiple class definitions", line.first_line, 1);
      found = i;
    }
    if (!found) throw ParseError("no class definition found");
    return *found;
  }

  Statement statement_at(std::size_t i, std::size_t limit, int indent) const {
    Statement st{i, i + 1, lexed_.lines[i].end};
    while (st.end_line < limit && lexed_.lines[st.end_line].indent > indent) {
      st.end_offset = lexed_.lines[st.end_line].end;
      ++st.end_line;
    }
    // Comments indented under this statement belong to it.
    int last_line = lexed_.lines[st.end_line - 1].last_line;
    int stop_line = st.end_line < lexed_.lines.size() ? lexed_.lines[st.end_line].first_line : 1 << 30;
    for (const auto& c : lexed_.comments) {
      if (c.line <= last_line || c.line >= stop_line) continue;
      if (c.indent <= indent) break;
      st.end_offset = std::max(st.end_offset, c.end);
    }
    return st;
  }

  MethodDef parse_method(const Statement& st, int class_indent, const std::string& decorators) {
    const LogicalLine& header = lexed_.lines[st.head];
    const auto& toks = header.tokens;
    std::size_t def = toks[0].is_name("async") ? 1 : 0;
    if (def + 2 >= toks.size() || toks[def + 1].kind != TokKind::Name || !toks[def + 2].is("(")) {
      throw ParseError("malformed def header", header.first_line, header.indent + 1);
    }
    std::size_t open = def + 2;
    std::size_t close = py::matching_bracket(toks, open);
    if (close == std::string::npos) throw ParseError("unclosed parameter list", header.first_line);
    std::size_t colon = header_colon(header, close + 1);

    MethodDef m;
    m.name = toks[def + 1].text;
    m.params = parse_params(toks, open, close);
    std::size_t sig_begin = toks[0].offset;
    std::string sig(src_.substr(sig_begin, toks[colon].offset + 1 - sig_begin));
    sig = dedent_continuations(sig, class_indent);
    m.signature_text = decorators + sig;

    if (colon + 1 < toks.size()) {
      std::size_t b = toks[colon + 1].offset;
      m.body_text = trim(src_.substr(b, header.end - b));
    } else if (st.end_line == st.head + 1) {
      throw ParseError("expected an indented block after def " + m.name, header.last_line + 1);
    } else {
      std::size_t first = st.head + 1;
      const LogicalLine& first_line = lexed_.lines[first];
      int body_indent = first_line.indent;
      std::size_t body_start = first_line.begin;
      if (is_docstring_line(first_line)) {
        m.docstring = docstring_from(first_line.tokens.front());
        body_start = first + 1 < st.end_line ? lexed_.lines[first + 1].begin : st.end_offset;
        // Keep comments that sit between the docstring and the next statement.
        std::size_t nl = src_.find('\n', first_line.end);
        if (nl != std::string_view::npos && nl + 1 < body_start) body_start = nl + 1;
      }
      bool has_statements = is_docstring_line(first_line) ? first + 1 < st.end_line : true;
      if (has_statements && body_start < st.end_offset) {
        m.body_text = dedent(src_.substr(body_start, st.end_offset - body_start), body_indent);
      } else {
        m.body_text = "pass";
      }
    }
    if (trim(m.body_text).empty()) m.body_text = "pass";
    m.is_stub = is_noop_body(m.body_text);
    return m;
  }

  // Continuation lines of a multi-line header lose the class-body indent.
  static std::string dedent_continuations(std::string_view sig, int columns) {
    auto lines = split_lines(sig);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto& line = lines[i];
      int col = 0;
      std::size_t k = 0;
      while (k < line.size() && col < columns && (line[k] == ' ' || line[k] == '\t')) {
        col = line[k] == '\t' ? (col / 8 + 1) * 8 : col + 1;
        ++k;
      }
      line.erase(0, k);
    }
    return join_lines(lines);
  }

  void add_method(ClassSkeleton& sk, MethodDef m, const LogicalLine& at) {
    if (!seen_.insert(m.name).second) throw ParseError("duplicate method '" + m.name + "'", at.first_line, at.indent + 1);
    if (m.name == "__init__") {
      sk.init = std::move(m);
      have_init_ = true;
    } else {
      sk.methods.push_back(std::move(m));
    }
  }

  ClassSkeleton finish(ClassSkeleton sk) {
    if (!have_init_) {
      if (policy_ == InitPolicy::Require) throw MissingConstructorError(sk.class_name);
      sk.init = empty_constructor();
      sk.init_synthesized = true;
    }
    return sk;
  }

  std::string_view src_;
  InitPolicy policy_;
  LexedSource lexed_;
  std::set<std::string> seen_;
  bool have_init_ = false;
};

std::string render_docstring(const DocstringParts& doc, std::string_view pad) {
  const std::string& raw = doc.raw;
  bool multiline = raw.find('\n') != std::string::npos || raw.ends_with('"') || raw.ends_with('\\');
  std::string quote = raw.find("\"\"\"") != std::string::npos ? "'''" : "\"\"\"";
  std::string out(pad);
  if (!multiline) {
    out += quote + raw + quote + "\n";
    return out;
  }
  out += quote + "\n";
  out += indent_all(raw, pad) + "\n";
  out += std::string(pad) + quote + "\n";
  return out;
}

}  // namespace

const MethodDef* ClassSkeleton::find(std::string_view method) const {
  if (method == "__init__") return &init;
  for (const auto& m : methods) {
    if (m.name == method) return &m;
  }
  return nullptr;
}

bool ClassSkeleton::operator==(const ClassSkeleton& o) const {
  return class_name == o.class_name && bases == o.bases && class_docstring == o.class_docstring &&
         init == o.init && methods == o.methods && trailing_source == o.trailing_source;
}

bool is_noop_body(std::string_view body) {
  std::string t = trim(body);
  return t == "pass" || t == "...";
}

MethodDef empty_constructor() { return make_method("def __init__(self):", "pass"); }

MethodDef make_method(std::string signature_text, std::string body_text, std::optional<DocstringParts> docstring) {
  // Parse the header through a throwaway class so params follow the same rules.
  std::string probe = "class _Probe:\n" + indent_all(signature_text, "    ") + "\n        pass\n";
  ClassSkeleton sk = parse_class(probe, InitPolicy::Synthesize);
  MethodDef m = sk.methods.empty() ? sk.init : sk.methods.front();
  m.signature_text = std::move(signature_text);
  m.docstring = std::move(docstring);
  m.body_text = trim(body_text).empty() ? std::string("pass") : std::move(body_text);
  m.is_stub = is_noop_body(m.body_text);
  return m;
}

ClassSkeleton parse_class(std::string_view source, InitPolicy policy) { return ClassParser(source, policy).run(); }

std::string render_method(const MethodDef& m) {
  const std::string pad(kIndent, ' ');
  const std::string pad2(2 * kIndent, ' ');
  std::string out = pad + indent_continuations(m.signature_text, pad) + "\n";
  if (m.docstring && !m.docstring->empty()) out += render_docstring(*m.docstring, pad2);
  out += indent_all(m.body_text, pad2) + "\n";
  return out;
}

std::string render_skeleton(const ClassSkeleton& sk) {
  std::string out = "class " + sk.class_name;
  if (!sk.bases.empty()) out += "(" + sk.bases + ")";
  out += ":\n";
  if (sk.class_docstring && !sk.class_docstring->empty()) {
    out += render_docstring(*sk.class_docstring, std::string(kIndent, ' '));
    out += "\n";
  }
  out += render_method(sk.init);
  for (const auto& m : sk.methods) {
    out += "\n";
    out += render_method(m);
  }
  if (!sk.trailing_source.empty()) {
    out += "\n";
    out += indent_all(sk.trailing_source, std::string(kIndent, ' ')) + "\n";
  }
  return out;
}

}  // namespace specgap
