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

#include "specgap/conflict.hpp"

#include <algorithm>
#include <set>

#include "specgap/error.hpp"
#include "specgap/pylex.hpp"

namespace specgap {

namespace {

using py::Token;
using py::TokKind;
using Tokens = std::vector<Token>;

const std::set<std::string_view> kMutatorCalls = {"append", "extend", "insert", "pop", "remove", "clear",
                                                  "add", "update", "discard", "popleft", "appendleft",
                                                  "extendleft", "setdefault", "sort", "reverse"};

const std::set<std::string_view> kAugAssign = {"+=", "-=", "*=", "/=", "//=", "%=", "**=",
                                               "&=", "|=", "^=", "<<=", ">>=", "@="};

const std::set<std::string_view> kArithmetic = {"+", "-", "*", "/", "//", "%", "**"};

bool is_container(ContainerKind k) {
  return k == ContainerKind::List || k == ContainerKind::Dict || k == ContainerKind::Set || k == ContainerKind::Tuple;
}

bool has_top_level_comma(const Tokens& t, std::size_t from, std::size_t to, int depth) {
  for (std::size_t i = from; i < to; ++i) {
    if (t[i].depth == depth && t[i].is(",")) return true;
  }
  return false;
}

// Kind of the value expression t[from, to).
ContainerKind classify_value(const Tokens& t, std::size_t from, std::size_t to) {
  if (from >= to) return ContainerKind::Unknown;
  const Token& first = t[from];
  std::size_t last = to - 1;
  if (first.kind == TokKind::Op && (first.is("[") || first.is("{") || first.is("("))) {
    std::size_t close = py::matching_bracket(t, from);
    if (close == last) {
      int inner = first.depth + 1;
      if (first.is("[")) return ContainerKind::List;
      if (first.is("{")) {
        if (close == from + 1) return ContainerKind::Dict;
        for (std::size_t i = from + 1; i < close; ++i) {
          if (t[i].depth == inner && (t[i].is(":") || t[i].is("**"))) return ContainerKind::Dict;
        }
        return ContainerKind::Set;
      }
      if (close == from + 1 || has_top_level_comma(t, from + 1, close, inner)) return ContainerKind::Tuple;
      return classify_value(t, from + 1, close);
    }
  }
  if (to - from == 1) {
    if (first.kind == TokKind::Number || first.kind == TokKind::String) return ContainerKind::Scalar;
    if (first.is_name("True") || first.is_name("False") || first.is_name("None")) return ContainerKind::Scalar;
    return ContainerKind::Unknown;
  }
  if (to - from == 2 && (first.is("-") || first.is("+")) && t[from + 1].kind == TokKind::Number) {
    return ContainerKind::Scalar;
  }
  if (std::all_of(t.begin() + from, t.begin() + to, [](const Token& x) { return x.kind == TokKind::String; })) {
    return ContainerKind::Scalar;
  }
  // Constructor calls: list(...), collections.defaultdict(...), ...
  std::size_t i = from;
  while (i + 1 < to && t[i].kind == TokKind::Name && t[i + 1].is(".")) i += 2;
  if (i + 1 < to && t[i].kind == TokKind::Name && t[i + 1].is("(") && py::matching_bracket(t, i + 1) == last) {
    std::string_view fn = t[i].text;
    if (fn == "list" || fn == "deque") return ContainerKind::List;
    if (fn == "dict" || fn == "defaultdict" || fn == "OrderedDict" || fn == "Counter") return ContainerKind::Dict;
    if (fn == "set" || fn == "frozenset") return ContainerKind::Set;
    if (fn == "tuple") return ContainerKind::Tuple;
  }
  return ContainerKind::Unknown;
}

std::string source_text(std::string_view src, const Tokens& t, std::size_t from, std::size_t to) {
  if (from >= to) return {};
  std::size_t b = t[from].offset;
  std::size_t e = t[to - 1].offset + t[to - 1].text.size();
  return std::string(src.substr(b, e - b));
}

bool is_for_target(const Tokens& t, std::size_t in_index) {
  int depth = t[in_index].depth;
  static const std::set<std::string_view> kStops = {"in", "if", "and", "or", "not", "return", "while",
                                                    "lambda", "else", "yield", "elif", "assert"};
  for (std::size_t k = in_index; k-- > 0;) {
    const Token& x = t[k];
    if (x.depth > depth) continue;
    if (x.depth < depth) return false;
    if (x.is_name("for")) return true;
    if (x.kind == TokKind::Name && kStops.count(x.text)) return false;
    if (x.kind == TokKind::Op && (x.is("=") || x.is(":") || x.is(";") || kAugAssign.count(x.text))) return false;
  }
  return false;
}

class FragmentScanner {
 public:
  explicit FragmentScanner(StateModel& model) : model_(model) {}

  void constructor(const MethodDef& init) {
    std::string body = init.body_text;
    auto lexed = py::lex(body);
    for (const auto& line : lexed.lines) {
      const Tokens& t = line.tokens;
      // self.name [: annotation] = value
      if (t.size() >= 4 && t[0].is_name("self") && t[1].is(".") && t[2].kind == TokKind::Name) {
        std::size_t eq = std::string::npos;
        if (t[3].is("=")) {
          eq = 3;
        } else if (t[3].is(":")) {
          for (std::size_t i = 4; i < t.size(); ++i) {
            if (t[i].depth == 0 && t[i].is("=")) {
              eq = i;
              break;
            }
          }
        }
        if (eq != std::string::npos) {
          // Chained targets: value is the expression after the last '='.
          std::size_t value = eq + 1;
          for (std::size_t i = value; i < t.size(); ++i) {
            if (t[i].depth == 0 && t[i].is("=")) value = i + 1;
          }
          FieldState& f = touch(t[2].text);
          if (!f.assigned_in_init) {
            f.assigned_in_init = true;
            f.init_kind = classify_value(t, value, t.size());
            f.init_expr = source_text(body, t, value, t.size());
          }
        }
      }
      for (std::size_t i = 0; i + 2 < t.size(); ++i) {
        if (t[i].is_name("self") && t[i + 1].is(".") && t[i + 2].kind == TokKind::Name &&
            !(i + 3 < t.size() && t[i + 3].is("("))) {
          touch(t[i + 2].text);
        }
      }
    }
  }

  void method(const MethodDef& m) {
    auto lexed = py::lex(m.body_text);
    for (const auto& line : lexed.lines) scan_line(line.tokens, m.name);
  }

 private:
  FieldState& touch(const std::string& name) {
    auto [it, inserted] = model_.fields.try_emplace(name);
    if (inserted) model_.field_order.push_back(name);
    return it->second;
  }

  void record(const std::string& field, UsageOp op) {
    FieldState& f = touch(field);
    if (op.kind == UsageKind::Append || op.kind == UsageKind::Extend || op.kind == UsageKind::SubscriptWrite ||
        op.kind == UsageKind::TupleKeyWrite) {
      f.mutated = true;
    }
    f.usage_ops.push_back(std::move(op));
  }

  void scan_line(const Tokens& t, const std::string& method) {
    bool del_stmt = !t.empty() && t[0].is_name("del");
    for (std::size_t i = 0; i + 2 < t.size(); ++i) {
      if (!(t[i].is_name("self") && t[i + 1].is(".") && t[i + 2].kind == TokKind::Name)) continue;
      if (i > 0 && t[i - 1].is(".")) continue;
      const std::string& name = t[i + 2].text;
      std::size_t j = i + 3;

      if (j < t.size() && t[j].is("(")) {
        call_site(t, i, j, method);
        continue;
      }
      if (j + 2 < t.size() && t[j].is(".") && t[j + 1].kind == TokKind::Name && t[j + 2].is("(")) {
        const std::string& attr = t[j + 1].text;
        UsageOp op{UsageKind::AttributeCall, "", false, method};
        if (attr == "append") op.kind = UsageKind::Append;
        else if (attr == "extend") op.kind = UsageKind::Extend;
        else if (attr == "items") op.kind = UsageKind::ItemsIter;
        else if (attr == "keys") op.kind = UsageKind::KeysIter;
        else op.attribute = attr;
        record(name, std::move(op));
        continue;
      }
      if (j < t.size() && t[j].is("[")) {
        std::size_t close = py::matching_bracket(t, j);
        if (close == std::string::npos) continue;
        bool write = del_stmt || (close + 1 < t.size() && (t[close + 1].is("=") || kAugAssign.count(t[close + 1].text)));
        UsageOp op{UsageKind::SubscriptRead, "", false, method};
        if (write) {
          int inner = t[j].depth + 1;
          bool tuple_key = has_top_level_comma(t, j + 1, close, inner);
          if (!tuple_key && t[j + 1].is("(") && py::matching_bracket(t, j + 1) == close - 1) {
            tuple_key = close - 1 == j + 2 || has_top_level_comma(t, j + 2, close - 1, inner + 1);
          }
          op.kind = tuple_key ? UsageKind::TupleKeyWrite : UsageKind::SubscriptWrite;
        }
        op.int_key = close == j + 2 && t[j + 1].kind == TokKind::Number;
        record(name, std::move(op));
        continue;
      }
      if (i > 0 && t[i - 1].is_name("in") && !is_for_target(t, i - 1)) {
        record(name, UsageOp{UsageKind::Membership, "", false, method});
        continue;
      }
      touch(name);
    }
  }

  void call_site(const Tokens& t, std::size_t self_index, std::size_t open, const std::string& method) {
    std::size_t close = py::matching_bracket(t, open);
    if (close == std::string::npos) return;
    CallSite cs;
    cs.caller = method;
    cs.callee = t[self_index + 2].text;
    int inner = t[open].depth + 1;
    std::size_t start = open + 1;
    auto flush = [&](std::size_t end) {
      if (start >= end) return;
      if (t[start].is("*") || t[start].is("**")) {
        cs.star_args = true;
      } else if (end - start >= 2 && t[start].kind == TokKind::Name && t[start + 1].is("=")) {
        cs.keywords.push_back(t[start].text);
      } else {
        ++cs.positional;
      }
    };
    for (std::size_t k = open + 1; k < close; ++k) {
      if (t[k].depth == inner && t[k].is(",")) {
        flush(k);
        start = k + 1;
      }
    }
    flush(close);

    if (close + 1 < t.size() && t[close + 1].is("[")) {
      cs.use = UseContext::Subscript;
    } else if ((close + 1 < t.size() && t[close + 1].kind == TokKind::Op && kArithmetic.count(t[close + 1].text)) ||
               (self_index > 0 && t[self_index - 1].kind == TokKind::Op && kArithmetic.count(t[self_index - 1].text) &&
                !(t[self_index - 1].is("*") && (self_index == 1 || t[self_index - 2].is("(") || t[self_index - 2].is(","))))) {
      cs.use = UseContext::Arithmetic;
    } else if (self_index > 0 && t[self_index - 1].is_name("in") && is_for_target(t, self_index - 1)) {
      cs.use = UseContext::Iterate;
    }
    model_.calls.push_back(std::move(cs));
  }

  StateModel& model_;
};

// ---- cross-fragment checks ------------------------------------------------

enum class ValueKind { None, Number, Str, Bool, List, Dict, Set, Tuple, Unknown };

std::string_view to_string(ValueKind k) {
  switch (k) {
    case ValueKind::None: return "none";
    case ValueKind::Number: return "number";
    case ValueKind::Str: return "str";
    case ValueKind::Bool: return "bool";
    case ValueKind::List: return "list";
    case ValueKind::Dict: return "dict";
    case ValueKind::Set: return "set";
    case ValueKind::Tuple: return "tuple";
    case ValueKind::Unknown: return "unknown";
  }
  return "unknown";
}

ValueKind classify_return(const Tokens& t, std::size_t from, std::size_t to) {
  if (from >= to) return ValueKind::None;
  if (to - from == 1) {
    const Token& x = t[from];
    if (x.is_name("None")) return ValueKind::None;
    if (x.is_name("True") || x.is_name("False")) return ValueKind::Bool;
    if (x.kind == TokKind::Number) return ValueKind::Number;
    if (x.kind == TokKind::String) return ValueKind::Str;
  }
  if (t[from].kind == TokKind::Name && from + 1 < to && t[from + 1].is("(") &&
      py::matching_bracket(t, from + 1) == to - 1) {
    std::string_view fn = t[from].text;
    if (fn == "len" || fn == "sum" || fn == "int" || fn == "float" || fn == "round" || fn == "abs") {
      return ValueKind::Number;
    }
    if (fn == "str") return ValueKind::Str;
    if (fn == "bool") return ValueKind::Bool;
  }
  switch (classify_value(t, from, to)) {
    case ContainerKind::List: return ValueKind::List;
    case ContainerKind::Dict: return ValueKind::Dict;
    case ContainerKind::Set: return ValueKind::Set;
    case ContainerKind::Tuple: return ValueKind::Tuple;
    case ContainerKind::Scalar: return t[from].kind == TokKind::String ? ValueKind::Str : ValueKind::Number;
    default: break;
  }
  return ValueKind::Unknown;
}

// Kinds returned by a method body; a body without return yields None and
// a generator yields Unknown.
std::vector<ValueKind> return_kinds(const MethodDef& m) {
  auto lexed = py::lex(m.body_text);
  std::vector<ValueKind> kinds;
  bool generator = false;
  for (const auto& line : lexed.lines) {
    const Tokens& t = line.tokens;
    for (const auto& tok : t) {
      if (tok.is_name("yield")) generator = true;
    }
    if (!t.empty() && t[0].is_name("return")) kinds.push_back(classify_return(t, 1, t.size()));
  }
  if (generator) return {ValueKind::Unknown};
  if (kinds.empty()) kinds.push_back(ValueKind::None);
  return kinds;
}

bool compatible(UseContext use, ValueKind k) {
  if (k == ValueKind::Unknown) return true;
  switch (use) {
    case UseContext::Iterate:
      return k == ValueKind::List || k == ValueKind::Dict || k == ValueKind::Set || k == ValueKind::Tuple ||
             k == ValueKind::Str;
    case UseContext::Subscript:
      return k == ValueKind::List || k == ValueKind::Dict || k == ValueKind::Tuple || k == ValueKind::Str;
    case UseContext::Arithmetic:
      return k == ValueKind::Number || k == ValueKind::Bool;
    case UseContext::None:
      return true;
  }
  return true;
}

std::string_view use_phrase(UseContext u) {
  switch (u) {
    case UseContext::Iterate: return "iterable";
    case UseContext::Subscript: return "subscriptable";
    case UseContext::Arithmetic: return "number";
    case UseContext::None: return "value";
  }
  return "value";
}

// Whether a call with the given shape binds to params (self excluded).
bool call_binds(const CallSite& cs, const std::vector<Param>& all_params) {
  if (cs.star_args) return true;
  std::vector<Param> params(all_params.begin() + (all_params.empty() ? 0 : 1), all_params.end());
  std::vector<const Param*> positional;
  std::vector<const Param*> keyword_only;
  bool var_positional = false;
  bool var_keyword = false;
  bool after_star = false;
  for (const auto& p : params) {
    if (p.name == "/") continue;
    if (p.name.starts_with("**")) {
      var_keyword = true;
    } else if (p.name.starts_with("*")) {
      if (p.name.size() > 1) var_positional = true;
      after_star = true;
    } else if (after_star) {
      keyword_only.push_back(&p);
    } else {
      positional.push_back(&p);
    }
  }
  if (cs.positional > static_cast<int>(positional.size()) && !var_positional) return false;
  std::set<std::string> bound;
  for (int i = 0; i < cs.positional && i < static_cast<int>(positional.size()); ++i) bound.insert(positional[i]->name);
  for (const auto& kw : cs.keywords) {
    bool known = std::any_of(positional.begin(), positional.end(), [&](const Param* p) { return p->name == kw; }) ||
                 std::any_of(keyword_only.begin(), keyword_only.end(), [&](const Param* p) { return p->name == kw; });
    if (!known && !var_keyword) return false;
    if (!bound.insert(kw).second) return false;
  }
  for (const auto* p : positional) {
    if (!p->has_default && !bound.count(p->name)) return false;
  }
  for (const auto* p : keyword_only) {
    if (!p->has_default && !bound.count(p->name)) return false;
  }
  return true;
}

std::string params_text(const MethodDef& m) {
  std::string s = m.name + "(";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) s += ", ";
    s += m.params[i].name;
    if (m.params[i].has_default) s += "=...";
  }
  return s + ")";
}

std::string ops_list(const FieldState& f) {
  std::vector<std::string> names;
  for (const auto& op : f.usage_ops) {
    std::string n = op.name();
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  std::string s = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ", ";
    s += "'" + names[i] + "'";
  }
  return s + "]";
}

bool call_mutates(const FieldState& f) {
  return std::any_of(f.usage_ops.begin(), f.usage_ops.end(), [](const UsageOp& op) {
    return op.kind == UsageKind::Append || op.kind == UsageKind::Extend ||
           (op.kind == UsageKind::AttributeCall && kMutatorCalls.count(op.attribute));
  });
}

struct Side {
  const ClassSkeleton& sk;
  const StateModel& model;
};

// Known kind of a field in one fragment and how it was established.
std::pair<ContainerKind, std::string> effective_kind(const FieldState& f) {
  if (f.assigned_in_init) {
    return {f.init_kind, "Initializes as " + std::string(to_string(f.init_kind))};
  }
  ContainerKind k = infer_kind_from_usage(f);
  return {k, "Uses as " + std::string(to_string(k)) + ": " + ops_list(f)};
}

bool implemented(const ClassSkeleton& sk, const std::string& method) {
  const MethodDef* m = sk.find(method);
  return m && !m->is_stub;
}

struct Ordered {
  Conflict conflict;
  std::size_t order;
};

}  // namespace

std::string UsageOp::name() const {
  switch (kind) {
    case UsageKind::Append: return "append";
    case UsageKind::Extend: return "extend";
    case UsageKind::SubscriptRead: return "subscript_read";
    case UsageKind::SubscriptWrite: return "subscript_write";
    case UsageKind::TupleKeyWrite: return "tuple_key_write";
    case UsageKind::ItemsIter: return "items_iter";
    case UsageKind::KeysIter: return "keys_iter";
    case UsageKind::Membership: return "membership";
    case UsageKind::AttributeCall: return attribute;
  }
  return attribute;
}

const FieldState* StateModel::field(std::string_view name) const {
  auto it = fields.find(std::string(name));
  return it == fields.end() ? nullptr : &it->second;
}

std::string_view to_string(ContainerKind k) {
  switch (k) {
    case ContainerKind::List: return "list";
    case ContainerKind::Dict: return "dict";
    case ContainerKind::Set: return "set";
    case ContainerKind::Tuple: return "tuple";
    case ContainerKind::Scalar: return "scalar";
    case ContainerKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::Type: return "TYPE";
    case ConflictKind::State: return "STATE";
    case ConflictKind::Protocol: return "PROTOCOL";
    case ConflictKind::Return: return "RETURN";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::High: return "HIGH";
    case Severity::Med: return "MED";
    case Severity::Low: return "LOW";
  }
  return "?";
}

ContainerKind infer_kind_from_usage(const FieldState& f) {
  bool list_like = false;
  bool dict_like = false;
  for (const auto& op : f.usage_ops) {
    switch (op.kind) {
      case UsageKind::Append:
      case UsageKind::Extend: list_like = true; break;
      case UsageKind::TupleKeyWrite:
      case UsageKind::ItemsIter:
      case UsageKind::KeysIter: dict_like = true; break;
      case UsageKind::SubscriptWrite:
        if (!op.int_key) dict_like = true;
        break;
      default: break;
    }
  }
  if (list_like == dict_like) return ContainerKind::Unknown;
  return list_like ? ContainerKind::List : ContainerKind::Dict;
}

int ConflictReport::count(ConflictKind k) const {
  auto it = counts_by_kind.find(k);
  return it == counts_by_kind.end() ? 0 : it->second;
}

StateModel analyze_fragment(const ClassSkeleton& sk) {
  StateModel model;
  FragmentScanner scanner(model);
  scanner.constructor(sk.init);
  for (const auto& m : sk.methods) scanner.method(m);
  return model;
}

StateModel analyze_fragment(std::string_view source) {
  return analyze_fragment(parse_class(source, InitPolicy::Synthesize));
}

ConflictReport detect_conflicts(const ClassSkeleton& a_sk, const ClassSkeleton& b_sk) {
  StateModel a_model = analyze_fragment(a_sk);
  StateModel b_model = analyze_fragment(b_sk);
  Side sides[2] = {{a_sk, a_model}, {b_sk, b_model}};

  // Subject order: fields (then methods) as first seen in A, then in B.
  std::map<std::string, std::size_t> field_rank;
  for (const auto* m : {&a_model, &b_model}) {
    for (const auto& f : m->field_order) field_rank.try_emplace(f, field_rank.size());
  }
  std::map<std::string, std::size_t> method_rank;
  for (const auto* sk : {&a_sk, &b_sk}) {
    for (const auto& m : sk->methods) method_rank.try_emplace(m.name, method_rank.size());
  }

  std::vector<Ordered> found;
  for (const auto& [name, rank] : field_rank) {
    const FieldState* fa = a_model.field(name);
    const FieldState* fb = b_model.field(name);
    if (!fa || !fb) continue;

    auto [ka, ea] = effective_kind(*fa);
    auto [kb, eb] = effective_kind(*fb);
    if (is_container(ka) && is_container(kb) && ka != kb) {
      found.push_back({{ConflictKind::Type, Severity::High, name, ea, eb}, rank});
    }

    bool ma = call_mutates(*fa);
    bool mb = call_mutates(*fb);
    if (ma != mb) {
      std::string read_only = "Operations: read/write only";
      found.push_back({{ConflictKind::State, Severity::Low, name, ma ? "Operations: " + ops_list(*fa) : read_only,
                        mb ? "Operations: " + ops_list(*fb) : read_only},
                       rank});
    }
  }

  std::set<std::pair<ConflictKind, std::string>> seen_methods;
  for (int s = 0; s < 2; ++s) {
    const Side& caller = sides[s];
    const Side& other = sides[1 - s];
    for (const auto& cs : caller.model.calls) {
      if (implemented(caller.sk, cs.callee) || !implemented(other.sk, cs.callee)) continue;
      const MethodDef& def = *other.sk.find(cs.callee);
      std::size_t rank = method_rank.count(cs.callee) ? method_rank[cs.callee] : method_rank.size();
      auto evidence = [&](std::string caller_text, std::string def_text) {
        return s == 0 ? std::make_pair(caller_text, def_text) : std::make_pair(def_text, caller_text);
      };

      if (!call_binds(cs, def.params) && seen_methods.insert({ConflictKind::Protocol, cs.callee}).second) {
        std::string call_text = "Calls " + cs.callee + "() with " + std::to_string(cs.positional) +
                                " positional argument(s)";
        if (!cs.keywords.empty()) call_text += " and " + std::to_string(cs.keywords.size()) + " keyword(s)";
        auto [ea, eb] = evidence(call_text, "Defines " + params_text(def));
        found.push_back({{ConflictKind::Protocol, Severity::Med, cs.callee, ea, eb}, rank});
      }

      if (cs.use != UseContext::None) {
        auto kinds = return_kinds(def);
        bool any_ok = std::any_of(kinds.begin(), kinds.end(), [&](ValueKind k) { return compatible(cs.use, k); });
        if (!any_ok && seen_methods.insert({ConflictKind::Return, cs.callee}).second) {
          std::string returns = "Returns: [";
          std::vector<std::string_view> names;
          for (auto k : kinds) {
            if (std::find(names.begin(), names.end(), to_string(k)) == names.end()) names.push_back(to_string(k));
          }
          for (std::size_t i = 0; i < names.size(); ++i) returns += (i ? ", '" : "'") + std::string(names[i]) + "'";
          returns += "]";
          auto [ea, eb] = evidence("Uses return of " + cs.callee + "() as " + std::string(use_phrase(cs.use)), returns);
          found.push_back({{ConflictKind::Return, Severity::Low, cs.callee, ea, eb}, rank});
        }
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const Ordered& x, const Ordered& y) {
    if (x.conflict.kind != y.conflict.kind) return x.conflict.kind < y.conflict.kind;
    return x.order < y.order;
  });
  ConflictReport report;
  for (auto k : {ConflictKind::Type, ConflictKind::State, ConflictKind::Protocol, ConflictKind::Return}) {
    report.counts_by_kind[k] = 0;
  }
  for (auto& o : found) {
    ++report.counts_by_kind[o.conflict.kind];
    report.conflicts.push_back(std::move(o.conflict));
  }
  return report;
}

ConflictReport detect_conflicts(std::string_view frag_a, std::string_view frag_b) {
  return detect_conflicts(parse_class(frag_a, InitPolicy::Synthesize), parse_class(frag_b, InitPolicy::Synthesize));
}

std::string render_report(const ConflictReport& r) {
  if (r.conflicts.empty()) return "No conflicts detected.\n";
  std::string out;
  for (std::size_t i = 0; i < r.conflicts.size(); ++i) {
    const Conflict& c = r.conflicts[i];
    if (i) out += "\n";
    bool field = c.kind == ConflictKind::Type || c.kind == ConflictKind::State;
    out += "Conflict " + std::to_string(i + 1) + " [" + std::string(to_string(c.kind)) + ", " +
           std::string(to_string(c.severity)) + "]: " + (field ? "field self." : "method ") + c.subject + "\n";
    switch (c.kind) {
      case ConflictKind::State: out += "  Cross-boundary state dependency with mutations\n"; break;
      case ConflictKind::Protocol: out += "  Cross-fragment call does not match the definition\n"; break;
      case ConflictKind::Return: out += "  Cross-fragment return value used incompatibly\n"; break;
      case ConflictKind::Type: break;
    }
    out += "  Agent A: " + c.evidence_a + "\n";
    out += "  Agent B: " + c.evidence_b + "\n";
  }
  return out;
}

nlohmann::ordered_json report_to_json(const ConflictReport& r) {
  nlohmann::ordered_json j;
  auto list = nlohmann::ordered_json::array();
  for (const auto& c : r.conflicts) {
    list.push_back({{"kind", to_string(c.kind)},
                    {"severity", to_string(c.severity)},
                    {"subject", c.subject},
                    {"evidence_a", c.evidence_a},
                    {"evidence_b", c.evidence_b}});
  }
  j["conflicts"] = list;
  nlohmann::ordered_json counts;
  for (auto k : {ConflictKind::Type, ConflictKind::State, ConflictKind::Protocol, ConflictKind::Return}) {
    counts[std::string(to_string(k))] = r.count(k);
  }
  j["counts"] = counts;
  return j;
}

ConflictReport report_from_json(const nlohmann::json& j) {
  auto kind_of = [](const std::string& s) {
    for (auto k : {ConflictKind::Type, ConflictKind::State, ConflictKind::Protocol, ConflictKind::Return}) {
      if (s == to_string(k)) return k;
    }
    throw DataError("unknown conflict kind '" + s + "'");
  };
  auto sev_of = [](const std::string& s) {
    for (auto v : {Severity::High, Severity::Med, Severity::Low}) {
      if (s == to_string(v)) return v;
    }
    throw DataError("unknown severity '" + s + "'");
  };
  ConflictReport r;
  for (auto k : {ConflictKind::Type, ConflictKind::State, ConflictKind::Protocol, ConflictKind::Return}) {
    r.counts_by_kind[k] = 0;
  }
  for (const auto& c : j.at("conflicts")) {
    Conflict x{kind_of(c.at("kind").get<std::string>()), sev_of(c.at("severity").get<std::string>()),
               c.at("subject").get<std::string>(), c.at("evidence_a").get<std::string>(),
               c.at("evidence_b").get<std::string>()};
    ++r.counts_by_kind[x.kind];
    r.conflicts.push_back(std::move(x));
  }
  return r;
}

}  // namespace specgap
