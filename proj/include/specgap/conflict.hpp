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
#include <vector>

#include "json.hpp"
#include "specgap/skeleton.hpp"

namespace specgap {

enum class ContainerKind { List, Dict, Set, Tuple, Scalar, Unknown };

enum class UsageKind {
  Append,
  Extend,
  SubscriptRead,
  SubscriptWrite,
  TupleKeyWrite,
  ItemsIter,
  KeysIter,
  Membership,
  AttributeCall,
};

struct UsageOp {
  UsageKind kind;
  std::string attribute;  // AttributeCall only
  bool int_key = false;   // subscript key is an integer literal
  std::string method;     // enclosing method

  std::string name() const;  // "append", "tuple_key_write", or the attribute name
  bool operator==(const UsageOp&) const = default;
};

struct FieldState {
  ContainerKind init_kind = ContainerKind::Unknown;
  bool assigned_in_init = false;
  std::string init_expr;
  std::vector<UsageOp> usage_ops;  // occurrence order
  bool mutated = false;            // append, extend, subscript_write or tuple_key_write seen

  bool operator==(const FieldState&) const = default;
};

enum class UseContext { None, Iterate, Subscript, Arithmetic };

/// A call of the form self.m(...) inside a method body.
struct CallSite {
  std::string caller;
  std::string callee;
  int positional = 0;
  std::vector<std::string> keywords;
  bool star_args = false;
  UseContext use = UseContext::None;

  bool operator==(const CallSite&) const = default;
};

/// Per-field constructor kinds and body usage of one class fragment.
struct StateModel {
  std::vector<std::string> field_order;  // first appearance
  std::map<std::string, FieldState> fields;
  std::vector<CallSite> calls;

  const FieldState* field(std::string_view name) const;
  bool operator==(const StateModel&) const = default;
};

std::string_view to_string(ContainerKind k);

/// Kind implied by usage alone: append/extend suggest a list; tuple-key
/// writes, items()/keys() iteration and non-integer subscript writes
/// suggest a dict. Unknown when there is no evidence or it is mixed.
ContainerKind infer_kind_from_usage(const FieldState& f);

/// Builds the state model of the single class in \p source. A missing
/// constructor is treated as an empty one.
StateModel analyze_fragment(std::string_view source);
StateModel analyze_fragment(const ClassSkeleton& sk);

enum class ConflictKind { Type, State, Protocol, Return };
enum class Severity { High, Med, Low };

std::string_view to_string(ConflictKind k);
std::string_view to_string(Severity s);

struct Conflict {
  ConflictKind kind;
  Severity severity;
  std::string subject;  // field name, or method name for PROTOCOL/RETURN
  std::string evidence_a;
  std::string evidence_b;

  bool operator==(const Conflict&) const = default;
};

struct ConflictReport {
  std::vector<Conflict> conflicts;
  std::map<ConflictKind, int> counts_by_kind;

  std::size_t size() const { return conflicts.size(); }
  int count(ConflictKind k) const;
  bool operator==(const ConflictReport&) const = default;
};

/// Structural conflicts between two fragments of the same class.
///
/// TYPE (HIGH): a field gets different container kinds (constructor kind,
///   or usage-inferred kind when a fragment never assigns it in __init__).
/// STATE (LOW): exactly one fragment mutates a field through a mutating
///   method call (append, pop, update, ...) while the other also uses it.
/// PROTOCOL (MED): a fragment calls self.m(...) that only the other
///   fragment implements, with arguments that cannot bind to its params.
/// RETURN (LOW): a fragment iterates, subscripts or does arithmetic on the
///   result of such a method while every return of it is incompatible.
///
/// Conflicts are grouped TYPE, STATE, PROTOCOL, RETURN; within a group they
/// follow first appearance of the subject in fragment A, then fragment B.
ConflictReport detect_conflicts(std::string_view frag_a, std::string_view frag_b);
ConflictReport detect_conflicts(const ClassSkeleton& a, const ClassSkeleton& b);

/// Text layout of the worked-example report; "No conflicts detected." when empty.
std::string render_report(const ConflictReport& r);

nlohmann::ordered_json report_to_json(const ConflictReport& r);
ConflictReport report_from_json(const nlohmann::json& j);

}  // namespace specgap
