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

#include <random>
#include <string>
#include <vector>

namespace specgap::testing {

/// Builds a syntactically valid Python class skeleton with random methods,
/// parameters and docstrings mixing prose, structure references, edge cases,
/// :param/:return lines and doctests.
class RandomSkeleton {
 public:
  explicit RandomSkeleton(std::uint64_t seed) : rng_(seed) {}

  std::string generate() {
    std::vector<std::string> fields;
    int nfields = pick(1, 3);
    for (int i = 0; i < nfields; ++i) fields.push_back(choice(kFieldNames) + std::to_string(i));

    std::string src = "class " + choice(kClassNames) + std::to_string(pick(0, 99)) + ":\n";
    if (coin()) src += "    \"\"\"" + sentence(fields) + "\"\"\"\n\n";
    src += "    def __init__(self):\n";
    if (coin()) src += "        \"\"\"Set up " + fields[0] + ".\"\"\"\n";
    for (const auto& f : fields) src += "        self." + f + " = " + choice(kInitExprs) + "\n";

    int nmethods = pick(3, 7);
    for (int m = 0; m < nmethods; ++m) {
      std::string name = choice(kVerbs) + "_" + choice(kNouns) + std::to_string(m);
      std::vector<std::string> params;
      int np = pick(0, 3);
      for (int p = 0; p < np; ++p) params.push_back(choice(kParamNames) + std::to_string(p));
      std::string sig = "def " + name + "(self";
      for (std::size_t p = 0; p < params.size(); ++p) {
        sig += ", " + params[p];
        if (p + 1 == params.size() && coin(0.3)) sig += "=None";
      }
      sig += "):";
      src += "\n    " + sig + "\n";
      bool has_doc = coin(0.85);
      if (has_doc) src += docstring(fields, params, name);
      if (!has_doc || coin(0.3)) src += "        pass\n";
    }
    return src;
  }

 private:
  static inline const std::vector<std::string> kClassNames = {"Ledger", "Roster", "Catalog", "Tracker", "Registry"};
  static inline const std::vector<std::string> kFieldNames = {"items", "records", "entries", "index", "pool"};
  static inline const std::vector<std::string> kInitExprs = {"[]", "{}", "set()", "dict()", "list()", "0", "None"};
  static inline const std::vector<std::string> kVerbs = {"add", "get", "remove", "count", "find", "update"};
  static inline const std::vector<std::string> kNouns = {"item", "record", "total", "owner", "entry"};
  static inline const std::vector<std::string> kParamNames = {"name", "key", "value", "amount", "limit"};
  static inline const std::vector<std::string> kProse = {
      "Compute the running figure for this object.", "Register the given value.",
      "Look up a single entry by key.", "Update the stored state.", "Summarize what has been recorded so far."};
  static inline const std::vector<std::string> kEdge = {
      "Returns None if the key is missing.", "Raises ValueError when the amount is invalid.",
      "Returns 0 when nothing was recorded.", "Ignores names below the threshold."};

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  const std::string& choice(const std::vector<std::string>& v) {
    return v[static_cast<std::size_t>(pick(0, static_cast<int>(v.size()) - 1))];
  }

  std::string structure_sentence(const std::vector<std::string>& fields) {
    static const std::vector<std::string> kinds = {"dict", "list", "set", "mapping"};
    return "Stores the result in self." + choice(fields) + " " + choice(kinds) + ".";
  }

  std::string sentence(const std::vector<std::string>& fields) {
    int r = pick(0, 2);
    if (r == 0) return choice(kProse);
    if (r == 1) return structure_sentence(fields);
    return choice(kEdge);
  }

  std::string docstring(const std::vector<std::string>& fields, const std::vector<std::string>& params,
                        const std::string& method) {
    std::vector<std::string> lines;
    int nsent = pick(1, 3);
    for (int i = 0; i < nsent; ++i) lines.push_back(sentence(fields));
    for (const auto& p : params) {
      if (coin(0.6)) lines.push_back(":param " + p + ": str, the " + p);
    }
    if (coin(0.5)) lines.push_back(":return: " + std::string(coin() ? "int" : "list of str"));
    if (coin(0.5)) {
      lines.push_back(">>> obj." + method + "()");
      if (coin()) lines.push_back(std::to_string(pick(0, 9)));
    }
    if (lines.size() == 1 && coin()) return "        \"\"\"" + lines[0] + "\"\"\"\n";
    std::string out = "        \"\"\"\n";
    for (const auto& l : lines) out += "        " + l + "\n";
    return out + "        \"\"\"\n";
  }

  std::mt19937_64 rng_;
};

}  // namespace specgap::testing
