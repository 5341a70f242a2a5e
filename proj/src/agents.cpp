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

#include "specgap/agents.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "specgap/error.hpp"
#include "specgap/hashing.hpp"

namespace specgap {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<ContainerKind> container_word(std::string_view w) {
  if (w == "list" || w == "lists" || w == "array" || w == "queue" || w == "stack") return ContainerKind::List;
  if (w == "dict" || w == "dicts" || w == "dictionary" || w == "mapping") return ContainerKind::Dict;
  if (w == "set") return ContainerKind::Set;
  if (w == "tuple") return ContainerKind::Tuple;
  return std::nullopt;
}

std::optional<ContainerKind> kind_in_sentence(std::string_view text, std::string_view field) {
  std::string needle = "self." + std::string(field);
  std::optional<ContainerKind> best;
  std::size_t best_distance = std::string::npos;
  for (std::size_t at = text.find(needle); at != std::string_view::npos; at = text.find(needle, at + 1)) {
    std::size_t end = at + needle.size();
    if (end < text.size() && ident_char(text[end])) continue;
    if (at > 0 && ident_char(text[at - 1])) continue;
    std::size_t i = 0;
    while (i < text.size()) {
      if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      bool attribute = i > 0 && text[i - 1] == '.';
      auto kind = attribute ? std::nullopt : container_word(text.substr(i, j - i));
      if (kind) {
        // Words after the mention win ties: "self.x dict" reads forwards.
        std::size_t distance = i >= end ? 2 * (i - end) : 2 * (at - j) + 1;
        if (i < end && j > at) distance = std::string::npos;
        if (distance < best_distance) {
          best_distance = distance;
          best = kind;
        }
      }
      i = j;
    }
  }
  return best;
}

std::optional<ContainerKind> kind_in_docstring(const std::optional<DocstringParts>& doc, std::string_view field) {
  if (!doc) return std::nullopt;
  for (const auto& seg : doc->segments) {
    if (!seg.structure_ref || seg.kind == SegmentKind::Doctest) continue;
    if (auto k = kind_in_sentence(seg.text, field)) return k;
  }
  return std::nullopt;
}

ContainerKind bias_kind(Bias b) { return b == Bias::Dict ? ContainerKind::Dict : ContainerKind::List; }

bool is_collection(ContainerKind k) {
  return k == ContainerKind::List || k == ContainerKind::Dict || k == ContainerKind::Set || k == ContainerKind::Tuple;
}

const Implementation& choose_implementation(const TaskBundle& task, const std::map<std::string, ContainerKind>& want) {
  if (task.implementations.empty()) throw DataError(task.id + " has no implementations for the scripted agents");
  const Implementation* best = &task.implementations.front();
  int best_score = -1;
  for (const auto& impl : task.implementations) {
    int score = 0;
    for (const auto& [field, kind] : want) {
      auto it = impl.kinds.find(field);
      if (it != impl.kinds.end() && it->second == kind) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best = &impl;
    }
  }
  return *best;
}

std::string trim_trailing_newlines(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

std::string_view to_string(AgentRole role) {
  switch (role) {
    case AgentRole::Single: return "single";
    case AgentRole::SplitA: return "split_a";
    case AgentRole::SplitB: return "split_b";
    case AgentRole::Merger: return "merger";
  }
  return "?";
}

std::string_view to_string(Bias bias) {
  switch (bias) {
    case Bias::List: return "list";
    case Bias::Dict: return "dict";
    case Bias::None: return "none";
  }
  return "?";
}

AgentConfig AgentConfig::for_role(AgentRole role) {
  AgentConfig c;
  c.role = role;
  switch (role) {
    case AgentRole::SplitA: c.bias = Bias::List; c.temperature = 0.7; break;
    case AgentRole::SplitB: c.bias = Bias::Dict; c.temperature = 0.7; break;
    case AgentRole::Single:
    case AgentRole::Merger: c.bias = Bias::None; c.temperature = 0.0; break;
  }
  return c;
}

Prompt build_generation_prompt(const AgentConfig& cfg, const SkeletonVariant& variant,
                               const MethodAssignment* assignment) {
  const ClassSkeleton& sk = variant.skeleton;
  Prompt p;
  if (cfg.role == AgentRole::Merger) throw std::invalid_argument("merger prompts are built by build_merger_prompt");
  if (cfg.role == AgentRole::Single) {
    if (assignment) throw std::invalid_argument("single agents take no method assignment");
    p.system = cfg.system_prompt.empty()
                   ? prompt_template(variant.init_visible ? "single_system_visible" : "single_system_hidden")
                   : cfg.system_prompt;
    p.user = render_template(prompt_template("single_user"), {{"class_name", sk.class_name},
                                                             {"description", class_description(sk)},
                                                             {"skeleton", trim_trailing_newlines(variant.source)}});
    return p;
  }
  if (!assignment) throw std::invalid_argument("split agents need a method assignment");
  if (cfg.bias == Bias::None) throw std::invalid_argument("split agents need a list or dict bias");
  const auto& mine = cfg.role == AgentRole::SplitA ? assignment->group_a : assignment->group_b;
  const auto& theirs = cfg.role == AgentRole::SplitA ? assignment->group_b : assignment->group_a;

  if (cfg.system_prompt.empty()) {
    p.system = render_template(
        prompt_template("split_system"),
        {{"bias_convention", prompt_template(cfg.bias == Bias::List ? "bias_list" : "bias_dict")},
         {"init_rule", prompt_template(variant.init_visible ? "init_rule_visible" : "init_rule_hidden")}});
  } else {
    p.system = cfg.system_prompt;
  }
  std::string your_methods;
  for (const auto& name : mine) {
    const MethodDef* m = sk.find(name);
    if (!m) throw std::invalid_argument("assigned method " + name + " is not in the skeleton");
    if (!your_methods.empty()) your_methods += "\n";
    your_methods += render_method(*m);
  }
  std::string other_methods;
  for (const auto& name : theirs) {
    const MethodDef* m = sk.find(name);
    if (!m) throw std::invalid_argument("assigned method " + name + " is not in the skeleton");
    other_methods += indent_lines(m->signature_text, "    ") + "\n";
  }
  p.user = render_template(
      prompt_template("split_user"),
      {{"class_name", sk.class_name},
       {"description", class_description(sk)},
       {"constructor_heading",
        variant.init_visible ? "Constructor (keep EXACTLY as provided):" : "Constructor (not shown; define it yourself):"},
       {"constructor", trim_trailing_newlines(render_method(sk.init))},
       {"your_methods", trim_trailing_newlines(your_methods)},
       {"other_methods", trim_trailing_newlines(other_methods)}});
  return p;
}

std::string extract_code(std::string_view response) {
  std::string code;
  bool in_fence = false;
  bool any_fence = false;
  std::size_t pos = 0;
  while (pos < response.size()) {
    std::size_t nl = response.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? response.size() : nl;
    std::string_view line = response.substr(pos, end - pos);
    std::string_view stripped = line;
    while (!stripped.empty() && (stripped.front() == ' ' || stripped.front() == '\t')) stripped.remove_prefix(1);
    if (stripped.starts_with("```")) {
      any_fence = true;
      in_fence = !in_fence;
      if (!in_fence && !code.empty() && code.back() != '\n') code += '\n';
    } else if (in_fence) {
      code.append(line);
      code += '\n';
    }
    pos = end + 1;
  }
  if (!any_fence) code = std::string(response);
  try {
    (void)parse_class(code, InitPolicy::Synthesize);
  } catch (const ParseError& e) {
    throw ParseError(std::string("no parseable class in response: ") + e.what());
  }
  return code;
}

std::optional<ContainerKind> documented_kind(const ClassSkeleton& sk, std::string_view field) {
  if (auto k = kind_in_docstring(sk.class_docstring, field)) return k;
  if (auto k = kind_in_docstring(sk.init.docstring, field)) return k;
  for (const auto& m : sk.methods) {
    if (auto k = kind_in_docstring(m.docstring, field)) return k;
  }
  return std::nullopt;
}

std::string scripted_generate(const AgentConfig& cfg, const TaskBundle& task, const SkeletonVariant& variant,
                              const MethodAssignment* assignment, std::uint64_t /*seed*/) {
  if (cfg.role == AgentRole::Merger) throw std::invalid_argument("use scripted_merge for the merger role");
  bool split = cfg.role != AgentRole::Single;
  if (split != (assignment != nullptr)) throw std::invalid_argument("assignment must be present exactly for split roles");

  StateModel shown;
  if (variant.init_visible) shown = analyze_fragment(variant.skeleton);
  std::map<std::string, ContainerKind> want;
  for (const auto& [field, truth] : task.fields) {
    (void)truth;
    const FieldState* f = variant.init_visible ? shown.field(field) : nullptr;
    if (f && f->assigned_in_init && is_collection(f->init_kind)) {
      want[field] = f->init_kind;
    } else if (auto k = documented_kind(variant.skeleton, field)) {
      want[field] = *k;
    } else {
      want[field] = bias_kind(cfg.bias);
    }
  }
  const Implementation& impl = choose_implementation(task, want);

  ClassSkeleton out;
  out.class_name = variant.skeleton.class_name;
  out.bases = variant.skeleton.bases;
  out.init = variant.init_visible ? variant.skeleton.init : impl.skeleton.init;
  out.trailing_source = impl.skeleton.trailing_source;
  std::set<std::string> mine;
  if (assignment) {
    const auto& group = cfg.role == AgentRole::SplitA ? assignment->group_a : assignment->group_b;
    mine.insert(group.begin(), group.end());
  }
  for (const auto& m : variant.skeleton.methods) {
    if (!split || mine.count(m.name)) {
      const MethodDef* got = impl.skeleton.find(m.name);
      if (!got) throw DataError(task.id + ": " + impl.file + " lacks " + m.name);
      out.methods.push_back(*got);
    } else {
      out.methods.push_back(make_method(m.signature_text, "pass"));
    }
  }
  return render_skeleton(out);
}

std::string scripted_merge(const TaskBundle& task, const SkeletonVariant& merger_variant, std::string_view frag_a,
                           std::string_view /*frag_b*/, const ConflictReport* /*report*/, std::uint64_t /*seed*/) {
  StateModel a = analyze_fragment(frag_a);
  StateModel shown;
  if (merger_variant.init_visible) shown = analyze_fragment(merger_variant.skeleton);
  std::map<std::string, ContainerKind> want;
  for (const auto& [field, truth] : task.fields) {
    (void)truth;
    const FieldState* visible = merger_variant.init_visible ? shown.field(field) : nullptr;
    const FieldState* fa = a.field(field);
    if (visible && visible->assigned_in_init && is_collection(visible->init_kind)) {
      want[field] = visible->init_kind;
    } else if (auto k = documented_kind(merger_variant.skeleton, field)) {
      want[field] = *k;
    } else if (fa && fa->assigned_in_init && is_collection(fa->init_kind)) {
      want[field] = fa->init_kind;
    } else {
      want[field] = ContainerKind::List;
    }
  }
  ClassSkeleton out = choose_implementation(task, want).skeleton;
  out.class_name = merger_variant.skeleton.class_name;
  return render_skeleton(out);
}

std::string complete(AgentProvider& provider, const Prompt& prompt, std::uint64_t seed) {
  CompletionRequest req;
  req.prompt = prompt;
  req.seed = seed;
  return provider.complete(req);
}

std::string ScriptedProvider::complete(const CompletionRequest& req) {
  const GenerationContext* ctx = req.context;
  if (!ctx || !ctx->task || !ctx->variant) {
    throw std::invalid_argument("the scripted provider needs a generation context");
  }
  if (ctx->cfg.role == AgentRole::Merger) {
    return scripted_merge(*ctx->task, *ctx->variant, ctx->fragment_a, ctx->fragment_b, ctx->report, req.seed);
  }
  return scripted_generate(ctx->cfg, *ctx->task, *ctx->variant, ctx->assignment, req.seed);
}

std::filesystem::path ReplayProvider::fixture_path(const Prompt& prompt) const {
  return dir_ / (prompt_hash(prompt.text()) + ".txt");
}

std::string ReplayProvider::complete(const CompletionRequest& req) {
  auto path = fixture_path(req.prompt);
  if (!std::filesystem::exists(path)) {
    throw ReplayMissError("no replay fixture " + path.filename().string() + " in " + dir_.string());
  }
  return read_text_file(path);
}

std::string RecordingProvider::complete(const CompletionRequest& req) {
  std::string out = inner_->complete(req);
  std::lock_guard lock(write_mutex_);
  write_text_file(dir_ / (prompt_hash(req.prompt.text()) + ".txt"), out);
  return out;
}

ExternalConfig ExternalConfig::from_env() { return from_env(ExternalConfig{}); }

ExternalConfig ExternalConfig::from_env(ExternalConfig defaults) {
  if (const char* v = std::getenv("SPECGAP_API_BASE"); v && *v) defaults.base_url = v;
  if (const char* v = std::getenv("SPECGAP_API_KEY"); v && *v) defaults.api_key = v;
  if (const char* v = std::getenv("SPECGAP_MODEL"); v && *v) defaults.model = v;
  return defaults;
}

ExternalProvider::ExternalProvider(ExternalConfig cfg)
    : cfg_(std::move(cfg)), slots_(std::clamp(cfg_.max_in_flight, 1, 1024)) {
  if (cfg_.base_url.empty()) throw std::invalid_argument("external provider needs a base URL (SPECGAP_API_BASE)");
  if (cfg_.model.empty()) throw std::invalid_argument("external provider needs a model (SPECGAP_MODEL)");
  std::string url = cfg_.base_url;
  std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) throw std::invalid_argument("base URL needs a scheme: " + url);
  std::size_t slash = url.find('/', scheme + 3);
  scheme_host_port_ = url.substr(0, slash);
  path_prefix_ = slash == std::string::npos ? "" : url.substr(slash);
  while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
}

std::string ExternalProvider::post_once(const std::string& body, std::optional<std::chrono::milliseconds>& retry_after,
                                        bool& retryable) {
  httplib::Client client(scheme_host_port_);
  client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout).count());
  client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(cfg_.timeout).count());
  httplib::Headers headers;
  if (!cfg_.api_key.empty()) headers.emplace("Authorization", "Bearer " + cfg_.api_key);
  auto res = client.Post(path_prefix_ + "/chat/completions", headers, body, "application/json");
  retry_after.reset();
  if (!res) {
    retryable = true;
    throw TransportError("request failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 429 || res->status >= 500) {
    retryable = true;
    if (res->has_header("Retry-After")) {
      try {
        retry_after = std::chrono::milliseconds(static_cast<long>(std::stod(res->get_header_value("Retry-After")) * 1000));
      } catch (const std::exception&) {
      }
    }
    throw TransportError("HTTP " + std::to_string(res->status));
  }
  if (res->status != 200) {
    retryable = false;
    throw TransportError("HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
  }
  try {
    auto j = nlohmann::json::parse(res->body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    retryable = false;
    throw TransportError(std::string("malformed completion response: ") + e.what());
  }
}

std::string ExternalProvider::complete(const CompletionRequest& req) {
  nlohmann::ordered_json body = {
      {"model", cfg_.model},
      {"messages", {{{"role", "system"}, {"content", req.prompt.system}}, {{"role", "user"}, {"content", req.prompt.user}}}},
      {"temperature", req.temperature},
      {"seed", req.seed},
      {"max_tokens", cfg_.max_tokens}};
  std::string text = body.dump();
  slots_.acquire();
  struct Release {
    std::counting_semaphore<1024>& s;
    ~Release() { s.release(); }
  } release{slots_};
  for (int attempt = 0;; ++attempt) {
    std::optional<std::chrono::milliseconds> retry_after;
    bool retryable = false;
    try {
      return post_once(text, retry_after, retryable);
    } catch (const TransportError&) {
      if (!retryable || attempt >= cfg_.max_retries) throw;
    }
    std::this_thread::sleep_for(retry_after.value_or(cfg_.backoff * (1 << attempt)));
  }
}

std::shared_ptr<AgentProvider> make_provider(std::string_view id, const std::filesystem::path& fixtures) {
  if (id == "scripted") return std::make_shared<ScriptedProvider>();
  if (id == "replay") {
    if (fixtures.empty()) throw std::invalid_argument("the replay provider needs a fixtures directory");
    return std::make_shared<ReplayProvider>(fixtures);
  }
  if (id == "external") return std::make_shared<ExternalProvider>(ExternalConfig::from_env());
  throw std::invalid_argument("unknown provider '" + std::string(id) + "'");
}

}  // namespace specgap
