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

#include "specgap/task.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "specgap/error.hpp"

namespace specgap {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  static std::atomic<unsigned long> counter{0};
  std::filesystem::path tmp = path;
  tmp += "." + std::to_string(::getpid()) + "." + std::to_string(counter++) + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw DataError("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

ContainerKind parse_container_kind(std::string_view text) {
  if (text == "list") return ContainerKind::List;
  if (text == "dict") return ContainerKind::Dict;
  if (text == "set") return ContainerKind::Set;
  if (text == "tuple") return ContainerKind::Tuple;
  if (text == "scalar") return ContainerKind::Scalar;
  throw DataError("unknown container kind '" + std::string(text) + "'");
}

TaskBundle load_task(const std::filesystem::path& dir) {
  TaskBundle t;
  t.dir = dir;
  nlohmann::ordered_json meta;
  try {
    meta = nlohmann::ordered_json::parse(read_text_file(dir / "task.json"));
    t.id = meta.at("id").get<std::string>();
    t.class_name = meta.at("class_name").get<std::string>();
    t.timeout_seconds = meta.value("timeout_seconds", 10.0);
    for (const auto& [name, kind] : meta.at("fields").items()) {
      t.fields.emplace_back(name, parse_container_kind(kind.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError((dir / "task.json").string() + ": " + e.what());
  }
  t.skeleton_source = read_text_file(dir / "skeleton.py");
  t.skeleton = parse_class(t.skeleton_source);
  if (t.skeleton.class_name != t.class_name) {
    throw DataError(t.id + ": skeleton class " + t.skeleton.class_name + " does not match " + t.class_name);
  }
  t.test_source = read_text_file(dir / "tests.py");
  for (const auto& entry : meta.value("implementations", nlohmann::ordered_json::array())) {
    Implementation impl;
    try {
      impl.file = entry.at("file").get<std::string>();
      for (const auto& [name, kind] : entry.at("kinds").items()) {
        impl.kinds[name] = parse_container_kind(kind.get<std::string>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataError((dir / "task.json").string() + ": " + e.what());
    }
    impl.source = read_text_file(dir / impl.file);
    impl.skeleton = parse_class(impl.source);
    for (const auto& m : t.skeleton.methods) {
      const MethodDef* got = impl.skeleton.find(m.name);
      if (!got || got->is_stub) throw DataError(t.id + ": " + impl.file + " does not implement " + m.name);
    }
    t.implementations.push_back(std::move(impl));
  }
  return t;
}

std::vector<TaskBundle> load_tasks(const std::filesystem::path& root) {
  if (std::filesystem::exists(root / "task.json")) return {load_task(root)};
  std::vector<TaskBundle> out;
  if (!std::filesystem::is_directory(root)) throw DataError("no task directory at " + root.string());
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "task.json")) {
      out.push_back(load_task(entry.path()));
    }
  }
  std::sort(out.begin(), out.end(), [](const TaskBundle& a, const TaskBundle& b) { return a.id < b.id; });
  if (out.empty()) throw DataError("no tasks found under " + root.string());
  return out;
}

}  // namespace specgap
