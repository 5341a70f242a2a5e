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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "specgap/conflict.hpp"
#include "specgap/skeleton.hpp"

namespace specgap {

/// A complete implementation of a task with fixed container kinds, used by
/// the scripted agents.
struct Implementation {
  std::string file;
  std::map<std::string, ContainerKind> kinds;
  std::string source;
  ClassSkeleton skeleton;
};

/// One benchmark task: the L0 skeleton with its true constructor, a unit
/// test suite, and the implementations the bias simulator draws from.
///
/// Layout of a task directory:
///   task.json    {"id", "class_name", "fields": {name: kind}, "timeout_seconds",
///                 "implementations": [{"file", "kinds": {name: kind}}]}
///   skeleton.py  L0 skeleton
///   tests.py     unittest suite that names the class directly
struct TaskBundle {
  std::string id;
  std::filesystem::path dir;
  std::string class_name;
  std::string skeleton_source;
  ClassSkeleton skeleton;
  std::string test_source;
  std::vector<std::pair<std::string, ContainerKind>> fields;  // collection fields and their true kinds
  std::vector<Implementation> implementations;
  double timeout_seconds = 10.0;
};

/// Throws DataError for missing files or malformed metadata.
TaskBundle load_task(const std::filesystem::path& dir);

/// Every subdirectory containing task.json, sorted by task id.
std::vector<TaskBundle> load_tasks(const std::filesystem::path& root);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

ContainerKind parse_container_kind(std::string_view text);

}  // namespace specgap
