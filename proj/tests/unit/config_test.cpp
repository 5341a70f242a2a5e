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

#include <cstdlib>

#include "doctest.h"
#include "specgap/config.hpp"
#include "specgap/error.hpp"

using namespace specgap;

TEST_CASE("key = value settings with comments, sections and quotes") {
  Settings s;
  s.merge_text(
      "# defaults\n"
      "[providers]\n"
      "provider = replay   # trailing comment\n"
      "sandbox = \"python3 shim.py # not a comment\"\n"
      "\n"
      "workers=4\n");
  CHECK(s.get("provider") == "replay");
  CHECK(s.get("sandbox") == "python3 shim.py # not a comment");
  CHECK(s.get_int("workers", 1) == 4);
  CHECK(s.get_u64("seed", 9) == 9);
  CHECK_FALSE(s.get("model"));
}

TEST_CASE("malformed settings are data errors") {
  Settings s;
  CHECK_THROWS_AS(s.merge_text("provider\n"), DataError);
  CHECK_THROWS_AS(s.merge_text("colour = blue\n"), DataError);
  s.merge_text("workers = many\n");
  CHECK_THROWS_AS(s.get_int("workers", 1), DataError);
  CHECK_THROWS_AS(s.set("nope", "1"), DataError);
}

TEST_CASE("flags override the file and the environment overrides both") {
  Settings s;
  s.merge_text("provider = replay\nmodel = file-model\nworkers = 2\n");
  s.set("provider", "scripted");
  s.set("workers", "3");
  ::setenv("SPECGAP_WORKERS", "8", 1);
  ::unsetenv("SPECGAP_PROVIDER");
  s.merge_env();
  ::unsetenv("SPECGAP_WORKERS");
  CHECK(s.get("provider") == "scripted");
  CHECK(s.get("model") == "file-model");
  CHECK(s.get_int("workers", 1) == 8);
}
