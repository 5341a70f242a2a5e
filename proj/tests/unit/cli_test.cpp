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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "specgap/task.hpp"
#include "test_util.hpp"

using specgap::testing::asset;
using specgap::testing::read_file;
using specgap::testing::source_dir;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / ("specgap_cli_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

int cli(const std::string& args) {
  std::string cmd = std::string(SPECGAP_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string ab(const std::string& rel) { return (source_dir() / "assets" / "reference" / rel).string(); }

}  // namespace

TEST_CASE("exit codes: success, usage error, data error") {
  CHECK(cli("--help") == 0);
  CHECK(cli("") == 1);
  CHECK(cli("frobnicate") == 1);
  CHECK(cli("ablate --task bank_account --level L9") == 1);
  CHECK(cli("ablate --task bank_account --format yaml") == 1);
  CHECK(cli("detect /nonexistent/a.py /nonexistent/b.py") == 2);
  CHECK(cli("report --runs /nonexistent/runs.jsonl") == 2);
}

TEST_CASE("detect prints the reference report") {
  fs::path out = scratch() / "report.txt";
  REQUIRE(cli("detect " + ab("agent_a.py") + " " + ab("agent_b.py") + " --out " + out.string()) == 0);
  CHECK(read_file(out) == asset("reference/conflict_report.txt"));
}

TEST_CASE("ablate, merge and agents write their outputs") {
  fs::path dir = scratch();
  REQUIRE(cli("ablate --task bank_account --level L1 --hide-init --out " + (dir / "v.py").string()) == 0);
  CHECK(read_file(dir / "v.py") == asset("fixtures/golden/bank_account_L1_hidden.py"));

  REQUIRE(cli("merge --skeleton " + ab("skeleton_L0.py") + " --split-only --out " + (dir / "split.json").string()) ==
          0);
  CHECK(read_file(dir / "split.json").find("get_course_average") != std::string::npos);
  REQUIRE(cli("merge --skeleton " + ab("skeleton_L0.py") + " " + ab("agent_a.py") + " " + ab("agent_b.py") +
              " --out " + (dir / "merged.py").string()) == 0);
  CHECK(read_file(dir / "merged.py").rfind("class AssessmentSystem", 0) == 0);

  REQUIRE(cli("agents --task inventory --level L3 --role a --init hidden --out " + (dir / "a.py").string()) == 0);
  CHECK(read_file(dir / "a.py").find("self.items = []") != std::string::npos);
  REQUIRE(cli("agents --task inventory --role single --prompt-only --out " + (dir / "p.txt").string()) == 0);
  CHECK(read_file(dir / "p.txt").find("```python") != std::string::npos);
}

TEST_CASE("run, metrics and report over a scripted main plan") {
  fs::path dir = scratch();
  fs::path log = dir / "runs.jsonl";
  fs::remove(log);
  REQUIRE(cli("run --experiment main --seed 4 --workers 2 --out " + log.string()) == 0);
  REQUIRE(cli("report --runs " + log.string() + " --format csv --out " + (dir / "levels.csv").string()) == 0);
  CHECK(read_file(dir / "levels.csv").rfind("level,single,split,gap,conflicts\n", 0) == 0);
  CHECK(fs::exists(dir / "levels.csv.audit.json"));
  REQUIRE(cli("metrics --runs " + log.string() + " --what gap --out " + (dir / "gap.json").string()) == 0);
  CHECK(read_file(dir / "gap.json").find("wilcoxon") != std::string::npos);
  REQUIRE(cli("metrics --runs " + log.string() + " --what detector --format csv --out " +
              (dir / "det.csv").string()) == 0);
  CHECK(read_file(dir / "det.csv").rfind("level,tp,fn,fp,recall,precision\n", 0) == 0);
  CHECK(cli("metrics --runs " + log.string() + " --what everything") == 1);
}

TEST_CASE("replayed recovery run through the command line") {
  fs::path log = scratch() / "reference.jsonl";
  fs::remove(log);
  REQUIRE(cli("run --experiment recovery --task-ids assessment_system --levels L3 --provider replay --out " +
              log.string()) == 0);
  auto text = read_file(log);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  CHECK(text.find("\"status\":\"error\"") == std::string::npos);
}

TEST_CASE("config file values are used and flags win over them") {
  fs::path dir = scratch();
  specgap::write_text_file(dir / "bad.conf", "provider = nonsense\n");
  CHECK(cli("run --experiment main --task-ids job_board --config " + (dir / "bad.conf").string()) == 1);
  CHECK(cli("run --experiment main --task-ids job_board --provider scripted --config " + (dir / "bad.conf").string()) ==
        0);
  specgap::write_text_file(dir / "unknown.conf", "colour = blue\n");
  CHECK(cli("run --experiment main --config " + (dir / "unknown.conf").string()) == 2);
}

TEST_CASE("fixtures install copies the bundled material") {
  fs::path dest = scratch() / "installed";
  fs::remove_all(dest);
  REQUIRE(cli("fixtures install --dest " + dest.string()) == 0);
  CHECK(fs::exists(dest / "tasks" / "assessment_system" / "tests.py"));
  CHECK(fs::exists(dest / "fixtures" / "golden" / "reference_runs.jsonl"));
  CHECK(fs::exists(dest / "reference" / "conflict_report.txt"));
  CHECK(cli("fixtures frob") == 1);
}
