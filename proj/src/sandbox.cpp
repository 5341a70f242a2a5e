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

#include "specgap/sandbox.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <string>

#include "specgap/error.hpp"
#include "specgap/hashing.hpp"
#include "specgap/task.hpp"

namespace specgap {

namespace {

constexpr std::size_t kTailBytes = 2000;

std::string tail(const std::string& s) { return s.size() > kTailBytes ? s.substr(s.size() - kTailBytes) : s; }

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

// Writes all of \p data, tolerating a child that exits early.
void write_all(int fd, std::string_view data) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return;
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

nlohmann::ordered_json SandboxRequest::to_json() const {
  return {{"class_source", class_source}, {"test_source", test_source}, {"timeout_seconds", timeout_seconds}};
}

nlohmann::ordered_json SandboxResponse::to_json() const {
  return {{"total", total},   {"passed", passed},       {"failed", failed},
          {"errored", errored}, {"timed_out", timed_out}, {"stderr_tail", stderr_tail}};
}

SandboxResponse SandboxResponse::from_json(const nlohmann::json& j) {
  SandboxResponse r;
  try {
    r.total = j.at("total").get<int>();
    r.passed = j.at("passed").get<int>();
    r.failed = j.at("failed").get<int>();
    r.errored = j.at("errored").get<int>();
    r.timed_out = j.at("timed_out").get<bool>();
    r.stderr_tail = j.value("stderr_tail", "");
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed sandbox response: ") + e.what());
  }
  if (r.total < 0 || r.passed < 0 || r.failed < 0 || r.errored < 0) throw DataError("negative count in sandbox response");
  if (!r.timed_out && r.passed + r.failed + r.errored != r.total) {
    throw DataError("sandbox response counts do not add up to total");
  }
  return r;
}

SandboxResponse ShimEvaluator::evaluate(const SandboxRequest& req) {
  if (argv_.empty()) throw std::invalid_argument("empty shim command");
  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0 || ::pipe2(err_pipe, O_CLOEXEC) != 0) {
    throw TransportError(std::string("pipe: ") + std::strerror(errno));
  }
  std::vector<char*> args;
  for (auto& a : argv_) args.push_back(a.data());
  args.push_back(nullptr);

  pid_t pid = ::fork();
  if (pid < 0) throw TransportError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::dup2(err_pipe[1], STDERR_FILENO);
    ::execvp(args[0], args.data());
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);
  int out_fd = out_pipe[0];
  int err_fd = err_pipe[0];
  int in_fd = in_pipe[1];

  ::signal(SIGPIPE, SIG_IGN);
  write_all(in_fd, req.to_json().dump() + "\n");
  close_fd(in_fd);

  using clock = std::chrono::steady_clock;
  auto deadline = clock::now() + std::chrono::milliseconds(static_cast<long>((req.timeout_seconds + 1.0) * 1000));
  std::string out, err;
  bool killed = false;
  while (out_fd >= 0 || err_fd >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
    if (left <= 0) {
      ::kill(-pid, SIGKILL);
      killed = true;
      break;
    }
    pollfd fds[2];
    int n = 0;
    if (out_fd >= 0) fds[n++] = {out_fd, POLLIN, 0};
    if (err_fd >= 0) fds[n++] = {err_fd, POLLIN, 0};
    int rc = ::poll(fds, n, static_cast<int>(std::min<long>(left, 1000)));
    if (rc < 0 && errno != EINTR) break;
    for (int i = 0; i < n; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      char buf[4096];
      ssize_t got = ::read(fds[i].fd, buf, sizeof buf);
      int& fd = fds[i].fd == out_fd ? out_fd : err_fd;
      std::string& sink = fds[i].fd == out_fd ? out : err;
      if (got <= 0) {
        close_fd(fd);
      } else {
        sink.append(buf, static_cast<std::size_t>(got));
      }
    }
  }
  close_fd(out_fd);
  close_fd(err_fd);
  int status = 0;
  ::waitpid(pid, &status, 0);
  if (!killed) ::kill(-pid, SIGKILL);  // reap stray grandchildren

  if (killed) {
    SandboxResponse r;
    r.timed_out = true;
    r.stderr_tail = tail(err);
    return r;
  }
  std::size_t nl = out.find('\n');
  std::string line = out.substr(0, nl);
  if (line.empty()) throw TransportError("shim produced no response; stderr: " + tail(err));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw TransportError("shim response is not JSON: " + line.substr(0, 200));
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw DataError("shim rejected the request: " + j.value("error", line));
  }
  return SandboxResponse::from_json(j);
}

std::string evaluation_key(std::string_view class_source, std::string_view test_source) {
  std::string joined(class_source);
  joined.append("\n\0\n", 3);
  joined.append(test_source);
  return sha256_hex(joined);
}

SandboxResponse RecordedEvaluator::evaluate(const SandboxRequest& req) {
  auto path = dir_ / (evaluation_key(req.class_source, req.test_source) + ".json");
  if (!std::filesystem::exists(path)) {
    throw ReplayMissError("no recorded sandbox response " + path.filename().string() + " in " + dir_.string());
  }
  try {
    return SandboxResponse::from_json(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

SandboxResponse RecordingEvaluator::evaluate(const SandboxRequest& req) {
  SandboxResponse r = inner_->evaluate(req);
  std::lock_guard lock(write_mutex_);
  write_text_file(dir_ / (evaluation_key(req.class_source, req.test_source) + ".json"), r.to_json().dump(2) + "\n");
  return r;
}

}  // namespace specgap
