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

#include <stdexcept>
#include <string>

namespace specgap {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed subject source. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The class has no __init__; callers may retry with a synthesized one.
class MissingConstructorError : public ParseError {
 public:
  explicit MissingConstructorError(const std::string& class_name);
};

/// Task has fewer than three non-constructor methods.
class IneligibleTaskError : public Error {
 public:
  using Error::Error;
};

/// An assigned method is missing or still a stub in its fragment.
class IncompleteFragmentError : public Error {
 public:
  IncompleteFragmentError(const std::string& method, const std::string& agent);
  const std::string& method() const { return method_; }

 private:
  std::string method_;
};

/// No recorded response exists for a prompt or evaluation key.
class ReplayMissError : public Error {
 public:
  using Error::Error;
};

/// Network or subprocess failure that may succeed when retried.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// Input data is well-formed syntactically but violates a contract.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace specgap
