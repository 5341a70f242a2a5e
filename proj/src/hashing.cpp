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

#include "specgap/hashing.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>

#include "specgap/error.hpp"

namespace specgap {

namespace {

std::array<unsigned char, 32> sha256_raw(std::string_view data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  std::array<unsigned char, 32> out{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != out.size()) {
    throw Error("sha256: digest failed");
  }
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  static constexpr char kHex[] = "0123456789abcdef";
  auto raw = sha256_raw(data);
  std::string hex;
  hex.reserve(64);
  for (unsigned char b : raw) {
    hex.push_back(kHex[b >> 4]);
    hex.push_back(kHex[b & 0xf]);
  }
  return hex;
}

std::string normalize_prompt(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::string line;
  auto flush_line = [&] {
    auto end = line.find_last_not_of(" \t\f\v");
    line.erase(end == std::string::npos ? 0 : end + 1);
    out += line;
    line.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      flush_line();
      out.push_back('\n');
    } else if (c == '\n') {
      flush_line();
      out.push_back('\n');
    } else {
      line.push_back(c);
    }
  }
  flush_line();
  auto end = out.find_last_not_of(" \t\n");
  out.erase(end == std::string::npos ? 0 : end + 1);
  return out;
}

std::string prompt_hash(std::string_view text) { return sha256_hex(normalize_prompt(text)); }

std::uint64_t derive_seed(std::initializer_list<std::string_view> parts) {
  std::string joined;
  bool first = true;
  for (auto p : parts) {
    if (!first) joined.push_back('|');
    joined.append(p);
    first = false;
  }
  auto raw = sha256_raw(joined);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | raw[i];
  return seed;
}

}  // namespace specgap
