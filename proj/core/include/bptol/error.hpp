// Copyright 2026 The bptol Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BPTOL_ERROR_HPP_
#define BPTOL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bptol {

// Malformed graph or pairs text. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A caller broke an operation's precondition (bad id, s == t, non-canonical
// join argument, ...).
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The brute-force reference refuses instances above its size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bptol

#endif  // BPTOL_ERROR_HPP_
