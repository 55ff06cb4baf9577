// Copyright 2026 The erent Authors
//
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

#ifndef ERENT_ERRORS_H_
#define ERENT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace erent {

// Base class of every error raised by the library. Infeasibility of a
// budgeted problem is not an error: solvers report it by returning an empty
// std::optional.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidBlockSets : public Error {
 public:
  using Error::Error;
};

class BadSource : public Error {
 public:
  using Error::Error;
};

// Raised when an instance exceeds a configured size cap (oracle job count,
// tardy-weight processing-time cap).
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field)
      : Error(Format(message, line, field)), line_(line), field_(std::move(field)) {}

  // 1-based line of the offending text, 0 when unknown.
  std::size_t line() const { return line_; }
  // JSON path of the offending field ("jobs[2].p"), empty for syntax errors.
  const std::string& field() const { return field_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            const std::string& field) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in " + field;
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace erent

#endif  // ERENT_ERRORS_H_
