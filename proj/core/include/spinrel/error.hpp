// Copyright 2026 The spinrel Authors
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

#ifndef SPINREL_ERROR_HPP_
#define SPINREL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinrel {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        line_(line),
        column_(column),
        bare_message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& bare_message() const { return bare_message_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string bare_message_;
};

// Precondition violation on a well-formed value (zero radicand, |m| > j, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size or resource limit was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinrel

#endif  // SPINREL_ERROR_HPP_
