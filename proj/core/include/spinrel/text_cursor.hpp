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

#ifndef SPINREL_TEXT_CURSOR_HPP_
#define SPINREL_TEXT_CURSOR_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "spinrel/error.hpp"

namespace spinrel {

// Read position over a single-line or multi-line text buffer. Tracks line and
// column so parse errors can point at the offending character.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t first_line = 1)
      : text_(text), first_line_(first_line) {}

  std::string_view text() const { return text_; }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t pos) { pos_ = pos; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }

  // Next non-blank character, or '\0' at end of input.
  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  // Identifier: letter followed by letters or digits.
  std::string_view peek_identifier() {
    skip_space();
    std::size_t end = pos_;
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) {
      while (end < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[end])))
        ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  std::string_view read_identifier() {
    auto id = peek_identifier();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return id;
  }

  // Unsigned decimal digit run (no sign).
  std::string_view read_digits() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end])))
      ++end;
    if (end == pos_) fail("expected digits");
    auto digits = text_.substr(pos_, end - pos_);
    pos_ = end;
    return digits;
  }

  long read_int() {
    bool negative = consume('-');
    if (!negative) consume('+');
    auto digits = read_digits();
    if (digits.size() > 9) fail("integer too large");
    long value = std::stol(std::string(digits));
    return negative ? -value : value;
  }

  std::size_t line() const {
    std::size_t line = first_line_;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      if (text_[i] == '\n') ++line;
    return line;
  }

  std::size_t column() const {
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      col = text_[i] == '\n' ? 1 : col + 1;
    return col;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line(), column());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t first_line_;
};

}  // namespace spinrel

#endif  // SPINREL_TEXT_CURSOR_HPP_
