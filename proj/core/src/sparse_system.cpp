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

#include "spinrel/sparse_system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spinrel/coefficient_text.hpp"
#include "spinrel/error.hpp"
#include "spinrel/text_cursor.hpp"

namespace spinrel {

SparseSystem::SparseSystem(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

std::size_t SparseSystem::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseSystem::insert(std::size_t row, std::size_t col, const RadNum& value) {
  if (row >= rows_.size() || col >= cols_)
    throw DomainError("entry (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") outside " +
                      std::to_string(rows_.size()) + " x " + std::to_string(cols_));
  if (value.is_zero()) return;
  SparseRow& r = rows_[row];
  auto c = static_cast<Index>(col);
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const auto& e, Index k) { return e.first < k; });
  if (it != r.end() && it->first == c)
    throw DomainError("duplicate entry (" + std::to_string(row) + ", " +
                      std::to_string(col) + ")");
  r.insert(it, {c, value});
}

RadNum SparseSystem::at(std::size_t row, std::size_t col) const {
  const SparseRow& r = rows_.at(row);
  auto c = static_cast<Index>(col);
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const auto& e, Index k) { return e.first < k; });
  return it != r.end() && it->first == c ? it->second : RadNum();
}

std::size_t SparseSystem::add_rhs_column() {
  rhs_.emplace_back(rows_.size());
  return rhs_.size() - 1;
}

void SparseSystem::set_rhs(std::size_t row, std::size_t column, const ParamPoly& value) {
  if (column >= rhs_.size() || row >= rows_.size())
    throw DomainError("right-hand side index out of range");
  rhs_[column][row] = value;
}

bool SparseSystem::is_rational() const {
  for (const auto& r : rows_)
    for (const auto& [c, v] : r)
      if (!v.is_rational()) return false;
  return true;
}

SparseSystem SparseSystem::matrix_only() const {
  SparseSystem out;
  out.cols_ = cols_;
  out.rows_ = rows_;
  return out;
}

std::vector<RadNum> SparseSystem::multiply(const std::vector<RadNum>& x) const {
  if (x.size() != cols_) throw DomainError("vector length does not match columns");
  std::vector<RadNum> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i])
      if (!x[c].is_zero()) out[i] += v * x[c];
  return out;
}

std::vector<ParamPoly> SparseSystem::multiply(const std::vector<ParamPoly>& x) const {
  if (x.size() != cols_) throw DomainError("vector length does not match columns");
  std::vector<ParamPoly> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i])
      if (!x[c].is_zero()) out[i] += x[c] * v;
  return out;
}

namespace {

std::size_t read_index(TextCursor& cursor, std::size_t limit, const char* what) {
  if (cursor.peek() == '-') cursor.fail(std::string(what) + " must be non-negative");
  auto digits = cursor.read_digits();
  if (digits.size() > 9) cursor.fail(std::string(what) + " too large");
  std::size_t v = std::stoul(std::string(digits));
  if (v >= limit)
    cursor.fail(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

SparseSystem parse_matrix(std::string_view text) {
  SparseSystem system;
  bool have_header = false;
  std::size_t nrhs = 0;
  bool implicit_rhs = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    TextCursor cursor(line, line_no);
    if (cursor.peek() == '\0') continue;
    if (!have_header) {
      std::size_t rows = read_index(cursor, 1'000'000'000, "row count");
      std::size_t cols = read_index(cursor, 1'000'000'000, "column count");
      if (cursor.peek() != '\0')
        nrhs = read_index(cursor, 1'000, "rhs count");
      else
        implicit_rhs = true;
      if (cursor.peek() != '\0') cursor.fail("unexpected text in header");
      system = SparseSystem(rows, cols);
      for (std::size_t k = 0; k < nrhs; ++k) system.add_rhs_column();
      have_header = true;
      continue;
    }
    if (cursor.peek() == 'b') {
      cursor.consume('b');
      if (nrhs == 0 && implicit_rhs) {
        // "rows cols" header: b-lines open a single right-hand side.
        system.add_rhs_column();
        nrhs = 1;
        implicit_rhs = false;
      }
      if (nrhs == 0) cursor.fail("right-hand side given but header declares none");
      std::size_t r = read_index(cursor, system.rows(), "row");
      std::size_t k = nrhs > 1 ? read_index(cursor, nrhs, "rhs column") : 0;
      ParamPoly value = parse_coefficient(cursor);
      if (cursor.peek() != '\0') cursor.fail("unexpected trailing input");
      if (!system.rhs(k)[r].is_zero()) cursor.fail("duplicate right-hand side entry");
      system.set_rhs(r, k, value);
      continue;
    }
    std::size_t r = read_index(cursor, system.rows(), "row");
    std::size_t c = read_index(cursor, system.cols(), "column");
    cursor.skip_space();
    std::size_t value_pos = cursor.pos();
    ParamPoly value = parse_coefficient(cursor);
    if (cursor.peek() != '\0') cursor.fail("unexpected trailing input");
    if (!value.is_constant()) {
      cursor.set_pos(value_pos);
      cursor.fail("parameter in matrix entry (" + std::to_string(r) + ", " +
                  std::to_string(c) + "); parameters are only allowed on the "
                  "right-hand side");
    }
    try {
      system.insert(r, c, value.constant_term());
    } catch (const DomainError& e) {
      cursor.set_pos(0);
      cursor.fail(e.what());
    }
  }
  if (!have_header) throw ParseError("missing 'rows cols' header", line_no, 1);
  return system;
}

SparseSystem load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

namespace {

std::string paren(std::string s) {
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

std::string serialize(const SparseSystem& system) {
  std::string out = std::to_string(system.rows()) + " " + std::to_string(system.cols());
  if (system.rhs_count() > 0) out += " " + std::to_string(system.rhs_count());
  out += "\n";
  for (std::size_t r = 0; r < system.rows(); ++r)
    for (const auto& [c, v] : system.row(r))
      out += std::to_string(r) + " " + std::to_string(c) + " " + paren(v.to_string()) + "\n";
  for (std::size_t k = 0; k < system.rhs_count(); ++k) {
    for (std::size_t r = 0; r < system.rows(); ++r) {
      const ParamPoly& v = system.rhs(k)[r];
      if (v.is_zero()) continue;
      out += "b " + std::to_string(r) + " ";
      if (system.rhs_count() > 1) out += std::to_string(k) + " ";
      out += paren(v.to_string()) + "\n";
    }
  }
  return out;
}

}  // namespace spinrel
