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

#ifndef SPINREL_TOOLS_CLI_HPP_
#define SPINREL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace spinrel::cli {

enum class Format { kHuman, kStructured };

// Settings shared by every subcommand.
struct RunConfig {
  Format format = Format::kHuman;
  int threads = 0;
  int max_leaves = 4;
  int max_spin = 8;
  std::size_t dense_limit = 64;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // validator, covariance or solver finding
inline constexpr int kExitError = 2;      // bad input or usage

// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Property suite behind `selfcheck`.
std::vector<CheckLine> selfcheck(const std::string& corpus_path, int threads);

}  // namespace spinrel::cli

#endif  // SPINREL_TOOLS_CLI_HPP_
