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

#ifndef SPINREL_COEFFICIENT_TEXT_HPP_
#define SPINREL_COEFFICIENT_TEXT_HPP_

#include <functional>
#include <string_view>

#include "spinrel/param_poly.hpp"
#include "spinrel/rad_num.hpp"
#include "spinrel/text_cursor.hpp"

namespace spinrel {

// Coefficient grammar (whitespace-insensitive):
//
//   sum     := [+|-] product { (+|-) product }
//   product := power { '*' power }
//   power   := primary [ '^' digits ]
//   primary := digits [ '/' digits ]
//            | 'sqrt' '(' [-] digits [ '/' digits ] ')'
//            | 'i' | 'f' | 'g1' | 'g2'
//            | '(' sum ')'
//
// `stop_before` is consulted after every '*': if it returns true the '*' is
// left unconsumed and the product ends there. Term lines use this to split
// "<coefficient> * <tree>".
using StopPredicate = std::function<bool(TextCursor&)>;

ParamPoly parse_coefficient(TextCursor& cursor,
                            const StopPredicate& stop_before = {});

// Parses a complete string; trailing input is an error.
ParamPoly parse_param_poly(std::string_view text);

// As parse_param_poly, but rejects any dependence on f, g1, g2.
RadNum parse_rad_num(std::string_view text);

}  // namespace spinrel

#endif  // SPINREL_COEFFICIENT_TEXT_HPP_
