// Copyright 2026 The frobforms Authors.
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

// Text input: field specs and polynomials.
//
//   field       := prime | prime '^' degree
//   polynomial  := ['-'] term (('+' | '-') term)*
//   term        := factor ('*'? factor)*
//   factor      := 'x' index ('^' int)?  |  int  |  't' ('^' int)?  |  '(' element ')'
//
// Whitespace is ignored. Coefficient factors (integers, powers of t,
// parenthesized field elements) multiply into the term's coefficient.

#ifndef FROBFORMS_PARSE_HPP_
#define FROBFORMS_PARSE_HPP_

#include <optional>
#include <string_view>

#include "frobforms/polynomial.hpp"

namespace frobforms {

// `nvars == 0` infers the variable count from the highest index mentioned.
Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars = 0);

// "2", "2^2", "3^2"; with an explicit modulus such as "t^2+t+1".
Field parse_field(std::string_view spec, std::optional<std::string_view> modulus = std::nullopt);

}  // namespace frobforms

#endif  // FROBFORMS_PARSE_HPP_
