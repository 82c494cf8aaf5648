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

#ifndef FROBFORMS_POLYNOMIAL_HPP_
#define FROBFORMS_POLYNOMIAL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobforms/linalg.hpp"

namespace frobforms {

using Exponents = std::vector<std::uint64_t>;

// Sparse multivariate polynomial in x1..xn. Terms are kept sorted by exponent
// vector (lexicographic, ascending) with no zero coefficients.
class Polynomial {
 public:
  Polynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial variable(const Field& field, std::size_t nvars, std::size_t index);
  static Polynomial constant(const Field& field, std::size_t nvars, Elem c);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^exps, merging with an existing term.
  void add_term(const Exponents& exps, Elem c);
  Elem coefficient(const Exponents& exps) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(Elem c) const;
  Polynomial pow(std::uint64_t n) const;

  // Substitution x -> g x, i.e. x_i -> sum_j g_ij x_j.
  Polynomial substitute(const Matrix& g) const;
  Polynomial embedded(const Embedding& embedding) const;

  // Terms in descending exponent order, e.g. "x1^2*x5 + x2^2*x4 + x3^3".
  std::string to_string() const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && field_ == other.field_ && terms_ == other.terms_;
  }

 private:
  Field field_;
  std::size_t nvars_;
  std::map<Exponents, Elem> terms_;
};

}  // namespace frobforms

#endif  // FROBFORMS_POLYNOMIAL_HPP_
