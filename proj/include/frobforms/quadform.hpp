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

// Quadratic forms sum_{i<=j} c_ij x_i x_j and their normalization over
// extensions of the base field. In characteristic 2 every form becomes
// x1x2 + ... + x_{m-1}x_m, or that plus one square when m is odd; in odd
// characteristic it becomes x1^2 + ... + x_m^2.

#ifndef FROBFORMS_QUADFORM_HPP_
#define FROBFORMS_QUADFORM_HPP_

#include <cstdint>
#include <string>

#include "frobforms/linalg.hpp"
#include "frobforms/polynomial.hpp"

namespace frobforms {

class QuadraticForm {
 public:
  // `c` must be square and upper triangular; throws kInvalidArgument.
  explicit QuadraticForm(Matrix c);
  static QuadraticForm zero(const Field& f, std::size_t n);

  const Matrix& coeffs() const { return c_; }
  const Field& field() const { return c_.field(); }
  std::size_t n() const { return c_.rows(); }
  // c_ij for i <= j (either order accepted).
  Elem coeff(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  bool operator==(const QuadraticForm& other) const { return c_ == other.c_; }

 private:
  Matrix c_;
};

Polynomial to_polynomial(const QuadraticForm& q);
// Throws kNotHomogeneous or kWrongDegree unless every term has degree 2.
QuadraticForm quadratic_from_polynomial(const Polynomial& h);

// Q(g x), re-collected; throws kSingular for non-invertible g.
QuadraticForm act_quadratic(const QuadraticForm& q, const Matrix& g);
QuadraticForm embed(const QuadraticForm& q, const Embedding& embedding);

struct QuadCanonical {
  enum class Kind { kZero, kHyperbolic, kHyperbolicPlusSquare, kDiagonalOnes };
  Kind kind = Kind::kZero;
  std::size_t pairs = 0;    // hyperbolic pairs (characteristic 2)
  std::size_t squares = 0;  // 1 for kHyperbolicPlusSquare, m for kDiagonalOnes
  std::size_t n = 0;        // ambient variables

  std::size_t embedding_dimension() const { return 2 * pairs + squares; }
  std::string kind_name() const;
  bool operator==(const QuadCanonical&) const = default;
};

// The canonical form of embedding dimension m <= n in n variables; the kind
// follows from the characteristic of f.
QuadraticForm canonical_quadratic(const Field& f, std::size_t n, std::size_t m);
QuadCanonical canonical_kind(const Field& f, std::size_t n, std::size_t m);
QuadraticForm to_form(const QuadCanonical& c, const Field& f);

struct QuadNormalization {
  Matrix g;                // over `field`
  QuadCanonical canon;
  Field field;             // GF(p^(k * extension_degree))
  unsigned extension_degree = 1;
};

// act_quadratic(embed(q), g) == to_form(canon, field). The field grows by a
// factor 2 whenever a square root or Artin-Schreier root is missing; throws
// kOrderTooLarge past `order_bound`.
QuadNormalization normalize(const QuadraticForm& q,
                            std::uint64_t order_bound = kDefaultOrderBound);

// Odd characteristic: rank of the Gram matrix. Characteristic 2: variables
// left in the normal form.
std::size_t quad_embedding_dimension(const QuadraticForm& q);

}  // namespace frobforms

#endif  // FROBFORMS_QUADFORM_HPP_
