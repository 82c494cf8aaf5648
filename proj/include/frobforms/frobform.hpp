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

// Frobenius forms h = sum_ij a_ij x_i^q x_j, q = p^e with e >= 1, stored as
// their (unique) coefficient matrix. A change of coordinates x -> g x acts on
// the matrix by A -> (g^[q])^T A g.

#ifndef FROBFORMS_FROBFORM_HPP_
#define FROBFORMS_FROBFORM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobforms/linalg.hpp"
#include "frobforms/polynomial.hpp"

namespace frobforms {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 26;

class FrobeniusForm {
 public:
  FrobeniusForm(Matrix a, unsigned e);

  const Matrix& matrix() const { return a_; }
  const Field& field() const { return a_.field(); }
  std::size_t n() const { return a_.rows(); }
  unsigned e() const { return e_; }
  std::uint64_t q() const;

  bool operator==(const FrobeniusForm& other) const {
    return e_ == other.e_ && a_ == other.a_;
  }

 private:
  Matrix a_;
  unsigned e_;
};

// A sparse shape: ones at (i, js[i]) for i < r, zeros elsewhere. Column
// indices are 1-based and strictly decreasing.
struct SparsePattern {
  std::size_t n = 0;
  std::vector<std::size_t> js;

  std::size_t rank() const { return js.size(); }
  Matrix matrix(const Field& f) const;
  // Number of distinct variables in x_1^q x_{j_1} + ... + x_r^q x_{j_r}.
  std::size_t distinct_variables() const;
  // Every x_1..x_n occurs in the pattern's form.
  bool covers_all_variables() const { return distinct_variables() == n; }
  // "(5,4,2)".
  std::string to_string() const;

  bool operator==(const SparsePattern&) const = default;
};

Polynomial to_polynomial(const FrobeniusForm& f);
FrobeniusForm from_polynomial(const Polynomial& h, unsigned e);

FrobeniusForm act(const FrobeniusForm& f, const Matrix& g);
FrobeniusForm embed(const FrobeniusForm& f, const Embedding& embedding);

std::size_t rank(const FrobeniusForm& f);

// Coordinates that can be dropped after a change of variables form the
// subspace W = ker A  ∩  phi^{-1}(left-ker A), phi the entrywise q-th power:
// column j of (g^[q])^T A g vanishes iff A g e_j = 0, and row j vanishes iff
// (g e_j)^[q] is in the left kernel.
std::vector<Vector> removable_subspace(const FrobeniusForm& f);
std::size_t embedding_dimension(const FrobeniusForm& f);

struct EmbdimReduction {
  // Invertible; the last n - m columns span the removable subspace.
  Matrix g;
  // Top-left m x m block of act(f, g).
  FrobeniusForm reduced;
};
EmbdimReduction reduce_to_embdim(const FrobeniusForm& f);

// Number of points of GF(p^(k m))^n where every partial derivative
// sum_i a_ij x_i^q vanishes. Throws kOrderTooLarge above `cap` points.
std::uint64_t singular_cone_count(const FrobeniusForm& f, unsigned m,
                                  std::uint64_t cap = kDefaultStateCap);

std::optional<SparsePattern> is_sparse(const FrobeniusForm& f);
bool is_hermitian(const FrobeniusForm& f);

// Zero-padded form in n variables with `f` in the first block.
FrobeniusForm pad(const FrobeniusForm& f, std::size_t n);

}  // namespace frobforms

#endif  // FROBFORMS_FROBFORM_HPP_
