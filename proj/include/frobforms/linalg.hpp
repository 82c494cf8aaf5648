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

// Exact dense linear algebra over a `Field`.
//
// Echelon conventions are fixed so that kernels, complements and witnesses are
// reproducible: pivots are taken in the first row (by index) holding a nonzero
// entry of the current column, and every basis is returned in reduced
// row-echelon form.

#ifndef FROBFORMS_LINALG_HPP_
#define FROBFORMS_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "frobforms/gf.hpp"

namespace frobforms {

using Vector = std::vector<Elem>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(const Field& field, std::size_t n);
  // Rows of small integers, reduced into the prime subfield.
  static Matrix from_ints(const Field& field,
                          std::initializer_list<std::initializer_list<int>> rows);
  static Matrix from_columns(const Field& field, std::size_t rows,
                             const std::vector<Vector>& columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Elem>& entries() const { return entries_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
           entries_ == other.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

Matrix mat_mul(const Matrix& x, const Matrix& y);
Vector mat_vec(const Matrix& a, const Vector& v);
Matrix mat_add(const Matrix& x, const Matrix& y);

std::size_t rank(const Matrix& a);
// Reduced row-echelon form; `pivots` receives the pivot column of each row.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);

// {v : A v = 0}.
std::vector<Vector> right_kernel_basis(const Matrix& a);
// {w : w^T A = 0}.
std::vector<Vector> left_kernel_basis(const Matrix& a);

Matrix inverse(const Matrix& g);
bool is_invertible(const Matrix& g);

// Entrywise p^e-th power.
Matrix frobenius_twist(const Matrix& m, unsigned e);
Vector frobenius_twist(const Field& f, const Vector& v, unsigned e);
Vector inv_frobenius_twist(const Field& f, const Vector& v, unsigned e);

// (g^[p^e])^T A g.
Matrix twisted_congruence(const Matrix& a, const Matrix& g, unsigned e);

// Reduced basis of span(vectors) in dimension `dim`.
std::vector<Vector> span_basis(const Field& f, std::size_t dim,
                               const std::vector<Vector>& vectors);
std::vector<Vector> subspace_intersection(const Field& f, std::size_t dim,
                                          const std::vector<Vector>& u,
                                          const std::vector<Vector>& v);
// Least-index standard basis vectors completing `basis` to the whole space.
std::vector<Vector> complement_basis(const Field& f, std::size_t dim,
                                     const std::vector<Vector>& basis);

// Transvections I + c E_ij (i != j, c != 0) and diag(u, 1, ..., 1) for the
// least primitive element u; the latter is omitted when the unit group is
// trivial.
std::vector<Matrix> gl_generators(std::size_t n, const Field& f);

// Seeded uniform element of GL_n(f) by rejection.
Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng);

Matrix embed(const Matrix& m, const Embedding& embedding);
Vector embed(const Vector& v, const Embedding& embedding);

// n^2-bit encoding of square matrices over F_2 (n <= 5), entry (i, j) at bit
// i*n + j.
namespace packed_f2 {

using Code = std::uint32_t;

Code pack(const Matrix& a);
Matrix unpack(Code code, std::size_t n);
// g^T A g over F_2 (the Frobenius twist is trivial there).
Code congruence(Code a, Code g, std::size_t n);
// Action of the transvection I + E_ij: column j += column i, then
// row j += row i.
inline Code transvect(Code a, std::size_t n, std::size_t i, std::size_t j) {
  const Code row_mask = (Code{1} << n) - 1;
  Code col_i = 0;
  for (std::size_t r = 0; r < n; ++r) col_i |= ((a >> (r * n + i)) & 1u) << (r * n + j);
  a ^= col_i;
  a ^= ((a >> (i * n)) & row_mask) << (j * n);
  return a;
}

}  // namespace packed_f2

}  // namespace frobforms

#endif  // FROBFORMS_LINALG_HPP_
