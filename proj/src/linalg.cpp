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

#include "frobforms/linalg.hpp"

#include <algorithm>

namespace frobforms {
namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFieldMismatch, a.name() + " vs " + b.name());
  }
}

}  // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    std::size_t j = 0;
    for (int v : row) m.at(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) {
      throw Error(ErrorCode::kDimensionMismatch, "column length");
    }
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e.v == 0; });
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  require_same_field(x.field(), y.field());
  if (x.cols() != y.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "mat_mul: inner dimensions differ");
  }
  const Field& f = x.field();
  Matrix out(f, x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t l = 0; l < x.cols(); ++l) {
      const Elem a = x(i, l);
      if (a.v == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        out.at(i, j) = f.add(out(i, j), f.mul(a, y(l, j)));
      }
    }
  }
  return out;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "mat_vec");
  const Field& f = a.field();
  Vector out(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    }
  }
  return out;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
  require_same_field(x.field(), y.field());
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "mat_add");
  }
  Matrix out = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.field().add(x(i, j), y(i, j));
  }
  return out;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  const Field& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).v == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    const Elem scale = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).v == 0) continue;
      const Elem factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::vector<Vector> right_kernel_basis(const Matrix& a) {
  const Field& f = a.field();
  std::vector<std::size_t> piv;
  const Matrix r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return span_basis(f, a.cols(), basis);
}

std::vector<Vector> left_kernel_basis(const Matrix& a) {
  return right_kernel_basis(a.transpose());
}

Matrix inverse(const Matrix& g) {
  if (!g.square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = g.rows();
  const Field& f = g.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = g(i, j);
    aug.at(i, n + i) = f.one();
  }
  std::vector<std::size_t> piv;
  const Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) {
    throw Error(ErrorCode::kSingular, "matrix is not invertible");
  }
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r(i, n + j);
  }
  return out;
}

bool is_invertible(const Matrix& g) { return g.square() && rank(g) == g.rows(); }

Matrix frobenius_twist(const Matrix& m, unsigned e) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.field().frobenius(m(i, j), e);
  }
  return out;
}

Vector frobenius_twist(const Field& f, const Vector& v, unsigned e) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.frobenius(v[i], e);
  return out;
}

Vector inv_frobenius_twist(const Field& f, const Vector& v, unsigned e) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.inv_frobenius(v[i], e);
  return out;
}

Matrix twisted_congruence(const Matrix& a, const Matrix& g, unsigned e) {
  if (!a.square() || !g.square() || a.rows() != g.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "twisted_congruence needs n x n operands");
  }
  require_same_field(a.field(), g.field());
  if (!is_invertible(g)) throw Error(ErrorCode::kSingular, "coordinate change is singular");
  return mat_mul(mat_mul(frobenius_twist(g, e).transpose(), a), g);
}

std::vector<Vector> span_basis(const Field& f, std::size_t dim,
                               const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  Matrix m(f, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw Error(ErrorCode::kDimensionMismatch, "span_basis");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::vector<Vector> subspace_intersection(const Field& f, std::size_t dim,
                                          const std::vector<Vector>& u,
                                          const std::vector<Vector>& v) {
  for (const auto* set : {&u, &v}) {
    for (const auto& x : *set) {
      if (x.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "subspace_intersection");
    }
  }
  const auto ub = span_basis(f, dim, u);
  const auto vb = span_basis(f, dim, v);
  if (ub.empty() || vb.empty()) return {};
  // Solve sum a_i u_i - sum b_j v_j = 0.
  Matrix system(f, dim, ub.size() + vb.size());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < ub.size(); ++j) system.at(i, j) = ub[j][i];
    for (std::size_t j = 0; j < vb.size(); ++j) system.at(i, ub.size() + j) = f.neg(vb[j][i]);
  }
  std::vector<Vector> out;
  for (const auto& coeffs : right_kernel_basis(system)) {
    Vector x(dim, f.zero());
    for (std::size_t j = 0; j < ub.size(); ++j) {
      for (std::size_t i = 0; i < dim; ++i) x[i] = f.add(x[i], f.mul(coeffs[j], ub[j][i]));
    }
    out.push_back(std::move(x));
  }
  return span_basis(f, dim, out);
}

std::vector<Vector> complement_basis(const Field& f, std::size_t dim,
                                     const std::vector<Vector>& basis) {
  std::vector<Vector> current = basis;
  std::size_t r = span_basis(f, dim, current).size();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim && r < dim; ++i) {
    Vector e(dim, f.zero());
    e[i] = f.one();
    current.push_back(e);
    const std::size_t r2 = span_basis(f, dim, current).size();
    if (r2 > r) {
      out.push_back(e);
      r = r2;
    } else {
      current.pop_back();
    }
  }
  return out;
}

std::vector<Matrix> gl_generators(std::size_t n, const Field& f) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Elem c : f.elements()) {
        if (c.v == 0) continue;
        Matrix t = Matrix::identity(f, n);
        t.at(i, j) = c;
        gens.push_back(std::move(t));
      }
    }
  }
  if (f.order() > 2) {
    Matrix d = Matrix::identity(f, n);
    d.at(0, 0) = f.primitive();
    gens.push_back(std::move(d));
  }
  return gens;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Elem{dist(rng)};
  }
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

Matrix embed(const Matrix& m, const Embedding& embedding) {
  require_same_field(m.field(), embedding.from());
  Matrix out(embedding.to(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = embedding(m(i, j));
  }
  return out;
}

Vector embed(const Vector& v, const Embedding& embedding) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = embedding(v[i]);
  return out;
}

namespace packed_f2 {

Code pack(const Matrix& a) {
  if (a.field().order() != 2 || !a.square() || a.rows() > 5) {
    throw Error(ErrorCode::kInvalidArgument, "packed encoding needs n <= 5 over F_2");
  }
  const std::size_t n = a.rows();
  Code code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).v) code |= Code{1} << (i * n + j);
    }
  }
  return code;
}

Matrix unpack(Code code, std::size_t n) {
  const Field f2 = Field::create(2, 1);
  Matrix a(f2, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Elem{(code >> (i * n + j)) & 1u};
  }
  return a;
}

Code congruence(Code a, Code g, std::size_t n) {
  auto entry = [n](Code m, std::size_t i, std::size_t j) {
    return (m >> (i * n + j)) & 1u;
  };
  // B = A g.
  Code b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Code bit = 0;
      for (std::size_t l = 0; l < n; ++l) bit ^= entry(a, i, l) & entry(g, l, j);
      b |= bit << (i * n + j);
    }
  }
  // g^T B.
  Code out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Code bit = 0;
      for (std::size_t l = 0; l < n; ++l) bit ^= entry(g, l, i) & entry(b, l, j);
      out |= bit << (i * n + j);
    }
  }
  return out;
}

}  // namespace packed_f2

}  // namespace frobforms
