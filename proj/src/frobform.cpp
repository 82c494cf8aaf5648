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

#include "frobforms/frobform.hpp"

#include <set>

namespace frobforms {

FrobeniusForm::FrobeniusForm(Matrix a, unsigned e) : a_(std::move(a)), e_(e) {
  if (e_ < 1) throw Error(ErrorCode::kInvalidArgument, "Frobenius exponent must be >= 1");
  if (!a_.square()) throw Error(ErrorCode::kDimensionMismatch, "form matrix must be square");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e_; ++i) {
    q *= a_.field().p();
    if (q > (std::uint64_t{1} << 40)) {
      throw Error(ErrorCode::kInvalidArgument, "p^e too large");
    }
  }
}

std::uint64_t FrobeniusForm::q() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e_; ++i) q *= field().p();
  return q;
}

Matrix SparsePattern::matrix(const Field& f) const {
  Matrix a(f, n, n);
  for (std::size_t i = 0; i < js.size(); ++i) a.at(i, js[i] - 1) = f.one();
  return a;
}

std::size_t SparsePattern::distinct_variables() const {
  std::set<std::size_t> vars;
  for (std::size_t i = 0; i < js.size(); ++i) {
    vars.insert(i + 1);
    vars.insert(js[i]);
  }
  return vars.size();
}

std::string SparsePattern::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(js[i]);
  }
  return out + ")";
}

Polynomial to_polynomial(const FrobeniusForm& f) {
  const std::size_t n = f.n();
  const std::uint64_t q = f.q();
  Polynomial h(f.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Elem c = f.matrix()(i, j);
      if (c.v == 0) continue;
      Exponents e(n, 0);
      e[i] += q;
      e[j] += 1;
      h.add_term(e, c);
    }
  }
  return h;
}

FrobeniusForm from_polynomial(const Polynomial& h, unsigned e) {
  if (e < 1) throw Error(ErrorCode::kInvalidArgument, "Frobenius exponent must be >= 1");
  const std::size_t n = h.nvars();
  Matrix a(h.field(), n, n);
  FrobeniusForm shell(a, e);  // validates e and q
  const std::uint64_t q = shell.q();
  std::optional<std::uint64_t> degree;
  for (const auto& [exps, c] : h.terms()) {
    std::uint64_t d = 0;
    for (auto x : exps) d += x;
    if (degree && *degree != d) {
      throw Error(ErrorCode::kNotHomogeneous, "terms of degree " + std::to_string(*degree) +
                                                  " and " + std::to_string(d));
    }
    degree = d;
  }
  if (degree && *degree != q + 1) {
    throw Error(ErrorCode::kWrongDegree, "degree " + std::to_string(*degree) +
                                             " differs from p^e+1 = " + std::to_string(q + 1));
  }
  for (const auto& [exps, c] : h.terms()) {
    std::optional<std::size_t> row, col;
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] == q + 1) {
        row = col = i;
      } else if (exps[i] == q) {
        row = i;
      } else if (exps[i] == 1) {
        col = i;
      }
    }
    if (!row || !col) {
      Polynomial mono(h.field(), n);
      mono.add_term(exps, h.field().one());
      throw Error(ErrorCode::kNotFrobenius, mono.to_string() + " is not of the form x_i^q x_j");
    }
    a.at(*row, *col) = c;
  }
  return FrobeniusForm(std::move(a), e);
}

FrobeniusForm act(const FrobeniusForm& f, const Matrix& g) {
  return FrobeniusForm(twisted_congruence(f.matrix(), g, f.e()), f.e());
}

FrobeniusForm embed(const FrobeniusForm& f, const Embedding& embedding) {
  return FrobeniusForm(embed(f.matrix(), embedding), f.e());
}

std::size_t rank(const FrobeniusForm& f) { return rank(f.matrix()); }

std::vector<Vector> removable_subspace(const FrobeniusForm& f) {
  const Field& field = f.field();
  std::vector<Vector> pulled_back;
  for (const auto& w : left_kernel_basis(f.matrix())) {
    pulled_back.push_back(inv_frobenius_twist(field, w, f.e()));
  }
  return subspace_intersection(field, f.n(), right_kernel_basis(f.matrix()), pulled_back);
}

std::size_t embedding_dimension(const FrobeniusForm& f) {
  return f.n() - removable_subspace(f).size();
}

EmbdimReduction reduce_to_embdim(const FrobeniusForm& f) {
  const Field& field = f.field();
  const std::size_t n = f.n();
  const auto w = removable_subspace(f);
  auto columns = complement_basis(field, n, w);
  const std::size_t m = columns.size();
  columns.insert(columns.end(), w.begin(), w.end());
  Matrix g = Matrix::from_columns(field, n, columns);
  const FrobeniusForm moved = act(f, g);
  Matrix block(field, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) block.at(i, j) = moved.matrix()(i, j);
  }
  return {std::move(g), FrobeniusForm(std::move(block), f.e())};
}

std::uint64_t singular_cone_count(const FrobeniusForm& f, unsigned m, std::uint64_t cap) {
  const Extension ext = extend(f.field(), m);
  const Field& big = ext.field;
  const std::size_t n = f.n();
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    states *= big.order();
    if (states > cap) {
      throw Error(ErrorCode::kOrderTooLarge, "singular cone enumeration exceeds the state cap");
    }
  }
  const Matrix a = embed(f.matrix(), ext.embed);
  std::vector<std::uint32_t> digits(n, 0);
  std::uint64_t count = 0;
  Vector xq(n);
  for (std::uint64_t s = 0; s < states; ++s) {
    for (std::size_t i = 0; i < n; ++i) xq[i] = big.frobenius(Elem{digits[i]}, f.e());
    bool singular = true;
    for (std::size_t j = 0; j < n && singular; ++j) {
      Elem d = big.zero();
      for (std::size_t i = 0; i < n; ++i) d = big.add(d, big.mul(a(i, j), xq[i]));
      singular = d.v == 0;
    }
    if (singular) ++count;
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < big.order()) break;
      digits[i] = 0;
    }
  }
  return count;
}

std::optional<SparsePattern> is_sparse(const FrobeniusForm& f) {
  const Matrix& a = f.matrix();
  const std::size_t n = f.n();
  SparsePattern pat{n, {}};
  bool rows_done = false;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      const Elem x = a(i, j);
      if (x.v == 0) continue;
      if (x != f.field().one() || col) return std::nullopt;
      col = j + 1;
    }
    if (!col) {
      rows_done = true;
      continue;
    }
    if (rows_done) return std::nullopt;
    if (!pat.js.empty() && pat.js.back() <= *col) return std::nullopt;
    pat.js.push_back(*col);
  }
  return pat;
}

bool is_hermitian(const FrobeniusForm& f) {
  return f.matrix().transpose() == frobenius_twist(f.matrix(), f.e());
}

FrobeniusForm pad(const FrobeniusForm& f, std::size_t n) {
  if (n < f.n()) throw Error(ErrorCode::kDimensionMismatch, "pad to fewer variables");
  Matrix a(f.field(), n, n);
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < f.n(); ++j) a.at(i, j) = f.matrix()(i, j);
  }
  return FrobeniusForm(std::move(a), f.e());
}

}  // namespace frobforms
