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

#include "frobforms/classify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "frobforms/parse.hpp"

namespace frobforms {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Every strictly decreasing r-tuple over {1..n}, filtered by the three sparse
// conditions on the form, independently of the generator.
std::vector<SparsePattern> brute_patterns(std::size_t n, std::size_t r) {
  std::vector<SparsePattern> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    SparsePattern p{n, {}};
    for (std::size_t j = n; j >= 1; --j) {
      if (mask >> (j - 1) & 1) p.js.push_back(j);
    }
    if (p.covers_all_variables()) out.push_back(std::move(p));
  }
  return out;
}

TEST(SparsePatterns, CountsMatchBinomial) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      EXPECT_EQ(sparse_patterns(n, r).size(), binomial(r, n - r)) << n << "," << r;
      const auto mine = sparse_patterns(n, r);
      const auto brute = brute_patterns(n, r);
      std::set<std::vector<std::size_t>> a, b;
      for (const auto& p : mine) a.insert(p.js);
      for (const auto& p : brute) b.insert(p.js);
      EXPECT_EQ(a, b) << n << "," << r;
    }
  }
}

TEST(SparsePatterns, Examples) {
  const auto p53 = sparse_patterns(5, 3);
  ASSERT_EQ(p53.size(), 3u);
  EXPECT_EQ(p53[0].to_string(), "(5,4,3)");
  EXPECT_EQ(p53[1].to_string(), "(5,4,2)");
  EXPECT_EQ(p53[2].to_string(), "(5,4,1)");
  EXPECT_EQ(sparse_patterns(5, 4).size(), 4u);
  EXPECT_EQ(sparse_patterns(5, 5).size(), 1u);
  ASSERT_EQ(sparse_patterns(4, 2).size(), 1u);
  EXPECT_EQ(sparse_patterns(4, 2)[0].to_string(), "(4,3)");
  EXPECT_TRUE(sparse_patterns(5, 2).empty());
}

TEST(SparsePatterns, EmbeddingDimensionCountsVariables) {
  const Field f2 = Field::create(2, 1);
  const Field f4 = Field::create(2, 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      SparsePattern p{n, {}};
      for (std::size_t j = n; j >= 1; --j) {
        if (mask >> (j - 1) & 1) p.js.push_back(j);
      }
      EXPECT_EQ(embedding_dimension(FrobeniusForm(p.matrix(f2), 1)), p.distinct_variables());
      EXPECT_EQ(embedding_dimension(FrobeniusForm(p.matrix(f4), 1)), p.distinct_variables());
    }
  }
}

TEST(ClassTable, ShapeAndCensus) {
  std::map<std::size_t, std::size_t> per_m;
  for (const auto& l : class_table()) ++per_m[l.m];
  EXPECT_EQ(per_m, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 3}, {4, 5}, {5, 7}}));
  const auto c5 = class_census(5);
  EXPECT_EQ(c5.sparse_by_rank, (std::map<std::size_t, std::size_t>{{3, 3}, {4, 4}, {5, 1}}));
  EXPECT_EQ(c5.classes, 7u);
  EXPECT_EQ(c5.fibonacci_bound, 8u);
  EXPECT_EQ(class_census(4).classes, 5u);
  EXPECT_EQ(class_census(4).fibonacci_bound, 5u);
  EXPECT_EQ(class_census(2).classes, 2u);
  EXPECT_EQ(class_census(2).fibonacci_bound, 2u);
  EXPECT_EQ(class_census(3).classes, 3u);
  // Rank n - 1 class count recursion.
  for (std::size_t n : {4u, 5u}) {
    EXPECT_EQ(class_census(n).classes_by_rank[n - 1],
              class_census(n - 2).classes_by_rank[n - 3] + 2);
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_LE(class_census(n).classes, class_census(n).fibonacci_bound);
  }
  EXPECT_THROW(class_census(6), Error);
}

TEST(ClassTable, CanonicalForms) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(to_polynomial(canonical_form(find_label(5, 1), f2, 1)).to_string(),
            "x1^3 + x2^3 + x3^3 + x4^3 + x5^3");
  EXPECT_EQ(to_polynomial(canonical_form(find_label(3, 2), f2, 1)).to_string(), "x1^2*x3 + x2^3");
  EXPECT_EQ(to_polynomial(canonical_form(find_label(4, 5), f2, 1)).to_string(),
            "x1^2*x4 + x2^2*x3");
  EXPECT_EQ(to_polynomial(canonical_form(find_label(5, 7), f2, 1)).to_string(),
            "x1^2*x5 + x2^2*x4 + x2*x3^2");
  EXPECT_EQ(find_label("5.7").display(2), "x_1^2 x_5 + x_2^2 x_4 + x_3^2 x_2");
  EXPECT_EQ(find_label(5, 6).name, "x_1^q x_5 + x_2^q x_4 + x_3^{q+1}");
}

TEST(ClassTable, PatternToLabelAndType) {
  EXPECT_EQ(pattern_to_label({5, {5, 4, 1}}).key(), "5.7");
  EXPECT_EQ(pattern_to_label({5, {5, 4, 2}}).key(), "5.7");
  EXPECT_EQ(pattern_to_label({5, {5, 4, 3, 2}}).key(), "5.2");
  EXPECT_EQ(pattern_to_label({4, {4, 3, 1}}).key(), "4.3");
  EXPECT_EQ(pattern_to_label({2, {2, 1}}).key(), "2.1");
  EXPECT_THROW(pattern_to_label({4, {3}}), Error);
  // Every nondegenerate pattern in at most five variables has a label.
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      for (const auto& p : sparse_patterns(n, r)) EXPECT_EQ(pattern_to_label(p).m, n);
    }
  }
  EXPECT_EQ(type_of({5, {5, 4, 2}}), PatternType::kA);
  EXPECT_EQ(type_of({5, {5, 4, 1}}), PatternType::kB);
  EXPECT_EQ(type_of({4, {4, 3, 1}}), PatternType::kB);
  try {
    type_of({3, {3, 2, 1}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFullRank);
  }
}

TEST(OrbitSignature, SeparatesListedClasses) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field fp = Field::create(p, 1);
    for (std::size_t m = 1; m <= 5; ++m) {
      std::set<OrbitSignature> seen;
      std::size_t count = 0;
      for (const auto& l : class_table()) {
        if (l.m != m || l.degenerate()) continue;
        ++count;
        seen.insert(orbit_signature(canonical_form(l, fp, 1)));
      }
      EXPECT_EQ(seen.size(), count) << "p=" << p << " m=" << m;
    }
  }
}

TEST(OrbitSignature, InvariantUnderCoordinateChange) {
  const Field f4 = Field::create(2, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const FrobeniusForm f(random_matrix(f4, n, n, rng), 1 + trial % 2);
    EXPECT_EQ(orbit_signature(f), orbit_signature(act(f, random_invertible(f4, n, rng))));
  }
}

TEST(Classify, IsoFiveByFiveExample) {
  const Field f2 = Field::create(2, 1);
  const FrobeniusForm f = from_polynomial(parse_polynomial("x1^2x5+x2^2x4+x3^2x1", f2), 1);
  const auto res = classify(f);
  ASSERT_FALSE(res.zero_form());
  EXPECT_EQ(res.label->key(), "5.7");
  EXPECT_EQ(res.extension_degree, 1u);
  // The witness is the double swap x1 <-> x2, x4 <-> x5.
  Matrix swap(f2, 5, 5);
  for (auto [i, j] : {std::pair{0, 1}, {1, 0}, {2, 2}, {3, 4}, {4, 3}}) swap.at(i, j) = f2.one();
  EXPECT_EQ(res.witness, swap);
}

TEST(Classify, DiagonalOverGf4) {
  const Field f4 = Field::create(2, 2);
  const FrobeniusForm f = from_polynomial(parse_polynomial("x1^3+x2^3+x3^3", f4), 1);
  const auto res = classify(f);
  EXPECT_EQ(res.label->key(), "3.1");
  EXPECT_EQ(act(embed(f, Embedding(f4, res.witness_field)), res.witness),
            canonical_form(*res.label, res.witness_field, 1));
}

TEST(Classify, ZeroAndDegenerateForms) {
  const Field f2 = Field::create(2, 1);
  const auto zero = classify(FrobeniusForm(Matrix(f2, 3, 3), 1));
  EXPECT_TRUE(zero.zero_form());
  EXPECT_EQ(zero.embedding_dimension, 0u);
  // x1^q x2 + x2^q x1 placed on x2, x4 of four variables.
  Matrix a(f2, 4, 4);
  a.at(1, 3) = f2.one();
  a.at(3, 1) = f2.one();
  const auto res = classify(FrobeniusForm(a, 1));
  EXPECT_EQ(res.label->key(), "2.1");
  EXPECT_TRUE(res.embdim_reduction.has_value());
  // x1^{q+1} in two variables reports the one-variable class.
  EXPECT_EQ(classify(FrobeniusForm(Matrix::from_ints(f2, {{1, 0}, {0, 0}}), 1)).label->key(),
            "1.1");
}

TEST(Classify, ConstantOnOrbits) {
  for (const Field& f : {Field::create(2, 1), Field::create(2, 2), Field::create(3, 1)}) {
    std::mt19937_64 rng(5);
    for (const auto& l : class_table()) {
      for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = l.m + trial % 2;
        const FrobeniusForm c = pad(canonical_form(l, f, 1), n);
        const FrobeniusForm moved = act(c, random_invertible(f, n, rng));
        SearchOptions opts;
        opts.seed = static_cast<std::uint64_t>(trial);
        const auto res = classify(moved, opts);
        const std::string want = l.degenerate() ? "1.1" : l.key();
        ASSERT_EQ(res.label->key(), want) << f.name() << " " << l.key();
        ASSERT_EQ(act(embed(moved, Embedding(f, res.witness_field)), res.witness),
                  pad(canonical_form(*res.label, res.witness_field, 1), n));
      }
    }
  }
}

// Smallest extension degree d (field order at most 2^20) over which a
// full-rank form over GF(2^k), k | 2, can reach the diagonal form: the
// cosquare order must divide the order of x -> x^4 on GF(2^(kd)). Returns 0
// when there is none.
unsigned diagonal_degree_bound(const Matrix& a, unsigned k) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  // Cosquare ((A^T)^[2])^-1 A, with the twist written out directly.
  Matrix at2(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at2.at(i, j) = f.mul(a(j, i), a(j, i));
  }
  const Matrix m = mat_mul(inverse(at2), a);
  Matrix power = m;
  unsigned order = 1;
  while (power != Matrix::identity(f, n)) {
    power = mat_mul(power, m);
    ++order;
  }
  for (unsigned d = 1; k * d <= 20; ++d) {
    const unsigned total = k * d;
    const unsigned sigma = total % 2 == 0 ? total / 2 : total;
    if (sigma % order == 0) return d;
  }
  return 0;
}

// The orthogonal block U = R(W) cap L(W) for W = ker A + (left kernel)^[1/2],
// restricted form and all. Every witness maps it onto the matching block of
// the class representative, so its degree bound applies to the whole form
// whenever the restriction has full rank. Returns nullopt otherwise.
std::optional<Matrix> orthogonal_block(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<Vector> w = right_kernel_basis(a);
  for (const auto& y : right_kernel_basis(a.transpose())) {
    w.push_back(inv_frobenius_twist(f, y, 1));
  }
  if (w.empty()) return a;
  std::vector<Vector> rows;
  for (const auto& x : w) {
    const Vector xq = frobenius_twist(f, x, 1);
    Vector row(n, f.zero());
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t k = 0; k < n; ++k) row[k] = f.add(row[k], f.mul(xq[l], a(l, k)));
    }
    rows.push_back(std::move(row));
    rows.push_back(inv_frobenius_twist(f, mat_vec(a, x), 1));
  }
  Matrix stacked(f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) stacked.at(i, k) = rows[i][k];
  }
  const auto u = right_kernel_basis(stacked);
  if (u.empty()) return std::nullopt;
  const Matrix b = Matrix::from_columns(f, n, u);
  const Matrix restricted = mat_mul(frobenius_twist(b, 1).transpose(), mat_mul(a, b));
  if (rank(restricted) != u.size()) return std::nullopt;
  return restricted;
}

TEST(Classify, RandomFormsAreClassified) {
  std::mt19937_64 rng(99);
  int out_of_reach = 0;
  for (const Field& f : {Field::create(2, 1), Field::create(2, 2)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const FrobeniusForm form(random_matrix(f, n, n, rng), 1);
      const auto block = embedding_dimension(form) == n ? orthogonal_block(form.matrix())
                                                        : std::nullopt;
      if (block && diagonal_degree_bound(*block, f.k()) == 0) {
        ++out_of_reach;
        EXPECT_THROW(classify(form), Error);
        continue;
      }
      const auto res = classify(form);
      if (res.zero_form()) continue;
      ASSERT_EQ(act(embed(form, Embedding(f, res.witness_field)), res.witness),
                pad(canonical_form(*res.label, res.witness_field, 1), n));
      if (block) EXPECT_GE(res.extension_degree, diagonal_degree_bound(*block, f.k()));
    }
  }
  // Some forms need fields beyond 2^20, e.g. GF(2^24) for full-rank binary
  // forms in five variables with cosquare order 12.
  EXPECT_GT(out_of_reach, 0);
}

TEST(Sparsify, Examples) {
  const Field f2 = Field::create(2, 1);
  const FrobeniusForm sparse(SparsePattern{4, {4, 3, 1}}.matrix(f2), 1);
  const auto same = sparsify(sparse);
  EXPECT_EQ(same.g, Matrix::identity(f2, 4));
  EXPECT_EQ(same.pattern.to_string(), "(4,3,1)");

  const Field f4 = Field::create(2, 2);
  const FrobeniusForm cubes = from_polynomial(parse_polynomial("x1^3+x2^3", f4), 1);
  const auto res = sparsify(cubes);
  EXPECT_EQ(res.pattern.to_string(), "(2,1)");
  const Extension ext = extend(f4, res.extension_degree);
  EXPECT_EQ(act(embed(cubes, ext.embed), res.g).matrix(), res.pattern.matrix(ext.field));

  std::mt19937_64 rng(1);
  const FrobeniusForm c57(SparsePattern{5, {5, 4, 2}}.matrix(f2), 1);
  const auto moved = act(c57, random_invertible(f2, 5, rng));
  const auto r57 = sparsify(moved);
  EXPECT_TRUE(r57.pattern.to_string() == "(5,4,2)" || r57.pattern.to_string() == "(5,4,1)");
}

TEST(Equivalent, Examples) {
  const Field f2 = Field::create(2, 1);
  std::mt19937_64 rng(2);
  const FrobeniusForm c56 = canonical_form(find_label(5, 6), f2, 1);
  const FrobeniusForm c57 = canonical_form(find_label(5, 7), f2, 1);
  EXPECT_EQ(equivalent(c56, c57).status, EquivalenceResult::Status::kDistinctClasses);

  const FrobeniusForm moved = act(c56, random_invertible(f2, 5, rng));
  const auto yes = equivalent(c56, moved);
  ASSERT_EQ(yes.status, EquivalenceResult::Status::kEquivalent);
  EXPECT_EQ(act(embed(c56, Embedding(f2, yes.witness->field)), yes.witness->g),
            embed(moved, Embedding(f2, yes.witness->field)));

  const FrobeniusForm b(SparsePattern{5, {5, 4, 1}}.matrix(f2), 1);
  const auto swap = equivalent(c57, b);
  ASSERT_EQ(swap.status, EquivalenceResult::Status::kEquivalent);
  EXPECT_EQ(swap.witness->extension_degree, 1u);
  EXPECT_EQ(act(c57, swap.witness->g), b);

  // Witnesses from different extensions are combined over a common field.
  const Field f4 = Field::create(2, 2);
  const FrobeniusForm d(Matrix::identity(f4, 3), 1);
  Matrix a = Matrix::identity(f4, 3);
  a.at(0, 0) = f4.gen();
  const FrobeniusForm d2(a, 1);
  const auto mixed = equivalent(d, d2);
  ASSERT_EQ(mixed.status, EquivalenceResult::Status::kEquivalent);
  EXPECT_EQ(act(embed(d, Embedding(f4, mixed.witness->field)), mixed.witness->g),
            embed(d2, Embedding(f4, mixed.witness->field)));
}

}  // namespace
}  // namespace frobforms
