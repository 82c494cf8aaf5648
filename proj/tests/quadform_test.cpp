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

#include "frobforms/quadform.hpp"

#include <gtest/gtest.h>

#include <random>

#include "frobforms/error.hpp"
#include "frobforms/parse.hpp"

namespace frobforms {
namespace {

QuadraticForm quad(const std::string& text, const Field& f, std::size_t n) {
  return quadratic_from_polynomial(parse_polynomial(text, f, n));
}

QuadraticForm random_quadratic(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix c = random_matrix(f, n, n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) c.at(i, j) = f.zero();
  }
  return QuadraticForm(std::move(c));
}

// Evaluates Q at a point by direct summation.
Elem evaluate(const QuadraticForm& q, const Vector& x) {
  const Field& f = q.field();
  Elem s = f.zero();
  for (std::size_t i = 0; i < q.n(); ++i) {
    for (std::size_t j = i; j < q.n(); ++j) s = f.add(s, f.mul(q.coeff(i, j), f.mul(x[i], x[j])));
  }
  return s;
}

// Characteristic 2: rank of the polar form C + C^T, plus one when Q does not
// vanish on its radical (Q is additive there, so a basis suffices).
std::size_t char2_embdim_oracle(const QuadraticForm& q) {
  const Field& f = q.field();
  Matrix polar(f, q.n(), q.n());
  for (std::size_t i = 0; i < q.n(); ++i) {
    for (std::size_t j = 0; j < q.n(); ++j) {
      if (i != j) polar.at(i, j) = q.coeff(i, j);
    }
  }
  std::size_t m = rank(polar);
  for (const auto& v : right_kernel_basis(polar)) {
    if (evaluate(q, v).v != 0) {
      ++m;
      break;
    }
  }
  return m;
}

TEST(QuadraticForm, RejectsLowerEntriesAndBadPolynomials) {
  const Field f2 = Field::create(2, 1);
  EXPECT_THROW(QuadraticForm(Matrix::from_ints(f2, {{0, 0}, {1, 0}})), Error);
  EXPECT_THROW(quad("x1^3", f2, 1), Error);
  EXPECT_THROW(quad("x1^2 + x1*x2^2", f2, 2), Error);
  const auto q = quad("x1*x2 + x2^2", f2, 2);
  EXPECT_EQ(q.coeff(0, 1), f2.one());
  EXPECT_EQ(q.coeff(1, 0), f2.one());
  EXPECT_EQ(to_polynomial(q), parse_polynomial("x1*x2 + x2^2", f2, 2));
}

TEST(ActQuadratic, Examples) {
  const Field f2 = Field::create(2, 1);
  const auto q = quad("x1*x2", f2, 2);
  EXPECT_EQ(act_quadratic(q, Matrix::identity(f2, 2)), q);
  EXPECT_EQ(act_quadratic(q, Matrix::from_ints(f2, {{0, 1}, {1, 0}})), q);
  // x1 -> x1 + x2: (x1 + x2)^2 = x1^2 + x2^2 in characteristic 2.
  EXPECT_EQ(act_quadratic(quad("x1^2", f2, 2), Matrix::from_ints(f2, {{1, 1}, {0, 1}})),
            quad("x1^2 + x2^2", f2, 2));
  EXPECT_THROW(act_quadratic(q, Matrix::from_ints(f2, {{1, 1}, {1, 1}})), Error);

  // Agrees with polynomial substitution.
  std::mt19937_64 rng(3);
  const Field f5 = Field::create(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = random_quadratic(f5, 4, rng);
    const Matrix g = random_invertible(f5, 4, rng);
    EXPECT_EQ(to_polynomial(act_quadratic(r, g)), to_polynomial(r).substitute(g));
  }
}

TEST(CanonicalQuadratic, Examples) {
  const Field f2 = Field::create(2, 1);
  const Field f3 = Field::create(3, 1);
  EXPECT_EQ(canonical_quadratic(f2, 5, 5), quad("x1*x2 + x3*x4 + x5^2", f2, 5));
  EXPECT_EQ(canonical_quadratic(f2, 4, 4), quad("x1*x2 + x3*x4", f2, 4));
  EXPECT_EQ(canonical_quadratic(f3, 3, 3), quad("x1^2 + x2^2 + x3^2", f3, 3));
  EXPECT_EQ(canonical_quadratic(f2, 4, 1), quad("x1^2", f2, 4));
  EXPECT_TRUE(canonical_quadratic(f3, 2, 0).is_zero());
  EXPECT_THROW(canonical_quadratic(f2, 2, 3), Error);
}

TEST(Normalize, KnownExamples) {
  const Field f2 = Field::create(2, 1);
  const auto already = quad("x1*x2 + x3*x4", f2, 4);
  const auto r1 = normalize(already);
  EXPECT_EQ(r1.g, Matrix::identity(f2, 4));
  EXPECT_EQ(r1.extension_degree, 1u);
  EXPECT_EQ(r1.canon.kind, QuadCanonical::Kind::kHyperbolic);
  EXPECT_EQ(r1.canon.pairs, 2u);

  // x1^2 + x1 x2 + x2^2 is irreducible over F_2 and splits over GF(4).
  const auto r2 = normalize(quad("x1^2 + x1*x2 + x2^2", f2, 2));
  EXPECT_EQ(r2.extension_degree, 2u);
  EXPECT_EQ(r2.field.order(), 4u);
  EXPECT_EQ(r2.canon.kind, QuadCanonical::Kind::kHyperbolic);
  EXPECT_EQ(act_quadratic(embed(quad("x1^2 + x1*x2 + x2^2", f2, 2), Embedding(f2, r2.field)), r2.g),
            quad("x1*x2", r2.field, 2));

  // 2 is not a square mod 3.
  const Field f3 = Field::create(3, 1);
  const auto r3 = normalize(quad("x1^2 + 2*x2^2", f3, 2));
  EXPECT_EQ(r3.extension_degree, 2u);
  EXPECT_EQ(r3.canon.kind, QuadCanonical::Kind::kDiagonalOnes);
  EXPECT_EQ(r3.g(0, 0), r3.field.one());
  EXPECT_EQ(r3.field.mul(r3.field.mul(r3.g(1, 1), r3.g(1, 1)), r3.field.from_int(2)),
            r3.field.one());

  const auto zero = normalize(QuadraticForm::zero(f3, 3));
  EXPECT_EQ(zero.canon.kind, QuadCanonical::Kind::kZero);
  EXPECT_EQ(zero.extension_degree, 1u);
}

TEST(Normalize, RandomWitnessesAndParity) {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::create(2, 1), Field::create(2, 2), Field::create(2, 3),
                         Field::create(3, 1), Field::create(5, 1)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto q = random_quadratic(f, n, rng);
      const auto res = normalize(q);
      ASSERT_TRUE(is_invertible(res.g));
      ASSERT_EQ(act_quadratic(embed(q, Embedding(f, res.field)), res.g),
                to_form(res.canon, res.field));
      const std::size_t m = quad_embedding_dimension(q);
      EXPECT_EQ(res.canon, canonical_kind(f, n, m));
      if (f.p() == 2) {
        EXPECT_EQ(m, char2_embdim_oracle(q));
        EXPECT_EQ(res.canon.kind == QuadCanonical::Kind::kHyperbolicPlusSquare, m % 2 == 1);
      } else {
        EXPECT_LE(res.extension_degree, 2u);
      }
    }
  }
}

TEST(Normalize, IdempotentOnCanonicalForms) {
  for (const Field& f : {Field::create(2, 1), Field::create(2, 2), Field::create(3, 1),
                         Field::create(5, 1)}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t m = 0; m <= n; ++m) {
        const auto c = canonical_quadratic(f, n, m);
        const auto res = normalize(c);
        EXPECT_EQ(res.canon, canonical_kind(f, n, m));
        EXPECT_EQ(res.extension_degree, 1u);
        EXPECT_EQ(res.g, Matrix::identity(f, n));
      }
    }
  }
}

TEST(Normalize, ResiduesNeedNoExtension) {
  // Over F_5 the diagonal coefficients 1 and 4 are squares.
  const Field f5 = Field::create(5, 1);
  const auto res = normalize(quad("x1^2 + 4*x2^2 + 4*x3^2", f5, 3));
  EXPECT_EQ(res.extension_degree, 1u);
}

TEST(QuadEmbeddingDimension, Examples) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(quad_embedding_dimension(QuadraticForm::zero(f2, 3)), 0u);
  EXPECT_EQ(quad_embedding_dimension(quad("x1*x2 + x3^2", f2, 3)), 3u);
  EXPECT_EQ(quad_embedding_dimension(quad("x1^2 + x2^2", f2, 2)), 1u);
  const Field f3 = Field::create(3, 1);
  EXPECT_EQ(quad_embedding_dimension(quad("x1^2 + 2*x1*x2 + x2^2", f3, 2)), 1u);
}

TEST(Normalize, NoCrossKindWitnessOverF2) {
  const Field f2 = Field::create(2, 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Matrix> group;
    const std::uint32_t total = 1u << (n * n);
    for (std::uint32_t code = 0; code < total; ++code) {
      Matrix g(f2, n, n);
      for (std::size_t b = 0; b < n * n; ++b) g.at(b / n, b % n) = Elem{(code >> b) & 1u};
      if (is_invertible(g)) group.push_back(std::move(g));
    }
    for (std::size_t m1 = 0; m1 <= n; ++m1) {
      for (std::size_t m2 = 0; m2 <= n; ++m2) {
        if (m1 == m2) continue;
        const auto a = canonical_quadratic(f2, n, m1);
        const auto b = canonical_quadratic(f2, n, m2);
        for (const auto& g : group) ASSERT_NE(act_quadratic(a, g), b);
      }
    }
  }
}

}  // namespace
}  // namespace frobforms
