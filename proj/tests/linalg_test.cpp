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

#include <map>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace frobforms {
namespace {

Matrix from_code(const Field& f, std::uint32_t code, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    m.at(i / n, i % n) = Elem{code % f.order()};
    code /= f.order();
  }
  return m;
}

// Closure of the generators under right multiplication, as an independent
// count of the generated group.
std::size_t closure_size(const std::vector<Matrix>& gens, const Field& f, std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Matrix> frontier{Matrix::identity(f, n)};
  auto key = [](const Matrix& m) {
    std::vector<std::uint32_t> k;
    for (Elem e : m.entries()) k.push_back(e.v);
    return k;
  };
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        Matrix x = mat_mul(m, g);
        if (seen.insert(key(x)).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

TEST(MatMul, Examples) {
  const Field f2 = Field::create(2, 1);
  const Matrix swap = Matrix::from_ints(f2, {{0, 1}, {1, 0}});
  EXPECT_EQ(mat_mul(swap, swap), Matrix::identity(f2, 2));
  const Matrix a = Matrix::from_ints(f2, {{1, 1}, {0, 1}});
  EXPECT_EQ(mat_mul(Matrix::identity(f2, 2), a), a);

  const Field f4 = Field::create(2, 2);
  const Elem w = f4.gen();
  Matrix d = Matrix::identity(f4, 2);
  d.at(0, 0) = w;
  Matrix expected = Matrix::from_ints(f4, {{0, 0}, {0, 1}});
  expected.at(0, 0) = w;
  expected.at(0, 1) = w;
  EXPECT_EQ(mat_mul(d, Matrix::from_ints(f4, {{1, 1}, {0, 1}})), expected);
  EXPECT_THROW(mat_mul(d, Matrix::identity(f4, 3)), Error);
  EXPECT_THROW(mat_mul(d, Matrix::identity(f2, 2)), Error);
}

TEST(Rank, Examples) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(rank(Matrix(f2, 4, 4)), 0u);
  Matrix anti(f2, 5, 5);
  for (int i = 0; i < 5; ++i) anti.at(i, 4 - i) = f2.one();
  EXPECT_EQ(rank(anti), 5u);
  // x1^q x5 + x2^q x4 + x3^q x2
  Matrix a(f2, 5, 5);
  a.at(0, 4) = a.at(1, 3) = a.at(2, 1) = f2.one();
  EXPECT_EQ(rank(a), 3u);
}

TEST(Kernel, ExamplesAndRankNullity) {
  const Field f2 = Field::create(2, 1);
  EXPECT_TRUE(right_kernel_basis(Matrix::identity(f2, 3)).empty());
  Matrix a(f2, 5, 5);
  a.at(0, 4) = a.at(1, 3) = a.at(2, 2) = f2.one();
  const auto rk = right_kernel_basis(a);
  ASSERT_EQ(rk.size(), 2u);
  EXPECT_EQ(rk[0], (Vector{{1}, {0}, {0}, {0}, {0}}));
  EXPECT_EQ(rk[1], (Vector{{0}, {1}, {0}, {0}, {0}}));
  const auto lk = left_kernel_basis(a);
  ASSERT_EQ(lk.size(), 2u);
  EXPECT_EQ(lk[0], (Vector{{0}, {0}, {0}, {1}, {0}}));
  EXPECT_EQ(lk[1], (Vector{{0}, {0}, {0}, {0}, {1}}));

  for (std::uint32_t code = 0; code < 512; ++code) {
    const Matrix m = from_code(f2, code, 3);
    const auto ker = right_kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), 3u);
    for (const auto& v : ker) {
      for (Elem x : mat_vec(m, v)) EXPECT_EQ(x.v, 0u);
    }
    EXPECT_EQ(left_kernel_basis(m).size() + rank(m), 3u);
  }
}

TEST(Inverse, Examples) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(inverse(Matrix::identity(f2, 3)), Matrix::identity(f2, 3));
  const Matrix perm = Matrix::from_ints(f2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  EXPECT_EQ(inverse(perm), perm.transpose());
  const Field f4 = Field::create(2, 2);
  Matrix d = Matrix::identity(f4, 2);
  d.at(0, 0) = f4.gen();
  Matrix di = Matrix::identity(f4, 2);
  di.at(0, 0) = f4.mul(f4.gen(), f4.gen());
  EXPECT_EQ(inverse(d), di);
  try {
    inverse(Matrix(f2, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingular);
  }
  std::mt19937_64 rng(1);
  const Field f9 = Field::create(3, 2);
  for (int t = 0; t < 50; ++t) {
    const Matrix g = random_invertible(f9, 4, rng);
    EXPECT_EQ(mat_mul(inverse(g), g), Matrix::identity(f9, 4));
  }
}

TEST(FrobeniusTwist, Examples) {
  const Field f2 = Field::create(2, 1);
  for (std::uint32_t code = 0; code < 16; ++code) {
    EXPECT_EQ(frobenius_twist(from_code(f2, code, 2), 3), from_code(f2, code, 2));
  }
  const Field f4 = Field::create(2, 2);
  Matrix w(f4, 1, 1);
  w.at(0, 0) = f4.gen();
  Matrix w1(f4, 1, 1);
  w1.at(0, 0) = f4.add(f4.gen(), f4.one());
  EXPECT_EQ(frobenius_twist(w, 1), w1);
  // Entrywise Frobenius is multiplicative, exhaustively over GF(4), n = 2.
  for (std::uint32_t x = 0; x < 256; ++x) {
    for (std::uint32_t y = 0; y < 256; y += 7) {
      const Matrix m = from_code(f4, x, 2), n = from_code(f4, y, 2);
      EXPECT_EQ(frobenius_twist(mat_mul(m, n), 1),
                mat_mul(frobenius_twist(m, 1), frobenius_twist(n, 1)));
    }
  }
}

TEST(TwistedCongruence, Examples) {
  const Field f2 = Field::create(2, 1);
  Matrix a542(f2, 5, 5), a541(f2, 5, 5);
  a542.at(0, 4) = a542.at(1, 3) = a542.at(2, 1) = f2.one();
  a541.at(0, 4) = a541.at(1, 3) = a541.at(2, 0) = f2.one();
  EXPECT_EQ(twisted_congruence(a542, Matrix::identity(f2, 5), 1), a542);
  const Matrix swap = Matrix::from_ints(f2, {{0, 1, 0, 0, 0},
                                             {1, 0, 0, 0, 0},
                                             {0, 0, 1, 0, 0},
                                             {0, 0, 0, 0, 1},
                                             {0, 0, 0, 1, 0}});
  EXPECT_EQ(twisted_congruence(a542, swap, 1), a541);

  const Matrix transvection = Matrix::from_ints(f2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  for (std::uint32_t code = 0; code < 512; ++code) {
    const Matrix m = from_code(f2, code, 3);
    EXPECT_EQ(rank(twisted_congruence(m, transvection, 1)), rank(m));
  }
  EXPECT_THROW(twisted_congruence(a542, Matrix(f2, 5, 5), 1), Error);
}

TEST(TwistedCongruence, CompositionLaw) {
  const Field f2 = Field::create(2, 1);
  std::vector<Matrix> gl2;
  for (std::uint32_t code = 0; code < 16; ++code) {
    const Matrix g = from_code(f2, code, 2);
    if (is_invertible(g)) gl2.push_back(g);
  }
  ASSERT_EQ(gl2.size(), 6u);
  for (std::uint32_t code = 0; code < 16; ++code) {
    const Matrix a = from_code(f2, code, 2);
    for (const auto& g1 : gl2) {
      for (const auto& g2 : gl2) {
        EXPECT_EQ(twisted_congruence(twisted_congruence(a, g1, 1), g2, 1),
                  twisted_congruence(a, mat_mul(g1, g2), 1));
      }
    }
  }
  const Field f8 = Field::create(2, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = random_matrix(f8, 3, 3, rng);
    const Matrix g1 = random_invertible(f8, 3, rng), g2 = random_invertible(f8, 3, rng);
    for (unsigned e = 1; e <= 2; ++e) {
      const Matrix lhs = twisted_congruence(twisted_congruence(a, g1, e), g2, e);
      EXPECT_EQ(lhs, twisted_congruence(a, mat_mul(g1, g2), e));
      EXPECT_EQ(rank(lhs), rank(a));
      EXPECT_EQ(right_kernel_basis(lhs).size(), right_kernel_basis(a).size());
    }
  }
}

TEST(Subspaces, Intersection) {
  const Field f2 = Field::create(2, 1);
  auto e = [&](int i) {
    Vector v(5, f2.zero());
    v[i] = f2.one();
    return v;
  };
  const std::vector<Vector> u{e(0), e(1)}, v{e(3), e(4)};
  EXPECT_TRUE(subspace_intersection(f2, 5, u, v).empty());
  EXPECT_EQ(subspace_intersection(f2, 5, u, u), span_basis(f2, 5, u));

  const Field f4 = Field::create(2, 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 4;
    std::vector<Vector> a, b;
    for (std::size_t i = rng() % (n + 1); i > 0; --i) a.push_back(random_matrix(f4, 1, n, rng).row(0));
    for (std::size_t i = rng() % (n + 1); i > 0; --i) b.push_back(random_matrix(f4, 1, n, rng).row(0));
    const std::size_t da = span_basis(f4, n, a).size(), db = span_basis(f4, n, b).size();
    const auto c = subspace_intersection(f4, n, a, b);
    EXPECT_GE(c.size() + n, da + db);
    // Every intersection vector lies in both spans.
    for (const auto& x : c) {
      auto a2 = a;
      a2.push_back(x);
      auto b2 = b;
      b2.push_back(x);
      EXPECT_EQ(span_basis(f4, n, a2).size(), da);
      EXPECT_EQ(span_basis(f4, n, b2).size(), db);
    }
  }
}

TEST(GlGenerators, ClosureOrders) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(gl_generators(2, f2).size(), 2u);
  EXPECT_EQ(closure_size(gl_generators(2, f2), f2, 2), 6u);
  EXPECT_EQ(closure_size(gl_generators(3, f2), f2, 3), 168u);
  const Field f4 = Field::create(2, 2);
  EXPECT_EQ(closure_size(gl_generators(2, f4), f4, 2), 180u);
  const Field f3 = Field::create(3, 1);
  EXPECT_EQ(closure_size(gl_generators(2, f3), f3, 2), 48u);
}

TEST(PackedF2, AgreesWithGenericPath) {
  const Field f2 = Field::create(2, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix a = random_matrix(f2, n, n, rng);
    const Matrix g = random_invertible(f2, n, rng);
    const auto code = packed_f2::pack(a);
    EXPECT_EQ(packed_f2::unpack(code, n), a);
    ASSERT_EQ(packed_f2::congruence(code, packed_f2::pack(g), n),
              packed_f2::pack(twisted_congruence(a, g, 1)));
    if (n >= 2) {
      const std::size_t i = rng() % n;
      std::size_t j = rng() % n;
      if (i == j) j = (j + 1) % n;
      Matrix tv = Matrix::identity(f2, n);
      tv.at(i, j) = f2.one();
      ASSERT_EQ(packed_f2::transvect(code, n, i, j),
                packed_f2::pack(twisted_congruence(a, tv, 1)));
    }
  }
  // Bit layout: entry (i, j) at bit i*n + j.
  Matrix a(f2, 3, 3);
  a.at(1, 2) = f2.one();
  EXPECT_EQ(packed_f2::pack(a), 1u << 5);
}

}  // namespace
}  // namespace frobforms
