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

#include "frobforms/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "frobforms/error.hpp"

namespace frobforms {
namespace {

FrobeniusForm form(const Field& f, std::initializer_list<std::initializer_list<int>> rows) {
  return FrobeniusForm(Matrix::from_ints(f, rows), 1);
}

bool contains(const std::vector<std::uint64_t>& codes, const Matrix& a) {
  return std::binary_search(codes.begin(), codes.end(), encode(a));
}

TEST(Encoding, RoundTripsAndMatchesPackedBits) {
  std::mt19937_64 rng(5);
  const Field f2 = Field::create(2, 1);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = random_matrix(f2, 4, 4, rng);
    EXPECT_EQ(encode(a), packed_f2::pack(a));
    EXPECT_EQ(decode(encode(a), f2, 4), a);
  }
  const Field f4 = Field::create(2, 2);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = random_matrix(f4, 3, 3, rng);
    EXPECT_EQ(decode(encode(a), f4, 3), a);
    EXPECT_LT(encode(a), std::uint64_t{1} << 18);
  }
  EXPECT_EQ(code_hex(0x13, f2, 4), "0013");
  EXPECT_EQ(code_hex(1, f2, 3), "001");
  EXPECT_EQ(code_hex(5, f4, 2), "05");
}

TEST(Orbit, Examples) {
  const Field f2 = Field::create(2, 1);
  const auto zero = orbit_codes(form(f2, {{0, 0}, {0, 0}}), 100);
  EXPECT_EQ(zero, std::vector<std::uint64_t>{0});

  // x1^2 x2 reaches x2^2 x1 by swapping the variables.
  const auto o = orbit_codes(form(f2, {{0, 1}, {0, 0}}), 100);
  EXPECT_TRUE(contains(o, Matrix::from_ints(f2, {{0, 0}, {1, 0}})));

  // x1^3 + x2^3 and x1^2 x2 + x2^2 x1 are separate over F_2 and merge over
  // GF(4).
  const auto diag2 = orbit_codes(form(f2, {{1, 0}, {0, 1}}), 100);
  EXPECT_FALSE(contains(diag2, Matrix::from_ints(f2, {{0, 1}, {1, 0}})));
  const Field f4 = Field::create(2, 2);
  const auto diag4 = orbit_codes(form(f4, {{1, 0}, {0, 1}}), 1000);
  EXPECT_TRUE(contains(diag4, Matrix::from_ints(f4, {{0, 1}, {1, 0}})));

  EXPECT_THROW(orbit_codes(form(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2), Error);
  EXPECT_EQ(orbit(form(f2, {{1}}), 10).size(), 1u);
}

TEST(Orbit, PackedAndGenericPathsAgree) {
  const Field f2 = Field::create(2, 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (n * n)); ++c) {
      const FrobeniusForm f(decode(c, f2, n), 1);
      ASSERT_EQ(orbit_codes(f, 1u << 9), orbit_codes_generic(f, 1u << 9)) << n << " " << c;
    }
  }
}

TEST(Orbit, HashSetFallbackAboveCap) {
  const Field f4 = Field::create(2, 2);
  const FrobeniusForm f = form(f4, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
  EXPECT_EQ(orbit_codes(f, 1u << 20), orbit_codes(f, 1u << 20, 1000));
}

TEST(Sweep, GroupOrdersAndWitness) {
  const Field f3 = Field::create(3, 1);
  std::uint64_t count = 0;
  for_each_invertible(f3, 2, [&](const Matrix&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 48u);

  const Field f2 = Field::create(2, 1);
  const auto a = form(f2, {{0, 1}, {0, 0}});
  const auto b = form(f2, {{0, 0}, {1, 0}});
  const auto res = sweep_for_witness(a, b);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(act(a, *res.witness), b);
  EXPECT_THROW(for_each_invertible(f3, 5, [](const Matrix&) { return true; }, 1000), Error);
}

TEST(Partition, SmallCases) {
  const Field f2 = Field::create(2, 1);
  const auto r1 = orbit_partition(1, f2, 1);
  ASSERT_EQ(r1.orbit_count(), 2u);
  EXPECT_EQ(r1.orbits[0].size, 1u);
  EXPECT_EQ(r1.orbits[1].size, 1u);

  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = orbit_partition(n, f2, 1, true);
    std::uint64_t total = 0;
    for (const auto& o : r.orbits) {
      total += o.size;
      EXPECT_EQ(r.orbit_of[o.representative], &o - r.orbits.data());
      EXPECT_EQ(o.min_support, o.embedding_dimension);
    }
    EXPECT_EQ(total, std::uint64_t{1} << (n * n));
    EXPECT_TRUE(std::is_sorted(r.orbits.begin(), r.orbits.end(),
                               [](const OrbitInfo& a, const OrbitInfo& b) {
                                 return a.representative < b.representative;
                               }));
  }
}

TEST(Partition, DiagonalOrbitOverF2HasNoSparseMember) {
  // The only full-rank sparse 2x2 matrix is the anti-diagonal one, which lies
  // outside the orbit of x1^3 + x2^3 over F_2.
  const Field f2 = Field::create(2, 1);
  const auto r = orbit_partition(2, f2, 1, true);
  const auto& o = r.orbits[r.orbit_of[encode(Matrix::identity(f2, 2))]];
  EXPECT_FALSE(o.contains_sparse());
  EXPECT_FALSE(o.has_sparse_reduction);
  const auto& anti = r.orbits[r.orbit_of[encode(Matrix::from_ints(f2, {{0, 1}, {1, 0}}))]];
  EXPECT_EQ(anti.sparse_patterns_hit, std::vector<std::string>{"(2,1)"});
  EXPECT_TRUE(anti.has_sparse_reduction);
}

TEST(Partition, IndependentOfThreadCount) {
  const Field f4 = Field::create(2, 2);
  EXPECT_EQ(orbit_partition(2, f4, 1, false, 1).to_json(),
            orbit_partition(2, f4, 1, false, 3).to_json());
  const Field f2 = Field::create(2, 1);
  const auto j = orbit_partition(3, f2, 1, false, 4).to_json();
  EXPECT_EQ(j, orbit_partition(3, f2, 1).to_json());
  EXPECT_EQ(j["states"], 512);
  EXPECT_EQ(j["orbits"][0]["representative"], "000");
}

TEST(Partition, RespectsCap) {
  const Field f2 = Field::create(2, 1);
  EXPECT_THROW(orbit_partition(3, f2, 1, false, 1, 100), Error);
  ::setenv("FROBFORMS_CAP", "100", 1);
  EXPECT_EQ(state_cap(), 100u);
  EXPECT_THROW(orbit_partition(3, f2, 1, false, 1, state_cap()), Error);
  ::setenv("FROBFORMS_CAP", "junk", 1);
  EXPECT_EQ(state_cap(), kDefaultStateCap);
  ::unsetenv("FROBFORMS_CAP");
}

TEST(BruteforceEmbdim, Examples) {
  const Field f2 = Field::create(2, 1);
  EXPECT_EQ(bruteforce_embdim(form(f2, {{1, 0}, {0, 0}})), 1u);
  EXPECT_EQ(bruteforce_embdim(form(f2, {{0, 1}, {1, 0}})), 2u);
  EXPECT_EQ(bruteforce_embdim(form(f2, {{0, 0}, {0, 0}})), 0u);
  // The all-ones matrix is (x1 + x2)^3.
  EXPECT_EQ(bruteforce_embdim(form(f2, {{1, 1}, {1, 1}})), 1u);
}

TEST(SparsePatterns, AllShapes) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto all = all_sparse_patterns(n);
    EXPECT_EQ(all.size(), std::size_t{1} << n);
    for (const auto& p : all) {
      EXPECT_TRUE(std::is_sorted(p.js.rbegin(), p.js.rend()));
    }
  }
}

TEST(Verify, ScopesAndFastChecks) {
  EXPECT_THROW(verify_theorems("nope"), Error);
  const auto iso = verify_theorems("iso5by5");
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_TRUE(iso[0].passed);
  for (const auto& c : verify_theorems("census")) EXPECT_TRUE(c.passed) << c.name;
  for (const auto& c : verify_theorems("sparse-embdim")) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(verify_scopes().back(), "all-desk");
}

}  // namespace
}  // namespace frobforms
