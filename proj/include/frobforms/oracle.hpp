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

// Brute-force ground truth over tiny fields: orbits of the twisted congruence
// action, full orbit partitions, embedding dimension by exhaustion, and the
// the desk-scale checks built on them.
//
// Matrices are encoded as integers with entry (i, j) as the digit of weight
// |F|^(i*n + j) (digits are element codes). Over F_2 this is the packed bit
// encoding of linalg.

#ifndef FROBFORMS_ORACLE_HPP_
#define FROBFORMS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobforms/frobform.hpp"
#include "json.hpp"

namespace frobforms {

// kDefaultStateCap unless the environment variable FROBFORMS_CAP holds a
// positive integer.
std::uint64_t state_cap();

std::uint64_t encode(const Matrix& a);
Matrix decode(std::uint64_t code, const Field& f, std::size_t n);
// Fixed-width lowercase hex of a code, wide enough for |F|^(n^2) - 1.
std::string code_hex(std::uint64_t code, const Field& f, std::size_t n);

// Visits every element of GL_n(f) in code order until `visit` returns false.
// Throws kBudgetExceeded when |f|^(n^2) exceeds `cap`.
void for_each_invertible(const Field& f, std::size_t n,
                         const std::function<bool(const Matrix&)>& visit,
                         std::uint64_t cap = state_cap());

// Exhaustive sweep of GL_n(field of a) for g with act(a, g) == b.
struct SweepResult {
  std::optional<Matrix> witness;
  std::uint64_t group_order = 0;  // elements visited (all of GL_n unless found)
};
SweepResult sweep_for_witness(const FrobeniusForm& a, const FrobeniusForm& b,
                              std::uint64_t cap = state_cap());

// Codes of the orbit of f, ascending. Visited states live in a flat bitset up
// to `cap` states and in a hash set above it. Throws kBudgetExceeded when the
// orbit exceeds `budget` elements.
std::vector<std::uint64_t> orbit_codes(const FrobeniusForm& f, std::uint64_t budget,
                                       std::uint64_t cap = state_cap());
std::vector<Matrix> orbit(const FrobeniusForm& f, std::uint64_t budget,
                          std::uint64_t cap = state_cap());

// Same orbit through the generic matrix path, even over F_2; used to
// cross-check the packed path.
std::vector<std::uint64_t> orbit_codes_generic(const FrobeniusForm& f, std::uint64_t budget,
                                               std::uint64_t cap = state_cap());

struct OrbitInfo {
  std::uint64_t representative = 0;  // least code in the orbit
  std::uint64_t size = 0;
  std::size_t rank = 0;
  std::size_t embedding_dimension = 0;
  std::size_t min_support = 0;  // least number of live coordinates
  // Sparse matrices (any rank) in the orbit, as pattern strings.
  std::vector<std::string> sparse_patterns_hit;
  // Some member is a sparse pattern covering its m = embedding_dimension
  // variables, padded with zeros.
  bool has_sparse_reduction = false;

  bool contains_sparse() const { return !sparse_patterns_hit.empty(); }
};

struct OrbitReport {
  std::size_t n = 0;
  Field field = Field::create(2, 1);
  unsigned e = 1;
  std::uint64_t states = 0;
  std::vector<OrbitInfo> orbits;  // ordered by representative
  // orbit_of[code] = index into `orbits`; filled on request.
  std::vector<std::uint32_t> orbit_of;

  std::size_t orbit_count() const { return orbits.size(); }
  nlohmann::json to_json() const;
};

// Partition of all |f|^(n^2) matrices. `threads` > 1 splits the per-orbit
// statistics across workers; the report does not depend on it.
OrbitReport orbit_partition(std::size_t n, const Field& f, unsigned e, bool keep_index = false,
                            unsigned threads = 1, std::uint64_t cap = state_cap());

// Least number of coordinates i with row i or column i nonzero, over the
// orbit of f.
std::size_t bruteforce_embdim(const FrobeniusForm& f, std::uint64_t cap = state_cap());

// All sparse n x n matrices of any rank: 2^n of them.
std::vector<SparsePattern> all_sparse_patterns(std::size_t n);

struct CheckResult {
  std::string name;
  bool passed = false;
  // "exact", or "finite-field" for checks that only witness a closure-level
  // statement at desk scale.
  std::string evidence = "exact";
  std::string detail;
  nlohmann::json data;
};

// Scope names: census, iso5by5, n4-partition, n5-distinct-orbits,
// fullrank-gf4, embdim-oracle, sparse-embdim, singular-locus, classifier,
// quadratic, n5-inequivalence, and all-desk for every one of them. Throws
// kInvalidArgument for an unknown scope.
std::vector<std::string> verify_scopes();
std::vector<CheckResult> verify_theorems(std::string_view scope, std::uint64_t seed = 0);

}  // namespace frobforms

#endif  // FROBFORMS_ORACLE_HPP_
