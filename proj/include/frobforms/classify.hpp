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

// Classification of Frobenius forms of embedding dimension at most five.
//
// A form is first reduced to its embedding dimension m. Its class is then read
// off an orbit signature (see `orbit_signature`), and a coordinate change onto
// the class representative is searched for over successive extensions of the
// base field. Nothing is reported without an exactly verified witness.

#ifndef FROBFORMS_CLASSIFY_HPP_
#define FROBFORMS_CLASSIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobforms/frobform.hpp"

namespace frobforms {

struct ClassLabel {
  std::size_t m = 0;   // embedding dimension
  std::size_t id = 0;  // position in the list for this m, 1-based
  std::string name;    // display string, with q literal
  SparsePattern canonical_pattern;
  std::size_t rank = 0;

  // "5.7"
  std::string key() const { return std::to_string(m) + "." + std::to_string(id); }
  // Only 2.3 (x_1^{q+1} written in two variables) has embedding dimension
  // below m.
  bool degenerate() const { return canonical_pattern.distinct_variables() < m; }
  // The display name with q replaced by its value.
  std::string display(std::uint64_t q) const;
};

const std::vector<ClassLabel>& class_table();
const ClassLabel& find_label(std::size_t m, std::size_t id);
const ClassLabel& find_label(const std::string& key);

// All sparse patterns of size n and rank r whose form involves all n
// variables; C(r, n - r) of them when n/2 <= r <= n, none otherwise.
std::vector<SparsePattern> sparse_patterns(std::size_t n, std::size_t r);

// The listed representative of the class (the diagonal form for full rank,
// except in two variables where the listed form is x_1^q x_2 + x_2^q x_1).
FrobeniusForm canonical_form(const ClassLabel& label, const Field& f, unsigned e);

// Throws kDegeneratePattern if some variable does not occur.
const ClassLabel& pattern_to_label(const SparsePattern& pattern);

enum class PatternType { kA, kB };
// Type a: first column zero; type b: first column e_r. Throws kFullRank for
// r = n.
PatternType type_of(const SparsePattern& pattern);

// Invariant of the GL_n-orbit (over any extension field): the closure of
// {whole space, 0} under right/left orthogonals for the pairing
// (x, y) -> x^[q]^T A y, intersections and sums, recorded as the full
// operation table plus the dimension of each subspace and the rank of the
// form restricted to it.
using OrbitSignature = std::vector<std::uint32_t>;
OrbitSignature orbit_signature(const FrobeniusForm& f);

// The subspaces behind the signature, as reduced row-echelon bases, in
// discovery order. A witness of act(A, g) = T maps the i-th subspace of T onto
// the i-th subspace of A whenever the signatures agree.
std::vector<std::vector<Vector>> orbit_subspaces(const FrobeniusForm& f);

struct SearchOptions {
  std::uint64_t seed = 0;
  // Candidate evaluations per extension level and round.
  std::uint64_t budget = 20000;
  // Largest total degree over the prime field that the search may use; fields
  // above the order bound are skipped.
  unsigned max_total_degree = 20;
  unsigned rounds = 4;
};

struct Witness {
  Matrix g;                     // over `field`
  Field field;                  // GF(p^(k * extension_degree))
  unsigned extension_degree = 1;
};

// Searches g with act(embed(f), g) == embed(target) over extensions of the
// common field of f and target.
std::optional<Witness> find_transform(const FrobeniusForm& f, const FrobeniusForm& target,
                                      const SearchOptions& options);

struct SparsifyResult {
  Matrix g;
  SparsePattern pattern;
  unsigned extension_degree = 1;
};
// f must be nondegenerate. Throws kBudgetExceeded.
SparsifyResult sparsify(const FrobeniusForm& f, const SearchOptions& options = {});

struct ClassificationResult {
  // Absent exactly for the zero form.
  const ClassLabel* label = nullptr;
  std::size_t embedding_dimension = 0;
  std::size_t rank = 0;
  // act(embed(f), witness) == pad(canonical_form(label), n).
  Matrix witness;
  Field witness_field;
  unsigned extension_degree = 1;
  // Present when f is degenerate: the base-field reduction to m variables.
  std::optional<Matrix> embdim_reduction;

  bool zero_form() const { return label == nullptr; }
};

// Throws kUnsupportedDimension (m > 5) and kBudgetExceeded.
ClassificationResult classify(const FrobeniusForm& f, const SearchOptions& options = {});

struct CensusRecord {
  std::size_t n = 0;
  std::map<std::size_t, std::size_t> sparse_by_rank;
  std::size_t sparse_total = 0;
  // Nondegenerate classes listed for embedding dimension n.
  std::size_t classes = 0;
  std::map<std::size_t, std::size_t> classes_by_rank;
  // n-th Fibonacci number with F_1 = 1, F_2 = 2 (an inferred convention).
  std::size_t fibonacci_bound = 0;
};
CensusRecord class_census(std::size_t n);
std::size_t fibonacci_bound(std::size_t n);

struct EquivalenceResult {
  enum class Status {
    kEquivalent,
    // Class labels differ; no coordinate change exists over any field.
    kDistinctClasses,
  };
  Status status = Status::kDistinctClasses;
  std::optional<Witness> witness;  // act(embed(f1), g) == embed(f2)
  std::string evidence;
};
// Throws kBudgetExceeded when neither a witness nor a separation is found.
EquivalenceResult equivalent(const FrobeniusForm& f1, const FrobeniusForm& f2,
                             const SearchOptions& options = {});

}  // namespace frobforms

#endif  // FROBFORMS_CLASSIFY_HPP_
