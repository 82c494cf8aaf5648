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

#include <functional>
#include <mutex>
#include <numeric>

namespace frobforms {
namespace {

SparsePattern anti_diagonal(std::size_t n) {
  SparsePattern p{n, {}};
  for (std::size_t j = n; j >= 1; --j) p.js.push_back(j);
  return p;
}

std::vector<ClassLabel> build_table() {
  struct Row {
    std::size_t m, id;
    const char* name;
    SparsePattern pattern;
  };
  const std::vector<Row> rows = {
      {1, 1, "x_1^{q+1}", {1, {1}}},
      {2, 1, "x_1 x_2 (x_1^{q-1} + x_2^{q-1})", anti_diagonal(2)},
      {2, 2, "x_1^q x_2", {2, {2}}},
      {2, 3, "x_1^{q+1}", {2, {1}}},
      {3, 1, "x_1^{q+1} + x_2^{q+1} + x_3^{q+1}", anti_diagonal(3)},
      {3, 2, "x_1^q x_3 + x_2^{q+1}", {3, {3, 2}}},
      {3, 3, "x_1^q x_3 + x_2^q x_1", {3, {3, 1}}},
      {4, 1, "x_1^{q+1} + x_2^{q+1} + x_3^{q+1} + x_4^{q+1}", anti_diagonal(4)},
      {4, 2, "x_1^q x_4 + x_2^{q+1} + x_3^q x_1", {4, {4, 2, 1}}},
      {4, 3, "x_1^q x_4 + x_2^q x_3 + x_3^q x_1", {4, {4, 3, 1}}},
      {4, 4, "x_1^q x_4 + x_2^q x_3 + x_3^q x_2", {4, {4, 3, 2}}},
      {4, 5, "x_1^q x_4 + x_2^q x_3", {4, {4, 3}}},
      {5, 1, "x_1^{q+1} + x_2^{q+1} + x_3^{q+1} + x_4^{q+1} + x_5^{q+1}", anti_diagonal(5)},
      {5, 2, "x_1^q x_5 + x_2^q x_4 + x_3^{q+1} + x_4^q x_2", {5, {5, 4, 3, 2}}},
      {5, 3, "x_1^q x_5 + x_2^q x_4 + x_3^{q+1} + x_4^q x_1", {5, {5, 4, 3, 1}}},
      {5, 4, "x_1^q x_5 + x_2^q x_4 + x_3^q x_2 + x_4^q x_1", {5, {5, 4, 2, 1}}},
      {5, 5, "x_1^q x_5 + x_2^q x_3 + x_3^q x_2 + x_4^q x_1", {5, {5, 3, 2, 1}}},
      {5, 6, "x_1^q x_5 + x_2^q x_4 + x_3^{q+1}", {5, {5, 4, 3}}},
      {5, 7, "x_1^q x_5 + x_2^q x_4 + x_3^q x_2", {5, {5, 4, 2}}},
  };
  std::vector<ClassLabel> out;
  for (const auto& r : rows) {
    out.push_back(ClassLabel{r.m, r.id, r.name, r.pattern, r.pattern.rank()});
  }
  return out;
}

bool is_full_rank_diagonal(const ClassLabel& l) { return l.rank == l.m && l.m != 2; }

// Subspaces are kept as reduced row-echelon bases (rows), which makes
// equality a plain comparison.
struct Subspace {
  std::vector<Vector> basis;
  bool operator==(const Subspace&) const = default;
};

Subspace canonical(const Field& f, std::size_t n, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  Matrix m(f, vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
  }
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  Subspace s;
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis.push_back(r.row(i));
  return s;
}

Subspace kernel_of_rows(const Field& f, std::size_t n, const std::vector<Vector>& rows) {
  if (rows.empty()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, f.zero());
      e[i] = f.one();
      all.push_back(std::move(e));
    }
    return canonical(f, n, all);
  }
  Matrix m(f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return canonical(f, n, right_kernel_basis(m));
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

// Signatures of the nondegenerate representatives over F_p, by (p, m).
const std::vector<std::pair<OrbitSignature, const ClassLabel*>>& reference_signatures(
    std::uint32_t p, std::size_t m) {
  static std::map<std::pair<std::uint32_t, std::size_t>,
                  std::vector<std::pair<OrbitSignature, const ClassLabel*>>>
      cache;
  std::lock_guard<std::mutex> lock(table_mutex());
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  std::vector<std::pair<OrbitSignature, const ClassLabel*>> refs;
  const Field fp = Field::create(p, 1);
  for (const auto& l : class_table()) {
    if (l.m != m || l.degenerate()) continue;
    refs.emplace_back(orbit_signature(canonical_form(l, fp, 1)), &l);
  }
  return cache.emplace(std::make_pair(p, m), std::move(refs)).first->second;
}

const ClassLabel* identify(const FrobeniusForm& reduced) {
  const OrbitSignature sig = orbit_signature(reduced);
  for (const auto& [ref, label] : reference_signatures(reduced.field().p(), reduced.n())) {
    if (ref == sig) return label;
  }
  return nullptr;
}

Matrix block_diagonal(const Matrix& top, std::size_t n) {
  const Field& f = top.field();
  Matrix g = Matrix::identity(f, n);
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) g.at(i, j) = top(i, j);
  }
  return g;
}

// Moves `w`, a witness over an extension reached by embedding `base` one way,
// into `target` so that it is a witness for the embedding base -> target.
// Two embeddings of `base` differ by a power of Frobenius on `target`.
Matrix align_witness(const Matrix& w, const Field& base, const Field& target) {
  const Embedding via_w(w.field(), target);
  const Embedding inner(base, w.field());
  const Embedding direct(base, target);
  const Elem image = via_w(inner(base.gen()));
  const Elem want = direct(base.gen());
  for (unsigned s = 0; s < target.k(); ++s) {
    if (target.frobenius(want, s) == image) {
      Matrix out = embed(w, via_w);
      for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
          out.at(i, j) = target.inv_frobenius(out(i, j), s);
        }
      }
      return out;
    }
  }
  throw Error(ErrorCode::kFieldMismatch, "incompatible embeddings");
}

}  // namespace

std::string ClassLabel::display(std::uint64_t q) const {
  const std::string qs = std::to_string(q);
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name.compare(i, 5, "{q+1}") == 0) {
      out += "{" + std::to_string(q + 1) + "}";
      i += 4;
    } else if (name.compare(i, 5, "{q-1}") == 0) {
      out += "{" + std::to_string(q - 1) + "}";
      i += 4;
    } else if (name[i] == 'q') {
      out += qs;
    } else {
      out += name[i];
    }
  }
  return out;
}

const std::vector<ClassLabel>& class_table() {
  static const std::vector<ClassLabel> table = build_table();
  return table;
}

const ClassLabel& find_label(std::size_t m, std::size_t id) {
  for (const auto& l : class_table()) {
    if (l.m == m && l.id == id) return l;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no class " + std::to_string(m) + "." + std::to_string(id));
}

const ClassLabel& find_label(const std::string& key) {
  for (const auto& l : class_table()) {
    if (l.key() == key) return l;
  }
  throw Error(ErrorCode::kInvalidArgument, "no class " + key);
}

std::vector<SparsePattern> sparse_patterns(std::size_t n, std::size_t r) {
  std::vector<SparsePattern> out;
  if (r > n || 2 * r < n || n == 0) return out;
  const std::size_t forced = n - r;
  const std::size_t free = 2 * r - n;
  // Decreasing subsets of {1..r} of size `free`, in lexicographically
  // descending order.
  std::vector<std::size_t> pick(free);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t top) {
    if (pos == free) {
      SparsePattern p{n, {}};
      for (std::size_t i = 1; i <= forced; ++i) p.js.push_back(n + 1 - i);
      p.js.insert(p.js.end(), pick.begin(), pick.end());
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t v = top; v >= free - pos; --v) {
      pick[pos] = v;
      rec(pos + 1, v - 1);
      if (v == 1) break;
    }
  };
  rec(0, r);
  return out;
}

FrobeniusForm canonical_form(const ClassLabel& label, const Field& f, unsigned e) {
  if (is_full_rank_diagonal(label)) return FrobeniusForm(Matrix::identity(f, label.m), e);
  return FrobeniusForm(label.canonical_pattern.matrix(f), e);
}

const ClassLabel& pattern_to_label(const SparsePattern& pattern) {
  if (!pattern.covers_all_variables()) {
    throw Error(ErrorCode::kDegeneratePattern,
                pattern.to_string() + " leaves a variable out; reduce first");
  }
  if (pattern.n == 5 && pattern.js == std::vector<std::size_t>{5, 4, 1}) return find_label(5, 7);
  for (const auto& l : class_table()) {
    if (l.canonical_pattern == pattern) return l;
  }
  throw Error(ErrorCode::kUnsupportedDimension,
              "no class table for " + std::to_string(pattern.n) + " variables");
}

PatternType type_of(const SparsePattern& pattern) {
  if (pattern.rank() == pattern.n) throw Error(ErrorCode::kFullRank, "full-rank pattern");
  for (auto j : pattern.js) {
    if (j == 1) return PatternType::kB;
  }
  return PatternType::kA;
}

namespace {

struct Closure {
  std::vector<Subspace> spaces;
  OrbitSignature table;
};

Closure orbit_closure(const FrobeniusForm& form) {
  constexpr std::size_t kMaxSubspaces = 60;
  const Field& f = form.field();
  const std::size_t n = form.n();
  const Matrix& a = form.matrix();
  const unsigned e = form.e();
  Closure c;
  c.spaces = {kernel_of_rows(f, n, {}), Subspace{}};

  auto add = [&](std::uint32_t op, std::size_t x, std::size_t y, Subspace s) {
    std::size_t idx = 0;
    while (idx < c.spaces.size() && !(c.spaces[idx] == s)) ++idx;
    if (idx == c.spaces.size()) {
      if (c.spaces.size() >= kMaxSubspaces) return false;
      c.spaces.push_back(std::move(s));
    }
    c.table.insert(c.table.end(), {op, static_cast<std::uint32_t>(x),
                                   static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(idx)});
    return true;
  };

  for (std::size_t i = 0; i < c.spaces.size(); ++i) {
    const std::vector<Vector> basis = c.spaces[i].basis;
    std::vector<Vector> right_rows, left_rows;
    for (const auto& y : basis) {
      // (y^[q])^T A
      const Vector yq = frobenius_twist(f, y, e);
      Vector row(n, f.zero());
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < n; ++k) row[k] = f.add(row[k], f.mul(yq[l], a(l, k)));
      }
      right_rows.push_back(std::move(row));
      left_rows.push_back(inv_frobenius_twist(f, mat_vec(a, y), e));
    }
    if (!add(0, i, i, kernel_of_rows(f, n, right_rows))) break;
    if (!add(1, i, i, kernel_of_rows(f, n, left_rows))) break;
    bool full = false;
    for (std::size_t j = 0; j < i && !full; ++j) {
      full = !add(2, i, j,
                  canonical(f, n, subspace_intersection(f, n, basis, c.spaces[j].basis)));
      if (full) break;
      std::vector<Vector> both = basis;
      both.insert(both.end(), c.spaces[j].basis.begin(), c.spaces[j].basis.end());
      full = !add(3, i, j, canonical(f, n, both));
    }
    if (full) break;
  }
  return c;
}

}  // namespace

OrbitSignature orbit_signature(const FrobeniusForm& form) {
  const Field& f = form.field();
  const std::size_t n = form.n();
  Closure c = orbit_closure(form);
  OrbitSignature sig = std::move(c.table);
  for (const auto& s : c.spaces) {
    sig.push_back(static_cast<std::uint32_t>(s.basis.size()));
    if (s.basis.empty()) {
      sig.push_back(0);
      continue;
    }
    const Matrix b = Matrix::from_columns(f, n, s.basis);
    sig.push_back(static_cast<std::uint32_t>(
        rank(mat_mul(frobenius_twist(b, form.e()).transpose(), mat_mul(form.matrix(), b)))));
  }
  return sig;
}

std::vector<std::vector<Vector>> orbit_subspaces(const FrobeniusForm& form) {
  std::vector<std::vector<Vector>> out;
  for (auto& s : orbit_closure(form).spaces) out.push_back(std::move(s.basis));
  return out;
}

SparsifyResult sparsify(const FrobeniusForm& f, const SearchOptions& options) {
  if (embedding_dimension(f) != f.n()) {
    throw Error(ErrorCode::kInvalidArgument, "sparsify needs a nondegenerate form; reduce first");
  }
  if (auto pat = is_sparse(f)) return {Matrix::identity(f.field(), f.n()), *pat, 1};
  if (f.n() > 5) throw Error(ErrorCode::kUnsupportedDimension, "more than five variables");
  const ClassLabel* label = identify(f);
  if (!label) throw Error(ErrorCode::kBudgetExceeded, "no class matches the orbit signature");
  const FrobeniusForm target(label->canonical_pattern.matrix(f.field()), f.e());
  auto w = find_transform(f, target, options);
  if (!w) throw Error(ErrorCode::kBudgetExceeded, "no sparsifying witness within budget");
  return {std::move(w->g), label->canonical_pattern, w->extension_degree};
}

ClassificationResult classify(const FrobeniusForm& f, const SearchOptions& options) {
  const Field& base = f.field();
  const std::size_t n = f.n();
  const EmbdimReduction red = reduce_to_embdim(f);
  const std::size_t m = red.reduced.n();
  ClassificationResult out{nullptr, m, rank(f), Matrix::identity(base, n), base, 1, std::nullopt};
  if (m < n) out.embdim_reduction = red.g;
  if (m == 0) {
    out.witness = red.g;
    return out;
  }
  if (m > 5) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "embedding dimension " + std::to_string(m) + " exceeds five");
  }
  const ClassLabel* label = identify(red.reduced);
  std::optional<Witness> w;
  if (label) {
    w = find_transform(red.reduced, canonical_form(*label, base, f.e()), options);
  } else {
    // Not expected for a complete class list; search every candidate class.
    for (const auto& l : class_table()) {
      if (l.m != m || l.degenerate() || l.rank != rank(red.reduced)) continue;
      w = find_transform(red.reduced, canonical_form(l, base, f.e()), options);
      if (w) {
        label = &l;
        break;
      }
    }
  }
  if (!w) {
    throw Error(ErrorCode::kBudgetExceeded,
                label ? "class " + label->key() + " identified but no witness within budget"
                      : std::string("no class witness within budget"));
  }
  const Embedding into(base, w->field);
  Matrix witness = mat_mul(embed(red.g, into), block_diagonal(w->g, n));
  const FrobeniusForm canon = pad(canonical_form(*label, w->field, f.e()), n);
  if (!(act(embed(f, into), witness) == canon)) {
    throw Error(ErrorCode::kBudgetExceeded, "composed witness failed verification");
  }
  out.label = label;
  out.witness = std::move(witness);
  out.witness_field = w->field;
  out.extension_degree = w->extension_degree;
  return out;
}

std::size_t fibonacci_bound(std::size_t n) {
  std::size_t a = 1, b = 2;
  if (n <= 1) return 1;
  for (std::size_t i = 2; i < n; ++i) {
    const std::size_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

CensusRecord class_census(std::size_t n) {
  if (n < 1 || n > 5) throw Error(ErrorCode::kUnsupportedDimension, "census covers n = 1..5");
  CensusRecord c;
  c.n = n;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t count = sparse_patterns(n, r).size();
    if (count) c.sparse_by_rank[r] = count;
    c.sparse_total += count;
  }
  for (const auto& l : class_table()) {
    if (l.m != n || l.degenerate()) continue;
    ++c.classes;
    ++c.classes_by_rank[l.rank];
  }
  c.fibonacci_bound = fibonacci_bound(n);
  return c;
}

EquivalenceResult equivalent(const FrobeniusForm& f1, const FrobeniusForm& f2,
                             const SearchOptions& options) {
  if (!(f1.field() == f2.field())) throw Error(ErrorCode::kFieldMismatch, "forms over different fields");
  if (f1.n() != f2.n()) throw Error(ErrorCode::kDimensionMismatch, "variable counts differ");
  if (f1.e() != f2.e()) throw Error(ErrorCode::kInvalidArgument, "Frobenius exponents differ");
  const Field& base = f1.field();
  EquivalenceResult out;
  if (f1 == f2) {
    out.status = EquivalenceResult::Status::kEquivalent;
    out.witness = Witness{Matrix::identity(base, f1.n()), base, 1};
    out.evidence = "identical";
    return out;
  }
  const std::size_t m1 = embedding_dimension(f1), m2 = embedding_dimension(f2);
  const std::size_t r1 = rank(f1), r2 = rank(f2);
  if (m1 != m2 || r1 != r2) {
    out.evidence = "rank or embedding dimension differs";
    return out;
  }
  if (m1 <= 5) {
    const auto c1 = classify(f1, options);
    const auto c2 = classify(f2, options);
    if (c1.label != c2.label) {
      out.evidence = "classes " + (c1.label ? c1.label->key() : std::string("zero")) + " and " +
                     (c2.label ? c2.label->key() : std::string("zero"));
      return out;
    }
    const unsigned d = std::lcm(c1.extension_degree, c2.extension_degree);
    const Extension ext = extend(base, d);
    const Matrix w1 = align_witness(c1.witness, base, ext.field);
    const Matrix w2 = align_witness(c2.witness, base, ext.field);
    Matrix g = mat_mul(w1, inverse(w2));
    if (!(act(embed(f1, ext.embed), g) == embed(f2, ext.embed))) {
      throw Error(ErrorCode::kBudgetExceeded, "composed equivalence witness failed verification");
    }
    out.status = EquivalenceResult::Status::kEquivalent;
    out.witness = Witness{std::move(g), ext.field, d};
    out.evidence = "both in class " + (c1.label ? c1.label->key() : std::string("zero"));
    return out;
  }
  if (orbit_signature(f1) != orbit_signature(f2)) {
    out.evidence = "orbit signatures differ";
    return out;
  }
  auto w = find_transform(f1, f2, options);
  if (!w) throw Error(ErrorCode::kBudgetExceeded, "no witness and no separating invariant");
  out.status = EquivalenceResult::Status::kEquivalent;
  out.witness = std::move(w);
  out.evidence = "direct search";
  return out;
}

}  // namespace frobforms
