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

// Witness search for act(A, g) == T, one column of g at a time.
//
// With columns g_0..g_{j-1} fixed, the next column x must satisfy, for i < j,
//   (g_i^[q])^T A x = T_ij                       (linear in x)
//   x^[q]^T A g_i  = T_ji, i.e. sum_k x_k (A g_i)_k^(1/q) = T_ji^(1/q)
// plus the single nonlinear equation x^[q]^T A x = T_jj and independence from
// the earlier columns. The linear part is solved exactly; the affine solution
// set is enumerated when small and sampled otherwise.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "frobforms/classify.hpp"

namespace frobforms {
namespace {

constexpr std::uint64_t kEnumerationLimit = 1u << 12;
constexpr std::size_t kChildrenPerNode = 3;
// Budget charged per diagonalizer run. A run that fails on a field admitting a
// diagonal witness is rare, so repeated runs are cheap evidence.
constexpr std::uint64_t kDiagonalizerRunCost = 1000;

struct Affine {
  Vector base;
  std::vector<Vector> directions;
};

// Solves M x = b; nullopt when inconsistent.
std::optional<Affine> solve_affine(const Field& f, const std::vector<Vector>& rows,
                                   const Vector& rhs, std::size_t n) {
  if (rows.empty()) {
    Affine out{Vector(n, f.zero()), {}};
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n, f.zero());
      e[i] = f.one();
      out.directions.push_back(std::move(e));
    }
    return out;
  }
  Matrix aug(f, rows.size(), n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = rows[i][j];
    aug.at(i, n) = rhs[i];
  }
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Affine out{Vector(n, f.zero()), {}};
  for (std::size_t i = 0; i < pivots.size(); ++i) out.base[pivots[i]] = r(i, n);
  Matrix coeffs(f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) coeffs.at(i, j) = rows[i][j];
  }
  out.directions = right_kernel_basis(coeffs);
  return out;
}

class ColumnSearch {
 public:
  // Each constraint (z, c) of column j demands z . g_j = c. Columns listed in
  // `last` are chosen after the others.
  using Constraints = std::vector<std::vector<std::pair<Vector, Elem>>>;
  ColumnSearch(const Matrix& a, const Matrix& t, unsigned e, std::mt19937_64& rng,
               std::uint64_t budget, bool exhaustive, const Constraints& constraints,
               const std::vector<std::size_t>& last)
      : f_(a.field()), a_(a), t_(t), e_(e), n_(a.rows()), rng_(rng), budget_(budget),
        exhaustive_(exhaustive), constraints_(constraints) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (std::find(last.begin(), last.end(), j) == last.end()) order_.push_back(j);
    }
    order_.insert(order_.end(), last.begin(), last.end());
  }

  std::optional<Matrix> run() {
    if (!dfs()) return std::nullopt;
    Matrix g(f_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) g.at(k, order_[i]) = columns_[i][k];
    }
    return g;
  }
  // True when the search space was covered completely without a solution.
  bool proved_empty() const { return exhaustive_ && complete_ && spent_ < budget_; }
  std::uint64_t spent() const { return spent_; }

 private:
  Elem norm(const Vector& x) const {
    Elem s = f_.zero();
    for (std::size_t l = 0; l < n_; ++l) {
      const Elem xq = f_.frobenius(x[l], e_);
      if (xq.v == 0) continue;
      Elem ax = f_.zero();
      for (std::size_t k = 0; k < n_; ++k) ax = f_.add(ax, f_.mul(a_(l, k), x[k]));
      s = f_.add(s, f_.mul(xq, ax));
    }
    return s;
  }

  bool independent(const Vector& x) const {
    std::vector<Vector> cols = columns_;
    cols.push_back(x);
    return rank(Matrix::from_columns(f_, n_, cols)) == cols.size();
  }

  bool dfs() {
    if (columns_.size() == n_) return true;
    const std::size_t j = order_[columns_.size()];
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t pos = 0; pos < columns_.size(); ++pos) {
      const std::size_t i = order_[pos];
      rows.push_back(left_rows_[pos]);
      rhs.push_back(t_(i, j));
      rows.push_back(right_rows_[pos]);
      rhs.push_back(f_.inv_frobenius(t_(j, i), e_));
    }
    for (const auto& [z, c] : constraints_[j]) {
      rows.push_back(z);
      rhs.push_back(c);
    }
    const auto sol = solve_affine(f_, rows, rhs, n_);
    if (!sol) return false;
    const std::size_t d = sol->directions.size();
    std::uint64_t total = 1;
    bool enumerable = true;
    for (std::size_t i = 0; i < d && enumerable; ++i) {
      total *= f_.order();
      if (total > kEnumerationLimit) enumerable = false;
    }
    std::vector<std::uint64_t> order;
    if (enumerable) {
      order.resize(total);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng_);
    } else {
      complete_ = false;
    }
    const std::uint64_t tries = enumerable ? total : std::max<std::uint64_t>(64, 8 * f_.order());
    const Elem target = t_(j, j);
    std::size_t children = 0;
    std::uniform_int_distribution<std::uint32_t> pick(0, f_.order() - 1);
    for (std::uint64_t s = 0; s < tries; ++s) {
      if (spent_++ >= budget_) return false;
      Vector x = sol->base;
      std::uint64_t code = enumerable ? order[s] : 0;
      for (std::size_t i = 0; i < d; ++i) {
        Elem c;
        if (enumerable) {
          c = Elem{static_cast<std::uint32_t>(code % f_.order())};
          code /= f_.order();
        } else {
          c = Elem{pick(rng_)};
        }
        if (c.v == 0) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          x[k] = f_.add(x[k], f_.mul(c, sol->directions[i][k]));
        }
      }
      if (norm(x) != target || !independent(x)) continue;
      push(x);
      if (dfs()) return true;
      pop();
      if (!exhaustive_ && ++children >= kChildrenPerNode) {
        complete_ = false;
        return false;
      }
    }
    return false;
  }

  void push(const Vector& x) {
    Vector left(n_, f_.zero());
    Vector ax(n_, f_.zero());
    for (std::size_t l = 0; l < n_; ++l) {
      const Elem xq = f_.frobenius(x[l], e_);
      for (std::size_t k = 0; k < n_; ++k) {
        left[k] = f_.add(left[k], f_.mul(xq, a_(l, k)));
        ax[l] = f_.add(ax[l], f_.mul(a_(l, k), x[k]));
      }
    }
    for (auto& v : ax) v = f_.inv_frobenius(v, e_);
    columns_.push_back(x);
    left_rows_.push_back(std::move(left));
    right_rows_.push_back(std::move(ax));
  }
  void pop() {
    columns_.pop_back();
    left_rows_.pop_back();
    right_rows_.pop_back();
  }

  const Field& f_;
  const Matrix& a_;
  const Matrix& t_;
  unsigned e_;
  std::size_t n_;
  std::mt19937_64& rng_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  bool exhaustive_;
  bool complete_ = true;
  const Constraints& constraints_;
  std::vector<std::size_t> order_;  // target column handled at each depth
  std::vector<Vector> columns_;
  std::vector<Vector> left_rows_;   // (g_i^[q])^T A
  std::vector<Vector> right_rows_;  // (A g_i)^[1/q]
};

// Full-rank forms: g with act(A, g) = I, built one column at a time from
// "special" vectors x, those for which the two orthogonality conditions
// x^[q]^T A y = 0 and y^[q]^T A x = 0 cut out the same hyperplane. They are
// the solutions of x^[q^2] = lambda M x with M = ((A^T)^[q])^-1 A, an
// F_p-linear system for each lambda. Scaling x to x^[q]^T A x = 1 and
// recursing on the common hyperplane finishes the construction.
class Diagonalizer {
 public:
  Diagonalizer(unsigned e, std::mt19937_64& rng, std::uint64_t budget)
      : e_(e), rng_(rng), budget_(budget) {}

  // True after a top-level run that found no special vector at all, in which
  // case no diagonalizing witness exists over this field.
  bool hopeless() const { return hopeless_; }

  std::optional<Matrix> run(const Matrix& a) {
    hopeless_ = false;
    return run(a, true);
  }

 private:
  std::optional<Matrix> run(const Matrix& a, bool top) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return Matrix(f, 0, 0);
    const std::uint64_t q = ipow(f.p(), e_);
    if (n == 1) {
      const auto s = f.root(f.inv(a(0, 0)), q + 1);
      if (!s) {
        hopeless_ = top;
        return std::nullopt;
      }
      Matrix g(f, 1, 1);
      g.at(0, 0) = *s;
      return g;
    }
    const Matrix m = mat_mul(inverse(frobenius_twist(a.transpose(), e_)), a);
    bool any = false;
    for (const Elem lambda : lambdas(f, q)) {
      const auto space = special_space(m, lambda);
      if (space.empty()) continue;
      any = true;
      std::size_t children = 0;
      for (int attempt = 0; attempt < 16; ++attempt) {
        if (spent_++ >= budget_) return std::nullopt;
        Vector x = random_member(f, space);
        const Elem nx = norm(a, x);
        if (nx.v == 0) continue;
        const auto s = f.root(f.inv(nx), q + 1);
        if (!s) continue;
        for (auto& c : x) c = f.mul(c, *s);
        // Common hyperplane, as the kernel of (x^[q])^T A.
        Matrix row(f, 1, n);
        const Vector xq = frobenius_twist(f, x, e_);
        for (std::size_t k = 0; k < n; ++k) {
          Elem acc = f.zero();
          for (std::size_t l = 0; l < n; ++l) acc = f.add(acc, f.mul(xq[l], a(l, k)));
          row.at(0, k) = acc;
        }
        const Matrix b = Matrix::from_columns(f, n, right_kernel_basis(row));
        const Matrix sub = mat_mul(frobenius_twist(b, e_).transpose(), mat_mul(a, b));
        auto rest = run(sub, false);
        if (rest) {
          std::vector<Vector> cols = {x};
          const Matrix moved = mat_mul(b, *rest);
          for (std::size_t j = 0; j + 1 < n; ++j) cols.push_back(moved.column(j));
          return Matrix::from_columns(f, n, cols);
        }
        if (++children >= 3) break;
      }
    }
    hopeless_ = top && !any;
    return std::nullopt;
  }

  static std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  }

  Elem norm(const Matrix& a, const Vector& x) const {
    const Field& f = a.field();
    const Vector ax = mat_vec(a, x);
    Elem s = f.zero();
    for (std::size_t l = 0; l < x.size(); ++l) {
      s = f.add(s, f.mul(f.frobenius(x[l], e_), ax[l]));
    }
    return s;
  }

  // Representatives of G^* modulo (q^2 - 1)-th powers, in random order.
  std::vector<Elem> lambdas(const Field& f, std::uint64_t q) {
    const std::uint64_t group = f.order() - 1;
    const std::uint64_t g = std::gcd((q * q - 1) % group == 0 ? group : (q * q - 1) % group, group);
    std::vector<Elem> out;
    Elem l = f.one();
    for (std::uint64_t i = 0; i < g; ++i) {
      out.push_back(l);
      l = f.mul(l, f.primitive());
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  // Basis over F_p of {x : x^[q^2] = lambda M x}.
  std::vector<Vector> special_space(const Matrix& m, Elem lambda) const {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    const unsigned k = f.k();
    const Field fp = Field::create(f.p(), 1);
    Matrix lin(fp, n * k, n * k);
    std::vector<std::uint32_t> unit(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (unsigned s = 0; s < k; ++s) {
        std::fill(unit.begin(), unit.end(), 0);
        unit[s] = 1;
        Vector x(n, f.zero());
        x[i] = f.from_coeffs(unit);
        const Vector mx = mat_vec(m, x);
        for (std::size_t r = 0; r < n; ++r) {
          const Elem val = f.sub(f.frobenius(x[r], 2 * e_), f.mul(lambda, mx[r]));
          const auto c = f.coeffs(val);
          for (unsigned t = 0; t < k; ++t) lin.at(r * k + t, i * k + s) = Elem{c[t]};
        }
      }
    }
    std::vector<Vector> out;
    std::vector<std::uint32_t> digits(k);
    for (const auto& v : right_kernel_basis(lin)) {
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned t = 0; t < k; ++t) digits[t] = v[i * k + t].v;
        x[i] = f.from_coeffs(digits);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

  Vector random_member(const Field& f, const std::vector<Vector>& basis) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.p() - 1);
    Vector x(basis[0].size(), f.zero());
    for (const auto& b : basis) {
      const Elem c = f.from_int(pick(rng_));
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = f.add(x[i], f.mul(c, b[i]));
    }
    return x;
  }

 public:
  std::uint64_t spent() const { return spent_; }

 private:
  unsigned e_;
  std::mt19937_64& rng_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  bool hopeless_ = false;
};

std::optional<Matrix> permutation_witness(const Matrix& a, const Matrix& t) {
  const std::size_t n = a.rows();
  if (n > 6) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = a(perm[i], perm[j]) == t(i, j);
    }
    if (ok) {
      Matrix g(a.field(), n, n);
      for (std::size_t j = 0; j < n; ++j) g.at(perm[j], j) = a.field().one();
      return g;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Restricts the form to the span of the columns of b.
Matrix restrict_form(const Matrix& a, const Matrix& b, unsigned e) {
  return mat_mul(frobenius_twist(b, e).transpose(), mat_mul(a, b));
}

bool is_coordinate_span(const std::vector<Vector>& basis, const std::vector<bool>& in) {
  std::size_t size = 0;
  for (bool b : in) size += b;
  if (basis.size() != size) return false;
  for (const auto& v : basis) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!in[k] && v[k].v != 0) return false;
    }
  }
  return true;
}

bool contains(const Field& f, const std::vector<Vector>& basis, std::size_t j, std::size_t n) {
  std::vector<Vector> cols = basis;
  Vector ej(n, f.zero());
  ej[j] = f.one();
  cols.push_back(std::move(ej));
  return rank(Matrix::from_columns(f, n, cols)) == basis.size();
}

// One extension level. A witness maps every orbit subspace of t onto the
// matching subspace of a, which gives linear constraints per column. When t is
// block diagonal along a coordinate split whose two spans are orbit subspaces,
// the two halves are solved separately; full-rank pieces go to the
// diagonalizer and the rest to the column search.
class LevelSolver {
 public:
  LevelSolver(unsigned e, std::mt19937_64& rng, std::uint64_t budget, bool exhaustive)
      : e_(e), rng_(rng), budget_(budget), exhaustive_(exhaustive) {}

  // Runs only the splitting and returns the full-rank pieces of both sides
  // that would go to the diagonalizer.
  std::vector<Matrix> full_rank_pieces(const Matrix& a, const Matrix& t) {
    pieces_ = std::vector<Matrix>{};
    solve(a, t);
    std::vector<Matrix> out = std::move(*pieces_);
    pieces_.reset();
    return out;
  }

  std::optional<Matrix> solve(const Matrix& a, const Matrix& t) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (a == t && !pieces_) return Matrix::identity(f, n);
    const auto sa = orbit_subspaces(FrobeniusForm(a, e_));
    const auto st = orbit_subspaces(FrobeniusForm(t, e_));
    if (sa.size() != st.size()) {
      proved_empty_ = true;
      return std::nullopt;
    }
    for (const auto& block : components(t)) {
      if (block.size() == n) break;
      std::vector<bool> in(n, false), out(n, true);
      for (std::size_t i : block) in[i] = true, out[i] = false;
      std::optional<std::size_t> si, so;
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (!si && is_coordinate_span(st[i], in)) si = i;
        if (!so && is_coordinate_span(st[i], out)) so = i;
      }
      if (!si || !so) continue;
      Matrix g(f, n, n);
      if (!solve_part(a, t, sa[*si], in, g) || !solve_part(a, t, sa[*so], out, g)) {
        return std::nullopt;
      }
      return g;
    }
    const bool full = rank(a) == n;
    ColumnSearch::Constraints constraints(n);
    std::vector<std::size_t> last;
    if (!full) {
      auto piece = quotient_piece(a, t, sa, st);
      if (piece && pieces_) pieces_->insert(pieces_->end(), {piece->form, piece->target});
      if (piece && !pieces_) {
        auto h = solve(piece->form, piece->target);
        if (!h) return std::nullopt;
        // Each block column is fixed up to the radical, which changes
        // neither its norm nor its pairings within the block. The radical
        // parts are then pinned linearly by the other columns, so the block
        // goes last.
        const Matrix cols = mat_mul(piece->basis, *h);
        const auto annihilator = piece->radical.empty()
                                     ? std::vector<Vector>{}
                                     : right_kernel_basis(
                                           Matrix::from_columns(f, n, piece->radical).transpose());
        std::vector<Vector> rows = annihilator;
        if (piece->radical.empty()) {
          for (std::size_t i = 0; i < n; ++i) {
            Vector ei(n, f.zero());
            ei[i] = f.one();
            rows.push_back(std::move(ei));
          }
        }
        for (std::size_t j = 0; j < piece->columns.size(); ++j) {
          const Vector x = cols.column(j);
          for (const auto& z : rows) {
            Elem c = f.zero();
            for (std::size_t k = 0; k < n; ++k) c = f.add(c, f.mul(z[k], x[k]));
            constraints[piece->columns[j]].emplace_back(z, c);
          }
          last.push_back(piece->columns[j]);
        }
      }
    }
    if (pieces_) {
      if (full) pieces_->insert(pieces_->end(), {a, t});
      return Matrix::identity(f, n);
    }
    if (full) {
      Diagonalizer diag(e_, rng_, budget_);
      auto ga = diag.run(a);
      std::optional<Matrix> gt = Matrix::identity(f, n);
      if (ga && t != *gt) gt = diag.run(t);
      spent_ += std::max<std::uint64_t>(kDiagonalizerRunCost, diag.spent());
      // Retrying cannot help when one side has no special vector here.
      if (diag.hopeless()) proved_empty_ = true;
      if (!ga || !gt) return std::nullopt;
      return mat_mul(*ga, inverse(*gt));
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i].size() == n || !contains(f, st[i], j, n)) continue;
        const Matrix rows = Matrix::from_columns(f, n, sa[i]).transpose();
        for (auto& z : right_kernel_basis(rows)) constraints[j].emplace_back(std::move(z), f.zero());
      }
    }
    ColumnSearch search(a, t, e_, rng_, budget_, exhaustive_, constraints, last);
    auto g = search.run();
    spent_ += std::max<std::uint64_t>(1, search.spent());
    if (!g && search.proved_empty()) proved_empty_ = true;
    return g;
  }

  bool proved_empty() const { return proved_empty_; }
  std::uint64_t spent() const { return spent_; }

 private:
  // Connected components of the graph with an edge i - j whenever t_ij != 0.
  static std::vector<std::vector<std::size_t>> components(const Matrix& t) {
    const std::size_t n = t.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (t(i, j).v != 0) parent[find(i)] = find(j);
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
  }

  struct QuotientPiece {
    std::vector<std::size_t> columns;  // coordinates of t it covers
    Matrix basis;                      // n x |columns|, spans a complement
    Matrix form;                       // a restricted to basis
    Matrix target;                     // t on columns
    std::vector<Vector> radical;       // radical of a on S_a, in V
  };

  // Looks for an orbit subspace S = span(e_C) of t on which t restricts to a
  // full-rank block on I plus zero rows and columns; the block is then the
  // nondegenerate quotient of S by its radical. On the side of a the same
  // quotient is realized on a complement of the radical of S_a, so those
  // columns can be settled first by the diagonalizer.
  std::optional<QuotientPiece> quotient_piece(const Matrix& a, const Matrix& t,
                                              const std::vector<std::vector<Vector>>& sa,
                                              const std::vector<std::vector<Vector>>& st) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    std::optional<QuotientPiece> best;
    for (std::size_t s = 0; s < st.size(); ++s) {
      std::vector<bool> in(n, false);
      for (std::size_t j = 0; j < n; ++j) in[j] = contains(f, st[s], j, n);
      if (!is_coordinate_span(st[s], in)) continue;
      std::vector<std::size_t> block;
      for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) continue;
        bool used = false;
        for (std::size_t j = 0; j < n && !used; ++j) {
          used = in[j] && (t(i, j).v != 0 || t(j, i).v != 0);
        }
        if (used) block.push_back(i);
      }
      if (block.size() < 2 || block.size() >= n) continue;
      if (best && best->columns.size() >= block.size()) continue;
      Matrix tb(f, block.size(), block.size());
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = 0; j < block.size(); ++j) tb.at(i, j) = t(block[i], block[j]);
      }
      if (rank(tb) != block.size()) continue;
      // Radical of a on S_a, in coordinates of the basis of S_a.
      const Matrix b = Matrix::from_columns(f, n, sa[s]);
      const Matrix as = restrict_form(a, b, e_);
      std::vector<Vector> left;
      for (const auto& y : right_kernel_basis(as.transpose())) {
        left.push_back(inv_frobenius_twist(f, y, e_));
      }
      const auto radical = subspace_intersection(f, as.rows(), right_kernel_basis(as), left);
      if (radical.size() + block.size() != as.rows()) continue;
      std::vector<Vector> span = radical, complement;
      for (std::size_t i = 0; i < as.rows() && complement.size() < block.size(); ++i) {
        Vector ei(as.rows(), f.zero());
        ei[i] = f.one();
        span.push_back(ei);
        if (rank(Matrix::from_columns(f, as.rows(), span)) == span.size()) {
          complement.push_back(std::move(ei));
        } else {
          span.pop_back();
        }
      }
      const Matrix basis = mat_mul(b, Matrix::from_columns(f, as.rows(), complement));
      std::vector<Vector> rad;
      for (const auto& r : radical) rad.push_back(mat_vec(b, r));
      best = QuotientPiece{block, basis, restrict_form(a, basis, e_), tb, std::move(rad)};
    }
    return best;
  }

  // Solves the piece of t on the coordinates marked in `in` against a
  // restricted to `basis`, writing the resulting columns into g.
  bool solve_part(const Matrix& a, const Matrix& t, const std::vector<Vector>& basis,
                  const std::vector<bool>& in, Matrix& g) {
    const Field& f = a.field();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i]) idx.push_back(i);
    }
    const Matrix b = Matrix::from_columns(f, a.rows(), basis);
    Matrix sub_t(f, idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) sub_t.at(i, j) = t(idx[i], idx[j]);
    }
    auto h = solve(restrict_form(a, b, e_), sub_t);
    if (!h) return false;
    const Matrix cols = mat_mul(b, *h);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      for (std::size_t k = 0; k < a.rows(); ++k) g.at(k, idx[j]) = cols(k, j);
    }
    return true;
  }

  unsigned e_;
  std::mt19937_64& rng_;
  std::uint64_t budget_;
  bool exhaustive_;
  bool proved_empty_ = false;
  std::uint64_t spent_ = 0;
  std::optional<std::vector<Matrix>> pieces_;
};

// Multiplicative order of the cosquare M = ((A^T)^[q])^-1 A, or 0 when it
// exceeds `limit`.
std::uint64_t cosquare_order(const Matrix& a, unsigned e, std::uint64_t limit) {
  const Matrix m = mat_mul(inverse(frobenius_twist(a.transpose(), e)), a);
  const Matrix id = Matrix::identity(a.field(), a.rows());
  Matrix power = m;
  for (std::uint64_t j = 1; j <= limit; ++j) {
    if (power == id) return j;
    power = mat_mul(power, m);
  }
  return 0;
}

// A diagonal witness h^-1 for a full-rank A gives M = (h^[q^2])^-1 h, so
// sigma^s(h) = h M^-s for sigma = x -> x^(q^2). When sigma fixes the base
// field, M^N = I for the order N of sigma on the witness field.
bool admits_diagonal_witness(std::uint64_t order, unsigned base_k, unsigned e, unsigned d) {
  if (order == 0 || (2 * e) % base_k != 0) return true;
  const unsigned total = base_k * d;
  const unsigned sigma_order = total / std::gcd(total, 2 * e);
  return sigma_order % order == 0;
}

}  // namespace

std::optional<Witness> find_transform(const FrobeniusForm& f, const FrobeniusForm& target,
                                      const SearchOptions& options) {
  if (!(f.field() == target.field())) {
    throw Error(ErrorCode::kFieldMismatch, "forms over different fields");
  }
  if (f.n() != target.n()) throw Error(ErrorCode::kDimensionMismatch, "variable counts differ");
  if (f.e() != target.e()) throw Error(ErrorCode::kInvalidArgument, "Frobenius exponents differ");
  const Field& base = f.field();
  if (auto g = permutation_witness(f.matrix(), target.matrix())) {
    return Witness{*g, base, 1};
  }
  std::vector<unsigned> degrees;
  for (unsigned d = 1; base.k() * d <= std::max(options.max_total_degree, base.k()); ++d) {
    std::uint64_t order = 1;
    for (unsigned i = 0; i < base.k() * d && order <= kDefaultOrderBound; ++i) order *= base.p();
    if (order <= kDefaultOrderBound) degrees.push_back(d);
  }
  // The signature is invariant over every extension.
  if (orbit_signature(f) != orbit_signature(target)) return std::nullopt;
  std::vector<bool> empty(degrees.size(), false);
  {
    // Orbit subspaces are Galois stable, so the split computed over the base
    // field is the split at every level. Each full-rank piece is
    // diagonalized, so its cosquare must fit the level.
    std::mt19937_64 rng(options.seed);
    LevelSolver splitter(f.e(), rng, 0, false);
    for (const Matrix& piece : splitter.full_rank_pieces(f.matrix(), target.matrix())) {
      const std::uint64_t order = cosquare_order(piece, f.e(), 1u << 16);
      for (std::size_t li = 0; li < degrees.size(); ++li) {
        if (!admits_diagonal_witness(order, base.k(), f.e(), degrees[li])) empty[li] = true;
      }
    }
  }
  std::uint64_t budget = options.budget;
  for (unsigned round = 0; round < std::max(1u, options.rounds); ++round, budget *= 4) {
    for (std::size_t li = 0; li < degrees.size(); ++li) {
      if (empty[li]) continue;
      const Extension ext = extend(base, degrees[li]);
      const Matrix a = embed(f.matrix(), ext.embed);
      const Matrix t = embed(target.matrix(), ext.embed);
      std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (round * 64 + degrees[li] + 1)));
      std::uint64_t spent = 0;
      bool first = true;
      while (spent < budget) {
        // The first attempt at a level covers the space completely when it is
        // small enough, which can rule the level out for good.
        LevelSolver solver(f.e(), rng, budget - spent, first && round == 0);
        auto g = solver.solve(a, t);
        if (g) {
          if (act(FrobeniusForm(a, f.e()), *g).matrix() != t) {
            throw Error(ErrorCode::kBudgetExceeded, "internal: unverified witness");
          }
          return Witness{std::move(*g), ext.field, degrees[li]};
        }
        if (solver.proved_empty()) {
          empty[li] = true;
          break;
        }
        spent += std::max<std::uint64_t>(1, solver.spent());
        first = false;
      }
    }
  }
  return std::nullopt;
}

}  // namespace frobforms
