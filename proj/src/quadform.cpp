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

#include <algorithm>
#include <optional>
#include <vector>

#include "frobforms/error.hpp"

namespace frobforms {

QuadraticForm::QuadraticForm(Matrix c) : c_(std::move(c)) {
  if (!c_.square()) throw Error(ErrorCode::kInvalidArgument, "coefficient array must be square");
  for (std::size_t i = 0; i < c_.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (c_(i, j).v != 0) {
        throw Error(ErrorCode::kInvalidArgument, "coefficients must be upper triangular");
      }
    }
  }
}

QuadraticForm QuadraticForm::zero(const Field& f, std::size_t n) {
  return QuadraticForm(Matrix(f, n, n));
}

Elem QuadraticForm::coeff(std::size_t i, std::size_t j) const {
  return i <= j ? c_(i, j) : c_(j, i);
}

bool QuadraticForm::is_zero() const { return c_.is_zero(); }

Polynomial to_polynomial(const QuadraticForm& q) {
  Polynomial h(q.field(), q.n());
  for (std::size_t i = 0; i < q.n(); ++i) {
    for (std::size_t j = i; j < q.n(); ++j) {
      if (q.coeff(i, j).v == 0) continue;
      Exponents exps(q.n(), 0);
      ++exps[i];
      ++exps[j];
      h.add_term(exps, q.coeff(i, j));
    }
  }
  return h;
}

QuadraticForm quadratic_from_polynomial(const Polynomial& h) {
  Matrix c(h.field(), h.nvars(), h.nvars());
  std::optional<std::uint64_t> degree;
  for (const auto& [exps, coeff] : h.terms()) {
    std::uint64_t d = 0;
    for (auto x : exps) d += x;
    if (degree && *degree != d) throw Error(ErrorCode::kNotHomogeneous, "mixed degrees");
    degree = d;
    if (d != 2) throw Error(ErrorCode::kWrongDegree, "quadratic forms have degree 2");
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < exps.size(); ++i) vars.insert(vars.end(), exps[i], i);
    c.at(vars[0], vars[1]) = coeff;
  }
  return QuadraticForm(std::move(c));
}

QuadraticForm act_quadratic(const QuadraticForm& q, const Matrix& g) {
  if (g.rows() != q.n() || !g.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "substitution has the wrong size");
  }
  if (!(g.field() == q.field())) throw Error(ErrorCode::kFieldMismatch, "forms over different fields");
  if (!is_invertible(g)) throw Error(ErrorCode::kSingular, "substitution is not invertible");
  const Field& f = q.field();
  const std::size_t n = q.n();
  Matrix out(f, n, n);
  // x_i x_j -> (sum_k g_ik x_k)(sum_l g_jl x_l)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Elem c = q.coeff(i, j);
      if (c.v == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Elem a = f.mul(c, g(i, k));
        if (a.v == 0) continue;
        for (std::size_t l = 0; l < n; ++l) {
          const Elem term = f.mul(a, g(j, l));
          if (term.v == 0) continue;
          const std::size_t lo = std::min(k, l), hi = std::max(k, l);
          out.at(lo, hi) = f.add(out(lo, hi), term);
        }
      }
    }
  }
  return QuadraticForm(std::move(out));
}

QuadraticForm embed(const QuadraticForm& q, const Embedding& embedding) {
  return QuadraticForm(embed(q.coeffs(), embedding));
}

std::string QuadCanonical::kind_name() const {
  switch (kind) {
    case Kind::kZero:
      return "Zero";
    case Kind::kHyperbolic:
      return "Hyperbolic";
    case Kind::kHyperbolicPlusSquare:
      return "HyperbolicPlusSquare";
    case Kind::kDiagonalOnes:
      return "DiagonalOnes";
  }
  return "";
}

QuadCanonical canonical_kind(const Field& f, std::size_t n, std::size_t m) {
  if (m > n) throw Error(ErrorCode::kInvalidArgument, "embedding dimension exceeds n");
  QuadCanonical c;
  c.n = n;
  if (m == 0) return c;
  if (f.p() == 2) {
    c.pairs = m / 2;
    c.squares = m % 2;
    c.kind = c.squares ? QuadCanonical::Kind::kHyperbolicPlusSquare
                       : QuadCanonical::Kind::kHyperbolic;
  } else {
    c.squares = m;
    c.kind = QuadCanonical::Kind::kDiagonalOnes;
  }
  return c;
}

QuadraticForm to_form(const QuadCanonical& c, const Field& f) {
  Matrix m(f, c.n, c.n);
  std::size_t v = 0;
  for (std::size_t i = 0; i < c.pairs; ++i, v += 2) m.at(v, v + 1) = f.one();
  for (std::size_t i = 0; i < c.squares; ++i, ++v) m.at(v, v) = f.one();
  return QuadraticForm(std::move(m));
}

QuadraticForm canonical_quadratic(const Field& f, std::size_t n, std::size_t m) {
  return to_form(canonical_kind(f, n, m), f);
}

namespace {

struct MissingRoot {};

// Runs over GF(p^(k 2^d)) for d = 0, 1, ..., restarting from the embedded
// input whenever a root is missing, so the witness always refers to the
// direct embedding of the base field.
class Normalizer {
 public:
  Normalizer(const QuadraticForm& q, std::uint64_t order_bound)
      : input_(q), field_(q.field()), q_(q), g_(Matrix::identity(q.field(), q.n())),
        bound_(order_bound) {}

  QuadNormalization run() {
    for (;; ++doublings_) {
      const Extension ext = extend(input_.field(), 1u << doublings_, bound_);
      field_ = ext.field;
      q_ = embed(input_, ext.embed);
      g_ = identity();
      pairs_.clear();
      squares_.clear();
      try {
        if (field_.p() == 2) {
          run_char2();
        } else {
          run_odd();
        }
        return finish();
      } catch (const MissingRoot&) {
      }
    }
  }

 private:
  void substitute(const Matrix& s) {
    q_ = act_quadratic(q_, s);
    g_ = mat_mul(g_, s);
  }

  Matrix identity() const { return Matrix::identity(field_, q_.n()); }

  void run_char2() {
    const std::size_t n = q_.n();
    std::vector<bool> active(n, true);
    while (true) {
      // Least cross term among the remaining variables.
      std::optional<std::pair<std::size_t, std::size_t>> cross;
      for (std::size_t i = 0; i < n && !cross; ++i) {
        for (std::size_t j = i + 1; j < n && !cross; ++j) {
          if (active[i] && active[j] && q_.coeff(i, j).v != 0) cross = {i, j};
        }
      }
      if (!cross) break;
      const auto [i, j] = *cross;
      Matrix s = identity();
      s.at(j, j) = field_.inv(q_.coeff(i, j));
      substitute(s);
      // x_j <- x_j + sum c_ik x_k clears x_i x_k; then x_i <- x_i + sum c_jk x_k
      // clears x_j x_k.
      s = identity();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && active[k]) s.at(j, k) = q_.coeff(i, k);
      }
      substitute(s);
      s = identity();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && active[k]) s.at(i, k) = q_.coeff(j, k);
      }
      substitute(s);
      split_binary(i, j);
      active[i] = active[j] = false;
      pairs_.push_back({i, j});
    }
    // What remains is a sum of squares, the square of a linear form.
    std::optional<std::size_t> lead;
    for (std::size_t k = 0; k < n && !lead; ++k) {
      if (active[k] && q_.coeff(k, k).v != 0) lead = k;
    }
    if (!lead) return;
    // Write L = sum s_k x_k with s_k^2 = c_kk and make L the new x_lead.
    Matrix s = identity();
    const Elem inv_lead = field_.inv(field_.sqrt(q_.coeff(*lead, *lead)));
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == *lead) continue;
      s.at(*lead, k) = field_.mul(inv_lead, field_.sqrt(q_.coeff(k, k)));
    }
    s.at(*lead, *lead) = inv_lead;
    substitute(s);
    squares_.push_back(*lead);
  }

  // a x_i^2 + x_i x_j + b x_j^2 -> x_i x_j.
  void split_binary(std::size_t i, std::size_t j) {
    const Elem a = q_.coeff(i, i);
    const Elem b = q_.coeff(j, j);
    if (a.v == 0 && b.v == 0) return;
    Matrix m = identity();  // new coordinates X = m x
    if (a.v == 0) {
      // x_j (x_i + b x_j)
      m.at(i, j) = b;
    } else {
      // a (x_i + t1 x_j)(x_i + t2 x_j), t = z / a with z^2 + z = ab.
      const Elem ab = field_.mul(a, b);
      if (field_.trace(ab).v != 0) throw MissingRoot{};
      const Elem z = field_.artin_schreier_root(ab);
      const Elem ae = a;
      const Elem t1 = field_.div(z, ae);
      const Elem t2 = field_.div(field_.add(z, field_.one()), ae);
      m.at(i, i) = ae;
      m.at(i, j) = field_.mul(ae, t1);
      m.at(j, i) = field_.one();
      m.at(j, j) = t2;
    }
    substitute(inverse(m));
  }

  void run_odd() {
    const std::size_t n = q_.n();
    const Elem half = field_.inv(field_.from_int(2));
    std::vector<bool> active(n, true);
    while (true) {
      std::optional<std::size_t> pivot;
      for (std::size_t k = 0; k < n && !pivot; ++k) {
        if (active[k] && q_.coeff(k, k).v != 0) pivot = k;
      }
      if (!pivot) {
        // Only cross terms left: x_i <- x_i + x_j turns c_ij into a square.
        std::optional<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t i = 0; i < n && !cross; ++i) {
          for (std::size_t j = i + 1; j < n && !cross; ++j) {
            if (active[i] && active[j] && q_.coeff(i, j).v != 0) cross = {i, j};
          }
        }
        if (!cross) break;
        Matrix s = identity();
        s.at(cross->second, cross->first) = field_.one();
        substitute(s);
        pivot = cross->first;
      }
      const std::size_t i = *pivot;
      // x_i <- x_i - sum (c_ik / 2 c_ii) x_k completes the square.
      Matrix s = identity();
      const Elem scale = field_.mul(half, field_.inv(q_.coeff(i, i)));
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && active[k]) s.at(i, k) = field_.neg(field_.mul(scale, q_.coeff(i, k)));
      }
      substitute(s);
      active[i] = false;
      squares_.push_back(i);
    }
    // Scale to coefficient 1; a non-residue forces the next extension.
    for (std::size_t k : squares_) {
      Elem root;
      try {
        root = field_.sqrt(q_.coeff(k, k));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNonResidue) throw;
        throw MissingRoot{};
      }
      Matrix s = identity();
      s.at(k, k) = field_.inv(root);
      substitute(s);
    }
  }

  // Moves pairs to the front, then squares, then unused variables.
  QuadNormalization finish() {
    const std::size_t n = q_.n();
    std::vector<std::size_t> order;
    for (auto [i, j] : pairs_) order.insert(order.end(), {i, j});
    order.insert(order.end(), squares_.begin(), squares_.end());
    for (std::size_t k = 0; k < n; ++k) {
      if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
    }
    Matrix p(field_, n, n);
    for (std::size_t pos = 0; pos < n; ++pos) p.at(order[pos], pos) = field_.one();
    substitute(p);
    QuadNormalization out{g_, canonical_kind(field_, n, 2 * pairs_.size() + squares_.size()),
                          field_, 1u << doublings_};
    if (q_ != to_form(out.canon, field_)) {
      throw Error(ErrorCode::kInvalidArgument, "internal: normalization not verified");
    }
    return out;
  }

  QuadraticForm input_;
  Field field_;
  QuadraticForm q_;
  Matrix g_;
  std::uint64_t bound_;
  unsigned doublings_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> squares_;
};

}  // namespace

QuadNormalization normalize(const QuadraticForm& q, std::uint64_t order_bound) {
  return Normalizer(q, order_bound).run();
}

std::size_t quad_embedding_dimension(const QuadraticForm& q) {
  const Field& f = q.field();
  if (f.p() != 2) {
    // Gram matrix with c_ii on the diagonal and c_ij / 2 off it.
    const Elem half = f.inv(f.from_int(2));
    Matrix b(f, q.n(), q.n());
    for (std::size_t i = 0; i < q.n(); ++i) {
      for (std::size_t j = 0; j < q.n(); ++j) {
        b.at(i, j) = i == j ? q.coeff(i, i) : f.mul(half, q.coeff(i, j));
      }
    }
    return rank(b);
  }
  return normalize(q).canon.embedding_dimension();
}

}  // namespace frobforms
