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

#include "frobforms/polynomial.hpp"

namespace frobforms {

Polynomial Polynomial::variable(const Field& field, std::size_t nvars, std::size_t index) {
  Polynomial out(field, nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  out.add_term(e, field.one());
  return out;
}

Polynomial Polynomial::constant(const Field& field, std::size_t nvars, Elem c) {
  Polynomial out(field, nvars);
  out.add_term(Exponents(nvars, 0), c);
  return out;
}

void Polynomial::add_term(const Exponents& exps, Elem c) {
  if (exps.size() != nvars_) throw Error(ErrorCode::kDimensionMismatch, "exponent length");
  if (c.v == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second.v == 0) terms_.erase(it);
}

Elem Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? field_.zero() : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (!(field_ == other.field_) || nvars_ != other.nvars_) {
    throw Error(ErrorCode::kFieldMismatch, "polynomial sum");
  }
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (!(field_ == other.field_) || nvars_ != other.nvars_) {
    throw Error(ErrorCode::kFieldMismatch, "polynomial product");
  }
  Polynomial out(field_, nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, field_.mul(ca, cb));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial out(field_, nvars_);
  for (const auto& [e, a] : terms_) out.add_term(e, field_.mul(a, c));
  return out;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(field_, nvars_, field_.one());
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const Matrix& g) const {
  if (g.rows() != nvars_ || g.cols() != nvars_) {
    throw Error(ErrorCode::kDimensionMismatch, "substitution matrix");
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    Polynomial li(field_, nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) {
      Exponents e(nvars_, 0);
      e[j] = 1;
      li.add_term(e, g(i, j));
    }
    images.push_back(std::move(li));
  }
  Polynomial out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(field_, nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) term = term * images[i].pow(e[i]);
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::embedded(const Embedding& embedding) const {
  Polynomial out(embedding.to(), nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, embedding(c));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = field_.to_string(c);
    if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (mono.empty()) {
      out += coef;
    } else if (c == field_.one()) {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

}  // namespace frobforms
