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

// Finite fields GF(p^k) = F_p[t]/(modulus) in the polynomial basis.
//
// Elements are small value handles (`Elem`) whose meaning depends on the
// `Field` they were produced by; a `Field` is a cheap shared handle to
// immutable tables, so both can be copied freely and used from many threads.
//
// Packed element value: sum of c_i * p^i where c_i is the coefficient of t^i.
// Element *order* (used for every "least" choice) is different: coefficient
// vectors compared with c_0 most significant. `order_key` converts.

#ifndef FROBFORMS_GF_HPP_
#define FROBFORMS_GF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobforms/error.hpp"

namespace frobforms {

inline constexpr std::uint64_t kDefaultOrderBound = std::uint64_t{1} << 20;

struct Elem {
  std::uint32_t v = 0;
  bool operator==(const Elem&) const = default;
};

class Field {
 public:
  // GF(p^k) with the least monic irreducible modulus of degree k. Results are
  // cached, so repeated calls return handles to the same tables.
  static Field create(std::uint32_t p, unsigned k,
                      std::uint64_t order_bound = kDefaultOrderBound);
  // Explicit modulus, coefficients low degree first; must be monic and
  // irreducible over F_p.
  static Field with_modulus(std::uint32_t p,
                            std::vector<std::uint32_t> modulus,
                            std::uint64_t order_bound = kDefaultOrderBound);

  std::uint32_t p() const;
  unsigned k() const;
  std::uint32_t order() const;
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const;
  // Class of t.
  Elem gen() const;
  // The least generator of the multiplicative group in element order.
  Elem primitive() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const;

  // a^(p^e).
  Elem frobenius(Elem a, unsigned e) const;
  // The unique b with b^(p^e) = a.
  Elem inv_frobenius(Elem a, unsigned e) const;
  // Characteristic 2: the unique square root. Odd characteristic: the least
  // square root in element order; throws kNonResidue if there is none.
  Elem sqrt(Elem a) const;
  // Characteristic 2 only: least t with t^2 + t = a; throws kNoRoot when the
  // absolute trace of a is 1.
  Elem artin_schreier_root(Elem a) const;
  // Some b with b^n = a (n >= 1), computed from discrete logarithms; nullopt
  // when a is not an n-th power.
  std::optional<Elem> root(Elem a, std::uint64_t n) const;
  // Absolute trace, an element of the prime subfield.
  Elem trace(Elem a) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  std::uint32_t order_key(Elem a) const;
  Elem from_order_key(std::uint32_t key) const;
  // Element order: true iff a precedes b.
  bool less(Elem a, Elem b) const { return order_key(a) < order_key(b); }

  // Elements in element order.
  std::vector<Elem> elements() const;

  std::string to_string(Elem a) const;
  // Accepts sums of terms `c`, `c*t^i`, `ct^i`, `t`, `t^i` with integer c.
  Elem parse(std::string_view text) const;

  // Fields are equal when they share p and modulus.
  bool operator==(const Field& other) const;
  // Human-readable label, e.g. "GF(2^2)".
  std::string name() const;
  std::string modulus_string() const;

  struct Data;

 private:
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Injective homomorphism GF(p^a) -> GF(p^b), a | b, sending t to the least
// root of the source modulus in the target.
class Embedding {
 public:
  Embedding(const Field& from, const Field& to);

  const Field& from() const { return from_; }
  const Field& to() const { return to_; }
  Elem operator()(Elem a) const;

 private:
  Field from_;
  Field to_;
  std::vector<Elem> basis_image_;  // images of t^i
};

struct Extension {
  Field field;
  Embedding embed;
};

// GF(p^(k*m)) with its embedding of `f`. `m == 1` returns `f` itself.
Extension extend(const Field& f, unsigned m,
                 std::uint64_t order_bound = kDefaultOrderBound);

bool is_prime(std::uint64_t n);

// Polynomials over F_p as coefficient vectors, low degree first. Exposed for
// modulus selection and tests.
namespace fp_poly {
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> f);
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned k);
}  // namespace fp_poly

}  // namespace frobforms

#endif  // FROBFORMS_GF_HPP_
