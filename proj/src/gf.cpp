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

#include "frobforms/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace frobforms {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNonResidue: return "NonResidue";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kNotHomogeneous: return "NotHomogeneous";
    case ErrorCode::kWrongDegree: return "WrongDegree";
    case ErrorCode::kNotFrobenius: return "NotFrobenius";
    case ErrorCode::kDegeneratePattern: return "DegeneratePattern";
    case ErrorCode::kFullRank: return "FullRank";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kCoefficientParseError: return "CoefficientParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace fp_poly {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, n = p - 2;
  while (n) {
    if (n & 1) r = r * b % p;
    b = b * b % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of f modulo the nonzero polynomial g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t c = std::uint64_t{f.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>(
          (f[shift + i] + p - c * g[i] % p) % p);
    }
    trim(f);
  }
  return f;
}

// Digits of `key` in base p, most significant digit first, `len` digits.
Poly digits_msd_first(std::uint64_t key, std::uint32_t p, unsigned len) {
  Poly c(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    c[len - 1 - i] = static_cast<std::uint32_t>(key % p);
    key /= p;
  }
  return c;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> f_in) {
  Poly f(f_in.begin(), f_in.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t key = 0; key < count; ++key) {
      Poly g = digits_msd_first(key, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t key = 0; key < count; ++key) {
    Poly f = digits_msd_first(key, p, k);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::kNotIrreducible, "no irreducible polynomial found");
}

}  // namespace fp_poly

struct Field::Data {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint32_t order = 2;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> place;      // p^i
  std::vector<std::uint32_t> exp_table;  // length 2*(order-1)
  std::vector<std::uint32_t> log_table;  // log_table[0] unused

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
      const std::uint32_t s = (a % p + b % p) % p;
      r += s * place[i];
      a /= p;
      b /= p;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
      r += ((p - a % p) % p) * place[i];
      a /= p;
    }
    return r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[log_table[a] + log_table[b]];
  }
  // Schoolbook product modulo the modulus, used only while building tables.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint64_t> prod(2 * k, 0);
    std::vector<std::uint32_t> ca(k), cb(k);
    for (unsigned i = 0; i < k; ++i) {
      ca[i] = a % p;
      a /= p;
      cb[i] = b % p;
      b /= p;
    }
    for (unsigned i = 0; i < k; ++i) {
      if (!ca[i]) continue;
      for (unsigned j = 0; j < k; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
      }
    }
    for (std::size_t d = 2 * k; d-- > k;) {
      const std::uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k; ++i) {
        prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
      }
    }
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) r += static_cast<std::uint32_t>(prod[i]) * place[i];
    return r;
  }
  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t r = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  }
};

namespace {

std::shared_ptr<const Field::Data> build(std::uint32_t p,
                                         std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<Field::Data>();
  d->p = p;
  d->k = static_cast<unsigned>(modulus.size() - 1);
  d->modulus = std::move(modulus);
  d->place.resize(d->k + 1);
  d->place[0] = 1;
  for (unsigned i = 1; i <= d->k; ++i) d->place[i] = d->place[i - 1] * p;
  d->order = d->place[d->k];
  const std::uint32_t group = d->order - 1;

  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t m = group;
    for (std::uint32_t f = 2; f * f <= m; ++f) {
      if (m % f == 0) {
        prime_factors.push_back(f);
        while (m % f == 0) m /= f;
      }
    }
    if (m > 1) prime_factors.push_back(m);
  }
  // Least primitive element in element order.
  std::uint32_t generator = 0;
  for (std::uint32_t key = 1; key < d->order && generator == 0; ++key) {
    std::uint32_t v = 0, rest = key;
    for (unsigned i = 0; i < d->k; ++i) {
      v += (rest % p) * d->place[d->k - 1 - i];
      rest /= p;
    }
    if (v == 0) continue;
    bool primitive = true;
    for (std::uint32_t f : prime_factors) {
      if (d->slow_pow(v, group / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = v;
  }
  if (group == 1) generator = 1;

  d->exp_table.resize(2 * static_cast<std::size_t>(group));
  d->log_table.assign(d->order, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    d->exp_table[i] = x;
    d->exp_table[i + group] = x;
    d->log_table[x] = i;
    x = d->slow_mul(x, generator);
  }
  return d;
}

std::shared_ptr<const Field::Data> cached(std::uint32_t p,
                                          std::vector<std::uint32_t> modulus) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
                  std::shared_ptr<const Field::Data>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto d = build(p, std::move(modulus));
  cache.emplace(std::move(key), d);
  return d;
}

void check_order(std::uint32_t p, unsigned k, std::uint64_t bound) {
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > bound || order > kDefaultOrderBound * 4096) {
      std::ostringstream os;
      os << p << "^" << k << " exceeds the field order bound " << bound;
      throw Error(ErrorCode::kOrderTooLarge, os.str());
    }
  }
}

}  // namespace

Field Field::create(std::uint32_t p, unsigned k, std::uint64_t order_bound) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  check_order(p, k, order_bound);
  return Field(cached(p, fp_poly::least_irreducible(p, k)));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                          std::uint64_t order_bound) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorCode::kNotIrreducible, "modulus must be monic of degree >= 1");
  }
  check_order(p, static_cast<unsigned>(modulus.size() - 1), order_bound);
  if (!fp_poly::is_irreducible(p, modulus)) {
    throw Error(ErrorCode::kNotIrreducible, "modulus is reducible over F_p");
  }
  return Field(cached(p, std::move(modulus)));
}

std::uint32_t Field::p() const { return d_->p; }
unsigned Field::k() const { return d_->k; }
std::uint32_t Field::order() const { return d_->order; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }

Elem Field::from_int(std::int64_t value) const {
  const std::int64_t p = d_->p;
  return {static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Elem Field::gen() const {
  if (d_->k == 1) return from_int(-static_cast<std::int64_t>(d_->modulus[0]));
  return {d_->p};
}

Elem Field::primitive() const {
  return d_->order == 2 ? one() : Elem{d_->exp_table[1]};
}

Elem Field::add(Elem a, Elem b) const { return {d_->add(a.v, b.v)}; }
Elem Field::sub(Elem a, Elem b) const { return {d_->add(a.v, d_->neg(b.v))}; }
Elem Field::neg(Elem a) const { return {d_->neg(a.v)}; }
Elem Field::mul(Elem a, Elem b) const { return {d_->mul(a.v, b.v)}; }

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint32_t group = d_->order - 1;
  return {d_->exp_table[(group - d_->log_table[a.v]) % group]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t group = d_->order - 1;
  return {d_->exp_table[(d_->log_table[a.v] * (n % group)) % group]};
}

std::optional<Elem> Field::root(Elem a, std::uint64_t n) const {
  if (a.v == 0) return zero();
  // a = gamma^k; solve n x = k modulo the group order.
  const std::int64_t group = d_->order - 1;
  const std::int64_t k = d_->log_table[a.v];
  const std::int64_t nn = static_cast<std::int64_t>(n % static_cast<std::uint64_t>(group));
  const std::int64_t g = std::gcd(nn, group);
  if (k % g) return std::nullopt;
  const std::int64_t m = group / g;
  std::int64_t r0 = m, r1 = (nn / g) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  const std::int64_t inv = ((s0 % m) + m) % m;
  const std::int64_t x = static_cast<std::int64_t>((static_cast<__int128>(k / g) * inv) % m);
  return Elem{d_->exp_table[static_cast<std::size_t>(x)]};
}

Elem Field::frobenius(Elem a, unsigned e) const {
  const unsigned steps = e % d_->k;
  for (unsigned i = 0; i < steps; ++i) a = pow(a, d_->p);
  return a;
}

Elem Field::inv_frobenius(Elem a, unsigned e) const {
  return frobenius(a, (d_->k - e % d_->k) % d_->k);
}

Elem Field::sqrt(Elem a) const {
  if (a.v == 0) return a;
  if (d_->p == 2) return frobenius(a, d_->k - 1);
  const std::uint64_t group = d_->order - 1;
  if (pow(a, group / 2) != one()) {
    throw Error(ErrorCode::kNonResidue, to_string(a) + " is not a square in " + name());
  }
  if (d_->order <= (1u << 16)) {
    for (std::uint32_t key = 0; key < d_->order; ++key) {
      const Elem x = from_order_key(key);
      if (mul(x, x) == a) return x;
    }
  }
  // Tonelli-Shanks on the cyclic group of order 2^s * t.
  std::uint64_t t = group;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Elem z = one();
  for (std::uint32_t key = 1; key < d_->order; ++key) {
    z = from_order_key(key);
    if (z.v != 0 && pow(z, group / 2) != one()) break;
  }
  Elem c = pow(z, t);
  Elem x = pow(a, (t + 1) / 2);
  Elem b = pow(a, t);
  unsigned m = s;
  while (b != one()) {
    unsigned i = 0;
    Elem bb = b;
    while (bb != one()) {
      bb = mul(bb, bb);
      ++i;
    }
    Elem w = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) w = mul(w, w);
    x = mul(x, w);
    c = mul(w, w);
    b = mul(b, c);
    m = i;
  }
  const Elem other = neg(x);
  return less(other, x) ? other : x;
}

Elem Field::trace(Elem a) const {
  Elem acc = zero();
  Elem term = a;
  for (unsigned i = 0; i < d_->k; ++i) {
    acc = add(acc, term);
    term = pow(term, d_->p);
  }
  return acc;
}

Elem Field::artin_schreier_root(Elem a) const {
  if (d_->p != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "Artin-Schreier roots are defined here for characteristic 2 only");
  }
  if (trace(a) != zero()) {
    throw Error(ErrorCode::kNoRoot, "t^2+t=" + to_string(a) + " has no root in " + name());
  }
  for (std::uint32_t key = 0; key < d_->order; ++key) {
    const Elem x = from_order_key(key);
    if (add(mul(x, x), x) == a) return x;
  }
  throw Error(ErrorCode::kNoRoot, "trace zero but no root found");
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(d_->k);
  std::uint32_t v = a.v;
  for (unsigned i = 0; i < d_->k; ++i) {
    c[i] = v % d_->p;
    v /= d_->p;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  std::uint32_t v = 0;
  for (unsigned i = 0; i < d_->k && i < c.size(); ++i) {
    v += (c[i] % d_->p) * d_->place[i];
  }
  return {v};
}

std::uint32_t Field::order_key(Elem a) const {
  std::uint32_t key = 0, v = a.v;
  for (unsigned i = 0; i < d_->k; ++i) {
    key += (v % d_->p) * d_->place[d_->k - 1 - i];
    v /= d_->p;
  }
  return key;
}

Elem Field::from_order_key(std::uint32_t key) const {
  std::uint32_t v = 0;
  for (unsigned i = 0; i < d_->k; ++i) {
    v += (key % d_->p) * d_->place[d_->k - 1 - i];
    key /= d_->p;
  }
  return {v};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(d_->order);
  for (std::uint32_t key = 0; key < d_->order; ++key) out.push_back(from_order_key(key));
  return out;
}

namespace {

std::string poly_string(const std::vector<std::uint32_t>& c, char var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string Field::to_string(Elem a) const { return poly_string(coeffs(a), 't'); }

std::string Field::modulus_string() const { return poly_string(d_->modulus, 't'); }

Elem Field::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(ErrorCode::kCoefficientParseError, "empty field element");
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kCoefficientParseError, "'" + std::string(text) + "': " + why);
  };
  Elem acc = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::int64_t coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = (coef * 10 + (s[i] - '0')) % d_->p;
        ++i;
      }
      have_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::uint64_t power = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("bad exponent");
        power = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          power = power * 10 + static_cast<std::uint64_t>(s[i] - '0');
          if (power > (1u << 30)) fail("exponent too large");
          ++i;
        }
      }
    } else if (!have_coef) {
      fail("expected a coefficient or 't'");
    }
    Elem term = mul(from_int(coef), pow(gen(), power));
    if (power == 0) term = from_int(coef);
    acc = negative ? sub(acc, term) : add(acc, term);
  }
  return acc;
}

bool Field::operator==(const Field& other) const {
  return d_ == other.d_ || (d_->p == other.d_->p && d_->modulus == other.d_->modulus);
}

std::string Field::name() const {
  return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + ")";
}

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  if (from.p() != to.p() || to.k() % from.k() != 0) {
    throw Error(ErrorCode::kFieldMismatch,
                from.name() + " does not embed in " + to.name());
  }
  if (from == to) {
    Elem x = to.one();
    for (unsigned i = 0; i < from.k(); ++i) {
      basis_image_.push_back(x);
      x = to.mul(x, to.gen());
    }
    return;
  }
  const auto& mod = from.modulus();
  Elem root{};
  bool found = false;
  for (Elem x : to.elements()) {
    Elem acc = to.zero();
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = to.add(to.mul(acc, x), to.from_int(mod[i]));
    }
    if (acc == to.zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kFieldMismatch, "modulus has no root in " + to.name());
  }
  Elem x = to.one();
  for (unsigned i = 0; i < from.k(); ++i) {
    basis_image_.push_back(x);
    x = to.mul(x, root);
  }
}

Elem Embedding::operator()(Elem a) const {
  const auto c = from_.coeffs(a);
  Elem acc = to_.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) acc = to_.add(acc, to_.mul(to_.from_int(c[i]), basis_image_[i]));
  }
  return acc;
}

Extension extend(const Field& f, unsigned m, std::uint64_t order_bound) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (m == 1) return {f, Embedding(f, f)};
  Field big = Field::create(f.p(), f.k() * m, order_bound);
  return {big, Embedding(f, big)};
}

}  // namespace frobforms
