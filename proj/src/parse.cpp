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

#include "frobforms/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace frobforms {
namespace {

struct RawTerm {
  Elem coef;
  std::vector<std::pair<std::size_t, std::uint64_t>> powers;  // (0-based var, exp)
};

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      RawTerm t = term();
      if (negative) t.coef = field_.neg(t.coef);
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        continue;
      }
      fail(std::string("unexpected '") + peek() + "'");
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kSyntaxError,
                "at position " + std::to_string(pos_) + ": " + why);
  }

  std::uint64_t integer() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  std::uint64_t optional_exponent() {
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return integer();
    }
    return 1;
  }

  bool starts_factor() {
    skip_ws();
    if (at_end()) return false;
    const char c = peek();
    return c == 'x' || c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RawTerm term() {
    RawTerm t{field_.one(), {}};
    if (!starts_factor()) fail("expected a term");
    for (;;) {
      factor(t);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
        continue;
      }
      if (starts_factor()) continue;
      break;
    }
    return t;
  }

  void factor(RawTerm& t) {
    skip_ws();
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected a variable index after 'x'");
      }
      const std::uint64_t idx = integer();
      if (idx == 0) throw Error(ErrorCode::kUnknownVariable, "x0 (variables start at x1)");
      t.powers.emplace_back(static_cast<std::size_t>(idx - 1), optional_exponent());
    } else if (c == 't') {
      ++pos_;
      t.coef = field_.mul(t.coef, field_.pow(field_.gen(), optional_exponent()));
    } else if (c == '(') {
      const std::size_t start = ++pos_;
      int depth = 1;
      while (!at_end() && depth) {
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        if (depth) ++pos_;
      }
      if (at_end()) fail("unbalanced parenthesis");
      const std::string_view inner = text_.substr(start, pos_ - start);
      ++pos_;
      Elem coef;
      try {
        coef = field_.parse(inner);
      } catch (const Error& e) {
        throw Error(ErrorCode::kCoefficientParseError,
                    "coefficient at position " + std::to_string(start) + ": " + e.what());
      }
      t.coef = field_.mul(t.coef, field_.pow(coef, optional_exponent()));
    } else {
      const std::uint64_t v = integer();
      t.coef = field_.mul(t.coef, field_.pow(field_.from_int(static_cast<std::int64_t>(v % field_.p())),
                                             optional_exponent()));
    }
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_uint(std::string_view s, const char* what) {
  if (s.empty()) throw Error(ErrorCode::kSyntaxError, std::string("empty ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kSyntaxError, std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > (std::uint64_t{1} << 31)) throw Error(ErrorCode::kOrderTooLarge, what);
  }
  return v;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t nvars) {
  const auto terms = PolyParser(text, field).run();
  std::size_t highest = 0;
  for (const auto& t : terms) {
    for (const auto& [v, e] : t.powers) highest = std::max(highest, v + 1);
  }
  if (nvars == 0) nvars = std::max<std::size_t>(highest, 1);
  if (highest > nvars) {
    throw Error(ErrorCode::kUnknownVariable,
                "x" + std::to_string(highest) + " with only " + std::to_string(nvars) + " variables");
  }
  Polynomial out(field, nvars);
  for (const auto& t : terms) {
    Exponents e(nvars, 0);
    for (const auto& [v, x] : t.powers) e[v] += x;
    out.add_term(e, t.coef);
  }
  return out;
}

Field parse_field(std::string_view spec, std::optional<std::string_view> modulus) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const auto caret = s.find('^');
  const auto p = static_cast<std::uint32_t>(parse_uint(s.substr(0, caret), "characteristic"));
  const unsigned k = caret == std::string::npos
                         ? 1u
                         : static_cast<unsigned>(parse_uint(s.substr(caret + 1), "degree"));
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (!modulus) return Field::create(p, k);
  // Coefficients of the modulus live in F_p; parse it as a polynomial in t
  // over the prime field by reading t as a variable.
  std::string as_var;
  for (char c : *modulus) as_var += c == 't' ? std::string("x1") : std::string(1, c);
  const Polynomial m = parse_polynomial(as_var, Field::create(p, 1), 1);
  std::vector<std::uint32_t> coeffs;
  for (const auto& [e, c] : m.terms()) {
    if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, 0);
    coeffs[e[0]] = c.v;
  }
  if (coeffs.size() != k + 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus degree does not match " + std::string(spec));
  }
  return Field::with_modulus(p, coeffs);
}

}  // namespace frobforms
