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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <thread>
#include <unordered_set>

#include "frobforms/error.hpp"

namespace frobforms {
namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// |f|^(n^2), saturating at the maximum of uint64.
std::uint64_t state_count(const Field& f, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / f.order()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    s *= f.order();
  }
  return s;
}

std::uint64_t checked_states(const Field& f, std::size_t n, std::uint64_t cap) {
  const std::uint64_t s = state_count(f, n);
  if (s > cap) {
    throw Error(ErrorCode::kBudgetExceeded,
                "state space " + f.name() + "^" + std::to_string(n * n) + " exceeds cap " +
                    std::to_string(cap));
  }
  return s;
}

bool use_packed(const Field& f, std::size_t n) { return f.p() == 2 && f.k() == 1 && n <= 5; }

// Live coordinates of a code: i with row i or column i nonzero.
std::size_t support_packed(std::uint64_t code, std::size_t n) {
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t row = (code >> (i * n)) & row_mask;
    if (row != 0) rows |= std::uint64_t{1} << i;
    cols |= row;
  }
  return static_cast<std::size_t>(std::popcount(rows | cols));
}

std::size_t support_generic(std::uint64_t code, std::uint32_t order, std::size_t n) {
  std::uint64_t live = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (code % order != 0) live |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      code /= order;
    }
  }
  return static_cast<std::size_t>(std::popcount(live));
}

std::size_t support(std::uint64_t code, const Field& f, std::size_t n) {
  return f.order() == 2 ? support_packed(code, n) : support_generic(code, f.order(), n);
}

// Images of a code under the generating set.
class Stepper {
 public:
  Stepper(const Field& f, std::size_t n, unsigned e, bool packed)
      : f_(f), n_(n), e_(e), packed_(packed) {
    if (!packed_) gens_ = gl_generators(n, f);
  }

  template <typename Visit>
  void neighbours(std::uint64_t code, Visit&& visit) const {
    if (packed_) {
      const auto c = static_cast<packed_f2::Code>(code);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (i != j) visit(static_cast<std::uint64_t>(packed_f2::transvect(c, n_, i, j)));
        }
      }
      return;
    }
    const Matrix a = decode(code, f_, n_);
    for (const auto& g : gens_) visit(encode(twisted_congruence(a, g, e_)));
  }

 private:
  Field f_;
  std::size_t n_;
  unsigned e_;
  bool packed_;
  std::vector<Matrix> gens_;
};

// BFS from `start`. `claim(code)` marks a state and returns true if it was
// new.
template <typename Claim>
std::vector<std::uint64_t> bfs(const Stepper& step, std::uint64_t start, std::uint64_t budget,
                               Claim&& claim) {
  std::vector<std::uint64_t> members;
  claim(start);
  members.push_back(start);
  for (std::size_t head = 0; head < members.size(); ++head) {
    step.neighbours(members[head], [&](std::uint64_t next) {
      if (claim(next)) members.push_back(next);
    });
    if (members.size() > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "orbit exceeds budget of " + std::to_string(budget) + " states");
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint64_t> single_orbit(const FrobeniusForm& f, std::uint64_t budget,
                                        std::uint64_t cap, bool packed) {
  const Field& field = f.field();
  const std::size_t n = f.n();
  const std::uint64_t states = state_count(field, n);
  const Stepper step(field, n, f.e(), packed);
  const std::uint64_t start = encode(f.matrix());
  if (states <= cap) {
    std::vector<bool> seen(states, false);
    return bfs(step, start, budget, [&](std::uint64_t c) {
      if (seen[c]) return false;
      seen[c] = true;
      return true;
    });
  }
  // Targeted single orbit above the cap: the codes must still fit a word.
  if (states == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kBudgetExceeded, "matrix codes do not fit 64 bits");
  }
  std::unordered_set<std::uint64_t> seen;
  return bfs(step, start, budget, [&](std::uint64_t c) { return seen.insert(c).second; });
}

}  // namespace

std::uint64_t state_cap() {
  const char* env = std::getenv("FROBFORMS_CAP");
  if (env == nullptr) return kDefaultStateCap;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return kDefaultStateCap;
  return value;
}

std::uint64_t encode(const Matrix& a) {
  const std::size_t n = a.rows();
  const std::uint64_t order = a.field().order();
  if (state_count(a.field(), n) == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kBudgetExceeded, "matrix codes do not fit 64 bits");
  }
  std::uint64_t code = 0;
  for (std::size_t idx = n * n; idx-- > 0;) code = code * order + a(idx / n, idx % n).v;
  return code;
}

Matrix decode(std::uint64_t code, const Field& f, std::size_t n) {
  Matrix a(f, n, n);
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    a.at(idx / n, idx % n) = Elem{static_cast<std::uint32_t>(code % f.order())};
    code /= f.order();
  }
  return a;
}

std::string code_hex(std::uint64_t code, const Field& f, std::size_t n) {
  std::uint64_t top = state_count(f, n) - 1;
  std::size_t width = 1;
  while (top >>= 4) ++width;
  std::string out(width, '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t i = width; i-- > 0; code >>= 4) out[i] = kDigits[code & 15u];
  return out;
}

void for_each_invertible(const Field& f, std::size_t n,
                         const std::function<bool(const Matrix&)>& visit, std::uint64_t cap) {
  const std::uint64_t states = checked_states(f, n, cap);
  for (std::uint64_t code = 0; code < states; ++code) {
    const Matrix g = decode(code, f, n);
    if (is_invertible(g) && !visit(g)) return;
  }
}

SweepResult sweep_for_witness(const FrobeniusForm& a, const FrobeniusForm& b, std::uint64_t cap) {
  if (a.n() != b.n() || a.e() != b.e()) {
    throw Error(ErrorCode::kDimensionMismatch, "sweep needs forms of equal size and exponent");
  }
  if (!(a.field() == b.field())) throw Error(ErrorCode::kFieldMismatch, "sweep fields differ");
  SweepResult result;
  for_each_invertible(
      a.field(), a.n(),
      [&](const Matrix& g) {
        ++result.group_order;
        if (twisted_congruence(a.matrix(), g, a.e()) == b.matrix()) {
          result.witness = g;
          return false;
        }
        return true;
      },
      cap);
  return result;
}

std::vector<std::uint64_t> orbit_codes(const FrobeniusForm& f, std::uint64_t budget,
                                       std::uint64_t cap) {
  return single_orbit(f, budget, cap, use_packed(f.field(), f.n()));
}

std::vector<std::uint64_t> orbit_codes_generic(const FrobeniusForm& f, std::uint64_t budget,
                                               std::uint64_t cap) {
  return single_orbit(f, budget, cap, false);
}

std::vector<Matrix> orbit(const FrobeniusForm& f, std::uint64_t budget, std::uint64_t cap) {
  std::vector<Matrix> out;
  for (const auto code : orbit_codes(f, budget, cap)) out.push_back(decode(code, f.field(), f.n()));
  return out;
}

std::vector<SparsePattern> all_sparse_patterns(std::size_t n) {
  std::vector<SparsePattern> out;
  // Subsets of {1..n} in binary order, listed as decreasing column indices.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SparsePattern p{n, {}};
    for (std::size_t j = n; j >= 1; --j) {
      if ((mask >> (j - 1)) & 1u) p.js.push_back(j);
    }
    out.push_back(std::move(p));
  }
  return out;
}

OrbitReport orbit_partition(std::size_t n, const Field& f, unsigned e, bool keep_index,
                            unsigned threads, std::uint64_t cap) {
  OrbitReport report;
  report.n = n;
  report.field = f;
  report.e = e;
  report.states = checked_states(f, n, cap);
  if (report.states >= kUnassigned) {
    throw Error(ErrorCode::kBudgetExceeded, "too many states for an orbit index");
  }
  const bool packed = use_packed(f, n);
  const Stepper step(f, n, e, packed);

  auto& orbit_of = report.orbit_of;
  orbit_of.assign(report.states, kUnassigned);
  for (std::uint64_t code = 0; code < report.states; ++code) {
    if (orbit_of[code] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(report.orbits.size());
    const auto members = bfs(step, code, report.states, [&](std::uint64_t c) {
      if (orbit_of[c] != kUnassigned) return false;
      orbit_of[c] = id;
      return true;
    });
    OrbitInfo info;
    info.representative = code;
    info.size = members.size();
    const FrobeniusForm rep(decode(code, f, n), e);
    info.rank = rank(rep);
    info.embedding_dimension = embedding_dimension(rep);
    report.orbits.push_back(std::move(info));
  }

  // Least support per orbit, split by state range.
  const unsigned workers = std::max(1u, threads);
  std::vector<std::vector<std::size_t>> least(
      workers, std::vector<std::size_t>(report.orbits.size(), n));
  {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (report.states + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(report.states, lo + chunk);
        auto& mine = least[w];
        for (std::uint64_t c = lo; c < hi; ++c) {
          const std::size_t s = support(c, f, n);
          auto& slot = mine[orbit_of[c]];
          if (s < slot) slot = s;
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t o = 0; o < report.orbits.size(); ++o) {
    std::size_t best = n;
    for (const auto& mine : least) best = std::min(best, mine[o]);
    report.orbits[o].min_support = best;
  }

  for (const auto& p : all_sparse_patterns(n)) {
    auto& info = report.orbits[orbit_of[encode(p.matrix(f))]];
    info.sparse_patterns_hit.push_back(p.to_string());
    // A padded covering pattern in m variables lives on exactly x_1..x_m.
    const std::size_t m = p.distinct_variables();
    const std::size_t top = std::max(p.rank(), p.js.empty() ? std::size_t{0} : p.js.front());
    if (m == top && m == info.embedding_dimension) info.has_sparse_reduction = true;
  }
  if (!keep_index) {
    orbit_of.clear();
    orbit_of.shrink_to_fit();
  }
  return report;
}

nlohmann::json OrbitReport::to_json() const {
  nlohmann::json orbit_list = nlohmann::json::array();
  for (const auto& o : orbits) {
    orbit_list.push_back({
        {"representative", code_hex(o.representative, field, n)},
        {"size", o.size},
        {"rank", o.rank},
        {"embedding_dimension", o.embedding_dimension},
        {"min_support", o.min_support},
        {"contains_sparse", o.contains_sparse()},
        {"sparse_patterns_hit", o.sparse_patterns_hit},
        {"has_sparse_reduction", o.has_sparse_reduction},
    });
  }
  return {
      {"n", n},
      {"field", field.name()},
      {"modulus", field.modulus_string()},
      {"e", e},
      {"states", states},
      {"orbit_count", orbit_count()},
      {"orbits", std::move(orbit_list)},
  };
}

std::size_t bruteforce_embdim(const FrobeniusForm& f, std::uint64_t cap) {
  std::size_t best = f.n();
  for (const auto code : orbit_codes(f, cap, cap)) {
    best = std::min(best, support(code, f.field(), f.n()));
    if (best == 0) break;
  }
  return best;
}

}  // namespace frobforms
