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

#include "frobforms/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "frobforms/classify.hpp"
#include "frobforms/error.hpp"
#include "frobforms/oracle.hpp"
#include "frobforms/parse.hpp"
#include "frobforms/quadform.hpp"
#include "json.hpp"

namespace frobforms::cli {
namespace {

using nlohmann::json;

// Raised for bad input text; mapped to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string field = "2";
  std::string modulus;
  unsigned e = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = SearchOptions{}.budget;
  std::size_t nvars = 0;
  bool text = false;
};

void add_common(CLI::App* cmd, Common& c, bool forms) {
  cmd->add_option("--field", c.field, "field p or p^k")->capture_default_str();
  cmd->add_option("--modulus", c.modulus, "explicit modulus in t, e.g. t^2+t+1");
  cmd->add_flag("--text", c.text, "plain text output");
  cmd->add_flag("--json{false}", c.text, "JSON output (default)");
  if (!forms) return;
  cmd->add_option("--e", c.e, "Frobenius exponent, q = p^e")
      ->capture_default_str()
      ->check(CLI::Range(1u, 64u));
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_option("--budget", c.budget, "search evaluations per level and round")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--nvars", c.nvars, "variable count (default: highest index used)");
}

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Field field_of(const Common& c) {
  return as_usage([&] {
    return c.modulus.empty() ? parse_field(c.field) : parse_field(c.field, c.modulus);
  });
}

FrobeniusForm frobenius_input(const std::string& text, const Field& f, const Common& c) {
  return as_usage([&] { return from_polynomial(parse_polynomial(text, f, c.nvars), c.e); });
}

std::uint64_t q_of(const Field& f, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= f.p();
  return q;
}

json field_json(const Field& f) {
  return {{"order", std::to_string(f.p()) + "^" + std::to_string(f.k())},
          {"modulus", f.modulus_string()}};
}

json matrix_json(const Matrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g.field().to_string(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const std::string& text, const Field& f, std::size_t n) {
  try {
    const json rows = json::parse(text);
    if (!rows.is_array() || rows.size() != n) throw UsageError("witness must have " + std::to_string(n) + " rows");
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) throw UsageError("witness must be square");
      for (std::size_t j = 0; j < n; ++j) {
        const auto& cell = rows[i][j];
        g.at(i, j) = f.parse(cell.is_string() ? cell.get<std::string>() : cell.dump());
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw UsageError(std::string("witness: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string("witness: ") + e.what());
  }
}

json classify_json(const FrobeniusForm& f, const Common& c) {
  SearchOptions opts;
  opts.seed = c.seed;
  opts.budget = c.budget;
  const auto res = classify(f, opts);
  const std::uint64_t q = q_of(f.field(), f.e());
  json out = {{"input", to_polynomial(f).to_string()},
              {"field", field_json(f.field())},
              {"q", q},
              {"n", f.n()},
              {"rank", res.rank},
              {"embedding_dimension", res.embedding_dimension}};
  if (res.zero_form()) {
    out["class"] = nullptr;
    out["zero_form"] = true;
  } else {
    out["class"] = res.label->key();
    out["name"] = res.label->display(q);
    out["zero_form"] = false;
    out["canonical"] =
        to_polynomial(pad(canonical_form(*res.label, res.witness_field, f.e()), f.n())).to_string();
  }
  out["extension_degree"] = res.extension_degree;
  out["witness_field"] = field_json(res.witness_field);
  out["witness"] = matrix_json(res.witness);
  return out;
}

json quadnorm_json(const QuadraticForm& q) {
  const auto res = normalize(q);
  return {{"input", to_polynomial(q).to_string()},
          {"field", field_json(q.field())},
          {"n", q.n()},
          {"kind", res.canon.kind_name()},
          {"pairs", res.canon.pairs},
          {"squares", res.canon.squares},
          {"embedding_dimension", res.canon.embedding_dimension()},
          {"canonical", to_polynomial(to_form(res.canon, res.field)).to_string()},
          {"extension_degree", res.extension_degree},
          {"witness_field", field_json(res.field)},
          {"witness", matrix_json(res.g)}};
}

json invariants_json(const FrobeniusForm& f, const std::optional<std::string>& witness,
                     const std::string& witness_field, const std::string& witness_modulus) {
  const auto sparse = is_sparse(f);
  json out = {{"input", to_polynomial(f).to_string()},
              {"field", field_json(f.field())},
              {"q", q_of(f.field(), f.e())},
              {"n", f.n()},
              {"rank", rank(f)},
              {"embedding_dimension", embedding_dimension(f)},
              {"hermitian", is_hermitian(f)},
              {"sparse_pattern", sparse ? json(sparse->to_string()) : json(nullptr)}};
  if (witness) {
    const Field big = as_usage([&] {
      if (witness_field.empty()) return f.field();
      return witness_modulus.empty() ? parse_field(witness_field)
                                     : parse_field(witness_field, witness_modulus);
    });
    if (big.p() != f.field().p() || big.k() % f.field().k() != 0) {
      throw UsageError("witness field does not contain the input field");
    }
    const Matrix g = matrix_from_json(*witness, big, f.n());
    if (!is_invertible(g)) throw UsageError("witness is singular");
    const FrobeniusForm image = act(embed(f, Embedding(f.field(), big)), g);
    out["transformed"] = to_polynomial(image).to_string();
    out["transformed_rank"] = rank(image);
    out["transformed_embedding_dimension"] = embedding_dimension(image);
  }
  return out;
}

json equiv_json(const FrobeniusForm& a, const FrobeniusForm& b, const Common& c) {
  SearchOptions opts;
  opts.seed = c.seed;
  opts.budget = c.budget;
  const auto res = equivalent(a, b, opts);
  json out = {{"inputs", {to_polynomial(a).to_string(), to_polynomial(b).to_string()}},
              {"field", field_json(a.field())},
              {"status", res.status == EquivalenceResult::Status::kEquivalent ? "equivalent"
                                                                              : "distinct_classes"},
              {"evidence", res.evidence}};
  if (res.witness) {
    out["extension_degree"] = res.witness->extension_degree;
    out["witness_field"] = field_json(res.witness->field);
    out["witness"] = matrix_json(res.witness->g);
  }
  return out;
}

json census_json(std::size_t n) {
  const auto c = class_census(n);
  json sparse = json::object();
  for (const auto& [r, count] : c.sparse_by_rank) sparse[std::to_string(r)] = count;
  return {{"classes", c.classes}, {"fibonacci_bound", c.fibonacci_bound}, {"sparse", sparse}};
}

json verify_json(const std::string& scope, std::uint64_t seed, bool& all_passed) {
  json checks = json::array();
  all_passed = true;
  for (const auto& r : verify_theorems(scope, seed)) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"evidence", r.evidence},
                      {"detail", r.detail},
                      {"data", r.data}});
  }
  return {{"scope", scope}, {"seed", seed}, {"passed", all_passed}, {"checks", checks}};
}

// Top-level keys one per line; nested values as compact JSON.
void print_text(const json& j, std::ostream& out) {
  if (j.contains("checks")) {
    for (const auto& c : j["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ["
          << c["evidence"].get<std::string>() << "] " << c["detail"].get<std::string>() << "\n";
    }
    out << (j["passed"].get<bool>() ? "all checks passed" : "some checks failed") << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius forms: classification, normalization and desk-scale verification",
               "frobforms"};
  app.require_subcommand(1);

  Common c;
  std::string poly, poly2;
  std::size_t n = 0;
  unsigned threads = 1;
  std::string scope = "all-desk";
  std::optional<std::string> witness;
  std::string witness_field, witness_modulus;

  auto* cls = app.add_subcommand("classify", "class label and verified witness of a Frobenius form");
  cls->add_option("form", poly, "polynomial, e.g. x1^2*x5 + x2^2*x4")->required();
  add_common(cls, c, true);

  auto* quad = app.add_subcommand("quadnorm", "normal form of a quadratic form");
  quad->add_option("form", poly, "quadratic polynomial")->required();
  add_common(quad, c, false);
  quad->add_option("--nvars", c.nvars, "variable count (default: highest index used)");

  auto* inv = app.add_subcommand("invariants", "rank, embedding dimension and related invariants");
  inv->add_option("form", poly, "polynomial")->required();
  inv->add_option("--witness", witness, "JSON matrix to apply, as printed by classify/equiv");
  inv->add_option("--witness-field", witness_field, "field of the witness, p^k");
  inv->add_option("--witness-modulus", witness_modulus, "modulus of the witness field");
  add_common(inv, c, true);

  auto* eq = app.add_subcommand("equiv", "decide equivalence of two Frobenius forms");
  eq->add_option("form1", poly, "first polynomial")->required();
  eq->add_option("form2", poly2, "second polynomial")->required();
  add_common(eq, c, true);

  auto* orb = app.add_subcommand("orbits", "full orbit partition over a small field");
  orb->add_option("--n", n, "matrix size")->required()->check(CLI::Range(1, 5));
  orb->add_option("--threads", threads, "workers for per-orbit statistics")
      ->capture_default_str()
      ->check(CLI::Range(1u, 256u));
  add_common(orb, c, false);
  orb->add_option("--e", c.e, "Frobenius exponent")->capture_default_str()->check(CLI::Range(1u, 64u));

  auto* cen = app.add_subcommand("census", "sparse pattern and class counts");
  cen->add_option("--n", n, "number of variables")->required()->check(CLI::Range(1, 5));
  cen->add_flag("--text", c.text, "plain text output");
  cen->add_flag("--json{false}", c.text, "JSON output (default)");

  auto* ver = app.add_subcommand("verify", "desk-scale classification checks");
  ver->add_option("--scope", scope, "check scope")
      ->capture_default_str()
      ->check(CLI::IsMember(verify_scopes()));
  ver->add_option("--seed", c.seed, "random seed")->capture_default_str();
  ver->add_flag("--text", c.text, "plain text output");
  ver->add_flag("--json{false}", c.text, "JSON output (default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    json result;
    int code = kExitOk;
    if (cls->parsed()) {
      const Field f = field_of(c);
      result = classify_json(frobenius_input(poly, f, c), c);
    } else if (quad->parsed()) {
      const Field f = field_of(c);
      const QuadraticForm q = as_usage(
          [&] { return quadratic_from_polynomial(parse_polynomial(poly, f, c.nvars)); });
      result = quadnorm_json(q);
    } else if (inv->parsed()) {
      const Field f = field_of(c);
      result = invariants_json(frobenius_input(poly, f, c), witness, witness_field, witness_modulus);
    } else if (eq->parsed()) {
      const Field f = field_of(c);
      std::size_t nv = c.nvars;
      if (nv == 0) {
        // Both forms share the larger inferred variable count.
        nv = std::max(as_usage([&] { return parse_polynomial(poly, f).nvars(); }),
                      as_usage([&] { return parse_polynomial(poly2, f).nvars(); }));
      }
      Common shared = c;
      shared.nvars = nv;
      result = equiv_json(frobenius_input(poly, f, shared), frobenius_input(poly2, f, shared), c);
    } else if (orb->parsed()) {
      const Field f = field_of(c);
      result = orbit_partition(n, f, c.e, false, threads).to_json();
    } else if (cen->parsed()) {
      result = census_json(n);
    } else if (ver->parsed()) {
      bool passed = false;
      result = verify_json(scope, c.seed, passed);
      code = passed ? kExitOk : kExitFailure;
    }
    if (c.text) {
      print_text(result, out);
    } else {
      out << result.dump() << "\n";
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace frobforms::cli
