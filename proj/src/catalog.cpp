#include "riopoly/catalog.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "catalog_data.hpp"
#include "json.hpp"
#include "riopoly/errors.hpp"
#include "riopoly/riordan.hpp"

namespace riopoly {

namespace {

using nlohmann::json;

const json& registry() {
  static const json reg = json::parse(kFamiliesJson);
  return reg;
}

const json& find_block(const std::string& name) {
  for (const json& block : registry()) {
    if (block.at("family").get<std::string>() == name) return block;
  }
  throw UnknownFamily("unknown family '" + name + "'");
}

Series list_series(const json& arr, std::size_t order) {
  std::vector<Rational> c(std::max<std::size_t>(order + 1, arr.size()),
                          Rational(0));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    c[i] = parse_rational(arr[i].get<std::string>());
  }
  return Series(std::move(c));
}

Series x_over_logratio(std::size_t order) {
  return divide(times_x(named_series("one", order)),
                named_series("logratio", order + 1));
}

// Families whose f, g are not polynomials; fixture lists hold prefixes and
// any longer truncation is rebuilt here.
RiordanSpec generated_spec(const std::string& name, std::size_t order) {
  if (name == "hermite") {
    const Series f = scale(
        compose(named_series("exp", order), parse_series("0,0,-1", order)),
        Rational(1, 2));
    return RiordanSpec(f, parse_series("1/2", order));
  }
  const Series xol = x_over_logratio(order);
  if (name == "pidduck") {
    return RiordanSpec(cauchy_mul(xol, named_series("geometric", order)), xol);
  }
  return RiordanSpec(xol, xol);  // mittag_leffler
}

std::string at_rowcol(std::size_t n, std::size_t k) {
  return "(n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")";
}

Rational rat_pow(const Rational& base, std::size_t e) {
  Rational acc(1);
  for (std::size_t i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::vector<Polynomial> family_polys(const std::string& name, std::size_t R) {
  const FamilyEntry e = get_family(name, R);
  if (e.weight) return weighted_sequence(e.spec, *e.weight, R).polys;
  return sequence_from_spec(e.spec, R).polys;
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const json& block : registry()) {
    out.push_back(block.at("family").get<std::string>());
  }
  return out;
}

FamilyEntry get_family(const std::string& name, std::size_t R) {
  const json& block = find_block(name);
  const json& sp = block.at("spec");
  const std::size_t stored = std::max(sp.at("f").size(), sp.at("g").size());
  const std::size_t need = R > 0 ? R - 1 : 0;
  const std::size_t order = std::max(need, stored > 0 ? stored - 1 : 0);
  RiordanSpec spec = block.value("spec_truncated", false)
                         ? generated_spec(name, order)
                         : RiordanSpec(list_series(sp.at("f"), order),
                                       list_series(sp.at("g"), order));
  FamilyEntry e{name, std::move(spec), std::nullopt, {}, {},
                block.at("provenance").get<std::string>()};
  if (block.at("weight").is_string()) {
    e.weight = parse_weight(block.at("weight").get<std::string>(), order);
  }
  for (const json& row : block.at("rows")) {
    std::vector<Rational> r;
    for (const json& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
    e.golden_rows.push_back(std::move(r));
  }
  for (const json& poly : block.at("polys")) {
    std::vector<Rational> c;
    for (const json& cell : poly) c.push_back(parse_rational(cell.get<std::string>()));
    e.golden_polys.emplace_back(std::move(c));
  }
  return e;
}

VerifyReport diff_family(const FamilyEntry& e, std::size_t R) {
  const std::size_t nrows = std::min<std::size_t>(R, e.golden_rows.size());
  if (nrows > 0) {
    const Triangle t = build_triangle(e.spec, nrows);
    for (std::size_t n = 0; n < nrows; ++n) {
      if (e.golden_rows[n].size() != n + 1) {
        return {false, "golden row " + std::to_string(n) + " has " +
                           std::to_string(e.golden_rows[n].size()) +
                           " entries, expected " + std::to_string(n + 1)};
      }
      for (std::size_t k = 0; k <= n; ++k) {
        if (t.at(n, k) != e.golden_rows[n][k]) {
          return {false, "triangle mismatch at " + at_rowcol(n, k) +
                             ": expected " + to_string(e.golden_rows[n][k]) +
                             ", got " + to_string(t.at(n, k))};
        }
      }
    }
  }
  const std::size_t npolys = std::min<std::size_t>(R, e.golden_polys.size());
  if (npolys > 0) {
    const std::vector<Polynomial> built =
        e.weight ? weighted_sequence(e.spec, *e.weight, npolys).polys
                 : sequence_from_spec(e.spec, npolys).polys;
    for (std::size_t n = 0; n < npolys; ++n) {
      if (!(built[n] == e.golden_polys[n])) {
        return {false, "polynomial mismatch at n = " + std::to_string(n) +
                           ": expected " +
                           polynomial_to_text(e.golden_polys[n]) + ", got " +
                           polynomial_to_text(built[n])};
      }
    }
  }
  return {true, "ok"};
}

VerifyReport verify_family(const std::string& name, std::size_t R) {
  return diff_family(get_family(name, R), R);
}

namespace {

CheckResult poly_identity_check(
    const std::string& name, std::size_t first, std::size_t last,
    const std::function<Polynomial(std::size_t)>& lhs,
    const std::function<Polynomial(std::size_t)>& rhs) {
  for (std::size_t n = first; n <= last; ++n) {
    if (!(lhs(n) == rhs(n))) {
      return {name, false, "mismatch at n = " + std::to_string(n)};
    }
  }
  return {name, true, "ok"};
}

CheckResult check_pell_rescale() {
  const auto pell = family_polys("pell", 7);
  const auto fib = family_polys("fibonacci", 7);
  const Polynomial twox({Rational(0), Rational(2)});
  return poly_identity_check(
      "pell_matches_rescaled_fibonacci", 0, 6,
      [&](std::size_t n) { return pell[n]; },
      [&](std::size_t n) { return poly_compose(fib[n], twox); });
}

CheckResult check_morgan_voyce_difference() {
  const auto B = family_polys("morgan_voyce_B", 8);
  const auto b = family_polys("morgan_voyce_b", 8);
  return poly_identity_check(
      "morgan_voyce_difference", 1, 7,
      [&](std::size_t n) { return b[n]; },
      [&](std::size_t n) { return poly_sub(B[n], B[n - 1]); });
}

CheckResult check_morgan_voyce_shift() {
  const auto B = family_polys("morgan_voyce_B", 8);
  const auto b = family_polys("morgan_voyce_b", 8);
  return poly_identity_check(
      "morgan_voyce_shift", 1, 7,
      [&](std::size_t n) { return poly_times_x(B[n - 1]); },
      [&](std::size_t n) { return poly_sub(b[n], b[n - 1]); });
}

CheckResult check_chebyshev_t_difference() {
  const auto T = family_polys("chebyshev_t", 7);
  const auto U = family_polys("chebyshev_u", 7);
  return poly_identity_check(
      "chebyshev_t_halved_difference", 2, 6,
      [&](std::size_t n) { return poly_scale(T[n], Rational(2)); },
      [&](std::size_t n) { return poly_sub(U[n], U[n - 2]); });
}

CheckResult check_boubaker_chebyshev() {
  const auto bou = family_polys("boubaker", 7);
  const auto U = family_polys("chebyshev_u", 7);
  const Polynomial half({Rational(0), Rational(1, 2)});
  return poly_identity_check(
      "boubaker_from_chebyshev_u", 2, 6,
      [&](std::size_t n) { return bou[n]; },
      [&](std::size_t n) {
        return poly_add(poly_compose(U[n], half),
                        poly_scale(poly_compose(U[n - 2], half), Rational(3)));
      });
}

CheckResult check_fermat_rescale() {
  const std::string name = "fermat_chebyshev_rescale";
  const Triangle fer = build_triangle(get_family("fermat", 7).spec, 7);
  const Triangle u = build_triangle(get_family("chebyshev_u", 7).spec, 7);
  for (std::size_t n = 0; n < 7; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if ((n - k) % 2 == 1) {
        if (fer.at(n, k) != 0 || u.at(n, k) != 0) {
          return {name, false, "nonzero off-parity entry at " + at_rowcol(n, k)};
        }
        continue;
      }
      const Rational want = u.at(n, k) *
                            rat_pow(Rational(2), (n - k) / 2) *
                            rat_pow(Rational(3, 2), k);
      if (fer.at(n, k) != want) {
        return {name, false, "mismatch at " + at_rowcol(n, k)};
      }
    }
  }
  return {name, true, "ok"};
}

CheckResult check_pidduck_sums() {
  const auto P = family_polys("pidduck", 7);
  const auto M = family_polys("mittag_leffler", 7);
  Polynomial sum;
  for (std::size_t n = 0; n <= 6; ++n) {
    sum = poly_add(sum, M[n]);
    if (!(P[n] == sum)) {
      return {"pidduck_partial_sums", false,
              "mismatch at n = " + std::to_string(n)};
    }
  }
  return {"pidduck_partial_sums", true, "ok"};
}

CheckResult check_laguerre_derivative() {
  const auto L = family_polys("laguerre", 8);
  Polynomial sum;
  for (std::size_t n = 1; n <= 7; ++n) {
    sum = poly_add(sum, L[n - 1]);
    if (!(poly_derivative(L[n]) == poly_scale(sum, Rational(-1)))) {
      return {"laguerre_derivative_sum", false,
              "mismatch at n = " + std::to_string(n)};
    }
  }
  return {"laguerre_derivative_sum", true, "ok"};
}

CheckResult check_hermite_derivative() {
  const auto H = family_polys("hermite", 9);
  return poly_identity_check(
      "hermite_derivative_shift", 1, 8,
      [&](std::size_t n) { return poly_derivative(H[n]); },
      [&](std::size_t n) { return poly_scale(H[n - 1], Rational(2)); });
}

CheckResult check_hermite_parity() {
  const auto H = family_polys("hermite", 9);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if ((n - k) % 2 == 1 && H[n].coeff(k) != 0) {
        return {"hermite_parity", false,
                "nonzero off-parity coefficient at " + at_rowcol(n, k)};
      }
    }
  }
  return {"hermite_parity", true, "ok"};
}

CheckResult derivative_identity_for(const std::string& family) {
  const std::string name = "derivative_identity_" + family;
  const FamilyEntry e = get_family(family, 8);
  if (derivative_identity_check(e.spec, *e.weight, 8)) {
    return {name, true, "ok"};
  }
  return {name, false, "identity fails below row 8"};
}

CheckResult check_bivariate() {
  const std::string name = "bivariate_generating_function";
  for (const std::string& fam : family_names()) {
    const FamilyEntry e = get_family(fam, 13);
    for (const Rational& t0 :
         {Rational(0), Rational(1), Rational(-1, 2)}) {
      if (!bivariate_gf_check(e.spec, t0, 12)) {
        return {name, false, fam + " fails at t0 = " + to_string(t0)};
      }
    }
  }
  return {name, true, "ok"};
}

CheckResult check_weighted_recurrence() {
  const std::string name = "weighted_recurrence_agreement";
  for (const std::string& fam :
       {std::string("laguerre"), std::string("hermite"),
        std::string("pidduck"), std::string("mittag_leffler")}) {
    const FamilyEntry e = get_family(fam, 10);
    const AppellSeq direct = weighted_sequence(e.spec, *e.weight, 10);
    std::vector<Polynomial> step;
    for (std::size_t n = 0; n < 10; ++n) {
      step.push_back(appell_recurrence_step(step, e.spec.f(), e.spec.g(),
                                            *e.weight));
    }
    if (!(direct.polys == step)) {
      return {name, false, fam + " routes disagree"};
    }
  }
  return {name, true, "ok"};
}

const std::vector<std::pair<std::string, CheckResult (*)()>>& check_table() {
  static const std::vector<std::pair<std::string, CheckResult (*)()>> table = {
      {"pell_matches_rescaled_fibonacci", check_pell_rescale},
      {"morgan_voyce_difference", check_morgan_voyce_difference},
      {"morgan_voyce_shift", check_morgan_voyce_shift},
      {"chebyshev_t_halved_difference", check_chebyshev_t_difference},
      {"boubaker_from_chebyshev_u", check_boubaker_chebyshev},
      {"fermat_chebyshev_rescale", check_fermat_rescale},
      {"pidduck_partial_sums", check_pidduck_sums},
      {"laguerre_derivative_sum", check_laguerre_derivative},
      {"hermite_derivative_shift", check_hermite_derivative},
      {"hermite_parity", check_hermite_parity},
      {"derivative_identity_laguerre",
       [] { return derivative_identity_for("laguerre"); }},
      {"derivative_identity_hermite",
       [] { return derivative_identity_for("hermite"); }},
      {"derivative_identity_pidduck",
       [] { return derivative_identity_for("pidduck"); }},
      {"derivative_identity_mittag_leffler",
       [] { return derivative_identity_for("mittag_leffler"); }},
      {"bivariate_generating_function", check_bivariate},
      {"weighted_recurrence_agreement", check_weighted_recurrence},
  };
  return table;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : check_table()) out.push_back(name);
  return out;
}

CheckResult run_check(const std::string& name) {
  for (const auto& [check, fn] : check_table()) {
    if (check == name) return fn();
  }
  throw UnknownName("unknown check '" + name + "'");
}

std::string_view families_fixture_text() { return kFamiliesJson; }

}  // namespace riopoly
