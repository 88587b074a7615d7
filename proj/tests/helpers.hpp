#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "riopoly/polyseq.hpp"
#include "riopoly/riordan.hpp"
#include "riopoly/series.hpp"

namespace riotest {

inline riopoly::Rational Q(std::string_view text) {
  return riopoly::parse_rational(text);
}

// Series literal: order inferred from the list length.
inline riopoly::Series S(std::string_view csv) {
  const auto commas = std::count(csv.begin(), csv.end(), ',');
  return riopoly::parse_series(csv, static_cast<std::size_t>(commas));
}

inline riopoly::Series S(std::string_view text, std::size_t order) {
  return riopoly::parse_series(text, order);
}

inline bool prefix_eq(const riopoly::Series& a, const riopoly::Series& b,
                      std::size_t through_order) {
  for (std::size_t k = 0; k <= through_order; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

// Deterministic small-rational generator; every property run is replayable
// from the seed.
class Rng {
public:
  explicit Rng(std::uint32_t seed) : g_(seed) {}

  int int_in(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g_);
  }

  riopoly::Rational rational() {
    return riopoly::make_rational(int_in(-6, 6), int_in(1, 4));
  }

  riopoly::Rational nonzero_rational() {
    while (true) {
      auto r = rational();
      if (r != 0) return r;
    }
  }

  riopoly::Series series(std::size_t order) {
    std::vector<riopoly::Rational> c(order + 1);
    for (auto& x : c) x = rational();
    return riopoly::Series(std::move(c));
  }

  // Constant term forced nonzero (a unit for cauchy_mul).
  riopoly::Series unit_series(std::size_t order) {
    auto s = series(order);
    std::vector<riopoly::Rational> c = s.coeffs();
    c[0] = nonzero_rational();
    return riopoly::Series(std::move(c));
  }

  // x-order exactly 1 (composable and compositionally invertible).
  riopoly::Series order1_series(std::size_t order) {
    auto s = series(order);
    std::vector<riopoly::Rational> c = s.coeffs();
    c[0] = 0;
    if (order >= 1) c[1] = nonzero_rational();
    return riopoly::Series(std::move(c));
  }

  // All coefficients nonzero (a Hadamard unit).
  riopoly::Series hadamard_unit(std::size_t order) {
    std::vector<riopoly::Rational> c(order + 1);
    for (auto& x : c) x = nonzero_rational();
    return riopoly::Series(std::move(c));
  }

  riopoly::RiordanSpec proper_spec(std::size_t order) {
    return riopoly::RiordanSpec(unit_series(order), unit_series(order));
  }

private:
  std::mt19937 g_;
};

// Polynomial literal from a comma-separated ascending coefficient list.
inline riopoly::Polynomial P(std::string_view csv) {
  return riopoly::Polynomial(S(csv).coeffs());
}

// Triangle literal from comma-separated row strings.
inline riopoly::Triangle tri(const std::vector<std::string>& rows) {
  std::vector<std::vector<riopoly::Rational>> data;
  for (const auto& row : rows) {
    std::vector<riopoly::Rational> r;
    std::size_t pos = 0;
    while (true) {
      const auto comma = row.find(',', pos);
      r.push_back(riopoly::parse_rational(
          comma == std::string::npos ? row.substr(pos) : row.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    data.push_back(std::move(r));
  }
  return riopoly::Triangle(std::move(data));
}

inline riopoly::RiordanSpec spec(std::string_view f, std::string_view g,
                                 std::size_t order) {
  return riopoly::RiordanSpec(riopoly::parse_series(f, order),
                              riopoly::parse_series(g, order));
}

// Brute-force lower-triangular matrix product; the oracle for the group law.
inline riopoly::Triangle matmul(const riopoly::Triangle& a, const riopoly::Triangle& b) {
  std::vector<std::vector<riopoly::Rational>> out(a.rows());
  for (std::size_t n = 0; n < a.rows(); ++n) {
    out[n].resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) out[n][j] += a.at(n, k) * b.at(k, j);
  }
  return riopoly::Triangle(std::move(out));
}

// Binomial triangle by the addition rule, independent of build_triangle.
inline riopoly::Triangle pascal_oracle(std::size_t R) {
  std::vector<std::vector<riopoly::Rational>> rows(R);
  for (std::size_t n = 0; n < R; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = rows[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k)
      rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return riopoly::Triangle(std::move(rows));
}

}  // namespace riotest
