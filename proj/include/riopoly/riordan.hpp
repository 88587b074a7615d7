#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riopoly/series.hpp"

namespace riopoly {

// Riordan array T(f|g): the lower-triangular matrix whose k-th column has
// generating function (f/g)(x/g)^k. g_0 != 0 is enforced at construction;
// "proper" (a group element) additionally means f_0 != 0. f and g keep their
// own truncation orders; every operation states how much it needs.
class RiordanSpec {
public:
  RiordanSpec(Series f, Series g);

  const Series& f() const noexcept { return f_; }
  const Series& g() const noexcept { return g_; }
  bool proper() const { return f_[0] != 0; }

  friend bool operator==(const RiordanSpec&, const RiordanSpec&) = default;

private:
  Series f_;
  Series g_;
};

// Dense lower-triangular matrix: row n stores exactly n+1 entries,
// zeros included, so golden comparisons are positional.
class Triangle {
public:
  explicit Triangle(std::vector<std::vector<Rational>> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  const Rational& at(std::size_t n, std::size_t k) const { return rows_[n][k]; }
  const std::vector<Rational>& row(std::size_t n) const { return rows_[n]; }
  const std::vector<std::vector<Rational>>& data() const noexcept { return rows_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

private:
  std::vector<std::vector<Rational>> rows_;
};

// First R rows by the entry recurrence
//   d_{n,j} = (d_{n-1,j-1} - sum_{k>=1} g_k d_{n-k,j}) / g_0,
// with f_n feeding column 0. Needs f, g truncated to at least R-1
// (InsufficientTruncation otherwise).
Triangle build_triangle(const RiordanSpec& s, std::size_t R);

// (f/g)(x/g)^k to order N; equals column k of the triangle with k leading
// zeros. Needs f, g to order N.
Series column_gf(const RiordanSpec& s, std::size_t k, std::size_t N);

// The array acting on a series: (f/g) * h(x/g), truncated to the shortest
// input. Realizes the matrix times the coefficient column of h.
Series act(const RiordanSpec& s, const Series& h);

// Group law: T(f|g) T(l|m) = T(f * l(x/g) | g * m(x/g)).
RiordanSpec product(const RiordanSpec& a, const RiordanSpec& b);

// Group inverse, computed by exact forward-substitution inversion of the
// R-row triangle followed by recover_spec. pre: proper (NotProper).
RiordanSpec inverse(const RiordanSpec& a, std::size_t R);

// Reads (f, g) back off a triangle: g_0 from d_{0,0}/d_{1,1}, later g_m from
// column 1, f_n from column 0; then rebuilds and compares every entry,
// raising NotRiordan at the first mismatch. A zero diagonal entry raises
// ZeroDiagonal. An R-row triangle pins f and g only through order R-2; the
// returned order-(R-1) series set g_{R-1} = 0 with f_{R-1} absorbing the
// remaining combination, so build_triangle reproduces the input exactly.
RiordanSpec recover_spec(const Triangle& t);

// Classical pair notation: (d, h) = T(d/h | 1/h), column k = d (xh)^k.
// pre: d_0 != 0 and h_0 != 0 (ZeroConstantTerm).
RiordanSpec from_dh_notation(const Series& d, const Series& h);
std::pair<Series, Series> to_dh_notation(const RiordanSpec& s);

// Deleting the first row and column gives T(f/g | g); prepending the column
// of f-coefficients (rows shifted right) gives T(f g | g).
RiordanSpec shift_down(const RiordanSpec& s);
RiordanSpec shift_up(const RiordanSpec& s);

// The unique A with A(x/g) = 1/g, i.e. A = (1/g) o comp_inverse(x/g);
// T(A|A) is the group inverse of T(g|g). Needs g to order N.
Series a_sequence(const Series& g, std::size_t N);

// Output formats. JSON: {"rows": [["1"], ["0", "1"], ...]} with rationals as
// strings; CSV: one row per line, cells beyond the diagonal empty; text:
// aligned right-justified columns.
std::string triangle_to_json(const Triangle& t);
std::string triangle_to_csv(const Triangle& t);
std::string triangle_to_text(const Triangle& t);
Triangle triangle_from_json(const std::string& text);

}  // namespace riopoly
