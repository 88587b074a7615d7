#include "riopoly/riordan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace riopoly {

namespace {

void require_orders(const RiordanSpec& s, std::size_t order, const char* who) {
  if (s.f().order() < order || s.g().order() < order)
    throw InsufficientTruncation(std::string(who) + " needs f and g to order " +
                                 std::to_string(order));
}

// x * (1/g) at the given order; the seed of every column shift.
Series x_over_g(const Series& g, std::size_t order) {
  if (order == 0) return Series::zero(0);
  return times_x(reciprocal(truncate(g, order - 1)));
}

}  // namespace

RiordanSpec::RiordanSpec(Series f, Series g) : f_(std::move(f)), g_(std::move(g)) {
  if (g_[0] == 0) throw ZeroConstantTerm("Riordan spec needs g_0 != 0");
}

Triangle::Triangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (std::size_t n = 0; n < rows_.size(); ++n)
    if (rows_[n].size() != n + 1)
      throw std::invalid_argument("triangle row " + std::to_string(n) +
                                  " must hold exactly " + std::to_string(n + 1) +
                                  " entries");
}

Triangle build_triangle(const RiordanSpec& s, std::size_t R) {
  if (R == 0) return Triangle({});
  require_orders(s, R - 1, "build_triangle");
  const Series& f = s.f();
  const Series& g = s.g();
  const Rational& g0 = g[0];

  std::vector<std::vector<Rational>> d(R);
  d[0] = {f[0] / g0};
  for (std::size_t n = 1; n < R; ++n) {
    d[n].resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 1; k <= n; ++k)
        if (n - k >= j) acc += g[k] * d[n - k][j];
      const Rational carry = j == 0 ? f[n] : d[n - 1][j - 1];
      d[n][j] = (carry - acc) / g0;
    }
  }
  return Triangle(std::move(d));
}

Series column_gf(const RiordanSpec& s, std::size_t k, std::size_t N) {
  require_orders(s, N, "column_gf");
  const Series r = reciprocal(truncate(s.g(), N));
  Series col = cauchy_mul(truncate(s.f(), N), r);
  if (k > 0) {
    const Series xr = x_over_g(s.g(), N);
    for (std::size_t i = 0; i < k; ++i) col = cauchy_mul(col, xr);
  }
  return col;
}

Series act(const RiordanSpec& s, const Series& h) {
  const std::size_t n =
      std::min({s.f().order(), s.g().order(), h.order()});
  const Series fg = divide(truncate(s.f(), n), truncate(s.g(), n));
  return cauchy_mul(fg, compose(truncate(h, n), x_over_g(s.g(), n)));
}

RiordanSpec product(const RiordanSpec& a, const RiordanSpec& b) {
  const std::size_t n = std::min({a.f().order(), a.g().order(),
                                  b.f().order(), b.g().order()});
  const Series w = x_over_g(a.g(), n);
  const Series f = cauchy_mul(truncate(a.f(), n), compose(truncate(b.f(), n), w));
  const Series g = cauchy_mul(truncate(a.g(), n), compose(truncate(b.g(), n), w));
  return RiordanSpec(f, g);
}

namespace {

// Exact inverse of a lower-triangular matrix by forward substitution.
std::vector<std::vector<Rational>> invert_lower(const Triangle& t) {
  const std::size_t R = t.rows();
  std::vector<std::vector<Rational>> m(R);
  for (std::size_t n = 0; n < R; ++n) m[n].resize(n + 1);
  for (std::size_t j = 0; j < R; ++j) {
    m[j][j] = Rational(1) / t.at(j, j);
    for (std::size_t n = j + 1; n < R; ++n) {
      Rational acc = 0;
      for (std::size_t k = j; k < n; ++k) acc += t.at(n, k) * m[k][j];
      m[n][j] = -acc / t.at(n, n);
    }
  }
  return m;
}

}  // namespace

RiordanSpec inverse(const RiordanSpec& a, std::size_t R) {
  if (!a.proper()) throw NotProper("only proper arrays (f_0 != 0) invert");
  const Triangle t = build_triangle(a, R);
  return recover_spec(Triangle(invert_lower(t)));
}

RiordanSpec recover_spec(const Triangle& t) {
  const std::size_t R = t.rows();
  if (R < 2)
    throw InsufficientTruncation("recover_spec needs at least 2 rows");
  for (std::size_t n = 0; n < R; ++n)
    if (t.at(n, n) == 0)
      throw ZeroDiagonal("zero diagonal entry at row " + std::to_string(n));

  const Rational g0 = t.at(0, 0) / t.at(1, 1);
  std::vector<Rational> g(R);
  g[0] = g0;
  // Column 1, row k+1 is the first entry that sees g_k; g_{R-1} stays 0 and
  // f_{R-1} absorbs the one remaining combination (see header).
  for (std::size_t k = 1; k + 1 < R; ++k) {
    Rational acc = t.at(k, 0) - g0 * t.at(k + 1, 1);
    for (std::size_t i = 1; i < k; ++i) acc -= g[i] * t.at(k + 1 - i, 1);
    g[k] = acc / t.at(1, 1);
  }
  std::vector<Rational> f(R);
  for (std::size_t n = 0; n < R; ++n) {
    Rational acc = g0 * t.at(n, 0);
    for (std::size_t i = 1; i <= n; ++i) acc += g[i] * t.at(n - i, 0);
    f[n] = acc;
  }

  RiordanSpec s(Series(std::move(f)), Series(std::move(g)));
  const Triangle rebuilt = build_triangle(s, R);
  for (std::size_t n = 0; n < R; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      if (rebuilt.at(n, j) != t.at(n, j))
        throw NotRiordan("reconstruction mismatch at (" + std::to_string(n) +
                         "," + std::to_string(j) + ")");
  return s;
}

RiordanSpec from_dh_notation(const Series& d, const Series& h) {
  if (h[0] == 0) throw ZeroConstantTerm("pair notation needs h_0 != 0");
  if (d[0] == 0) throw ZeroConstantTerm("pair notation needs d_0 != 0");
  return RiordanSpec(divide(d, h), reciprocal(h));
}

std::pair<Series, Series> to_dh_notation(const RiordanSpec& s) {
  return {divide(s.f(), s.g()), reciprocal(s.g())};
}

RiordanSpec shift_down(const RiordanSpec& s) {
  return RiordanSpec(divide(s.f(), s.g()), s.g());
}

RiordanSpec shift_up(const RiordanSpec& s) {
  return RiordanSpec(cauchy_mul(s.f(), s.g()), s.g());
}

Series a_sequence(const Series& g, std::size_t N) {
  if (g.order() < N)
    throw InsufficientTruncation("a_sequence needs g to order " + std::to_string(N));
  if (g[0] == 0) throw ZeroConstantTerm("a_sequence needs g_0 != 0");
  const Series r = reciprocal(truncate(g, N));
  if (N == 0) return r;
  return compose(r, comp_inverse(x_over_g(g, N)));
}

std::string triangle_to_json(const Triangle& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n < t.rows(); ++n) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : t.row(n)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  return out.dump();
}

std::string triangle_to_csv(const Triangle& t) {
  std::ostringstream os;
  const std::size_t R = t.rows();
  for (std::size_t n = 0; n < R; ++n) {
    for (std::size_t j = 0; j < R; ++j) {
      if (j) os << ',';
      if (j <= n) os << t.at(n, j);
    }
    os << '\n';
  }
  return os.str();
}

std::string triangle_to_text(const Triangle& t) {
  const std::size_t R = t.rows();
  std::vector<std::size_t> width(R, 0);
  std::vector<std::vector<std::string>> cells(R);
  for (std::size_t n = 0; n < R; ++n) {
    cells[n].reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      cells[n].push_back(to_string(t.at(n, j)));
      width[j] = std::max(width[j], cells[n][j].size());
    }
  }
  std::ostringstream os;
  for (std::size_t n = 0; n < R; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j) os << "  ";
      os << std::string(width[j] - cells[n][j].size(), ' ') << cells[n][j];
    }
    os << '\n';
  }
  return os.str();
}

Triangle triangle_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("triangle JSON must be {\"rows\": [[...], ...]}");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array())
      throw std::invalid_argument("triangle JSON rows must be arrays");
    std::vector<Rational> r;
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw std::invalid_argument("triangle JSON entries must be rational strings");
      r.push_back(parse_rational(cell.get<std::string>()));
    }
    rows.push_back(std::move(r));
  }
  return Triangle(std::move(rows));
}

}  // namespace riopoly
