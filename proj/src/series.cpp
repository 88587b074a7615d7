#include "riopoly/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace riopoly {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("a series stores at least its constant term");
}

Series Series::zero(std::size_t order) {
  return Series(std::vector<Rational>(order + 1));
}

Series Series::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return Series(std::move(v));
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> x_order(const Series& s) {
  for (std::size_t k = 0; k <= s.order(); ++k)
    if (s[k] != 0) return k;
  return std::nullopt;
}

Series add(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return Series(std::move(c));
}

Series sub(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return Series(std::move(c));
}

Series negate(const Series& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Series(std::move(c));
}

Series scale(const Series& a, const Rational& c) {
  std::vector<Rational> v(a.coeffs());
  for (auto& x : v) x *= c;
  return Series(std::move(v));
}

Series cauchy_mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
  return Series(std::move(c));
}

Series reciprocal(const Series& a) {
  if (a[0] == 0) throw ZeroConstantTerm("reciprocal of a series with a_0 = 0");
  const std::size_t n = a.order();
  std::vector<Rational> r(n + 1);
  r[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * r[k - i];
    r[k] = -s / a[0];
  }
  return Series(std::move(r));
}

Series divide(const Series& a, const Series& b) {
  const auto w = x_order(b);
  if (!w) throw ZeroDivisor("division by the zero series");
  const std::size_t om = *w;
  if (a.order() < om)
    throw OrderMismatch("numerator truncated below the divisor's x-order");
  for (std::size_t k = 0; k < om; ++k)
    if (a[k] != 0)
      throw OrderMismatch("numerator x-order below divisor x-order");
  const std::size_t n = std::min(a.order(), b.order());
  Series num(std::vector<Rational>(a.coeffs().begin() + om,
                                   a.coeffs().begin() + (n + 1)));
  Series den(std::vector<Rational>(b.coeffs().begin() + om,
                                   b.coeffs().begin() + (n + 1)));
  return cauchy_mul(num, reciprocal(den));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner[0] != 0)
    throw InnerOrderZero("composition needs inner x-order >= 1");
  const std::size_t n = std::min(outer.order(), inner.order());
  const Series in_t = truncate(inner, n);
  Series acc = Series::constant(outer[n], n);
  for (std::size_t k = n; k-- > 0;) {
    acc = cauchy_mul(acc, in_t);
    std::vector<Rational> c = acc.coeffs();
    c[0] += outer[k];
    acc = Series(std::move(c));
  }
  return acc;
}

Series comp_inverse(const Series& w) {
  if (w.order() < 1)
    throw NotInvertible("order 0 leaves the linear coefficient unknown");
  if (w[0] != 0) throw NotInvertible("compositional inverse needs w_0 = 0");
  if (w[1] == 0) throw NotInvertible("compositional inverse needs w_1 != 0");
  const std::size_t n = w.order();
  std::vector<Rational> v(n + 1);
  v[1] = Rational(1) / w[1];
  for (std::size_t m = 2; m <= n; ++m) {
    // Residual at x^m with v_m still 0; the linear term of w then cancels it.
    Series vm(std::vector<Rational>(v.begin(), v.begin() + m + 1));
    Series r = compose(truncate(w, m), vm);
    v[m] = -r[m] / w[1];
  }
  return Series(std::move(v));
}

Series hadamard(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] * b[k];
  return Series(std::move(c));
}

Series hadamard_reciprocal(const Series& a) {
  std::vector<Rational> c(a.size());
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a[k] == 0)
      throw NotHadamardUnit("zero coefficient at index " + std::to_string(k));
    c[k] = Rational(1) / a[k];
  }
  return Series(std::move(c));
}

Series derivative(const Series& a) {
  if (a.order() == 0) return Series::zero(0);
  std::vector<Rational> c(a.order());
  for (std::size_t k = 0; k + 1 <= a.order(); ++k) c[k] = Rational(k + 1) * a[k + 1];
  return Series(std::move(c));
}

Series truncate(const Series& a, std::size_t order) {
  if (order > a.order())
    throw std::invalid_argument("truncate cannot extend a series");
  return Series(std::vector<Rational>(a.coeffs().begin(),
                                      a.coeffs().begin() + (order + 1)));
}

Series times_x(const Series& a) {
  std::vector<Rational> c(a.size() + 1);
  for (std::size_t k = 0; k <= a.order(); ++k) c[k + 1] = a[k];
  return Series(std::move(c));
}

Series argument_scale(const Series& a, const Rational& t) {
  std::vector<Rational> c(a.size());
  Rational p = 1;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    c[k] = a[k] * p;
    p *= t;
  }
  return Series(std::move(c));
}

namespace {

std::vector<Rational> parse_coeff_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = comma == std::string_view::npos
                                      ? text.substr(pos)
                                      : text.substr(pos, comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Series from_poly_coeffs(std::vector<Rational> coeffs, std::size_t order) {
  coeffs.resize(order + 1);  // zero-pads; drops terms beyond the order
  return Series(std::move(coeffs));
}

}  // namespace

Series named_series(std::string_view name, std::size_t order) {
  std::vector<Rational> c(order + 1);
  if (name == "one") {
    c[0] = 1;
  } else if (name == "geometric") {
    std::fill(c.begin(), c.end(), Rational(1));
  } else if (name == "exp") {
    c[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) c[k] = c[k - 1] / k;
  } else if (name == "neglog1m") {
    for (std::size_t k = 1; k <= order; ++k) c[k] = Rational(1, k);
  } else if (name == "logratio") {
    for (std::size_t k = 1; k <= order; k += 2) c[k] = Rational(2, k);
  } else if (name.starts_with("poly:")) {
    return from_poly_coeffs(parse_coeff_list(name.substr(5)), order);
  } else {
    throw UnknownName("series token '" + std::string(name) + "'");
  }
  return Series(std::move(c));
}

Series parse_series(std::string_view text, std::size_t order) {
  const auto b = text.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    throw std::invalid_argument("empty series text");
  text = text.substr(b, text.find_last_not_of(" \t") - b + 1);
  const char c = text.front();
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
    return from_poly_coeffs(parse_coeff_list(text), order);
  return named_series(text, order);
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    if (k) os << ',';
    os << s[k];
  }
  return os.str();
}

}  // namespace riopoly
