#include "riopoly/appell.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riopoly/errors.hpp"
#include "riopoly/riordan.hpp"

namespace riopoly {

namespace {

Series poly_as_series(const Polynomial& p, std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t k = 0; k <= p.degree() && k <= order; ++k) c[k] = p.coeff(k);
  return Series(std::move(c));
}

}  // namespace

Weight::Weight(Series h) : h_(std::move(h)) {
  for (std::size_t k = 0; k <= h_.order(); ++k) {
    if (h_[k] == 0) {
      throw NotHadamardUnit("zero coefficient at index " + std::to_string(k));
    }
  }
}

Series Weight::hhat() const {
  std::vector<Rational> c(h_.order() + 1, Rational(0));
  for (std::size_t k = 1; k <= h_.order(); ++k) c[k] = h_[k] / h_[k - 1];
  return Series(std::move(c));
}

AppellSeq weighted_sequence(const RiordanSpec& s, const Weight& w,
                            std::size_t R) {
  if (R > 0 && w.h().order() < R - 1) {
    throw InsufficientTruncation("weight has order " +
                                 std::to_string(w.h().order()) + ", need " +
                                 std::to_string(R - 1));
  }
  const Triangle t = build_triangle(s, R);
  AppellSeq out{{}, s, w};
  out.polys.reserve(R);
  for (std::size_t n = 0; n < R; ++n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) c[k] = t.at(n, k) * w.h()[k];
    out.polys.emplace_back(std::move(c));
  }
  return out;
}

Polynomial appell_recurrence_step(const std::vector<Polynomial>& prev,
                                  const Series& f, const Series& g,
                                  const Weight& w) {
  const std::size_t n = prev.size();
  if (g[0] == 0) throw ZeroConstantTerm("g has zero constant term");
  if (f.order() < n || g.order() < n || w.h().order() < n) {
    throw InsufficientTruncation("step " + std::to_string(n) +
                                 " needs f, g, and weight to order " +
                                 std::to_string(n));
  }
  if (n == 0) return Polynomial({w.h()[0] * f[0] / g[0]});
  const Series hh = w.hhat();
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = k == 0 ? w.h()[0] * f[n] : hh[k] * prev[n - 1].coeff(k - 1);
    for (std::size_t i = 1; i <= n; ++i) acc -= g[i] * prev[n - i].coeff(k);
    c[k] = acc / g[0];
  }
  return Polynomial(std::move(c));
}

AppellSeq sheffer_sequence(const RiordanSpec& s, std::size_t R) {
  if (!s.proper()) throw NotProper("Sheffer sequence needs a proper spec");
  const std::size_t order = R > 0 ? R - 1 : 0;
  return weighted_sequence(s, Weight(named_series("exp", order)), R);
}

AppellSeq brenke_sequence(const Series& f, const Weight& w, std::size_t R) {
  if (f[0] == 0) {
    throw NotProper("Brenke sequence needs f with nonzero constant term");
  }
  return weighted_sequence(RiordanSpec(f, named_series("one", f.order())), w,
                           R);
}

AppellSeq convolution_sequence(const Series& g, std::size_t R) {
  return sheffer_sequence(RiordanSpec(g, g), R);
}

Polynomial apply_delta_operator(const Series& c, const Polynomial& p) {
  if (c[0] != 0) {
    throw NonzeroConstantTerm("delta operator series has constant term " +
                              to_string(c[0]));
  }
  Polynomial acc;
  Polynomial d = p;
  for (std::size_t k = 1; k <= c.order(); ++k) {
    d = poly_derivative(d);
    if (d.is_zero()) break;
    acc = poly_add(acc, poly_scale(d, c[k]));
  }
  return acc;
}

bool derivative_identity_check(const RiordanSpec& s, const Weight& w,
                               std::size_t R) {
  if (R < 2) return true;
  const AppellSeq p = weighted_sequence(s, w, R);
  const AppellSeq q =
      weighted_sequence(s, Weight(derivative(w.h())), R - 1);
  for (std::size_t n = 1; n < R; ++n) {
    Polynomial rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      rhs = poly_add(rhs, poly_scale(poly_derivative(p.polys[n - k]),
                                     s.g()[k]));
    }
    if (!(q.polys[n - 1] == rhs)) return false;
  }
  return true;
}

namespace {

Polynomial special_inv_square(const Polynomial& p) {
  const std::size_t d = p.degree();
  std::vector<Rational> wc(d + 1);
  for (std::size_t k = 0; k <= d; ++k) wc[k] = Rational(k + 1);
  const Series byweight = hadamard(poly_as_series(p, d), Series(std::move(wc)));
  const Polynomial closed = poly_derivative(poly_times_x(p));
  if (!(Polynomial(byweight.coeffs()) == closed)) {
    throw std::logic_error("inv_square routes disagree");
  }
  return closed;
}

Polynomial special_a_minus_log(const Polynomial& p, const Rational& a) {
  const std::size_t d = p.degree();
  std::vector<Rational> wc(d + 1);
  wc[0] = a;
  for (std::size_t k = 1; k <= d; ++k) wc[k] = make_rational(1, Integer(k));
  const Series byweight = hadamard(poly_as_series(p, d), Series(std::move(wc)));
  // Closed route: a p(0) + integral_0^x (p(t) - p(0))/t dt, termwise.
  std::vector<Rational> shifted(d > 0 ? d : 1, Rational(0));
  for (std::size_t k = 1; k <= d; ++k) shifted[k - 1] = p.coeff(k);
  std::vector<Rational> integ(d + 1, Rational(0));
  integ[0] = a * evaluate(p, Rational(0));
  for (std::size_t k = 0; k + 1 <= d; ++k) {
    integ[k + 1] = shifted[k] / Rational(k + 1);
  }
  const Polynomial closed(std::move(integ));
  if (!(Polynomial(byweight.coeffs()) == closed)) {
    throw std::logic_error("a_minus_log routes disagree");
  }
  return closed;
}

}  // namespace

PolySeq weighted_special_cases(const PolySeq& p,
                               const std::string& case_token) {
  PolySeq out;
  if (case_token == "inv_square") {
    for (const Polynomial& q : p.polys) out.polys.push_back(special_inv_square(q));
    return out;
  }
  constexpr std::string_view prefix = "a_minus_log:";
  if (case_token.size() > prefix.size() &&
      std::string_view(case_token).substr(0, prefix.size()) == prefix) {
    Rational a;
    try {
      a = parse_rational(case_token.substr(prefix.size()));
    } catch (const std::invalid_argument&) {
      throw UnknownCase("bad parameter in '" + case_token + "'");
    }
    if (a == 0) throw UnknownCase("a_minus_log needs nonzero parameter");
    for (const Polynomial& q : p.polys) {
      out.polys.push_back(special_a_minus_log(q, a));
    }
    return out;
  }
  throw UnknownCase("unknown special case '" + case_token + "'");
}

std::vector<Polynomial> factorial_rescale(const AppellSeq& s) {
  std::vector<Polynomial> out;
  out.reserve(s.polys.size());
  for (std::size_t n = 0; n < s.polys.size(); ++n) {
    out.push_back(poly_scale(s.polys[n], Rational(factorial(n))));
  }
  return out;
}

Weight parse_weight(std::string_view token, std::size_t order) {
  if (token == "exp" || token == "geometric") {
    return Weight(named_series(token, order));
  }
  if (token == "inv_square") {
    std::vector<Rational> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) c[k] = Rational(k + 1);
    return Weight(Series(std::move(c)));
  }
  constexpr std::string_view alog = "a_minus_log:";
  if (token.size() > alog.size() && token.substr(0, alog.size()) == alog) {
    Rational a;
    try {
      a = parse_rational(std::string(token.substr(alog.size())));
    } catch (const std::invalid_argument&) {
      throw UnknownName("bad parameter in weight '" + std::string(token) + "'");
    }
    std::vector<Rational> c(order + 1);
    c[0] = a;
    for (std::size_t k = 1; k <= order; ++k) {
      c[k] = make_rational(1, Integer(k));
    }
    return Weight(Series(std::move(c)));
  }
  constexpr std::string_view custom = "custom:";
  if (token.size() > custom.size() &&
      token.substr(0, custom.size()) == custom) {
    return Weight(parse_series(token.substr(custom.size()), order));
  }
  throw UnknownName("unknown weight '" + std::string(token) + "'");
}

}  // namespace riopoly
