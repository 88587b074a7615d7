#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riopoly/rational.hpp"

namespace riopoly {

// Truncated formal power series over Rational: coefficients c_0..c_N where
// N is the truncation order. A Series is exactly its stored window; no
// operation fabricates coefficients beyond what its inputs determine.
class Series {
public:
  // order = coeffs.size() - 1; an empty list is invalid.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(std::size_t order);
  static Series constant(const Rational& c, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  // True when every stored coefficient is zero.
  bool is_zero() const;

  // Structural equality: same order and same coefficients.
  friend bool operator==(const Series&, const Series&) = default;

private:
  std::vector<Rational> coeffs_;
};

// Index of the lowest nonzero coefficient; nullopt for the zero series,
// whose x-order is deliberately undefined.
std::optional<std::size_t> x_order(const Series& s);

// Binary operations truncate to the shorter operand's order.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const Rational& c);
Series cauchy_mul(const Series& a, const Series& b);

// 1/a. pre: a_0 != 0 (ZeroConstantTerm).
Series reciprocal(const Series& a);

// a/b with the common power of x cancelled; the result order drops by
// x-order(b). ZeroDivisor if b is identically zero; OrderMismatch if a has a
// nonzero coefficient below x-order(b) or is truncated shorter than it.
Series divide(const Series& a, const Series& b);

// outer(inner). pre: inner_0 = 0 (InnerOrderZero). Result order
// min(outer.order, inner.order), accumulated Horner-style.
Series compose(const Series& outer, const Series& inner);

// The v with compose(w, v) = x, solved coefficient-wise. pre: w_0 = 0 and
// w_1 != 0 (NotInvertible, also raised when order 0 leaves w_1 unknown).
Series comp_inverse(const Series& w);

// Coefficient-wise product and its unit-wise inverse. hadamard_reciprocal
// requires every coefficient through the order nonzero (NotHadamardUnit
// names the first offending index); the geometric series is the neutral
// element of the coefficient-wise product.
Series hadamard(const Series& a, const Series& b);
Series hadamard_reciprocal(const Series& a);

// Formal derivative; order drops by 1. An order-0 input yields the zero
// series at order 0.
Series derivative(const Series& a);

// Restriction to a smaller order (exact).
Series truncate(const Series& a, std::size_t order);

// x * a. Exact, so the order grows by 1.
Series times_x(const Series& a);

// a(t x): coefficient k scaled by t^k.
Series argument_scale(const Series& a, const Rational& t);

// Named generators: one, geometric (all ones), exp (1/k!), neglog1m
// (-log(1-x): 0,1,1/2,1/3,...), logratio (log((1+x)/(1-x)): 2/k at odd k),
// poly:<comma list> (literal polynomial, zero-padded or truncated to fit).
// Unknown token raises UnknownName.
Series named_series(std::string_view name, std::size_t order);

// Either a comma-separated coefficient list (a polynomial, zero-padded to
// the requested order) or a named token as above.
Series parse_series(std::string_view text, std::size_t order);

// Comma-separated coefficients, all order+1 of them.
std::string to_string(const Series& s);

}  // namespace riopoly
