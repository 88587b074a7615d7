#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riopoly/riordan.hpp"

namespace riopoly {

// Polynomial over Rational, ascending powers, normalized modulo trailing
// zeros on construction (rows of non-proper arrays can have degree < n).
class Polynomial {
public:
  Polynomial() : coeffs_{Rational(0)} {}
  explicit Polynomial(std::vector<Rational> coeffs);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  // Zero beyond the stored degree.
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rational& c);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_times_x(const Polynomial& a);
Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner);
Polynomial poly_derivative(const Polynomial& a);

// Exact Horner evaluation.
Rational evaluate(const Polynomial& p, const Rational& x0);

// The rows of a triangle read as polynomials, with the generating spec
// remembered when there is one.
struct PolySeq {
  std::vector<Polynomial> polys;
  std::optional<RiordanSpec> spec;
};

// p_0..p_{R-1} of T(f|g) via the triangle. Needs f, g to order R-1.
PolySeq sequence_from_spec(const RiordanSpec& s, std::size_t R);

// One step of the main recurrence
//   p_n = ((x - g_1) p_{n-1} - g_2 p_{n-2} - ... - g_m p_{n-m} + f_n) / g_0,
// consulting only the window the g-degree requires (m = index of the last
// nonzero g coefficient). prev holds p_0..p_{n-1}; n = prev.size(). Needs
// f, g to order n (InsufficientTruncation).
Polynomial next_polynomial(const std::vector<Polynomial>& prev, const Series& f,
                           const Series& g);

// Umbral composition: substitute q_k(x) for x^k in each p_n. Realizes the
// coefficient-matrix product; when both sequences carry specs the result
// carries product(spec_p, spec_q). Sequences must have equal length
// (LengthMismatch).
PolySeq umbral_compose(const PolySeq& p, const PolySeq& q);

// Checks sum_n p_n(t0) x^n = f / (g - t0 x) through order N. Needs f, g to
// order max(N, 1).
bool bivariate_gf_check(const RiordanSpec& s, const Rational& t0, std::size_t N);

// Associated sequence of T(gamma | alpha + beta x) T(f|g) T(c | a + b x),
// via the closed-form binomial sum
//   q_n = (gamma c / (alpha a)) sum_k C(n,k) (-beta/alpha)^{n-k} alpha^{-k}
//         p_k((x - b)/a).
// pre: alpha, gamma, a, c all nonzero (ZeroParameter).
PolySeq affine_transform_seq(const PolySeq& p, const Rational& gamma,
                             const Rational& alpha, const Rational& beta,
                             const Rational& c, const Rational& a,
                             const Rational& b);

// q_n = sum_i h_i p_{n-i}: the rows of T(h|1) T(f|g); the spec becomes
// T(h f | g) when p carries one.
PolySeq toeplitz_premultiply(const Polynomial& h, const PolySeq& p);

// Text form "1 + 3x^2 + x^4" (ascending, rationals as p/q);
// JSON {"n": 4, "coeffs": ["1","0","3","0","1"]}.
std::string polynomial_to_text(const Polynomial& p);
std::string polynomial_to_json(const Polynomial& p);

}  // namespace riopoly
