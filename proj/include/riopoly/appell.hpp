#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "riopoly/polyseq.hpp"

namespace riopoly {

// Hadamard-unit weight: every coefficient nonzero through the stored order,
// validated at construction (NotHadamardUnit names the first zero index).
// Weights are built at exactly the order a computation consumes, so named
// series only ever need finitely many coefficients checked.
class Weight {
public:
  explicit Weight(Series h);

  const Series& h() const noexcept { return h_; }
  // hhat_0 = 0, hhat_k = h_k / h_{k-1}: the column-shift ratios of the
  // weighted recurrence (for h = e^x this is -log(1-x)).
  Series hhat() const;

  friend bool operator==(const Weight&, const Weight&) = default;

private:
  Series h_;
};

// Generalized Appell sequence: s_{n,k} = d_{n,k} h_k, rows of the triangle
// reweighted columnwise. Generating data travels with the polynomials.
struct AppellSeq {
  std::vector<Polynomial> polys;
  RiordanSpec spec;
  Weight weight;
};

// s_0..s_{R-1} by reweighting the triangle. Needs f, g, h to order R-1.
AppellSeq weighted_sequence(const RiordanSpec& s, const Weight& w, std::size_t R);

// One step of the weighted coefficient recurrence
//   s_{n,k} = (hhat_k s_{n-1,k-1} - sum_i g_i s_{n-i,k}) / g_0,
//   s_{n,0} = (h_0 f_n - sum_i g_i s_{n-i,0}) / g_0;
// identical output to weighted_sequence, independent route. prev holds
// s_0..s_{n-1}.
Polynomial appell_recurrence_step(const std::vector<Polynomial>& prev,
                                  const Series& f, const Series& g,
                                  const Weight& w);

// h = e^x. pre: spec proper (NotProper).
AppellSeq sheffer_sequence(const RiordanSpec& s, std::size_t R);

// g = 1 (Brenke case). pre: f_0 != 0 (NotProper).
AppellSeq brenke_sequence(const Series& f, const Weight& w, std::size_t R);

// Sheffer sequence of T(g|g): the convolution (binomial-type) family, with
// s_0 = 1, s_1 = x/g_0, and s_n(t+r) = sum_k s_{n-k}(t) s_k(r).
AppellSeq convolution_sequence(const Series& g, std::size_t R);

// Q(p) for Q = sum_{k>=1} c_k D^k. pre: c_0 = 0 (NonzeroConstantTerm).
// Exact finite sum; derivatives beyond deg p vanish.
Polynomial apply_delta_operator(const Series& c, const Polynomial& p);

// True iff p^{D(h)}_{n-1} = sum_{k=0}^n g_k D(p^h_{n-k}) for 1 <= n < R,
// where p^w is the w-weighted sequence of the spec. D(h) must itself be a
// Hadamard unit to the used order (NotHadamardUnit).
bool derivative_identity_check(const RiordanSpec& s, const Weight& w,
                               std::size_t R);

// Geometric-series specials, each computed along two independent routes that
// must agree: inv_square (weight 1/(1-x)^2) via Hadamard and via (x p_n)';
// a_minus_log:<a> (weight a - log(1-x), a != 0) via Hadamard and via
// a p_n(0) + integral_0^x (p_n(t) - p_n(0))/t dt. Unknown or degenerate
// tokens raise UnknownCase.
PolySeq weighted_special_cases(const PolySeq& p, const std::string& case_token);

// n! s_n: the classically normalized presentation of an Appell family.
std::vector<Polynomial> factorial_rescale(const AppellSeq& s);

// Weight tokens: exp, geometric, inv_square, a_minus_log:<a>, custom:<list>.
// Unknown token raises UnknownName; the resulting series must be a Hadamard
// unit through the order.
Weight parse_weight(std::string_view token, std::size_t order);

}  // namespace riopoly
