#include "riopoly/polyseq.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace riopoly {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_ = {Rational(0)};
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial poly_scale(const Polynomial& a, const Rational& c) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(c));
}

Polynomial poly_times_x(const Polynomial& a) {
  if (a.is_zero()) return a;
  std::vector<Rational> c(a.coeffs().size() + 1);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + 1);
  return Polynomial(std::move(c));
}

Polynomial poly_compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc({outer.coeffs().back()});
  for (std::size_t k = outer.coeffs().size() - 1; k-- > 0;)
    acc = poly_add(poly_mul(acc, inner), Polynomial({outer.coeffs()[k]}));
  return acc;
}

Polynomial poly_derivative(const Polynomial& a) {
  if (a.degree() == 0) return Polynomial();
  std::vector<Rational> c(a.degree());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = Rational(k + 1) * a.coeffs()[k + 1];
  return Polynomial(std::move(c));
}

Rational evaluate(const Polynomial& p, const Rational& x0) {
  Rational acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x0 + p.coeffs()[k];
  return acc;
}

PolySeq sequence_from_spec(const RiordanSpec& s, std::size_t R) {
  const Triangle t = build_triangle(s, R);
  PolySeq out;
  out.polys.reserve(R);
  for (std::size_t n = 0; n < R; ++n) out.polys.emplace_back(t.row(n));
  out.spec = s;
  return out;
}

Polynomial next_polynomial(const std::vector<Polynomial>& prev, const Series& f,
                           const Series& g) {
  const std::size_t n = prev.size();
  if (f.order() < n || g.order() < n)
    throw InsufficientTruncation("next_polynomial needs f and g to order " +
                                 std::to_string(n));
  if (g[0] == 0) throw ZeroConstantTerm("main recurrence needs g_0 != 0");
  if (n == 0) return Polynomial({f[0] / g[0]});

  // Window: the recurrence only reaches back to the last nonzero g term.
  std::size_t m = 0;
  for (std::size_t k = 0; k <= g.order(); ++k)
    if (g[k] != 0) m = k;

  Polynomial acc = poly_times_x(prev[n - 1]);
  for (std::size_t k = 1; k <= std::min(n, m); ++k)
    acc = poly_sub(acc, poly_scale(prev[n - k], g[k]));
  acc = poly_add(acc, Polynomial({f[n]}));
  return poly_scale(acc, Rational(1) / g[0]);
}

PolySeq umbral_compose(const PolySeq& p, const PolySeq& q) {
  if (p.polys.size() != q.polys.size())
    throw LengthMismatch("umbral composition needs sequences of equal length");
  PolySeq out;
  out.polys.reserve(p.polys.size());
  for (const Polynomial& pn : p.polys) {
    if (pn.coeffs().size() > q.polys.size())
      throw LengthMismatch("degree exceeds the available substitution polynomials");
    Polynomial r;
    for (std::size_t k = 0; k < pn.coeffs().size(); ++k)
      r = poly_add(r, poly_scale(q.polys[k], pn.coeffs()[k]));
    out.polys.push_back(std::move(r));
  }
  if (p.spec && q.spec) out.spec = product(*p.spec, *q.spec);
  return out;
}

bool bivariate_gf_check(const RiordanSpec& s, const Rational& t0, std::size_t N) {
  const std::size_t need = std::max<std::size_t>(N, 1);
  if (s.f().order() < need || s.g().order() < need)
    throw InsufficientTruncation("bivariate_gf_check needs f and g to order " +
                                 std::to_string(need));
  const PolySeq seq = sequence_from_spec(s, N + 1);
  std::vector<Rational> den = truncate(s.g(), need).coeffs();
  den[1] -= t0;
  const Series rhs = divide(truncate(s.f(), need), Series(std::move(den)));
  for (std::size_t n = 0; n <= N; ++n)
    if (evaluate(seq.polys[n], t0) != rhs[n]) return false;
  return true;
}

PolySeq affine_transform_seq(const PolySeq& p, const Rational& gamma,
                             const Rational& alpha, const Rational& beta,
                             const Rational& c, const Rational& a,
                             const Rational& b) {
  if (alpha == 0 || gamma == 0 || a == 0 || c == 0)
    throw ZeroParameter("affine factors need gamma, alpha, c, a all nonzero");

  const Polynomial arg({-b / a, Rational(1) / a});
  const Rational front = gamma * c / (alpha * a);
  PolySeq out;
  out.polys.reserve(p.polys.size());
  for (std::size_t n = 0; n < p.polys.size(); ++n) {
    Polynomial acc;
    Rational alpha_pow = 1;  // alpha^{-k} built incrementally
    for (std::size_t k = 0; k <= n; ++k) {
      Rational coef = Rational(binomial(static_cast<unsigned>(n),
                                        static_cast<unsigned>(k))) *
                      alpha_pow;
      if ((n - k) % 2) coef = -coef;
      Rational ratio_pow = 1;  // (beta/alpha)^{n-k}
      for (std::size_t i = 0; i < n - k; ++i) ratio_pow *= beta / alpha;
      acc = poly_add(acc, poly_scale(poly_compose(p.polys[k], arg),
                                     coef * ratio_pow));
      alpha_pow /= alpha;
    }
    out.polys.push_back(poly_scale(acc, front));
  }
  if (p.spec) {
    const std::size_t n0 = std::min(p.spec->f().order(), p.spec->g().order());
    const RiordanSpec left(Series::constant(gamma, n0),
                           parse_series(to_string(alpha) + "," + to_string(beta), n0));
    const RiordanSpec right(Series::constant(c, n0),
                            parse_series(to_string(a) + "," + to_string(b), n0));
    out.spec = product(product(left, *p.spec), right);
  }
  return out;
}

PolySeq toeplitz_premultiply(const Polynomial& h, const PolySeq& p) {
  PolySeq out;
  out.polys.reserve(p.polys.size());
  for (std::size_t n = 0; n < p.polys.size(); ++n) {
    Polynomial acc;
    for (std::size_t i = 0; i <= std::min(h.degree(), n); ++i)
      acc = poly_add(acc, poly_scale(p.polys[n - i], h.coeff(i)));
    out.polys.push_back(std::move(acc));
  }
  if (p.spec) {
    std::vector<Rational> hc = h.coeffs();
    hc.resize(p.spec->f().order() + 1);
    out.spec = RiordanSpec(cauchy_mul(Series(std::move(hc)), p.spec->f()),
                           p.spec->g());
  }
  return out;
}

namespace {

// One term of the text form; sign handled by the caller.
std::string term_text(const Rational& mag, std::size_t k) {
  std::ostringstream os;
  if (k == 0) {
    os << mag;
  } else {
    if (mag != 1) os << mag;
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace

std::string polynomial_to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_text(abs(c), k);
  }
  return os.str();
}

std::string polynomial_to_json(const Polynomial& p) {
  nlohmann::ordered_json out;
  out["n"] = p.degree();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  out["coeffs"] = std::move(coeffs);
  return out.dump();
}

}  // namespace riopoly
