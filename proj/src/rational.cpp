#include "riopoly/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace riopoly {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw ZeroDivisor("rational with denominator 0");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t.empty()) throw std::invalid_argument("empty rational literal");

  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  if (t.front() == '-') {
    neg = true;
    t.remove_prefix(1);
  }
  std::string_view num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");

  Integer n{std::string(num)}, d{std::string(den)};
  if (neg) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace riopoly
